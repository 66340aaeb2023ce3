#pragma once

#include <cstdint>
#include <vector>

#include "sno/diagrams.hpp"

namespace sno {

// Clockwise span from `from` to `to` (1-based positions); wraps past the
// last position when from > to.
struct Span {
    std::uint32_t from;
    std::uint32_t to;
};

struct Side {
    SideKind kind;
    Span span;
};

// Geometric intersection of two sides of different polygons. Shared
// endpoints count as intersecting.
bool sides_intersect(SideKind e_kind, Span e, SideKind f_kind, Span f) noexcept;

// The sides of every polygon, index v - 1. The wrap side of a 2-corner
// all-chord polygon coincides with its first side and is left out.
std::vector<std::vector<Side>> polygon_sides(const PolygonDiagram& d);

// Dense symmetric 0/1 matrix, row-major, zero diagonal.
struct AdjacencyMatrix {
    std::uint32_t n = 0;
    std::vector<std::uint8_t> cells;

    bool at(std::uint32_t u, std::uint32_t v) const noexcept {
        return cells[static_cast<std::size_t>(u - 1) * n + (v - 1)] != 0;
    }
    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;
};

// Brute-force ground truth over all side pairs.
bool naive_adjacent(const PolygonDiagram& d, std::uint32_t u, std::uint32_t v);
std::uint64_t naive_degree(const PolygonDiagram& d, std::uint32_t u);
std::vector<std::uint32_t> naive_neighborhood(const PolygonDiagram& d, std::uint32_t u);
AdjacencyMatrix naive_matrix(const PolygonDiagram& d);

// Brute force in the class's own geometry (chord interleaving, inversions,
// interval / arc overlap, per-line trapezoid disjointness).
AdjacencyMatrix native_matrix(const AnyDiagram& d, ClassTag cls);

}  // namespace sno
