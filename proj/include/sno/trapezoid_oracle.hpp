#pragma once

#include <cstdint>
#include <vector>

#include "sno/diagrams.hpp"
#include "sno/label_sequence.hpp"
#include "sno/oracle.hpp"
#include "sno/point_grid.hpp"
#include "sno/serialize.hpp"

namespace sno {

// Trapezoid graph from the merged endpoint order: a 4-symbol sequence
// (0 = a, 1 = b, 2 = c, 3 = d) and three grids pairing endpoint ranks.
// Disjointness is decided per line: u is left of v when b_u < a_v and
// d_u < c_v.
class TrapezoidOracle final : public GraphOracle {
public:
    TrapezoidOracle() = default;
    static TrapezoidOracle build(const TrapezoidDiagram& d);

    std::uint32_t vertex_count() const noexcept override { return n_; }
    Trapezoid corner_positions(std::uint32_t v) const;

    bool adjacent(std::uint32_t u, std::uint32_t v) const override;
    std::uint64_t degree(std::uint32_t v) const override;
    std::vector<std::uint32_t> neighborhood(std::uint32_t v) const override;
    SpaceReport space_report() const override;
    ImplTag impl() const noexcept override { return ImplTag::wavelet_trapezoid; }

    // Disjointness read as max(b, d) < min(a, c) over merged positions.
    // Wrong for slanted trapezoids; kept for comparison only.
    bool adjacent_merged_order(std::uint32_t u, std::uint32_t v) const;

    // Trapezoids entirely right of v / entirely left of v.
    std::uint64_t count_right(std::uint32_t v) const;
    std::uint64_t count_left(std::uint32_t v) const;

    const LabelSequence& sequence() const noexcept { return seq_; }
    const PointGrid& upper() const noexcept { return by_b_; }
    const PointGrid& lower() const noexcept { return by_c_; }
    const PointGrid& legs() const noexcept { return b_to_d_; }

    void serialize(ByteWriter& out) const;
    static TrapezoidOracle deserialize(ByteReader& in, std::uint32_t n);

private:
    struct Ranks {
        std::uint32_t a_before_b;  // a's up to pos_b
        std::uint32_t c_before_d;  // c's up to pos_d
        std::uint32_t b_before_a;  // b's up to pos_a
        std::uint32_t d_before_c;  // d's up to pos_c
    };

    void check_vertex(std::uint32_t v) const;
    Trapezoid positions(std::uint32_t v) const noexcept;
    Ranks ranks(std::uint32_t v) const noexcept;

    std::uint32_t n_ = 0;
    LabelSequence seq_;
    PointGrid by_b_;    // (v, rank of b_v among b's)
    PointGrid by_c_;    // (v, rank of c_v among c's)
    PointGrid b_to_d_;  // (rank of b_v, rank of d_v)
};

}  // namespace sno
