#pragma once

#include <cstdint>
#include <vector>

#include "sno/bit_vector.hpp"
#include "sno/diagrams.hpp"
#include "sno/oracle.hpp"
#include "sno/point_grid.hpp"
#include "sno/serialize.hpp"

namespace sno {

// Circle graph as an overlap graph of intervals: a left/right endpoint
// bitvector plus one grid pairing each interval with the rank of its right
// end. Degree counts two rectangles without listing neighbors.
class CircleOracle final : public GraphOracle {
public:
    CircleOracle() = default;
    static CircleOracle build(const ChordDiagram& d);

    std::uint32_t vertex_count() const noexcept override { return n_; }
    Chord interval_of(std::uint32_t v) const;

    bool adjacent(std::uint32_t u, std::uint32_t v) const override;
    std::uint64_t degree(std::uint32_t v) const override;
    std::vector<std::uint32_t> neighborhood(std::uint32_t v) const override;
    SpaceReport space_report() const override;
    ImplTag impl() const noexcept override { return ImplTag::wavelet_circle; }

    const BitVector& endpoints() const noexcept { return ends_; }
    const PointGrid& grid() const noexcept { return grid_; }

    void serialize(ByteWriter& out) const;
    static CircleOracle deserialize(ByteReader& in, std::uint32_t n);

private:
    struct Rects {
        Rect left;   // start before v, end inside v
        Rect right;  // start inside v, end after v
    };

    void check_vertex(std::uint32_t v) const;
    Chord ends_of(std::uint32_t v) const noexcept;
    Rects rects(std::uint32_t v) const noexcept;

    std::uint32_t n_ = 0;
    BitVector ends_;  // 0 at left endpoints, 1 at right endpoints
    PointGrid grid_;  // (v, rank of v's right end among right ends)
};

}  // namespace sno
