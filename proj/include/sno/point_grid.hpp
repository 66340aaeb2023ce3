#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sno/bit_vector.hpp"
#include "sno/label_sequence.hpp"
#include "sno/serialize.hpp"

namespace sno {

struct Point {
    std::uint32_t x;
    std::uint32_t y;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Closed rectangle [x1, x2] x [y1, y2]. Empty when x1 > x2 or y1 > y2.
struct Rect {
    std::uint32_t x1, x2, y1, y2;
    bool empty() const noexcept { return x1 > x2 || y1 > y2; }
};

// Static point set on a side x side grid with orthogonal range count/report
// and single-coordinate lookups. Points are kept in x order; their
// y-values form a wavelet matrix. When every column holds exactly one point
// (the only shape the oracles build) the column map is omitted.
class PointGrid {
public:
    PointGrid() = default;
    PointGrid(std::uint32_t side, std::span<const Point> points);
    // Side equals the number of points.
    explicit PointGrid(std::span<const Point> points);

    std::uint32_t side() const noexcept { return side_; }
    std::uint64_t point_count() const noexcept { return ys_.size(); }
    bool distinct_x() const noexcept { return distinct_x_; }
    bool distinct_y() const noexcept { return distinct_y_; }

    std::uint64_t count(const Rect& r) const;
    // Sorted by x, then y.
    std::vector<Point> report(const Rect& r) const;

    // The y paired with column x; requires distinct x-coordinates.
    std::optional<std::uint32_t> y_of(std::uint32_t x) const;
    // The x paired with row y; requires distinct y-coordinates.
    std::optional<std::uint32_t> x_of(std::uint32_t y) const;

    std::uint64_t bits_used() const noexcept;

    void serialize(ByteWriter& out) const;
    static PointGrid deserialize(ByteReader& in);

private:
    void check_rect(const Rect& r) const;
    std::uint64_t points_before(std::uint64_t x) const noexcept;
    std::uint32_t x_of_index(std::uint64_t index) const noexcept;

    std::uint32_t side_ = 0;
    bool dense_columns_ = true;
    bool distinct_x_ = true;
    bool distinct_y_ = true;
    // Unary column sizes (count zeros then a one per column); empty when dense.
    BitVector columns_;
    LabelSequence ys_;  // y - 1 per point, in x order
};

}  // namespace sno
