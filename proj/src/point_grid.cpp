#include "sno/point_grid.hpp"

#include <algorithm>
#include <string>

#include "sno/errors.hpp"

namespace sno {

PointGrid::PointGrid(std::span<const Point> points)
    : PointGrid(static_cast<std::uint32_t>(points.size()), points) {}

PointGrid::PointGrid(std::uint32_t side, std::span<const Point> points) : side_(side) {
    std::vector<Point> sorted(points.begin(), points.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const Point& p = sorted[i];
        if (p.x < 1 || p.x > side || p.y < 1 || p.y > side) {
            throw ValidationError("grid-bounds", "point " + std::to_string(i + 1) + " (" +
                                                     std::to_string(p.x) + "," +
                                                     std::to_string(p.y) + ") outside [1," +
                                                     std::to_string(side) + "]^2");
        }
    }
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::uint32_t> column_count(static_cast<std::size_t>(side) + 1, 0);
    std::vector<std::uint32_t> row_count(static_cast<std::size_t>(side) + 1, 0);
    for (const Point& p : sorted) {
        ++column_count[p.x];
        ++row_count[p.y];
    }
    distinct_x_ = std::all_of(column_count.begin(), column_count.end(),
                              [](std::uint32_t c) { return c <= 1; });
    distinct_y_ = std::all_of(row_count.begin(), row_count.end(),
                              [](std::uint32_t c) { return c <= 1; });
    dense_columns_ = distinct_x_ && sorted.size() == side;

    if (!dense_columns_) {
        std::vector<std::uint8_t> unary;
        unary.reserve(sorted.size() + side);
        for (std::uint32_t x = 1; x <= side; ++x) {
            unary.insert(unary.end(), column_count[x], 0);
            unary.push_back(1);
        }
        columns_ = BitVector(std::span<const std::uint8_t>(unary));
    }

    std::vector<std::uint32_t> ys(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) ys[i] = sorted[i].y - 1;
    ys_ = LabelSequence(ys, std::max<std::uint32_t>(side, 1));
}

std::uint64_t PointGrid::points_before(std::uint64_t x) const noexcept {
    if (dense_columns_) return x - 1;
    if (x == 1) return 0;
    return columns_.select_unchecked(true, x - 1) - (x - 2);
}

std::uint32_t PointGrid::x_of_index(std::uint64_t index) const noexcept {
    if (dense_columns_) return static_cast<std::uint32_t>(index + 1);
    const std::uint64_t zero_pos = columns_.select_unchecked(false, index + 1);
    return static_cast<std::uint32_t>(columns_.rank1_unchecked(zero_pos) + 1);
}

void PointGrid::check_rect(const Rect& r) const {
    if (r.x1 < 1 || r.y1 < 1 || r.x2 > side_ || r.y2 > side_) {
        throw RangeError("rectangle [" + std::to_string(r.x1) + "," + std::to_string(r.x2) +
                         "]x[" + std::to_string(r.y1) + "," + std::to_string(r.y2) +
                         "] exceeds grid side " + std::to_string(side_));
    }
}

std::uint64_t PointGrid::count(const Rect& r) const {
    if (r.empty()) return 0;
    check_rect(r);
    const std::uint64_t begin = points_before(r.x1);
    const std::uint64_t end = points_before(static_cast<std::uint64_t>(r.x2) + 1);
    return ys_.count_less(begin, end, r.y2) - ys_.count_less(begin, end, r.y1 - 1);
}

std::vector<Point> PointGrid::report(const Rect& r) const {
    std::vector<Point> out;
    if (r.empty()) return out;
    check_rect(r);
    const std::uint64_t begin = points_before(r.x1);
    const std::uint64_t end = points_before(static_cast<std::uint64_t>(r.x2) + 1);
    ys_.report_range(begin, end, r.y1 - 1, r.y2 - 1, [&](std::uint64_t index, std::uint32_t y) {
        out.push_back({x_of_index(index), y + 1});
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::uint32_t> PointGrid::y_of(std::uint32_t x) const {
    if (!distinct_x_) throw ContractError("Y(x) needs pairwise-distinct x-coordinates");
    if (x < 1 || x > side_) {
        throw RangeError("column " + std::to_string(x) + " outside [1, " +
                         std::to_string(side_) + "]");
    }
    const std::uint64_t begin = points_before(x);
    const std::uint64_t end = points_before(static_cast<std::uint64_t>(x) + 1);
    if (begin == end) return std::nullopt;
    return ys_.access_unchecked(begin) + 1;
}

std::optional<std::uint32_t> PointGrid::x_of(std::uint32_t y) const {
    if (!distinct_y_) throw ContractError("X(y) needs pairwise-distinct y-coordinates");
    if (y < 1 || y > side_) {
        throw RangeError("row " + std::to_string(y) + " outside [1, " + std::to_string(side_) +
                         "]");
    }
    if (ys_.rank_unchecked(y - 1, ys_.size()) == 0) return std::nullopt;
    return x_of_index(ys_.select_unchecked(y - 1, 1));
}

std::uint64_t PointGrid::bits_used() const noexcept {
    return 64 + ys_.bits_used() + (dense_columns_ ? 0 : columns_.bits_used());
}

void PointGrid::serialize(ByteWriter& out) const {
    out.put_u32(side_);
    out.put_u8(static_cast<std::uint8_t>(dense_columns_ | distinct_x_ << 1 | distinct_y_ << 2));
    if (!dense_columns_) columns_.serialize(out);
    ys_.serialize(out);
}

PointGrid PointGrid::deserialize(ByteReader& in) {
    PointGrid g;
    g.side_ = in.get_u32();
    const std::uint8_t flags = in.get_u8();
    g.dense_columns_ = flags & 1U;
    g.distinct_x_ = flags & 2U;
    g.distinct_y_ = flags & 4U;
    if (!g.dense_columns_) g.columns_ = BitVector::deserialize(in);
    g.ys_ = LabelSequence::deserialize(in);
    const bool consistent =
        g.dense_columns_ ? g.ys_.size() == g.side_
                         : g.columns_.count(true) == g.side_ && g.columns_.count(false) == g.ys_.size();
    if (!consistent) throw FormatError("grid column map does not match its points");
    return g;
}

}  // namespace sno
