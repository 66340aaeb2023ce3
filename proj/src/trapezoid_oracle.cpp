#include "sno/trapezoid_oracle.hpp"

#include <algorithm>
#include <string>

#include "sno/errors.hpp"

namespace sno {

TrapezoidOracle TrapezoidOracle::build(const TrapezoidDiagram& d) {
    validate(AnyDiagram{d}, ClassTag::trapezoid);
    for (std::size_t i = 1; i < d.traps.size(); ++i) {
        if (d.traps[i - 1].a > d.traps[i].a) {
            throw ValidationError("non-canonical", "trapezoids must be ordered by a");
        }
    }
    TrapezoidOracle o;
    o.n_ = d.n();
    std::vector<std::uint32_t> symbols(4 * static_cast<std::size_t>(o.n_));
    for (const auto& t : d.traps) {
        symbols[t.a - 1] = 0;
        symbols[t.b - 1] = 1;
        symbols[t.c - 1] = 2;
        symbols[t.d - 1] = 3;
    }
    o.seq_ = LabelSequence(symbols, 4);
    std::vector<Point> upper, lower, legs;
    for (std::uint32_t v = 1; v <= o.n_; ++v) {
        const auto& t = d.traps[v - 1];
        const auto b = static_cast<std::uint32_t>(o.seq_.rank_unchecked(1, t.b));
        const auto c = static_cast<std::uint32_t>(o.seq_.rank_unchecked(2, t.c));
        const auto dd = static_cast<std::uint32_t>(o.seq_.rank_unchecked(3, t.d));
        upper.push_back({v, b});
        lower.push_back({v, c});
        legs.push_back({b, dd});
    }
    std::sort(legs.begin(), legs.end());
    o.by_b_ = PointGrid(upper);
    o.by_c_ = PointGrid(lower);
    o.b_to_d_ = PointGrid(legs);
    return o;
}

void TrapezoidOracle::check_vertex(std::uint32_t v) const {
    if (v < 1 || v > n_) {
        throw RangeError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
    }
}

Trapezoid TrapezoidOracle::positions(std::uint32_t v) const noexcept {
    const std::uint32_t b = *by_b_.y_of(v);
    const std::uint32_t c = *by_c_.y_of(v);
    const std::uint32_t d = *b_to_d_.y_of(b);
    auto at = [&](std::uint32_t symbol, std::uint32_t j) {
        return static_cast<std::uint32_t>(seq_.select_unchecked(symbol, j) + 1);
    };
    return {at(0, v), at(1, b), at(2, c), at(3, d)};
}

Trapezoid TrapezoidOracle::corner_positions(std::uint32_t v) const {
    check_vertex(v);
    return positions(v);
}

TrapezoidOracle::Ranks TrapezoidOracle::ranks(std::uint32_t v) const noexcept {
    const Trapezoid t = positions(v);
    auto rank = [&](std::uint32_t symbol, std::uint32_t pos) {
        return static_cast<std::uint32_t>(seq_.rank_unchecked(symbol, pos));
    };
    return {rank(0, t.b), rank(2, t.d), rank(1, t.a), rank(3, t.c)};
}

bool TrapezoidOracle::adjacent(std::uint32_t u, std::uint32_t v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const Trapezoid x = positions(u);
    const Trapezoid y = positions(v);
    const bool x_left = x.b < y.a && x.d < y.c;
    const bool y_left = y.b < x.a && y.d < x.c;
    return !x_left && !y_left;
}

bool TrapezoidOracle::adjacent_merged_order(std::uint32_t u, std::uint32_t v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const Trapezoid x = positions(u);
    const Trapezoid y = positions(v);
    const bool x_left = std::max(x.b, x.d) < std::min(y.a, y.c);
    const bool y_left = std::max(y.b, y.d) < std::min(x.a, x.c);
    return !x_left && !y_left;
}

std::uint64_t TrapezoidOracle::count_right(std::uint32_t v) const {
    check_vertex(v);
    const Ranks r = ranks(v);
    return by_c_.count(Rect{r.a_before_b + 1, n_, r.c_before_d + 1, n_});
}

std::uint64_t TrapezoidOracle::count_left(std::uint32_t v) const {
    check_vertex(v);
    const Ranks r = ranks(v);
    return b_to_d_.count(Rect{1, r.b_before_a, 1, r.d_before_c});
}

std::uint64_t TrapezoidOracle::degree(std::uint32_t v) const {
    return n_ - 1 - count_right(v) - count_left(v);
}

std::vector<std::uint32_t> TrapezoidOracle::neighborhood(std::uint32_t v) const {
    check_vertex(v);
    const Ranks r = ranks(v);
    // Not right of v: complement of [a_before_b + 1, n] x [c_before_d + 1, n].
    std::vector<std::uint32_t> not_right;
    const std::uint32_t rx = r.a_before_b + 1;
    const std::uint32_t ry = r.c_before_d + 1;
    for (const auto& p : by_c_.report(Rect{1, rx - 1, 1, n_})) not_right.push_back(p.x);
    for (const auto& p : by_c_.report(Rect{rx, n_, 1, ry - 1})) not_right.push_back(p.x);
    // Not left of v: complement of [1, b_before_a] x [1, d_before_c].
    std::vector<std::uint32_t> not_left;
    const std::uint32_t lx = r.b_before_a;
    const std::uint32_t ly = r.d_before_c;
    for (const auto& p : b_to_d_.report(Rect{1, n_, ly + 1, n_})) not_left.push_back(*by_b_.x_of(p.x));
    for (const auto& p : b_to_d_.report(Rect{lx + 1, n_, 1, ly})) not_left.push_back(*by_b_.x_of(p.x));

    std::sort(not_right.begin(), not_right.end());
    std::sort(not_left.begin(), not_left.end());
    std::vector<std::uint32_t> out;
    std::set_intersection(not_right.begin(), not_right.end(), not_left.begin(), not_left.end(),
                          std::back_inserter(out));
    out.erase(std::remove(out.begin(), out.end(), v), out.end());
    return out;
}

SpaceReport TrapezoidOracle::space_report() const {
    SpaceReport r;
    r.components = {{"sequence", seq_.bits_used()},
                    {"grid_b", by_b_.bits_used()},
                    {"grid_c", by_c_.bits_used()},
                    {"grid_bd", b_to_d_.bits_used()}};
    return r;
}

void TrapezoidOracle::serialize(ByteWriter& out) const {
    out.put_section([&](ByteWriter& w) { seq_.serialize(w); });
    out.put_section([&](ByteWriter& w) { by_b_.serialize(w); });
    out.put_section([&](ByteWriter& w) { by_c_.serialize(w); });
    out.put_section([&](ByteWriter& w) { b_to_d_.serialize(w); });
}

TrapezoidOracle TrapezoidOracle::deserialize(ByteReader& in, std::uint32_t n) {
    TrapezoidOracle o;
    o.n_ = n;
    auto read = [&](auto parse) {
        ByteReader section = in.section();
        auto value = parse(section);
        if (!section.done()) throw FormatError("trailing bytes in section");
        return value;
    };
    o.seq_ = read([](ByteReader& r) { return LabelSequence::deserialize(r); });
    o.by_b_ = read([](ByteReader& r) { return PointGrid::deserialize(r); });
    o.by_c_ = read([](ByteReader& r) { return PointGrid::deserialize(r); });
    o.b_to_d_ = read([](ByteReader& r) { return PointGrid::deserialize(r); });
    if (!in.done()) throw FormatError("trailing bytes in trapezoid oracle");
    bool ok = n >= 1 && o.seq_.size() == 4 * static_cast<std::uint64_t>(n) && o.seq_.sigma() == 4;
    for (const PointGrid* g : {&o.by_b_, &o.by_c_, &o.b_to_d_}) {
        ok = ok && g->point_count() == n && g->side() == n && g->distinct_x() && g->distinct_y();
    }
    for (std::uint32_t s = 0; ok && s < 4; ++s) ok = o.seq_.rank_unchecked(s, o.seq_.size()) == n;
    if (!ok) throw FormatError("trapezoid oracle components are inconsistent");
    return o;
}

}  // namespace sno
