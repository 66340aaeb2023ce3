#include "sno/circle_oracle.hpp"

#include <algorithm>
#include <string>

#include "sno/errors.hpp"

namespace sno {

CircleOracle CircleOracle::build(const ChordDiagram& d) {
    validate(AnyDiagram{d}, ClassTag::circle);
    for (std::size_t i = 1; i < d.chords.size(); ++i) {
        if (d.chords[i - 1].s > d.chords[i].s) {
            throw ValidationError("non-canonical", "chords must be ordered by left endpoint");
        }
    }
    CircleOracle o;
    o.n_ = d.n();
    std::vector<std::uint8_t> bits(2 * static_cast<std::size_t>(o.n_), 0);
    for (const auto& c : d.chords) bits[c.e - 1] = 1;
    o.ends_ = BitVector(bits);
    std::vector<Point> points;
    points.reserve(o.n_);
    for (std::uint32_t v = 1; v <= o.n_; ++v) {
        points.push_back({v, static_cast<std::uint32_t>(o.ends_.rank1_unchecked(d.chords[v - 1].e))});
    }
    o.grid_ = PointGrid(points);
    return o;
}

void CircleOracle::check_vertex(std::uint32_t v) const {
    if (v < 1 || v > n_) {
        throw RangeError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
    }
}

Chord CircleOracle::ends_of(std::uint32_t v) const noexcept {
    const auto s = static_cast<std::uint32_t>(ends_.select_unchecked(false, v) + 1);
    const auto e = static_cast<std::uint32_t>(ends_.select_unchecked(true, *grid_.y_of(v)) + 1);
    return {s, e};
}

Chord CircleOracle::interval_of(std::uint32_t v) const {
    check_vertex(v);
    return ends_of(v);
}

CircleOracle::Rects CircleOracle::rects(std::uint32_t v) const noexcept {
    const Chord c = ends_of(v);
    const auto ones_s = static_cast<std::uint32_t>(ends_.rank1_unchecked(c.s));
    const auto ones_e = static_cast<std::uint32_t>(ends_.rank1_unchecked(c.e));
    const std::uint32_t zeros_s = c.s - ones_s;
    const std::uint32_t zeros_e = c.e - ones_e;
    return {Rect{1, zeros_s - 1, ones_s + 1, ones_e}, Rect{v + 1, zeros_e, ones_e + 1, n_}};
}

bool CircleOracle::adjacent(std::uint32_t u, std::uint32_t v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const Chord a = ends_of(u);
    const Chord b = ends_of(v);
    return (a.s < b.s && b.s < a.e && a.e < b.e) || (b.s < a.s && a.s < b.e && b.e < a.e);
}

std::uint64_t CircleOracle::degree(std::uint32_t v) const {
    check_vertex(v);
    const Rects r = rects(v);
    return grid_.count(r.left) + grid_.count(r.right);
}

std::vector<std::uint32_t> CircleOracle::neighborhood(std::uint32_t v) const {
    check_vertex(v);
    const Rects r = rects(v);
    std::vector<std::uint32_t> out;
    for (const auto& p : grid_.report(r.left)) out.push_back(p.x);
    for (const auto& p : grid_.report(r.right)) out.push_back(p.x);
    std::sort(out.begin(), out.end());
    return out;
}

SpaceReport CircleOracle::space_report() const {
    SpaceReport r;
    r.components = {{"endpoints", ends_.bits_used()}, {"grid", grid_.bits_used()}};
    return r;
}

void CircleOracle::serialize(ByteWriter& out) const {
    out.put_section([&](ByteWriter& w) { ends_.serialize(w); });
    out.put_section([&](ByteWriter& w) { grid_.serialize(w); });
}

CircleOracle CircleOracle::deserialize(ByteReader& in, std::uint32_t n) {
    CircleOracle o;
    o.n_ = n;
    ByteReader s1 = in.section();
    o.ends_ = BitVector::deserialize(s1);
    ByteReader s2 = in.section();
    o.grid_ = PointGrid::deserialize(s2);
    if (!s1.done() || !s2.done() || !in.done()) throw FormatError("trailing bytes in circle oracle");
    if (n == 0 || o.ends_.size() != 2 * static_cast<std::uint64_t>(n) || o.ends_.count(true) != n ||
        o.grid_.point_count() != n || o.grid_.side() != n || !o.grid_.distinct_x() || !o.grid_.distinct_y()) {
        throw FormatError("circle oracle components are inconsistent");
    }
    return o;
}

}  // namespace sno
