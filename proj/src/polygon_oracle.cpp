#include "sno/polygon_oracle.hpp"

#include <algorithm>
#include <string>

#include "sno/errors.hpp"

namespace sno {
namespace {

bool is_polygon_class(ClassTag cls) {
    return cls == ClassTag::k_polygon || cls == ClassTag::circle_trapezoid ||
           cls == ClassTag::generic_polygon;
}

}  // namespace

bool NeighborhoodScratch::clean() const noexcept {
    return std::all_of(marks_.begin(), marks_.end(), [](std::uint8_t m) { return m == 0; });
}

PolygonOracle PolygonOracle::build(const PolygonDiagram& d, const PolygonOracleOptions& opts) {
    validate(AnyDiagram{d}, is_polygon_class(opts.impl_class) ? opts.impl_class : ClassTag::generic_polygon);
    const std::uint64_t total = d.corners();
    std::vector<std::vector<std::uint64_t>> pos(d.n + 1);
    std::uint32_t seen = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        const std::uint32_t label = d.labels[i];
        if (pos[label].empty()) {
            if (label != seen + 1) {
                throw ValidationError("non-canonical", "label " + std::to_string(label) +
                                                           " appears before label " +
                                                           std::to_string(seen + 1));
            }
            seen = label;
        }
        pos[label].push_back(i + 1);
    }

    PolygonOracle o;
    o.n_ = d.n;
    o.corners_ = total;
    o.impl_class_ = opts.impl_class;

    std::vector<std::uint8_t> first(total, 0);
    std::vector<std::uint8_t> arcs(total, 0);
    std::vector<std::uint32_t> rest;
    rest.reserve(total - d.n);
    for (std::uint32_t v = 1; v <= d.n; ++v) first[pos[v][0] - 1] = 1;
    for (std::uint64_t i = 0; i < total; ++i) {
        arcs[i] = d.kinds[i] == SideKind::arc;
        if (!first[i]) rest.push_back(d.labels[i] - 1);
    }
    o.first_ = BitVector(first);
    o.rest_ = LabelSequence(rest, d.n);
    o.arcs_ = BitVector(arcs);

    // Source arrays are materialized once from the corner lists and dropped.
    const std::uint64_t inf = total + 1;
    const bool no_chords = o.forced_no_chords();
    std::vector<std::uint64_t> nxt(total), nxt_arc(total), nxt_chord(total), prv_arc(total), prv_chord(total);
    for (std::uint32_t v = 1; v <= d.n; ++v) {
        const auto& p = pos[v];
        const std::size_t k = p.size();
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint64_t at = p[j] - 1;
            const bool last = j + 1 == k;
            const std::uint64_t next = last ? inf : p[j + 1];
            const bool arc_out = arcs[at] != 0;
            const bool arc_in = arcs[p[(j + k - 1) % k] - 1] != 0;
            nxt[at] = next;
            nxt_arc[at] = arc_out ? next : 0;
            nxt_chord[at] = !arc_out && !last && !no_chords ? next : 0;
            prv_arc[at] = arc_in ? (j == 0 ? 0 : p[j - 1]) : inf;
            prv_chord[at] = !arc_in && j != 0 && !no_chords ? p[j - 1] : inf;
        }
    }
    o.idx_next_ = RangeArgIndex(nxt, ArgMode::max);
    o.idx_next_arc_ = RangeArgIndex(nxt_arc, ArgMode::max);
    o.idx_next_chord_ = RangeArgIndex(nxt_chord, ArgMode::max);
    o.idx_prev_arc_ = RangeArgIndex(prv_arc, ArgMode::min);
    o.idx_prev_chord_ = RangeArgIndex(prv_chord, ArgMode::min);
    o.finish_load();

    if (opts.explicit_degrees) {
        NeighborhoodScratch scratch(o.n_);
        std::vector<std::uint64_t> deg(o.n_);
        for (std::uint32_t v = 1; v <= o.n_; ++v) deg[v - 1] = o.neighborhood(v, scratch).size();
        o.degrees_ = PackedArray(deg);
    }
    return o;
}

bool PolygonOracle::forced_no_chords() const noexcept {
    return impl_class_ == ClassTag::interval || impl_class_ == ClassTag::circular_arc;
}

void PolygonOracle::finish_load() {
    needs_wrap_scan_ = false;
    if (forced_no_chords()) return;
    for (std::uint32_t v = 1; v <= n_ && !needs_wrap_scan_; ++v) {
        needs_wrap_scan_ = has_wrap_chord(v, occurrence(v, 1), occurrence(v, sides_of(v)));
    }
}

// True when v's last side is a chord that is not already one of its indexed
// sides (a 2-corner all-chord polygon has a single chord).
bool PolygonOracle::has_wrap_chord(std::uint32_t v, std::uint64_t first, std::uint64_t last) const noexcept {
    if (arcs_.get0(last - 1)) return false;
    if (sides_of(v) == 2 && !arcs_.get0(first - 1)) return false;
    return true;
}

void PolygonOracle::check_vertex(std::uint32_t u) const {
    if (u < 1 || u > n_) {
        throw RangeError("vertex " + std::to_string(u) + " outside [1, " + std::to_string(n_) + "]");
    }
}

PolygonOracle::Corner PolygonOracle::locate(std::uint64_t pos) const noexcept {
    const std::uint64_t ones = first_.rank1_unchecked(pos);
    if (first_.get0(pos - 1)) return {static_cast<std::uint32_t>(ones), 1};
    const auto [symbol, before] = rest_.access_rank_unchecked(pos - ones - 1);
    return {symbol + 1, before + 2};
}

std::uint64_t PolygonOracle::occurrence(std::uint32_t u, std::uint64_t j) const noexcept {
    if (j == 1) return first_.select_unchecked(true, u) + 1;
    return first_.select_unchecked(false, rest_.select_unchecked(u - 1, j - 1) + 1) + 1;
}

std::uint32_t PolygonOracle::sides_of(std::uint32_t u) const noexcept {
    return 1 + static_cast<std::uint32_t>(rest_.rank_unchecked(u - 1, corners_ - n_));
}

std::uint32_t PolygonOracle::s_access(std::uint64_t i) const {
    if (i < 1 || i > corners_) {
        throw RangeError("position " + std::to_string(i) + " outside [1, " + std::to_string(corners_) + "]");
    }
    return locate(i).label;
}

std::uint64_t PolygonOracle::s_rank(std::uint32_t label, std::uint64_t i) const {
    if (i > corners_) {
        throw RangeError("position " + std::to_string(i) + " exceeds " + std::to_string(corners_));
    }
    if (label < 1 || label > n_ || i == 0) return 0;
    const std::uint64_t zeros = i - first_.rank1_unchecked(i);
    const bool first_seen = first_.select_unchecked(true, label) < i;
    return rest_.rank_unchecked(label - 1, zeros) + (first_seen ? 1 : 0);
}

std::uint64_t PolygonOracle::s_select(std::uint32_t label, std::uint64_t j) const {
    const std::uint64_t count = label >= 1 && label <= n_ ? sides_of(label) : 0;
    if (j < 1 || j > count) {
        throw NotFoundError("select_" + std::to_string(label) + "(" + std::to_string(j) + "): only " +
                            std::to_string(count) + " occurrences");
    }
    return occurrence(label, j);
}

std::uint32_t PolygonOracle::side_count(std::uint32_t u) const {
    check_vertex(u);
    return sides_of(u);
}

Span PolygonOracle::interval(std::uint32_t u, std::uint32_t i) const {
    check_vertex(u);
    const std::uint32_t d = sides_of(u);
    if (i < 1 || i > d) {
        throw RangeError("side " + std::to_string(i) + " outside [1, " + std::to_string(d) + "]");
    }
    const auto from = static_cast<std::uint32_t>(occurrence(u, i));
    const auto to = static_cast<std::uint32_t>(occurrence(u, i == d ? 1 : i + 1));
    return {from, to};
}

std::uint64_t PolygonOracle::value(VirtualArray which, std::uint64_t pos) const noexcept {
    const std::uint64_t inf = corners_ + 1;
    const bool arc_out = arcs_.get0(pos - 1);
    if (which == VirtualArray::next_arc && !arc_out) return 0;
    if (which == VirtualArray::next_chord && (arc_out || forced_no_chords())) return 0;
    if (which == VirtualArray::prev_chord && forced_no_chords()) return inf;
    return value_at(which, locate(pos));
}

std::uint64_t PolygonOracle::value_at(VirtualArray which, const Corner& c) const noexcept {
    const std::uint64_t inf = corners_ + 1;
    switch (which) {
        case VirtualArray::next:
        case VirtualArray::next_arc:
        case VirtualArray::next_chord: {
            const std::uint32_t d = sides_of(c.label);
            if (c.rank < d) return occurrence(c.label, c.rank + 1);
            return which == VirtualArray::next_chord ? 0 : inf;
        }
        case VirtualArray::prev_arc:
        case VirtualArray::prev_chord: {
            const bool wrap = c.rank == 1;
            const std::uint64_t prev = occurrence(c.label, wrap ? sides_of(c.label) : c.rank - 1);
            const bool arc_in = arcs_.get0(prev - 1);
            if (which == VirtualArray::prev_arc) return arc_in ? (wrap ? 0 : prev) : inf;
            return !arc_in && !wrap ? prev : inf;
        }
    }
    return 0;
}

// Corners of `label` at positions 1..t. Labels are numbered by first
// corner, so the label-th first corner is this label's.
std::uint64_t PolygonOracle::count_upto(std::uint32_t label, std::uint64_t t) const noexcept {
    const std::uint64_t firsts = first_.rank1_unchecked(t);
    if (firsts < label) return 0;
    return 1 + rest_.rank_unchecked(label - 1, t - firsts);
}

// value(which, pos) > t, deciding by rank where that avoids a select.
bool PolygonOracle::exceeds(VirtualArray which, std::uint64_t pos, std::uint64_t t,
                            std::uint32_t& label) const noexcept {
    const bool arc_out = arcs_.get0(pos - 1);
    if (which == VirtualArray::next_arc && !arc_out) return false;
    if (which == VirtualArray::next_chord && (arc_out || forced_no_chords())) return false;
    const Corner c = locate(pos);
    label = c.label;
    // thresholds stay <= corners_, so a missing next corner (inf) always passes
    if (t >= pos && count_upto(c.label, t) != c.rank) return false;
    if (which != VirtualArray::next_chord) return true;
    return c.rank < sides_of(c.label);
}

// value(which, pos) < t.
bool PolygonOracle::precedes(VirtualArray which, std::uint64_t pos, std::uint64_t t,
                             std::uint32_t& label) const noexcept {
    if (which == VirtualArray::prev_chord && forced_no_chords()) return false;
    const Corner c = locate(pos);
    label = c.label;
    if (c.rank > 1 && t <= pos && (t == 0 || count_upto(c.label, t - 1) + 1 < c.rank)) return false;
    return value_at(which, c) < t;
}

std::uint64_t PolygonOracle::virt(VirtualArray which, std::uint64_t i) const {
    if (i < 1 || i > corners_) {
        throw RangeError("position " + std::to_string(i) + " outside [1, " + std::to_string(corners_) + "]");
    }
    return value(which, i);
}

bool PolygonOracle::adjacent(std::uint32_t u, std::uint32_t v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const std::uint32_t du = sides_of(u);
    const std::uint32_t dv = sides_of(v);
    std::vector<std::uint64_t> pu(du), pv(dv);
    for (std::uint32_t j = 0; j < du; ++j) pu[j] = occurrence(u, j + 1);
    for (std::uint32_t j = 0; j < dv; ++j) pv[j] = occurrence(v, j + 1);

    // Merge the two corner lists clockwise. A corner of one polygon sitting
    // in an arc gap of the other, or one polygon's corners spread over two
    // gaps of the other, is exactly an intersection.
    auto gap_is_arc = [&](const std::vector<std::uint64_t>& p, std::size_t before) {
        const std::size_t start = before == 0 ? p.size() - 1 : before - 1;
        return arcs_.get0(p[start] - 1);
    };
    std::size_t iu = 0;
    std::size_t iv = 0;
    std::size_t gap_of_v = du + 1;  // sentinel: no v corner placed yet
    while (iu < du || iv < dv) {
        if (iv == dv || (iu < du && pu[iu] < pv[iv])) {
            if (gap_is_arc(pv, iv)) return true;
            ++iu;
        } else {
            if (gap_is_arc(pu, iu)) return true;
            const std::size_t gap = iu == du ? 0 : iu;
            if (gap_of_v != du + 1 && gap_of_v != gap) return true;
            gap_of_v = gap;
            ++iv;
        }
    }
    return false;
}

template <class Emit>
void PolygonOracle::above(VirtualArray which, const RangeArgIndex& idx, std::uint64_t lo, std::uint64_t hi,
                          std::uint64_t threshold, NeighborhoodScratch& scratch, Emit&& emit) const {
    auto& ranges = scratch.ranges_;
    ranges.clear();
    if (lo <= hi) ranges.emplace_back(lo, hi);
    while (!ranges.empty()) {
        const auto [a, b] = ranges.back();
        ranges.pop_back();
        const std::uint64_t m = idx.query_unchecked(a, b);
        std::uint32_t label = 0;
        if (!exceeds(which, m, threshold, label)) continue;
        emit(m, label);
        if (a < m) ranges.emplace_back(a, m - 1);
        if (m < b) ranges.emplace_back(m + 1, b);
    }
}

template <class Emit>
void PolygonOracle::below(VirtualArray which, const RangeArgIndex& idx, std::uint64_t lo, std::uint64_t hi,
                          std::uint64_t threshold, NeighborhoodScratch& scratch, Emit&& emit) const {
    auto& ranges = scratch.ranges_;
    ranges.clear();
    if (lo <= hi) ranges.emplace_back(lo, hi);
    while (!ranges.empty()) {
        const auto [a, b] = ranges.back();
        ranges.pop_back();
        const std::uint64_t m = idx.query_unchecked(a, b);
        std::uint32_t label = 0;
        if (!precedes(which, m, threshold, label)) continue;
        emit(m, label);
        if (a < m) ranges.emplace_back(a, m - 1);
        if (m < b) ranges.emplace_back(m + 1, b);
    }
}

// Wrap chords of other polygons with a corner strictly inside (l, r). On a
// chord side only those with exactly one corner inside cross it.
template <class Emit>
void PolygonOracle::wrap_scan(std::uint32_t u, std::uint64_t l, std::uint64_t r, bool chord_side,
                              NeighborhoodScratch& scratch, Emit&& emit) const {
    if (l + 1 >= r) return;
    auto inside = [&](std::uint64_t p) { return l < p && p < r; };
    const std::uint64_t inf = corners_ + 1;
    const auto& seen = scratch.marks_;  // already reported: skip the selects
    above(VirtualArray::next, idx_next_, l + 1, r - 1, inf - 1, scratch, [&](std::uint64_t m, std::uint32_t v) {
        if (v == u || seen[v]) return;
        const std::uint64_t first = occurrence(v, 1);
        if (!has_wrap_chord(v, first, m)) return;
        if (!chord_side || !inside(first)) emit(v);
    });
    const auto lo = static_cast<std::uint32_t>(first_.rank1_unchecked(l) + 1);
    const auto hi = static_cast<std::uint32_t>(first_.rank1_unchecked(r - 1));
    for (std::uint32_t v = lo; v <= hi; ++v) {
        if (v == u || seen[v]) continue;
        const std::uint64_t last = occurrence(v, sides_of(v));
        if (!has_wrap_chord(v, occurrence(v, 1), last)) continue;
        if (!chord_side || !inside(last)) emit(v);
    }
}

template <class Emit>
void PolygonOracle::for_each_candidate(std::uint32_t u, NeighborhoodScratch& scratch, Emit&& emit) const {
    const std::uint32_t d = sides_of(u);
    std::vector<std::uint64_t> p(d);
    for (std::uint32_t j = 0; j < d; ++j) p[j] = occurrence(u, j + 1);
    const std::uint64_t total = corners_;
    auto label_emit = [&](std::uint64_t, std::uint32_t v) { emit(v); };

    for (std::uint32_t j = 0; j < d; ++j) {
        const bool arc = arcs_.get0(p[j] - 1);
        const bool wrap = j + 1 == d;
        if (!arc) {
            if (wrap && d == 2 && !arcs_.get0(p[0] - 1)) continue;
            // A chord is its endpoint pair; the wrap chord reads as [p1, pd].
            const std::uint64_t l = wrap ? p[0] : p[j];
            const std::uint64_t r = wrap ? p[j] : p[j + 1];
            above(VirtualArray::next_chord, idx_next_chord_, l + 1, r - 1, r, scratch, label_emit);
            below(VirtualArray::prev_chord, idx_prev_chord_, l + 1, r - 1, l, scratch, label_emit);
            above(VirtualArray::next_arc, idx_next_arc_, 1, r - 1, r, scratch, label_emit);
            below(VirtualArray::prev_arc, idx_prev_arc_, l + 1, total, l, scratch, label_emit);
            if (needs_wrap_scan_) wrap_scan(u, l, r, true, scratch, emit);
        } else {
            // A wrapping arc is handled as its two pieces past the ends.
            std::pair<std::uint64_t, std::uint64_t> pieces[2];
            std::size_t count = 0;
            if (wrap) {
                pieces[count++] = {p[j], total + 1};
                pieces[count++] = {0, p[0]};
            } else {
                pieces[count++] = {p[j], p[j + 1]};
            }
            for (std::size_t k = 0; k < count; ++k) {
                const auto [l, r] = pieces[k];
                above(VirtualArray::next_chord, idx_next_chord_, l + 1, r - 1, l, scratch, label_emit);
                below(VirtualArray::prev_chord, idx_prev_chord_, l + 1, r - 1, r, scratch, label_emit);
                above(VirtualArray::next_arc, idx_next_arc_, 1, r - 1, l, scratch, label_emit);
                below(VirtualArray::prev_arc, idx_prev_arc_, l + 1, total, r, scratch, label_emit);
                if (needs_wrap_scan_) wrap_scan(u, l, r, false, scratch, emit);
            }
        }
    }
}

std::vector<std::uint32_t> PolygonOracle::neighborhood(std::uint32_t u, NeighborhoodScratch& scratch) const {
    check_vertex(u);
    if (scratch.marks_.size() < static_cast<std::size_t>(n_) + 1) scratch.marks_.assign(n_ + 1, 0);
    auto& marks = scratch.marks_;
    std::vector<std::uint32_t> out;
    for_each_candidate(u, scratch, [&](std::uint32_t v) {
        if (v == u || marks[v]) return;
        marks[v] = 1;
        out.push_back(v);
    });
    for (auto v : out) marks[v] = 0;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> PolygonOracle::neighborhood(std::uint32_t u) const {
    NeighborhoodScratch scratch(n_);
    return neighborhood(u, scratch);
}

std::uint64_t PolygonOracle::degree(std::uint32_t u) const {
    check_vertex(u);
    if (degrees_) return (*degrees_)[u - 1];
    return neighborhood(u).size();
}

SpaceReport PolygonOracle::space_report() const {
    SpaceReport r;
    r.components = {
        {"first", first_.bits_used()},
        {"rest", rest_.bits_used()},
        {"arcs", arcs_.bits_used()},
        {"idx_next", idx_next_.bits_used()},
        {"idx_next_arc", idx_next_arc_.bits_used()},
        {"idx_next_chord", idx_next_chord_.bits_used()},
        {"idx_prev_arc", idx_prev_arc_.bits_used()},
        {"idx_prev_chord", idx_prev_chord_.bits_used()},
    };
    if (degrees_) r.components.push_back({"degrees", degrees_->bits_used()});
    return r;
}

void PolygonOracle::serialize(ByteWriter& out) const {
    out.put_section([&](ByteWriter& w) { first_.serialize(w); });
    out.put_section([&](ByteWriter& w) { rest_.serialize(w); });
    out.put_section([&](ByteWriter& w) { arcs_.serialize(w); });
    out.put_section([&](ByteWriter& w) { idx_next_.serialize(w); });
    out.put_section([&](ByteWriter& w) { idx_next_arc_.serialize(w); });
    out.put_section([&](ByteWriter& w) { idx_next_chord_.serialize(w); });
    out.put_section([&](ByteWriter& w) { idx_prev_arc_.serialize(w); });
    out.put_section([&](ByteWriter& w) { idx_prev_chord_.serialize(w); });
    if (degrees_) out.put_section([&](ByteWriter& w) { degrees_->serialize(w); });
}

PolygonOracle PolygonOracle::deserialize(ByteReader& in, std::uint32_t n, std::uint64_t corners,
                                         ClassTag impl_class) {
    PolygonOracle o;
    o.n_ = n;
    o.corners_ = corners;
    o.impl_class_ = impl_class;
    auto read = [&](auto parse) {
        ByteReader section = in.section();
        auto value = parse(section);
        if (!section.done()) throw FormatError("trailing bytes in section");
        return value;
    };
    o.first_ = read([](ByteReader& r) { return BitVector::deserialize(r); });
    o.rest_ = read([](ByteReader& r) { return LabelSequence::deserialize(r); });
    o.arcs_ = read([](ByteReader& r) { return BitVector::deserialize(r); });
    RangeArgIndex* indexes[] = {&o.idx_next_, &o.idx_next_arc_, &o.idx_next_chord_, &o.idx_prev_arc_,
                                &o.idx_prev_chord_};
    for (auto* idx : indexes) *idx = read([](ByteReader& r) { return RangeArgIndex::deserialize(r); });
    if (!in.done()) o.degrees_ = read([](ByteReader& r) { return PackedArray::deserialize(r); });

    const bool shapes_ok =
        n >= 1 && o.first_.size() == corners && o.first_.count(true) == n && o.rest_.size() == corners - n &&
        o.rest_.sigma() == n && o.arcs_.size() == corners && (!o.degrees_ || o.degrees_->size() == n) &&
        o.idx_next_.mode() == ArgMode::max && o.idx_next_arc_.mode() == ArgMode::max &&
        o.idx_next_chord_.mode() == ArgMode::max && o.idx_prev_arc_.mode() == ArgMode::min &&
        o.idx_prev_chord_.mode() == ArgMode::min;
    bool sizes_ok = shapes_ok;
    for (auto* idx : indexes) sizes_ok = sizes_ok && idx->size() == corners;
    if (!sizes_ok) throw FormatError("polygon oracle components are inconsistent");
    o.finish_load();
    return o;
}

}  // namespace sno
