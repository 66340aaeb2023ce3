#include "sno/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sno/errors.hpp"

namespace sno {
namespace {

constexpr std::string_view kClassNames[] = {
    "circle", "permutation", "interval", "circulararc",
    "kpolygon", "circletrapezoid", "trapezoid", "polygon",
};

std::string str(std::uint64_t v) { return std::to_string(v); }

[[noreturn]] void fail(const std::string& rule, const std::string& detail) {
    throw ValidationError(rule, detail);
}

bool is_polygon_class(ClassTag cls) {
    return cls == ClassTag::k_polygon || cls == ClassTag::circle_trapezoid ||
           cls == ClassTag::generic_polygon;
}

// Checks that `values` (1-based endpoints) are exactly {1..total}.
void check_endpoint_set(const std::vector<std::uint32_t>& values, std::uint64_t total) {
    std::vector<std::uint8_t> seen(total + 1, 0);
    for (auto v : values) {
        if (v < 1 || v > total) fail("endpoint-range", "endpoint " + str(v) + " outside [1," + str(total) + "]");
        if (seen[v]) fail("duplicate-endpoint", "endpoint " + str(v) + " used twice");
        seen[v] = 1;
    }
}

void validate_polygon(const PolygonDiagram& d, ClassTag cls) {
    if (d.kinds.size() != d.labels.size()) fail("corner-flags", "one flag per corner required");
    if (d.n == 0) fail("empty", "at least one polygon required");
    std::vector<std::vector<std::uint64_t>> corners(d.n + 1);
    for (std::uint64_t i = 0; i < d.labels.size(); ++i) {
        const auto label = d.labels[i];
        if (label < 1 || label > d.n) fail("label-range", "label " + str(label) + " at corner " + str(i + 1));
        corners[label].push_back(i);
    }
    std::optional<std::uint64_t> uniform;
    for (std::uint32_t u = 1; u <= d.n; ++u) {
        const auto& pos = corners[u];
        if (pos.size() < 2) fail("corner-count", "polygon " + str(u) + " has fewer than 2 corners");
        for (std::size_t j = 0; j < pos.size(); ++j) {
            const bool arc = d.kinds[pos[j]] == SideKind::arc;
            const bool next_arc = d.kinds[pos[(j + 1) % pos.size()]] == SideKind::arc;
            if (arc && next_arc) fail("adjacent-arcs", "polygon " + str(u) + " has two consecutive arc sides");
        }
        switch (cls) {
            case ClassTag::k_polygon:
                for (auto p : pos) {
                    if (d.kinds[p] == SideKind::arc) fail("class-shape", "k-polygon sides must all be chords");
                }
                if (uniform && *uniform != pos.size()) fail("class-shape", "k-polygon corner counts differ");
                uniform = pos.size();
                break;
            case ClassTag::circle_trapezoid: {
                if (pos.size() != 4) fail("class-shape", "circle-trapezoid polygon " + str(u) + " needs 4 corners");
                for (std::size_t j = 0; j < 4; ++j) {
                    if (d.kinds[pos[j]] == d.kinds[pos[(j + 1) % 4]]) {
                        fail("class-shape", "circle-trapezoid polygon " + str(u) + " must alternate arcs and chords");
                    }
                }
                break;
            }
            default: break;
        }
    }
}

void validate_chords(const ChordDiagram& d) {
    if (d.chords.empty()) fail("empty", "at least one chord required");
    std::vector<std::uint32_t> ends;
    for (std::size_t i = 0; i < d.chords.size(); ++i) {
        const auto& c = d.chords[i];
        if (c.s >= c.e) fail("endpoint-order", "chord " + str(i + 1) + " needs s < e");
        ends.push_back(c.s);
        ends.push_back(c.e);
    }
    check_endpoint_set(ends, 2 * d.chords.size());
}

void validate_permutation(const PermutationDiagram& d) {
    if (d.pi.empty()) fail("empty", "at least one element required");
    std::vector<std::uint8_t> seen(d.pi.size() + 1, 0);
    for (auto v : d.pi) {
        if (v < 1 || v > d.pi.size()) fail("permutation-range", "value " + str(v));
        if (seen[v]) fail("permutation-duplicate", "value " + str(v) + " repeated");
        seen[v] = 1;
    }
}

void validate_arcs(const ArcDiagram& d, ClassTag cls) {
    if (d.circular != (cls == ClassTag::circular_arc)) fail("class-mismatch", "arc model does not match class");
    if (d.arcs.empty()) fail("empty", "at least one arc required");
    std::vector<std::uint32_t> ends;
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
        const auto& a = d.arcs[i];
        if (!d.circular && a.s >= a.e) fail("endpoint-order", "interval " + str(i + 1) + " needs s < e");
        ends.push_back(a.s);
        ends.push_back(a.e);
    }
    check_endpoint_set(ends, 2 * d.arcs.size());
}

void validate_trapezoids(const TrapezoidDiagram& d) {
    if (d.traps.empty()) fail("empty", "at least one trapezoid required");
    std::vector<std::uint32_t> ends;
    for (std::size_t i = 0; i < d.traps.size(); ++i) {
        const auto& t = d.traps[i];
        if (t.a >= t.b || t.c >= t.d) fail("endpoint-order", "trapezoid " + str(i + 1) + " needs a < b and c < d");
        ends.insert(ends.end(), {t.a, t.b, t.c, t.d});
    }
    check_endpoint_set(ends, 4 * d.traps.size());
}

// relabel[old - 1] = new, from a list of sort keys indexed by old label.
template <class Key>
std::vector<std::uint32_t> order_by(const std::vector<Key>& keys) {
    std::vector<std::uint32_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0U);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return keys[x] < keys[y]; });
    std::vector<std::uint32_t> relabel(keys.size());
    for (std::uint32_t rank = 0; rank < order.size(); ++rank) relabel[order[rank]] = rank + 1;
    return relabel;
}

template <class T>
void apply_relabel(std::vector<T>& items, const std::vector<std::uint32_t>& relabel) {
    std::vector<T> out(items.size());
    for (std::size_t old = 0; old < items.size(); ++old) out[relabel[old] - 1] = items[old];
    items.swap(out);
}

}  // namespace

std::string_view class_name(ClassTag tag) noexcept {
    return kClassNames[static_cast<std::size_t>(tag)];
}

std::optional<ClassTag> class_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < std::size(kClassNames); ++i) {
        if (kClassNames[i] == name) return static_cast<ClassTag>(i);
    }
    return std::nullopt;
}

std::optional<ClassTag> class_from_byte(std::uint8_t byte) noexcept {
    if (byte >= std::size(kClassNames)) return std::nullopt;
    return static_cast<ClassTag>(byte);
}

std::uint32_t vertex_count(const AnyDiagram& d) noexcept {
    return std::visit(
        [](const auto& x) -> std::uint32_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, PolygonDiagram>) {
                return x.n;
            } else {
                return x.n();
            }
        },
        d);
}

void validate(const AnyDiagram& d, ClassTag cls) {
    auto mismatch = [&] { fail("class-mismatch", "diagram kind does not match class " + std::string(class_name(cls))); };
    if (const auto* p = std::get_if<PolygonDiagram>(&d)) {
        if (!is_polygon_class(cls)) mismatch();
        validate_polygon(*p, cls);
    } else if (const auto* c = std::get_if<ChordDiagram>(&d)) {
        if (cls != ClassTag::circle) mismatch();
        validate_chords(*c);
    } else if (const auto* pm = std::get_if<PermutationDiagram>(&d)) {
        if (cls != ClassTag::permutation) mismatch();
        validate_permutation(*pm);
    } else if (const auto* a = std::get_if<ArcDiagram>(&d)) {
        if (cls != ClassTag::interval && cls != ClassTag::circular_arc) mismatch();
        validate_arcs(*a, cls);
    } else if (const auto* t = std::get_if<TrapezoidDiagram>(&d)) {
        if (cls != ClassTag::trapezoid) mismatch();
        validate_trapezoids(*t);
    }
}

std::vector<std::uint32_t> canonicalize(AnyDiagram& d) {
    if (auto* p = std::get_if<PolygonDiagram>(&d)) {
        std::vector<std::uint32_t> relabel(p->n, 0);
        std::uint32_t next = 0;
        for (auto label : p->labels) {
            if (relabel[label - 1] == 0) relabel[label - 1] = ++next;
        }
        for (auto& label : p->labels) label = relabel[label - 1];
        return relabel;
    }
    if (auto* c = std::get_if<ChordDiagram>(&d)) {
        std::vector<std::uint32_t> keys;
        for (const auto& ch : c->chords) keys.push_back(ch.s);
        auto relabel = order_by(keys);
        apply_relabel(c->chords, relabel);
        return relabel;
    }
    if (auto* pm = std::get_if<PermutationDiagram>(&d)) {
        std::vector<std::uint32_t> relabel(pm->n());
        std::iota(relabel.begin(), relabel.end(), 1U);
        return relabel;
    }
    if (auto* a = std::get_if<ArcDiagram>(&d)) {
        std::vector<std::uint32_t> keys;
        for (const auto& arc : a->arcs) keys.push_back(std::min(arc.s, arc.e));
        auto relabel = order_by(keys);
        apply_relabel(a->arcs, relabel);
        return relabel;
    }
    auto& t = std::get<TrapezoidDiagram>(d);
    std::vector<std::uint32_t> keys;
    for (const auto& tr : t.traps) keys.push_back(tr.a);
    auto relabel = order_by(keys);
    apply_relabel(t.traps, relabel);
    return relabel;
}

PolygonDiagram to_polygon_diagram(const AnyDiagram& d, ClassTag cls) {
    validate(d, cls);
    PolygonDiagram out;
    auto place = [&](std::uint32_t pos, std::uint32_t label, SideKind kind) {
        out.labels[pos - 1] = label;
        out.kinds[pos - 1] = kind;
    };

    if (const auto* p = std::get_if<PolygonDiagram>(&d)) {
        out = *p;
    } else if (const auto* c = std::get_if<ChordDiagram>(&d)) {
        out.n = c->n();
        out.labels.assign(2 * out.n, 0);
        out.kinds.assign(2 * out.n, SideKind::chord);
        for (std::uint32_t v = 1; v <= out.n; ++v) {
            place(c->chords[v - 1].s, v, SideKind::chord);
            place(c->chords[v - 1].e, v, SideKind::chord);
        }
    } else if (const auto* pm = std::get_if<PermutationDiagram>(&d)) {
        // Top line 1..n clockwise, bottom line reversed: i -> 2n + 1 - pi(i).
        out.n = pm->n();
        out.labels.assign(2 * out.n, 0);
        out.kinds.assign(2 * out.n, SideKind::chord);
        for (std::uint32_t v = 1; v <= out.n; ++v) {
            place(v, v, SideKind::chord);
            place(2 * out.n + 1 - pm->pi[v - 1], v, SideKind::chord);
        }
    } else if (const auto* a = std::get_if<ArcDiagram>(&d)) {
        // The arc runs clockwise from s to e; the chord closes it back.
        out.n = a->n();
        out.labels.assign(2 * out.n, 0);
        out.kinds.assign(2 * out.n, SideKind::chord);
        for (std::uint32_t v = 1; v <= out.n; ++v) {
            place(a->arcs[v - 1].s, v, SideKind::arc);
            place(a->arcs[v - 1].e, v, SideKind::chord);
        }
    } else {
        // Upper line left-to-right on the upper half clockwise, lower line
        // right-to-left on the lower half; corners a, b, d, c clockwise with
        // sides arc, chord, arc, chord.
        const auto& t = std::get<TrapezoidDiagram>(d);
        const std::uint32_t n = t.n();
        std::vector<std::uint32_t> upper_rank(4 * n + 1, 0);
        std::vector<std::uint32_t> lower_rank(4 * n + 1, 0);
        std::vector<std::uint8_t> on_upper(4 * n + 1, 0);
        for (const auto& tr : t.traps) on_upper[tr.a] = on_upper[tr.b] = 1;
        std::uint32_t up = 0;
        std::uint32_t low = 0;
        for (std::uint32_t pos = 1; pos <= 4 * n; ++pos) {
            if (on_upper[pos]) {
                upper_rank[pos] = ++up;
            } else {
                lower_rank[pos] = ++low;
            }
        }
        out.n = n;
        out.labels.assign(4 * n, 0);
        out.kinds.assign(4 * n, SideKind::chord);
        for (std::uint32_t v = 1; v <= n; ++v) {
            const auto& tr = t.traps[v - 1];
            place(upper_rank[tr.a], v, SideKind::arc);
            place(upper_rank[tr.b], v, SideKind::chord);
            place(4 * n + 1 - lower_rank[tr.d], v, SideKind::arc);
            place(4 * n + 1 - lower_rank[tr.c], v, SideKind::chord);
        }
    }

    std::uint32_t seen = 0;
    for (auto label : out.labels) {
        if (label > seen + 1) fail("non-canonical", "input labels are not in canonical order");
        seen = std::max(seen, label);
    }
    return out;
}

}  // namespace sno
