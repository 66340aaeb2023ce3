#include "sno/geometry.hpp"

#include <string>

#include "sno/errors.hpp"

namespace sno {
namespace {

bool strictly_inside(Span s, std::uint32_t x) noexcept {
    if (s.from < s.to) return s.from < x && x < s.to;
    return x > s.from || x < s.to;
}

bool on_span(Span s, std::uint32_t x) noexcept {
    return x == s.from || x == s.to || strictly_inside(s, x);
}

bool shares_endpoint(Span a, Span b) noexcept {
    return a.from == b.from || a.from == b.to || a.to == b.from || a.to == b.to;
}

void check_vertex(const PolygonDiagram& d, std::uint32_t u) {
    if (u < 1 || u > d.n) {
        throw RangeError("vertex " + std::to_string(u) + " outside [1, " + std::to_string(d.n) + "]");
    }
}

bool sides_cross(const std::vector<Side>& a, const std::vector<Side>& b) noexcept {
    for (const auto& e : a) {
        for (const auto& f : b) {
            if (sides_intersect(e.kind, e.span, f.kind, f.span)) return true;
        }
    }
    return false;
}

AdjacencyMatrix from_predicate(std::uint32_t n, auto&& adjacent) {
    AdjacencyMatrix m{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)};
    for (std::uint32_t u = 1; u <= n; ++u) {
        for (std::uint32_t v = u + 1; v <= n; ++v) {
            if (adjacent(u, v)) {
                m.cells[static_cast<std::size_t>(u - 1) * n + (v - 1)] = 1;
                m.cells[static_cast<std::size_t>(v - 1) * n + (u - 1)] = 1;
            }
        }
    }
    return m;
}

bool arcs_overlap(Span a, Span b) noexcept { return on_span(a, b.from) || on_span(b, a.from); }

}  // namespace

bool sides_intersect(SideKind e_kind, Span e, SideKind f_kind, Span f) noexcept {
    if (shares_endpoint(e, f)) return true;
    if (e_kind == SideKind::chord && f_kind == SideKind::chord) {
        return strictly_inside(e, f.from) != strictly_inside(e, f.to);
    }
    if (e_kind == SideKind::arc && f_kind == SideKind::arc) return arcs_overlap(e, f);
    const Span arc = e_kind == SideKind::arc ? e : f;
    const Span chord = e_kind == SideKind::arc ? f : e;
    return strictly_inside(arc, chord.from) || strictly_inside(arc, chord.to);
}

std::vector<std::vector<Side>> polygon_sides(const PolygonDiagram& d) {
    std::vector<std::vector<std::uint32_t>> corners(d.n);
    for (std::uint32_t i = 0; i < d.labels.size(); ++i) corners[d.labels[i] - 1].push_back(i + 1);
    std::vector<std::vector<Side>> sides(d.n);
    for (std::uint32_t v = 0; v < d.n; ++v) {
        const auto& pos = corners[v];
        for (std::size_t j = 0; j < pos.size(); ++j) {
            const Span span{pos[j], pos[(j + 1) % pos.size()]};
            sides[v].push_back({d.kinds[pos[j] - 1], span});
        }
        if (pos.size() == 2 && sides[v][0].kind == SideKind::chord && sides[v][1].kind == SideKind::chord) {
            sides[v].pop_back();
        }
    }
    return sides;
}

bool naive_adjacent(const PolygonDiagram& d, std::uint32_t u, std::uint32_t v) {
    check_vertex(d, u);
    check_vertex(d, v);
    if (u == v) return false;
    const auto sides = polygon_sides(d);
    return sides_cross(sides[u - 1], sides[v - 1]);
}

std::vector<std::uint32_t> naive_neighborhood(const PolygonDiagram& d, std::uint32_t u) {
    check_vertex(d, u);
    const auto sides = polygon_sides(d);
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 1; v <= d.n; ++v) {
        if (v != u && sides_cross(sides[u - 1], sides[v - 1])) out.push_back(v);
    }
    return out;
}

std::uint64_t naive_degree(const PolygonDiagram& d, std::uint32_t u) {
    return naive_neighborhood(d, u).size();
}

AdjacencyMatrix naive_matrix(const PolygonDiagram& d) {
    const auto sides = polygon_sides(d);
    return from_predicate(d.n, [&](std::uint32_t u, std::uint32_t v) {
        return sides_cross(sides[u - 1], sides[v - 1]);
    });
}

AdjacencyMatrix native_matrix(const AnyDiagram& d, ClassTag cls) {
    validate(d, cls);
    if (const auto* p = std::get_if<PolygonDiagram>(&d)) return naive_matrix(*p);
    if (const auto* c = std::get_if<ChordDiagram>(&d)) {
        // Overlap of [s, e] intervals without containment.
        return from_predicate(c->n(), [&](std::uint32_t u, std::uint32_t v) {
            const auto& a = c->chords[u - 1];
            const auto& b = c->chords[v - 1];
            return (a.s < b.s && b.s < a.e && a.e < b.e) || (b.s < a.s && a.s < b.e && b.e < a.e);
        });
    }
    if (const auto* pm = std::get_if<PermutationDiagram>(&d)) {
        return from_predicate(pm->n(), [&](std::uint32_t u, std::uint32_t v) {
            return pm->pi[u - 1] > pm->pi[v - 1];  // u < v here
        });
    }
    if (const auto* a = std::get_if<ArcDiagram>(&d)) {
        return from_predicate(a->n(), [&](std::uint32_t u, std::uint32_t v) {
            const Span x{a->arcs[u - 1].s, a->arcs[u - 1].e};
            const Span y{a->arcs[v - 1].s, a->arcs[v - 1].e};
            return arcs_overlap(x, y);
        });
    }
    const auto& t = std::get<TrapezoidDiagram>(d);
    return from_predicate(t.n(), [&](std::uint32_t u, std::uint32_t v) {
        const auto& x = t.traps[u - 1];
        const auto& y = t.traps[v - 1];
        const bool x_left = x.b < y.a && x.d < y.c;
        const bool y_left = y.b < x.a && y.d < x.c;
        return !x_left && !y_left;
    });
}

}  // namespace sno
