#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "sno/errors.hpp"
#include "sno/geometry.hpp"
#include "sno/polygon_oracle.hpp"

using namespace sno;

namespace {

constexpr VirtualArray kArrays[] = {VirtualArray::next, VirtualArray::next_arc, VirtualArray::prev_arc,
                                    VirtualArray::next_chord, VirtualArray::prev_chord};

// Straight from the definitions, one position at a time.
std::uint64_t naive_virt(const PolygonDiagram& d, ClassTag impl_class, VirtualArray which, std::uint64_t i) {
    const std::uint64_t inf = d.corners() + 1;
    const auto u = d.labels[i - 1];
    std::vector<std::uint64_t> pos;
    for (std::uint64_t p = 1; p <= d.corners(); ++p) {
        if (d.labels[p - 1] == u) pos.push_back(p);
    }
    const auto j = static_cast<std::size_t>(std::find(pos.begin(), pos.end(), i) - pos.begin());
    const bool last = j + 1 == pos.size();
    const bool first = j == 0;
    const bool out_arc = d.kinds[i - 1] == SideKind::arc;
    const bool in_arc = d.kinds[(first ? pos.back() : pos[j - 1]) - 1] == SideKind::arc;
    const bool no_chords = impl_class == ClassTag::interval || impl_class == ClassTag::circular_arc;
    switch (which) {
        case VirtualArray::next: return last ? inf : pos[j + 1];
        case VirtualArray::next_arc: return !out_arc ? 0 : last ? inf : pos[j + 1];
        case VirtualArray::prev_arc: return !in_arc ? inf : first ? 0 : pos[j - 1];
        case VirtualArray::next_chord: return no_chords || out_arc || last ? 0 : pos[j + 1];
        case VirtualArray::prev_chord: return no_chords || in_arc || first ? inf : pos[j - 1];
    }
    return 0;
}

ClassTag impl_class_for(ClassTag cls) {
    switch (cls) {
        case ClassTag::interval:
        case ClassTag::circular_arc:
        case ClassTag::k_polygon:
        case ClassTag::circle_trapezoid: return cls;
        default: return ClassTag::generic_polygon;
    }
}

constexpr ClassTag kAllClasses[] = {ClassTag::circle,       ClassTag::permutation,      ClassTag::interval,
                                    ClassTag::circular_arc, ClassTag::k_polygon,        ClassTag::circle_trapezoid,
                                    ClassTag::trapezoid,    ClassTag::generic_polygon};

}  // namespace

TEST_CASE("three chords: corner string") {
    const auto o = PolygonOracle::build(fixtures::d1());
    CHECK(o.vertex_count() == 3);
    CHECK(o.corners() == 6);
    const std::uint32_t s[] = {1, 2, 1, 3, 2, 3};
    for (std::uint64_t i = 1; i <= 6; ++i) CHECK(o.s_access(i) == s[i - 1]);
    CHECK(o.s_access(3) == 1);
    CHECK(o.s_rank(2, 6) == 2);
    CHECK(o.s_rank(3, 3) == 0);
    CHECK(o.s_select(2, 2) == 5);
    CHECK(o.s_select(1, 1) == 1);
    CHECK_THROWS_AS(o.s_select(2, 3), NotFoundError);
    CHECK_THROWS_AS(o.s_access(7), RangeError);
    const auto iv = o.interval(2, 1);
    CHECK(iv.from == 2);
    CHECK(iv.to == 5);
}

TEST_CASE("three chords: virtual arrays") {
    const auto o = PolygonOracle::build(fixtures::d1());
    const std::uint64_t inf = 7;
    const std::uint64_t nc[] = {3, 5, 0, 6, 0, 0};
    const std::uint64_t pc[] = {inf, inf, 1, inf, 2, 4};
    const std::uint64_t nx[] = {3, 5, inf, 6, inf, inf};
    for (std::uint64_t i = 1; i <= 6; ++i) {
        CHECK(o.virt(VirtualArray::next_chord, i) == nc[i - 1]);
        CHECK(o.virt(VirtualArray::prev_chord, i) == pc[i - 1]);
        CHECK(o.virt(VirtualArray::next, i) == nx[i - 1]);
        CHECK(o.virt(VirtualArray::next_arc, i) == 0);
        CHECK(o.virt(VirtualArray::prev_arc, i) == inf);
    }
}

TEST_CASE("three chords: queries") {
    const auto o = PolygonOracle::build(fixtures::d1());
    CHECK(o.adjacent(1, 2));
    CHECK(o.adjacent(2, 1));
    CHECK_FALSE(o.adjacent(1, 3));
    CHECK_FALSE(o.adjacent(2, 2));
    CHECK(o.neighborhood(2) == std::vector<std::uint32_t>{1, 3});
    CHECK(o.neighborhood(1) == std::vector<std::uint32_t>{2});
    CHECK(o.degree(2) == 2);
    CHECK(o.degree(3) == 1);
    CHECK_THROWS_AS(o.adjacent(0, 1), RangeError);
    CHECK_THROWS_AS(o.degree(4), RangeError);
    CHECK_THROWS_AS(o.neighborhood(4), RangeError);
}

TEST_CASE("circle trapezoids: wrap side and arcs") {
    const auto o = PolygonOracle::build(fixtures::d2(), {false, ClassTag::circle_trapezoid});
    CHECK(o.side_count(1) == 4);
    const auto wrap = o.interval(1, 4);
    CHECK(wrap.from == 6);
    CHECK(wrap.to == 1);
    CHECK(o.virt(VirtualArray::next_arc, 1) == 2);
    CHECK(o.virt(VirtualArray::next_arc, 2) == 0);
    CHECK(o.virt(VirtualArray::prev_arc, 2) == 1);
    CHECK(o.virt(VirtualArray::prev_arc, 1) == 9);
    // Labels of the non-first corners, in position order.
    std::vector<std::uint32_t> rest;
    for (std::uint64_t i = 1; i <= 8; ++i) {
        const auto l = o.s_access(i);
        if (o.s_select(l, 1) != i) rest.push_back(l);
    }
    CHECK(rest == std::vector<std::uint32_t>{1, 2, 1, 1, 2, 2});
    CHECK(o.adjacent(1, 2));
    CHECK(o.degree(1) == 1);
    CHECK(o.neighborhood(2) == std::vector<std::uint32_t>{1});
}

TEST_CASE("single chord") {
    const PolygonDiagram d{1, {1, 1}, {SideKind::chord, SideKind::chord}};
    const auto o = PolygonOracle::build(d);
    CHECK(o.s_access(1) == 1);
    CHECK(o.s_access(2) == 1);
    CHECK(o.s_select(1, 1) == 1);
    CHECK(o.s_select(1, 2) == 2);
    CHECK(o.degree(1) == 0);
    CHECK(o.neighborhood(1).empty());
}

TEST_CASE("non-canonical or invalid input is rejected") {
    const PolygonDiagram swapped{2, {2, 1, 2, 1}, std::vector<SideKind>(4, SideKind::chord)};
    CHECK_THROWS_AS(PolygonOracle::build(swapped), ValidationError);
    const PolygonDiagram arcs{1, {1, 1, 1}, {SideKind::arc, SideKind::arc, SideKind::chord}};
    CHECK_THROWS_AS(PolygonOracle::build(arcs), ValidationError);
    CHECK_THROWS_AS(PolygonOracle::build(fixtures::d2(), {false, ClassTag::k_polygon}), ValidationError);
}

TEST_CASE("virtual arrays match their definitions") {
    for (auto cls : kAllClasses) {
        CAPTURE(class_name(cls));
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const auto d = to_polygon_diagram(generate(cls, {static_cast<std::uint32_t>(1 + seed % 20), 5, seed, 0}), cls);
            const auto ic = impl_class_for(cls);
            const auto o = PolygonOracle::build(d, {false, ic});
            for (auto which : kArrays) {
                for (std::uint64_t i = 1; i <= d.corners(); ++i) {
                    REQUIRE(o.virt(which, i) == naive_virt(d, ic, which, i));
                }
            }
            for (std::uint64_t i = 1; i <= d.corners(); ++i) REQUIRE(o.s_access(i) == d.labels[i - 1]);
        }
    }
}

TEST_CASE("answers match brute force for every class") {
    for (auto cls : kAllClasses) {
        CAPTURE(class_name(cls));
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const GenerateOptions opts{static_cast<std::uint32_t>(1 + seed % 40), static_cast<std::uint32_t>(3 + seed % 3), seed,
                                       seed % 3 == 0 ? 4U : 0U};
            const auto d = to_polygon_diagram(generate(cls, opts), cls);
            const auto truth = naive_matrix(d);
            const auto o = PolygonOracle::build(d, {seed % 2 == 0, impl_class_for(cls)});
            NeighborhoodScratch scratch(d.n);
            for (std::uint32_t u = 1; u <= d.n; ++u) {
                std::vector<std::uint32_t> expect;
                for (std::uint32_t v = 1; v <= d.n; ++v) {
                    REQUIRE(o.adjacent(u, v) == truth.at(u, v));
                    if (truth.at(u, v)) expect.push_back(v);
                }
                REQUIRE(o.degree(u) == expect.size());
                REQUIRE(o.neighborhood(u, scratch) == expect);
                REQUIRE(scratch.clean());
                REQUIRE(o.neighborhood(u) == expect);
            }
        }
    }
}

TEST_CASE("explicit degrees add a component and keep answers") {
    const auto d = to_polygon_diagram(generate(ClassTag::circle, {200, 4, 3, 0}), ClassTag::circle);
    const auto plain = PolygonOracle::build(d);
    const auto stored = PolygonOracle::build(d, {true, ClassTag::generic_polygon});
    CHECK_FALSE(plain.has_explicit_degrees());
    CHECK(stored.has_explicit_degrees());
    CHECK(stored.space_report().total() > plain.space_report().total());
    for (std::uint32_t u = 1; u <= d.n; ++u) REQUIRE(stored.degree(u) == plain.degree(u));
}

TEST_CASE("space report names its parts") {
    const auto o = PolygonOracle::build(fixtures::d2());
    std::vector<std::string> names;
    for (const auto& c : o.space_report().components) names.push_back(c.name);
    for (const char* want : {"first", "rest", "arcs", "idx_next", "idx_next_arc", "idx_next_chord",
                             "idx_prev_arc", "idx_prev_chord"}) {
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
    }
    CHECK(o.space_report().total() > 0);
}
