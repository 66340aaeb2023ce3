#include "doctest.h"
#include "fixtures.hpp"
#include "sno/diagrams.hpp"
#include "sno/errors.hpp"
#include "sno/geometry.hpp"

using namespace sno;

namespace {

constexpr ClassTag kAllClasses[] = {ClassTag::circle,       ClassTag::permutation,      ClassTag::interval,
                                    ClassTag::circular_arc, ClassTag::k_polygon,        ClassTag::circle_trapezoid,
                                    ClassTag::trapezoid,    ClassTag::generic_polygon};

std::string rule_of(std::string_view text, ClassTag cls) {
    try {
        parse_diagram(text, cls);
    } catch (const ValidationError& e) {
        return e.rule();
    }
    return "none";
}

std::size_t line_of(std::string_view text, ClassTag cls) {
    try {
        parse_diagram(text, cls);
    } catch (const ValidationError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("class names round trip") {
    for (auto cls : kAllClasses) {
        CHECK(class_from_name(class_name(cls)) == cls);
        CHECK(class_from_byte(static_cast<std::uint8_t>(cls)) == cls);
    }
    CHECK_FALSE(class_from_name("square").has_value());
    CHECK_FALSE(class_from_byte(8).has_value());
}

TEST_CASE("parse fixtures") {
    const auto c = parse_diagram("circle 3\n1 3\n2 5\n4 6", ClassTag::circle);
    CHECK(std::get<ChordDiagram>(c.diagram) == fixtures::d4());
    CHECK(c.relabel == std::vector<std::uint32_t>{1, 2, 3});
    const auto p = parse_diagram("polygon 2 8\n1/a 1/c 2/a 2/c 1/a 1/c 2/a 2/c", ClassTag::circle_trapezoid);
    CHECK(std::get<PolygonDiagram>(p.diagram) == fixtures::d2());
    const auto t = parse_diagram("trapezoid 2\n1 4 2 3\n5 8 6 7\n", ClassTag::trapezoid);
    CHECK(std::get<TrapezoidDiagram>(t.diagram) == fixtures::d3());
}

TEST_CASE("non-canonical input is relabeled and the mapping returned") {
    const auto c = parse_diagram("circle 3\n4 6\n1 3\n2 5\n", ClassTag::circle);
    CHECK(std::get<ChordDiagram>(c.diagram) == fixtures::d4());
    CHECK(c.relabel == std::vector<std::uint32_t>{3, 1, 2});
    const auto p = parse_diagram("polygon 2 4\n2/c 1/c 2/c 1/c", ClassTag::generic_polygon);
    CHECK(std::get<PolygonDiagram>(p.diagram).labels == std::vector<std::uint32_t>{1, 2, 1, 2});
    CHECK(p.relabel == std::vector<std::uint32_t>{2, 1});
    const auto t = parse_diagram("trapezoid 2\n5 8 6 7\n1 4 2 3\n", ClassTag::trapezoid);
    CHECK(std::get<TrapezoidDiagram>(t.diagram) == fixtures::d3());
}

TEST_CASE("validation names the rule and the line") {
    CHECK(rule_of("circle 1\n2 1", ClassTag::circle) == "endpoint-order");
    CHECK(line_of("circle 1\n2 1", ClassTag::circle) == 2);
    CHECK(rule_of("circle 2\n1 2\n2 4", ClassTag::circle) == "duplicate-endpoint");
    CHECK(rule_of("circle 1\n1 3", ClassTag::circle) == "endpoint-range");
    CHECK(rule_of("circle 2\n1 x\n2 4", ClassTag::circle) == "malformed-token");
    CHECK(line_of("circle 2\n1 x\n2 4", ClassTag::circle) == 2);
    CHECK(rule_of("circle 2\n1 2", ClassTag::circle) == "truncated");
    CHECK(rule_of("circle 1\n1 2\n3", ClassTag::circle) == "trailing-data");
    CHECK(rule_of("polygon 1 2\n1/c 1/c", ClassTag::circle) == "class-mismatch");
    CHECK(rule_of("polygon 1 2\n1/c 2/c", ClassTag::generic_polygon) == "label-range");
    CHECK(rule_of("polygon 1 2\n1/c 1/x", ClassTag::generic_polygon) == "malformed-token");
    CHECK(rule_of("polygon 1 3\n1/a 1/c 1/a", ClassTag::generic_polygon) == "adjacent-arcs");
    CHECK(rule_of("polygon 2 3\n1/c 1/c 2/c", ClassTag::generic_polygon) == "corner-count");
    CHECK(rule_of("polygon 1 4\n1/a 1/c 1/c 1/c", ClassTag::circle_trapezoid) == "class-shape");
    CHECK(rule_of("polygon 2 5\n1/c 1/c 2/c 2/c 2/c", ClassTag::k_polygon) == "class-shape");
    CHECK(rule_of("polygon 1 2\n1/a 1/c", ClassTag::k_polygon) == "class-shape");
    CHECK(rule_of("permutation 3\n1 1 2", ClassTag::permutation) == "permutation-duplicate");
    CHECK(rule_of("permutation 2\n1 3", ClassTag::permutation) == "permutation-range");
    CHECK(rule_of("interval 1\n2 1", ClassTag::interval) == "endpoint-order");
    CHECK(rule_of("circulararc 1\n2 1", ClassTag::circular_arc) == "none");
    CHECK(rule_of("trapezoid 1\n2 1 3 4", ClassTag::trapezoid) == "endpoint-order");
    CHECK(rule_of("trapezoid 1\n1 2 3 5", ClassTag::trapezoid) == "endpoint-range");
    CHECK(rule_of("circle 0", ClassTag::circle) == "empty");
    CHECK(rule_of("", ClassTag::circle) == "truncated");
}

TEST_CASE("render then parse is the identity on canonical diagrams") {
    for (auto cls : kAllClasses) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto d = generate(cls, {static_cast<std::uint32_t>(1 + seed % 12), static_cast<std::uint32_t>(3 + seed % 3), seed, 0});
            const auto back = parse_diagram(render_diagram(d), cls);
            REQUIRE(back.diagram == d);
            REQUIRE(render_diagram(back.diagram) == render_diagram(d));
        }
    }
}

TEST_CASE("generators are deterministic and valid") {
    for (auto cls : kAllClasses) {
        for (std::uint32_t locality : {0U, 5U}) {
            const GenerateOptions opts{40, 4, 123, locality};
            const auto a = generate(cls, opts);
            CHECK(a == generate(cls, opts));
            CHECK(vertex_count(a) == 40);
            CHECK_NOTHROW(validate(a, cls));
        }
    }
    CHECK(render_diagram(generate(ClassTag::circle, {3, 4, 7, 0})) ==
          render_diagram(generate(ClassTag::circle, {3, 4, 7, 0})));
    CHECK_NOTHROW(validate(generate(ClassTag::circle_trapezoid, {50, 4, 1, 0}), ClassTag::circle_trapezoid));
    CHECK_THROWS_AS(generate(ClassTag::circle, {0, 4, 1, 0}), ValidationError);
}

TEST_CASE("k-polygon generator gives exactly k chord corners") {
    const auto d = std::get<PolygonDiagram>(generate(ClassTag::k_polygon, {10, 4, 1, 0}));
    std::vector<int> count(11, 0);
    for (auto l : d.labels) ++count[l];
    for (std::uint32_t v = 1; v <= 10; ++v) CHECK(count[v] == 4);
    for (auto k : d.kinds) CHECK(k == SideKind::chord);
}

TEST_CASE("interval generator never wraps; circular-arc sometimes does") {
    bool wrapped = false;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto line = std::get<ArcDiagram>(generate(ClassTag::interval, {30, 4, seed, 0}));
        for (const auto& a : line.arcs) CHECK(a.s < a.e);
        const auto circ = std::get<ArcDiagram>(generate(ClassTag::circular_arc, {30, 4, seed, 0}));
        for (const auto& a : circ.arcs) {
            wrapped = wrapped || a.s > a.e;
        }
    }
    CHECK(wrapped);
}

TEST_CASE("adapters") {
    const auto p = to_polygon_diagram(fixtures::d4(), ClassTag::circle);
    CHECK(p == fixtures::d1());

    const auto id = to_polygon_diagram(PermutationDiagram{{1, 2}}, ClassTag::permutation);
    CHECK(id.labels == std::vector<std::uint32_t>{1, 2, 2, 1});
    CHECK_FALSE(naive_adjacent(id, 1, 2));

    const auto arcs = to_polygon_diagram(ArcDiagram{false, {{1, 3}, {2, 4}}}, ClassTag::interval);
    CHECK(arcs.labels == std::vector<std::uint32_t>{1, 2, 1, 2});
    CHECK(arcs.kinds == std::vector<SideKind>{SideKind::arc, SideKind::arc, SideKind::chord, SideKind::chord});

    const auto t = to_polygon_diagram(fixtures::d3b(), ClassTag::trapezoid);
    CHECK_NOTHROW(validate(AnyDiagram{t}, ClassTag::circle_trapezoid));
    CHECK(naive_matrix(t) == native_matrix(fixtures::d3b(), ClassTag::trapezoid));
    CHECK(naive_adjacent(t, 1, 2));

    CHECK_THROWS_AS(to_polygon_diagram(fixtures::d4(), ClassTag::trapezoid), ValidationError);
}

TEST_CASE("adapters preserve adjacency against class-native geometry") {
    for (auto cls : kAllClasses) {
        CAPTURE(class_name(cls));
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const GenerateOptions opts{static_cast<std::uint32_t>(1 + seed % 50), static_cast<std::uint32_t>(3 + seed % 3), seed,
                                       seed % 4 == 0 ? 3U : 0U};
            const auto d = generate(cls, opts);
            REQUIRE(native_matrix(d, cls) == naive_matrix(to_polygon_diagram(d, cls)));
        }
    }
}
