// Small hand-checkable diagrams used across the oracle tests.
#pragma once

#include "sno/diagrams.hpp"

namespace fixtures {

using sno::SideKind;

// Three chords 1-3, 2-5, 4-6 as a corner string: 1 2 1 3 2 3.
inline sno::PolygonDiagram d1() {
    return {3, {1, 2, 1, 3, 2, 3}, std::vector<SideKind>(6, SideKind::chord)};
}

// Two circle trapezoids with alternating arc/chord sides.
inline sno::PolygonDiagram d2() {
    const auto a = SideKind::arc, c = SideKind::chord;
    return {2, {1, 1, 2, 2, 1, 1, 2, 2}, {a, c, a, c, a, c, a, c}};
}

// Two disjoint trapezoids.
inline sno::TrapezoidDiagram d3() { return {{{1, 4, 2, 3}, {5, 8, 6, 7}}}; }

// Two trapezoids whose upper segments overlap.
inline sno::TrapezoidDiagram d3b() { return {{{1, 4, 2, 6}, {3, 7, 5, 8}}}; }

// Chords [1,3], [2,5], [4,6].
inline sno::ChordDiagram d4() { return {{{1, 3}, {2, 5}, {4, 6}}}; }

}  // namespace fixtures
