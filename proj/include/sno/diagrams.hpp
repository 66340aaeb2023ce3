#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sno {

enum class ClassTag : std::uint8_t {
    circle = 0,
    permutation = 1,
    interval = 2,
    circular_arc = 3,
    k_polygon = 4,
    circle_trapezoid = 5,
    trapezoid = 6,
    generic_polygon = 7,
};

// Command-line / file-format spelling: circle, permutation, interval,
// circulararc, kpolygon, circletrapezoid, trapezoid, polygon.
std::string_view class_name(ClassTag tag) noexcept;
std::optional<ClassTag> class_from_name(std::string_view name) noexcept;
std::optional<ClassTag> class_from_byte(std::uint8_t byte) noexcept;

enum class SideKind : std::uint8_t { chord = 0, arc = 1 };

// Corner-string representation: labels[i] is the polygon owning the corner
// at circle position i + 1 (clockwise). kinds[i] describes the side that
// starts at that corner and runs clockwise to the polygon's next corner,
// wrapping past the end for its last corner.
struct PolygonDiagram {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> labels;
    std::vector<SideKind> kinds;

    std::uint64_t corners() const noexcept { return labels.size(); }
    friend bool operator==(const PolygonDiagram&, const PolygonDiagram&) = default;
};

struct Chord {
    std::uint32_t s, e;
    friend bool operator==(const Chord&, const Chord&) = default;
};

// Circle graph as chords with endpoints 1..2n, s < e.
struct ChordDiagram {
    std::vector<Chord> chords;
    std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(chords.size()); }
    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

// pi[i - 1] = image of i.
struct PermutationDiagram {
    std::vector<std::uint32_t> pi;
    std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(pi.size()); }
    friend bool operator==(const PermutationDiagram&, const PermutationDiagram&) = default;
};

// Interval (s < e) or circular-arc (clockwise s -> e, may wrap) model with
// endpoints 1..2n.
struct ArcDiagram {
    bool circular = false;
    std::vector<Chord> arcs;
    std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(arcs.size()); }
    friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
};

// a < b on the upper line, c < d on the lower line; all 4n values are
// distinct positions in the merged left-to-right order 1..4n.
struct Trapezoid {
    std::uint32_t a, b, c, d;
    friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

struct TrapezoidDiagram {
    std::vector<Trapezoid> traps;
    std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(traps.size()); }
    friend bool operator==(const TrapezoidDiagram&, const TrapezoidDiagram&) = default;
};

using AnyDiagram =
    std::variant<PolygonDiagram, ChordDiagram, PermutationDiagram, ArcDiagram, TrapezoidDiagram>;

std::uint32_t vertex_count(const AnyDiagram& d) noexcept;

// Result of parsing: the diagram relabeled canonically plus the mapping
// relabel[old - 1] = new.
struct ParsedDiagram {
    ClassTag cls;
    AnyDiagram diagram;
    std::vector<std::uint32_t> relabel;
};

// Validation throws ValidationError naming the violated rule.
void validate(const AnyDiagram& d, ClassTag cls);

// In-place canonical relabeling; returns relabel[old - 1] = new.
//   polygon:   labels by first corner position
//   circle:    chords by left endpoint
//   interval / circular-arc: by first endpoint met clockwise from position 1
//   trapezoid: by a
//   permutation: already canonical (identity mapping)
std::vector<std::uint32_t> canonicalize(AnyDiagram& d);

ParsedDiagram parse_diagram(std::string_view text, ClassTag cls);
std::string render_diagram(const AnyDiagram& d);

struct GenerateOptions {
    std::uint32_t n = 1;
    std::uint32_t k = 4;  // corners per polygon (k-polygon), upper bound (generic)
    std::uint64_t seed = 0;
    // 0: uniformly random placement. w > 0: each corner is displaced by at
    // most about w slots from its polygon's home block, which bounds degrees.
    std::uint32_t locality = 0;
};

// Deterministic for fixed (class, options); output is canonical and valid.
AnyDiagram generate(ClassTag cls, const GenerateOptions& opts);

// Embeds any class into the generalized-polygon form (canonical labels are
// preserved: vertex v of the input is polygon v of the output).
PolygonDiagram to_polygon_diagram(const AnyDiagram& d, ClassTag cls);

}  // namespace sno
