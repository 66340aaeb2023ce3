#include <algorithm>
#include <numeric>
#include <random>

#include "sno/diagrams.hpp"
#include "sno/errors.hpp"

namespace sno {
namespace {

// mt19937_64 is fully specified by the standard; the helpers below avoid the
// implementation-defined distributions so output is identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

// Orders `tokens` (listed in home order) either uniformly at random or with
// each token displaced only a bounded distance from its home slot.
template <class T>
std::vector<T> place(std::vector<T> tokens, std::uint32_t locality, Rng& rng) {
    if (locality == 0) {
        rng.shuffle(tokens);
        return tokens;
    }
    std::vector<std::pair<std::uint64_t, std::size_t>> keyed(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        keyed[i] = {static_cast<std::uint64_t>(i) * 1024 + rng.below(std::uint64_t{locality} * 1024), i};
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<T> out;
    out.reserve(tokens.size());
    for (const auto& [key, idx] : keyed) out.push_back(tokens[idx]);
    return out;
}

// Positions (1-based) of each label's corners in a placed label string.
std::vector<std::vector<std::uint32_t>> corner_positions(const std::vector<std::uint32_t>& seq,
                                                         std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> pos(n + 1);
    for (std::uint32_t i = 0; i < seq.size(); ++i) pos[seq[i]].push_back(i + 1);
    return pos;
}

std::vector<std::uint32_t> repeated_labels(const std::vector<std::uint32_t>& counts) {
    std::vector<std::uint32_t> seq;
    for (std::uint32_t v = 1; v <= counts.size(); ++v) seq.insert(seq.end(), counts[v - 1], v);
    return seq;
}

// Side kinds for a polygon with `corners` corners, no two cyclically
// consecutive arcs.
std::vector<SideKind> random_kinds(std::uint32_t corners, Rng& rng) {
    std::vector<SideKind> kinds(corners, SideKind::chord);
    for (std::uint32_t j = 0; j < corners; ++j) {
        const bool prev_arc = j > 0 && kinds[j - 1] == SideKind::arc;
        const bool wrap_arc = j + 1 == corners && kinds[0] == SideKind::arc;
        if (!prev_arc && !wrap_arc && rng.chance(1, 3)) kinds[j] = SideKind::arc;
    }
    return kinds;
}

PolygonDiagram polygons_from(const std::vector<std::uint32_t>& seq, std::uint32_t n,
                             const std::vector<std::vector<SideKind>>& kinds) {
    PolygonDiagram d;
    d.n = n;
    d.labels = seq;
    d.kinds.assign(seq.size(), SideKind::chord);
    const auto pos = corner_positions(seq, n);
    for (std::uint32_t v = 1; v <= n; ++v) {
        for (std::size_t j = 0; j < pos[v].size(); ++j) d.kinds[pos[v][j] - 1] = kinds[v - 1][j];
    }
    return d;
}

}  // namespace

AnyDiagram generate(ClassTag cls, const GenerateOptions& opts) {
    const std::uint32_t n = opts.n;
    if (n == 0) throw ValidationError("empty", "n must be positive");
    Rng rng(opts.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(cls) + 1);
    const std::uint32_t w = opts.locality;

    AnyDiagram out;
    switch (cls) {
        case ClassTag::circle:
        case ClassTag::interval:
        case ClassTag::circular_arc: {
            const auto seq = place(repeated_labels(std::vector<std::uint32_t>(n, 2)), w, rng);
            const auto pos = corner_positions(seq, n);
            if (cls == ClassTag::circle) {
                ChordDiagram d;
                for (std::uint32_t v = 1; v <= n; ++v) d.chords.push_back({pos[v][0], pos[v][1]});
                out = std::move(d);
            } else {
                ArcDiagram d;
                d.circular = cls == ClassTag::circular_arc;
                const std::uint64_t wrap_den = w == 0 ? 2 : 16;
                for (std::uint32_t v = 1; v <= n; ++v) {
                    Chord arc{pos[v][0], pos[v][1]};
                    if (d.circular && rng.chance(1, wrap_den)) std::swap(arc.s, arc.e);
                    d.arcs.push_back(arc);
                }
                out = std::move(d);
            }
            break;
        }
        case ClassTag::permutation: {
            std::vector<std::uint32_t> pi(n);
            std::iota(pi.begin(), pi.end(), 1U);
            out = PermutationDiagram{place(std::move(pi), w, rng)};
            break;
        }
        case ClassTag::k_polygon: {
            if (opts.k < 2) throw ValidationError("k-range", "k-polygon needs k >= 2");
            const auto seq = place(repeated_labels(std::vector<std::uint32_t>(n, opts.k)), w, rng);
            std::vector<std::vector<SideKind>> kinds(n, std::vector<SideKind>(opts.k, SideKind::chord));
            out = polygons_from(seq, n, kinds);
            break;
        }
        case ClassTag::circle_trapezoid: {
            const auto seq = place(repeated_labels(std::vector<std::uint32_t>(n, 4)), w, rng);
            std::vector<std::vector<SideKind>> kinds;
            for (std::uint32_t v = 0; v < n; ++v) {
                const bool arc_first = rng.chance(1, 2);
                const SideKind x = arc_first ? SideKind::arc : SideKind::chord;
                const SideKind y = arc_first ? SideKind::chord : SideKind::arc;
                kinds.push_back({x, y, x, y});
            }
            out = polygons_from(seq, n, kinds);
            break;
        }
        case ClassTag::generic_polygon: {
            const std::uint32_t k = std::max<std::uint32_t>(opts.k, 2);
            std::vector<std::uint32_t> counts(n);
            std::vector<std::vector<SideKind>> kinds;
            for (std::uint32_t v = 0; v < n; ++v) {
                counts[v] = 2 + static_cast<std::uint32_t>(rng.below(k - 1));
                kinds.push_back(random_kinds(counts[v], rng));
            }
            const auto seq = place(repeated_labels(counts), w, rng);
            out = polygons_from(seq, n, kinds);
            break;
        }
        case ClassTag::trapezoid: {
            const auto seq = place(repeated_labels(std::vector<std::uint32_t>(n, 4)), w, rng);
            const auto pos = corner_positions(seq, n);
            TrapezoidDiagram d;
            for (std::uint32_t v = 1; v <= n; ++v) {
                // Pick which two of the four positions lie on the upper line.
                static constexpr std::uint8_t kUpperPairs[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                                                   {1, 2}, {1, 3}, {2, 3}};
                const auto& pair = kUpperPairs[rng.below(6)];
                std::vector<std::uint32_t> lower;
                for (std::uint8_t j = 0; j < 4; ++j) {
                    if (j != pair[0] && j != pair[1]) lower.push_back(pos[v][j]);
                }
                d.traps.push_back({pos[v][pair[0]], pos[v][pair[1]], lower[0], lower[1]});
            }
            out = std::move(d);
            break;
        }
    }
    canonicalize(out);
    validate(out, cls);
    return out;
}

}  // namespace sno
