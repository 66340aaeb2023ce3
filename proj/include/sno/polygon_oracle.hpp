#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sno/bit_vector.hpp"
#include "sno/diagrams.hpp"
#include "sno/geometry.hpp"
#include "sno/label_sequence.hpp"
#include "sno/oracle.hpp"
#include "sno/packed_array.hpp"
#include "sno/range_arg_index.hpp"
#include "sno/serialize.hpp"

namespace sno {

// Arrays derived from the corner string that are never stored; only their
// range-extremum indexes are kept. Missing ends read as 0 (before the first
// position) or corners() + 1 (past the last).
enum class VirtualArray : std::uint8_t {
    next = 0,        // next corner of the same polygon, any side
    next_arc = 1,    // other end of the arc starting here
    prev_arc = 2,    // other end of the arc ending here
    next_chord = 3,  // other end of the chord starting here (wrap side excluded)
    prev_chord = 4,  // other end of the chord ending here (wrap side excluded)
};

struct PolygonOracleOptions {
    bool explicit_degrees = false;
    // interval / circular-arc suppress chord reporting; polygon classes are
    // validated against their shape rule.
    ClassTag impl_class = ClassTag::generic_polygon;
};

// Per-caller mutable state for neighborhood(). Marks are all clear between
// calls.
class NeighborhoodScratch {
public:
    explicit NeighborhoodScratch(std::uint32_t n) : marks_(n + 1, 0) {}
    bool clean() const noexcept;

private:
    friend class PolygonOracle;
    std::vector<std::uint8_t> marks_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges_;
};

class PolygonOracle final : public GraphOracle {
public:
    PolygonOracle() = default;
    static PolygonOracle build(const PolygonDiagram& d, const PolygonOracleOptions& opts = {});

    std::uint32_t vertex_count() const noexcept override { return n_; }
    std::uint64_t corners() const noexcept { return corners_; }
    ClassTag impl_class() const noexcept { return impl_class_; }
    bool has_explicit_degrees() const noexcept { return degrees_.has_value(); }

    // Corner string S, 1-based.
    std::uint32_t s_access(std::uint64_t i) const;
    std::uint64_t s_rank(std::uint32_t label, std::uint64_t i) const;
    std::uint64_t s_select(std::uint32_t label, std::uint64_t j) const;

    std::uint32_t side_count(std::uint32_t u) const;
    // Span of u's i-th side; the last side wraps (from > to).
    Span interval(std::uint32_t u, std::uint32_t i) const;

    std::uint64_t virt(VirtualArray which, std::uint64_t i) const;

    bool adjacent(std::uint32_t u, std::uint32_t v) const override;
    std::uint64_t degree(std::uint32_t u) const override;
    std::vector<std::uint32_t> neighborhood(std::uint32_t u) const override;
    std::vector<std::uint32_t> neighborhood(std::uint32_t u, NeighborhoodScratch& scratch) const;
    SpaceReport space_report() const override;
    ImplTag impl() const noexcept override { return ImplTag::unified; }

    void serialize(ByteWriter& out) const;
    static PolygonOracle deserialize(ByteReader& in, std::uint32_t n, std::uint64_t corners,
                                     ClassTag impl_class);

private:
    struct Corner {
        std::uint32_t label;
        std::uint64_t rank;  // occurrence number of this corner within its polygon
    };

    void check_vertex(std::uint32_t u) const;
    void finish_load();
    bool forced_no_chords() const noexcept;

    Corner locate(std::uint64_t pos) const noexcept;
    std::uint64_t occurrence(std::uint32_t u, std::uint64_t j) const noexcept;
    std::uint32_t sides_of(std::uint32_t u) const noexcept;
    std::uint64_t value(VirtualArray which, std::uint64_t pos) const noexcept;
    std::uint64_t value_at(VirtualArray which, const Corner& c) const noexcept;
    std::uint64_t count_upto(std::uint32_t label, std::uint64_t t) const noexcept;
    bool exceeds(VirtualArray which, std::uint64_t pos, std::uint64_t t, std::uint32_t& label) const noexcept;
    bool precedes(VirtualArray which, std::uint64_t pos, std::uint64_t t, std::uint32_t& label) const noexcept;
    bool has_wrap_chord(std::uint32_t v, std::uint64_t first, std::uint64_t last) const noexcept;

    template <class Emit>
    void for_each_candidate(std::uint32_t u, NeighborhoodScratch& scratch, Emit&& emit) const;
    template <class Emit>
    void above(VirtualArray which, const RangeArgIndex& idx, std::uint64_t lo, std::uint64_t hi,
               std::uint64_t threshold, NeighborhoodScratch& scratch, Emit&& emit) const;
    template <class Emit>
    void below(VirtualArray which, const RangeArgIndex& idx, std::uint64_t lo, std::uint64_t hi,
               std::uint64_t threshold, NeighborhoodScratch& scratch, Emit&& emit) const;
    template <class Emit>
    void wrap_scan(std::uint32_t u, std::uint64_t l, std::uint64_t r, bool chord_side,
                   NeighborhoodScratch& scratch, Emit&& emit) const;

    std::uint32_t n_ = 0;
    std::uint64_t corners_ = 0;
    ClassTag impl_class_ = ClassTag::generic_polygon;
    bool needs_wrap_scan_ = false;
    BitVector first_;          // 1 at each polygon's first corner
    LabelSequence rest_;       // labels - 1 of the remaining corners
    BitVector arcs_;           // 1 where the side starting at that corner is an arc
    RangeArgIndex idx_next_;   // max
    RangeArgIndex idx_next_arc_;
    RangeArgIndex idx_next_chord_;
    RangeArgIndex idx_prev_arc_;  // min
    RangeArgIndex idx_prev_chord_;
    std::optional<PackedArray> degrees_;
};

}  // namespace sno
