#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sno/bit_vector.hpp"
#include "sno/serialize.hpp"

namespace sno {

enum class ArgMode : std::uint8_t { min = 0, max = 1 };

// Range argmin/argmax over a read-once source array, leftmost on ties.
//
// The index keeps only the balanced-parentheses shape of the source's
// nearest-smaller-predecessor tree (2n + 2 bits) plus a min-excess tree over
// 512-bit blocks. For a query [i, j] the answer is the node opened right
// after the rightmost excess minimum between open(i) - 1 and open(j). The
// source array is never consulted after construction.
class RangeArgIndex {
public:
    RangeArgIndex() = default;

    // values[k] is the source entry at position k + 1.
    RangeArgIndex(std::span<const std::uint64_t> values, ArgMode mode);

    // Materializes value_at(1..length) once, then discards it.
    static RangeArgIndex build(std::uint64_t length, ArgMode mode,
                               const std::function<std::uint64_t(std::uint64_t)>& value_at);

    std::uint64_t size() const noexcept { return size_; }
    ArgMode mode() const noexcept { return mode_; }

    // Leftmost position of the extremum of positions i..j (1-based).
    std::uint64_t query(std::uint64_t i, std::uint64_t j) const;
    std::uint64_t query_unchecked(std::uint64_t i, std::uint64_t j) const noexcept;

    std::uint64_t bits_used() const noexcept;

    void serialize(ByteWriter& out) const;
    static RangeArgIndex deserialize(ByteReader& in);

private:
    static constexpr std::uint64_t kBlockBits = 512;

    struct Extreme {
        std::int64_t value;
        std::uint64_t prefix;  // prefix length attaining it
    };

    void build_tree();
    std::int64_t excess(std::uint64_t prefix) const noexcept {
        return 2 * static_cast<std::int64_t>(parens_.rank1_unchecked(prefix)) -
               static_cast<std::int64_t>(prefix);
    }
    // Rightmost minimum of excess over prefix lengths [from, to].
    Extreme scan(std::uint64_t from, std::uint64_t to) const noexcept;
    // Rightmost block in [lo, hi] of minimum block excess.
    std::pair<std::int64_t, std::uint64_t> tree_query(std::uint64_t node, std::uint64_t node_lo,
                                                      std::uint64_t node_hi, std::uint64_t lo,
                                                      std::uint64_t hi) const noexcept;

    std::uint64_t size_ = 0;
    ArgMode mode_ = ArgMode::min;
    BitVector parens_;
    std::uint64_t n_blocks_ = 0;
    std::uint64_t leaves_ = 0;
    std::vector<std::int32_t> tree_;
};

}  // namespace sno
