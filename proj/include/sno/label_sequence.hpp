#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "sno/bit_vector.hpp"
#include "sno/serialize.hpp"

namespace sno {

// Sequence over {0, ..., sigma-1} with rank/select/access, stored as a
// wavelet matrix: ceil(log2 sigma) levels, each a BitVector, MSB first.
//
// The public rank/select/access use the same 1-based conventions as
// BitVector. The *_range methods treat the sequence as the y-column of a
// point set (index = x rank) and are what PointGrid is built on; they use
// 0-based half-open index ranges [begin, end).
class LabelSequence {
public:
    LabelSequence() = default;
    LabelSequence(std::span<const std::uint32_t> symbols, std::uint32_t sigma);

    std::uint64_t size() const noexcept { return size_; }
    std::uint32_t sigma() const noexcept { return sigma_; }
    unsigned levels() const noexcept { return static_cast<unsigned>(levels_.size()); }

    std::uint32_t access(std::uint64_t i) const;
    std::uint64_t rank(std::uint32_t symbol, std::uint64_t i) const;
    std::uint64_t select(std::uint32_t symbol, std::uint64_t j) const;

    // Unchecked forms: 0-based index for access, prefix length for rank,
    // 0-based result for select.
    std::uint32_t access_unchecked(std::uint64_t i) const noexcept;
    std::uint64_t rank_unchecked(std::uint32_t symbol, std::uint64_t i) const noexcept;
    std::uint64_t select_unchecked(std::uint32_t symbol, std::uint64_t j) const noexcept;
    // Symbol at 0-based i and how many copies of it precede i, in one pass.
    std::pair<std::uint32_t, std::uint64_t> access_rank_unchecked(std::uint64_t i) const noexcept;

    // Number of entries in [begin, end) whose value is < bound.
    std::uint64_t count_less(std::uint64_t begin, std::uint64_t end, std::uint64_t bound) const noexcept;

    // Entries in [begin, end) with value in [lo, hi], reported as
    // (0-based index, value), grouped by value.
    void report_range(std::uint64_t begin, std::uint64_t end, std::uint32_t lo, std::uint32_t hi,
                      const std::function<void(std::uint64_t, std::uint32_t)>& out) const;

    std::uint64_t bits_used() const noexcept;

    void serialize(ByteWriter& out) const;
    static LabelSequence deserialize(ByteReader& in);

private:
    void compute_zeros();
    std::uint64_t lift(std::uint64_t pos) const noexcept;
    void report_node(unsigned level, std::uint64_t begin, std::uint64_t end, std::uint32_t prefix,
                     std::uint32_t lo, std::uint32_t hi,
                     const std::function<void(std::uint64_t, std::uint32_t)>& out) const;

    std::uint64_t size_ = 0;
    std::uint32_t sigma_ = 1;
    std::vector<BitVector> levels_;
    std::vector<std::uint64_t> zeros_;
};

}  // namespace sno
