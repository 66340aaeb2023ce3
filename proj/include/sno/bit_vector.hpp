#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sno/serialize.hpp"

namespace sno {

// Static bit array with rank/select/access.
//
// Positions are 1-based. rank(b, i) counts b among positions 1..i and
// select(b, j) returns the position of the j-th b. Rank is two-level
// (absolute count per 64Ki bits, 16-bit relative count per 512 bits);
// select samples every 1024th occurrence of each bit value and finishes
// with a binary search over 512-bit blocks.
class BitVector {
public:
    BitVector() { build_index(); }

    // Bytes are read as bits: zero is 0, anything else is 1.
    explicit BitVector(std::span<const std::uint8_t> bits);
    BitVector(std::initializer_list<int> bits);

    // Takes ownership of packed words (bit i of the array is bit i % 64 of
    // word i / 64). Bits past `size` must be zero.
    static BitVector from_words(std::vector<std::uint64_t> words, std::uint64_t size);

    std::uint64_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool access(std::uint64_t i) const;
    std::uint64_t rank(bool bit, std::uint64_t i) const;
    std::uint64_t select(bool bit, std::uint64_t j) const;

    std::uint64_t count(bool bit) const noexcept { return bit ? ones_ : size_ - ones_; }

    // Unchecked 0-based variants for hot loops inside the library.
    bool get0(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    std::uint64_t rank1_unchecked(std::uint64_t i) const noexcept;
    // 0-based index of the j-th (1-based) occurrence of `bit`.
    std::uint64_t select_unchecked(bool bit, std::uint64_t j) const noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::uint64_t bits_used() const noexcept;

    void serialize(ByteWriter& out) const;
    static BitVector deserialize(ByteReader& in);

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    static constexpr std::uint64_t kBlockBits = 512;
    static constexpr std::uint64_t kWordsPerBlock = kBlockBits / 64;
    static constexpr std::uint64_t kSuperBits = 65536;
    static constexpr std::uint64_t kBlocksPerSuper = kSuperBits / kBlockBits;
    static constexpr std::uint64_t kSelectSample = 1024;

    void build_index();
    std::uint64_t ones_before_block(std::uint64_t block) const noexcept {
        return super_ranks_[block / kBlocksPerSuper] + block_ranks_[block];
    }

    std::vector<std::uint64_t> words_;
    std::uint64_t size_ = 0;
    std::uint64_t ones_ = 0;
    std::vector<std::uint64_t> super_ranks_;
    std::vector<std::uint16_t> block_ranks_;
    // Block index holding occurrence 1 + s * kSelectSample, per bit value.
    std::vector<std::uint32_t> select1_samples_;
    std::vector<std::uint32_t> select0_samples_;
};

}  // namespace sno
