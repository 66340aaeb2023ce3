#include "sno/bit_vector.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sno/errors.hpp"
#include "sno/kernels.hpp"

namespace sno {
namespace {

// 0-based offset of the r-th (1-based) set bit of `word`.
unsigned select_in_word(std::uint64_t word, unsigned r) noexcept {
    unsigned offset = 0;
    for (;;) {
        const unsigned byte_count = std::popcount(word & 0xffU);
        if (r <= byte_count) break;
        r -= byte_count;
        word >>= 8;
        offset += 8;
    }
    while (--r != 0) word &= word - 1;
    return offset + static_cast<unsigned>(std::countr_zero(word));
}

}  // namespace

BitVector::BitVector(std::span<const std::uint8_t> bits) : size_(bits.size()) {
    words_.assign((size_ + 63) / 64, 0);
    if (size_ != 0) kernels::pack_bits(bits, words_.data());
    build_index();
}

BitVector::BitVector(std::initializer_list<int> bits) {
    std::vector<std::uint8_t> bytes(bits.begin(), bits.end());
    *this = BitVector(std::span<const std::uint8_t>(bytes));
}

BitVector BitVector::from_words(std::vector<std::uint64_t> words, std::uint64_t size) {
    if (words.size() != (size + 63) / 64) {
        throw FormatError("bit vector word count does not match its length");
    }
    if (size % 64 != 0 && (words.back() >> (size % 64)) != 0) {
        throw FormatError("bit vector has set bits past its length");
    }
    BitVector bv;
    bv.words_ = std::move(words);
    bv.size_ = size;
    bv.build_index();
    return bv;
}

void BitVector::build_index() {
    const std::uint64_t n_words = words_.size();
    const std::uint64_t n_blocks = (n_words + kWordsPerBlock - 1) / kWordsPerBlock;

    super_ranks_.assign(n_blocks / kBlocksPerSuper + 1, 0);
    block_ranks_.assign(n_blocks + 1, 0);
    select1_samples_.clear();
    select0_samples_.clear();

    std::uint64_t ones = 0;
    std::uint64_t next_one = 1;
    std::uint64_t next_zero = 1;
    for (std::uint64_t b = 0; b <= n_blocks; ++b) {
        if (b % kBlocksPerSuper == 0) super_ranks_[b / kBlocksPerSuper] = ones;
        block_ranks_[b] = static_cast<std::uint16_t>(ones - super_ranks_[b / kBlocksPerSuper]);
        if (b == n_blocks) break;

        const std::uint64_t first_word = b * kWordsPerBlock;
        const std::uint64_t word_count = std::min(kWordsPerBlock, n_words - first_word);
        const std::uint64_t block_ones =
            kernels::popcount_words({words_.data() + first_word, word_count});
        const std::uint64_t block_len = std::min(kBlockBits, size_ - b * kBlockBits);
        const std::uint64_t zeros_before = b * kBlockBits - ones;

        while (next_one <= ones + block_ones) {
            select1_samples_.push_back(static_cast<std::uint32_t>(b));
            next_one += kSelectSample;
        }
        while (next_zero <= zeros_before + block_len - block_ones) {
            select0_samples_.push_back(static_cast<std::uint32_t>(b));
            next_zero += kSelectSample;
        }
        ones += block_ones;
    }
    ones_ = ones;
}

std::uint64_t BitVector::rank1_unchecked(std::uint64_t i) const noexcept {
    const std::uint64_t block = i / kBlockBits;
    std::uint64_t r = ones_before_block(block);
    const std::uint64_t first_word = block * kWordsPerBlock;
    const std::uint64_t last_word = i / 64;
    // at most kWordsPerBlock - 1 words; a dispatched kernel call costs more than it saves
    for (std::uint64_t w = first_word; w < last_word; ++w) r += std::popcount(words_[w]);
    if (const std::uint64_t rem = i & 63; rem != 0) {
        r += std::popcount(words_[last_word] & ((std::uint64_t{1} << rem) - 1));
    }
    return r;
}

std::uint64_t BitVector::select_unchecked(bool bit, std::uint64_t j) const noexcept {
    const auto& samples = bit ? select1_samples_ : select0_samples_;
    const std::uint64_t n_blocks = block_ranks_.size() - 1;
    const std::uint64_t s = (j - 1) / kSelectSample;
    std::uint64_t lo = samples[s];
    std::uint64_t hi = s + 1 < samples.size() ? samples[s + 1] : n_blocks - 1;

    auto before = [&](std::uint64_t block) {
        const std::uint64_t ones = ones_before_block(block);
        return bit ? ones : block * kBlockBits - ones;
    };
    // Last block whose prefix count is below j.
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (before(mid) < j) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }

    std::uint64_t remaining = j - before(lo);
    for (std::uint64_t w = lo * kWordsPerBlock;; ++w) {
        const std::uint64_t word = bit ? words_[w] : ~words_[w];
        const auto c = static_cast<std::uint64_t>(std::popcount(word));
        if (remaining <= c) {
            return w * 64 + select_in_word(word, static_cast<unsigned>(remaining));
        }
        remaining -= c;
    }
}

bool BitVector::access(std::uint64_t i) const {
    if (i < 1 || i > size_) {
        throw RangeError("access position " + std::to_string(i) + " outside [1, " +
                         std::to_string(size_) + "]");
    }
    return get0(i - 1);
}

std::uint64_t BitVector::rank(bool bit, std::uint64_t i) const {
    if (i > size_) {
        throw RangeError("rank position " + std::to_string(i) + " exceeds length " +
                         std::to_string(size_));
    }
    const std::uint64_t ones = rank1_unchecked(i);
    return bit ? ones : i - ones;
}

std::uint64_t BitVector::select(bool bit, std::uint64_t j) const {
    if (j < 1 || j > count(bit)) {
        throw NotFoundError("select_" + std::to_string(bit) + "(" + std::to_string(j) +
                            "): only " + std::to_string(count(bit)) + " occurrences");
    }
    return select_unchecked(bit, j) + 1;
}

std::uint64_t BitVector::bits_used() const noexcept {
    return 64 * words_.size() + 64 * super_ranks_.size() + 16 * block_ranks_.size() +
           32 * (select1_samples_.size() + select0_samples_.size()) + 2 * 64;
}

void BitVector::serialize(ByteWriter& out) const {
    out.put_u64(size_);
    out.put_words(words_);
}

BitVector BitVector::deserialize(ByteReader& in) {
    const std::uint64_t size = in.get_u64();
    return from_words(in.get_words(), size);
}

}  // namespace sno
