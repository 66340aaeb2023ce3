#include "sno/label_sequence.hpp"

#include <bit>
#include <string>

#include "sno/errors.hpp"

namespace sno {

LabelSequence::LabelSequence(std::span<const std::uint32_t> symbols, std::uint32_t sigma)
    : size_(symbols.size()), sigma_(sigma) {
    if (sigma == 0) throw ValidationError("alphabet", "sigma must be at least 1");
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] >= sigma) {
            throw ValidationError("alphabet", "symbol " + std::to_string(symbols[i]) +
                                                  " at position " + std::to_string(i + 1) +
                                                  " is not below sigma " + std::to_string(sigma));
        }
    }

    const unsigned n_levels = static_cast<unsigned>(std::bit_width(sigma - 1));
    std::vector<std::uint32_t> current(symbols.begin(), symbols.end());
    std::vector<std::uint32_t> next(current.size());
    std::vector<std::uint8_t> bits(current.size());
    levels_.reserve(n_levels);

    for (unsigned level = 0; level < n_levels; ++level) {
        const unsigned shift = n_levels - 1 - level;
        std::size_t zero_fill = 0;
        for (std::size_t i = 0; i < current.size(); ++i) {
            bits[i] = static_cast<std::uint8_t>((current[i] >> shift) & 1U);
            zero_fill += bits[i] == 0;
        }
        levels_.emplace_back(std::span<const std::uint8_t>(bits));

        std::size_t zero_pos = 0;
        std::size_t one_pos = zero_fill;
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (bits[i]) {
                next[one_pos++] = current[i];
            } else {
                next[zero_pos++] = current[i];
            }
        }
        current.swap(next);
    }
    compute_zeros();
}

void LabelSequence::compute_zeros() {
    zeros_.clear();
    for (const auto& level : levels_) zeros_.push_back(level.count(false));
}

std::uint32_t LabelSequence::access_unchecked(std::uint64_t i) const noexcept {
    std::uint32_t symbol = 0;
    for (std::size_t level = 0; level < levels_.size(); ++level) {
        const BitVector& bv = levels_[level];
        const std::uint64_t ones = bv.rank1_unchecked(i);
        if (bv.get0(i)) {
            symbol = symbol << 1 | 1U;
            i = zeros_[level] + ones;
        } else {
            symbol <<= 1;
            i -= ones;
        }
    }
    return symbol;
}

std::pair<std::uint32_t, std::uint64_t> LabelSequence::access_rank_unchecked(
    std::uint64_t i) const noexcept {
    std::uint32_t symbol = 0;
    std::uint64_t begin = 0;
    for (std::size_t level = 0; level < levels_.size(); ++level) {
        const BitVector& bv = levels_[level];
        const std::uint64_t ones = bv.rank1_unchecked(i);
        const std::uint64_t ones_begin = bv.rank1_unchecked(begin);
        if (bv.get0(i)) {
            symbol = symbol << 1 | 1U;
            i = zeros_[level] + ones;
            begin = zeros_[level] + ones_begin;
        } else {
            symbol <<= 1;
            i -= ones;
            begin -= ones_begin;
        }
    }
    return {symbol, i - begin};
}

std::uint64_t LabelSequence::rank_unchecked(std::uint32_t symbol, std::uint64_t i) const noexcept {
    std::uint64_t begin = 0;
    std::uint64_t end = i;
    const unsigned n_levels = levels();
    for (unsigned level = 0; level < n_levels; ++level) {
        const BitVector& bv = levels_[level];
        const std::uint64_t ones_begin = bv.rank1_unchecked(begin);
        const std::uint64_t ones_end = bv.rank1_unchecked(end);
        if ((symbol >> (n_levels - 1 - level)) & 1U) {
            begin = zeros_[level] + ones_begin;
            end = zeros_[level] + ones_end;
        } else {
            begin -= ones_begin;
            end -= ones_end;
        }
    }
    return end - begin;
}

std::uint64_t LabelSequence::lift(std::uint64_t pos) const noexcept {
    for (std::size_t level = levels_.size(); level-- > 0;) {
        if (pos < zeros_[level]) {
            pos = levels_[level].select_unchecked(false, pos + 1);
        } else {
            pos = levels_[level].select_unchecked(true, pos - zeros_[level] + 1);
        }
    }
    return pos;
}

std::uint64_t LabelSequence::select_unchecked(std::uint32_t symbol, std::uint64_t j) const noexcept {
    // Start of `symbol`'s run in the final level ordering.
    std::uint64_t begin = 0;
    const unsigned n_levels = levels();
    for (unsigned level = 0; level < n_levels; ++level) {
        const std::uint64_t ones = levels_[level].rank1_unchecked(begin);
        if ((symbol >> (n_levels - 1 - level)) & 1U) {
            begin = zeros_[level] + ones;
        } else {
            begin -= ones;
        }
    }
    return lift(begin + j - 1);
}

std::uint32_t LabelSequence::access(std::uint64_t i) const {
    if (i < 1 || i > size_) {
        throw RangeError("access position " + std::to_string(i) + " outside [1, " +
                         std::to_string(size_) + "]");
    }
    return access_unchecked(i - 1);
}

std::uint64_t LabelSequence::rank(std::uint32_t symbol, std::uint64_t i) const {
    if (i > size_) {
        throw RangeError("rank position " + std::to_string(i) + " exceeds length " +
                         std::to_string(size_));
    }
    if (symbol >= sigma_) return 0;
    return rank_unchecked(symbol, i);
}

std::uint64_t LabelSequence::select(std::uint32_t symbol, std::uint64_t j) const {
    const std::uint64_t total = symbol < sigma_ ? rank_unchecked(symbol, size_) : 0;
    if (j < 1 || j > total) {
        throw NotFoundError("select_" + std::to_string(symbol) + "(" + std::to_string(j) +
                            "): only " + std::to_string(total) + " occurrences");
    }
    return select_unchecked(symbol, j) + 1;
}

std::uint64_t LabelSequence::count_less(std::uint64_t begin, std::uint64_t end,
                                        std::uint64_t bound) const noexcept {
    if (begin >= end) return 0;
    const unsigned n_levels = levels();
    if (bound >= (std::uint64_t{1} << n_levels)) return end - begin;
    std::uint64_t result = 0;
    for (unsigned level = 0; level < n_levels; ++level) {
        const BitVector& bv = levels_[level];
        const std::uint64_t ones_begin = bv.rank1_unchecked(begin);
        const std::uint64_t ones_end = bv.rank1_unchecked(end);
        if ((bound >> (n_levels - 1 - level)) & 1U) {
            result += (end - ones_end) - (begin - ones_begin);
            begin = zeros_[level] + ones_begin;
            end = zeros_[level] + ones_end;
        } else {
            begin -= ones_begin;
            end -= ones_end;
        }
    }
    return result;
}

void LabelSequence::report_node(unsigned level, std::uint64_t begin, std::uint64_t end,
                                std::uint32_t prefix, std::uint32_t lo, std::uint32_t hi,
                                const std::function<void(std::uint64_t, std::uint32_t)>& out) const {
    if (begin >= end) return;
    const unsigned n_levels = levels();
    const unsigned remaining = n_levels - level;
    const std::uint64_t node_lo = static_cast<std::uint64_t>(prefix) << remaining;
    const std::uint64_t node_hi = node_lo + (std::uint64_t{1} << remaining) - 1;
    if (node_hi < lo || node_lo > hi) return;
    if (level == n_levels) {
        for (std::uint64_t pos = begin; pos < end; ++pos) out(lift(pos), prefix);
        return;
    }
    const BitVector& bv = levels_[level];
    const std::uint64_t ones_begin = bv.rank1_unchecked(begin);
    const std::uint64_t ones_end = bv.rank1_unchecked(end);
    report_node(level + 1, begin - ones_begin, end - ones_end, prefix << 1, lo, hi, out);
    report_node(level + 1, zeros_[level] + ones_begin, zeros_[level] + ones_end, prefix << 1 | 1U,
                lo, hi, out);
}

void LabelSequence::report_range(std::uint64_t begin, std::uint64_t end, std::uint32_t lo,
                                 std::uint32_t hi,
                                 const std::function<void(std::uint64_t, std::uint32_t)>& out) const {
    if (begin >= end || lo > hi) return;
    report_node(0, begin, end, 0, lo, hi, out);
}

std::uint64_t LabelSequence::bits_used() const noexcept {
    std::uint64_t bits = 64 * 2 + 64 * zeros_.size();
    for (const auto& level : levels_) bits += level.bits_used();
    return bits;
}

void LabelSequence::serialize(ByteWriter& out) const {
    out.put_u64(size_);
    out.put_u32(sigma_);
    out.put_u32(levels());
    for (const auto& level : levels_) level.serialize(out);
}

LabelSequence LabelSequence::deserialize(ByteReader& in) {
    LabelSequence seq;
    seq.size_ = in.get_u64();
    seq.sigma_ = in.get_u32();
    const std::uint32_t n_levels = in.get_u32();
    if (seq.sigma_ == 0 || n_levels != static_cast<unsigned>(std::bit_width(seq.sigma_ - 1))) {
        throw FormatError("label sequence header is inconsistent");
    }
    for (std::uint32_t level = 0; level < n_levels; ++level) {
        seq.levels_.push_back(BitVector::deserialize(in));
        if (seq.levels_.back().size() != seq.size_) {
            throw FormatError("label sequence level length mismatch");
        }
    }
    seq.compute_zeros();
    return seq;
}

}  // namespace sno
