#include "sno/range_arg_index.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>

#include "sno/errors.hpp"

namespace sno {
namespace {

// Per byte (bits consumed LSB first, '(' = +1, ')' = -1): total excess
// change, minimum prefix excess over its 8 prefixes, and the last prefix
// (1..8) attaining that minimum.
struct ByteExcess {
    std::int8_t delta;
    std::int8_t min;
    std::uint8_t last_argmin;
};

constexpr std::array<ByteExcess, 256> make_byte_table() {
    std::array<ByteExcess, 256> table{};
    for (unsigned v = 0; v < 256; ++v) {
        int e = 0;
        int best = 9;
        unsigned arg = 0;
        for (unsigned k = 0; k < 8; ++k) {
            e += ((v >> k) & 1U) ? 1 : -1;
            if (e <= best) {
                best = e;
                arg = k + 1;
            }
        }
        table[v] = {static_cast<std::int8_t>(e), static_cast<std::int8_t>(best),
                    static_cast<std::uint8_t>(arg)};
    }
    return table;
}

constexpr auto kByteTable = make_byte_table();

}  // namespace

RangeArgIndex::RangeArgIndex(std::span<const std::uint64_t> values, ArgMode mode)
    : size_(values.size()), mode_(mode) {
    // Preorder parentheses of the tree where each position hangs below the
    // nearest earlier position that is at least as extreme.
    const std::uint64_t total = 2 * size_ + 2;
    std::vector<std::uint64_t> words((total + 63) / 64, 0);
    std::uint64_t pos = 0;
    auto open = [&] {
        words[pos >> 6] |= std::uint64_t{1} << (pos & 63);
        ++pos;
    };
    auto close = [&] { ++pos; };

    auto beats = [mode](std::uint64_t stack_value, std::uint64_t incoming) {
        return mode == ArgMode::min ? stack_value > incoming : stack_value < incoming;
    };

    std::vector<std::uint64_t> stack;  // values along the current root path
    stack.reserve(64);
    open();  // virtual root
    for (std::uint64_t k = 0; k < size_; ++k) {
        while (!stack.empty() && beats(stack.back(), values[k])) {
            stack.pop_back();
            close();
        }
        open();
        stack.push_back(values[k]);
    }
    for (std::size_t k = 0; k <= stack.size(); ++k) close();

    parens_ = BitVector::from_words(std::move(words), total);
    build_tree();
}

RangeArgIndex RangeArgIndex::build(std::uint64_t length, ArgMode mode,
                                   const std::function<std::uint64_t(std::uint64_t)>& value_at) {
    std::vector<std::uint64_t> values(length);
    for (std::uint64_t i = 0; i < length; ++i) values[i] = value_at(i + 1);
    return RangeArgIndex(values, mode);
}

void RangeArgIndex::build_tree() {
    const std::uint64_t total = parens_.size();
    n_blocks_ = (total + kBlockBits - 1) / kBlockBits;
    leaves_ = std::bit_ceil(std::max<std::uint64_t>(n_blocks_, 1));
    tree_.assign(2 * leaves_, std::numeric_limits<std::int32_t>::max());

    std::int64_t e = 0;
    for (std::uint64_t b = 0; b < n_blocks_; ++b) {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        const std::uint64_t end = std::min(total, (b + 1) * kBlockBits);
        for (std::uint64_t t = b * kBlockBits; t < end; ++t) {
            e += parens_.get0(t) ? 1 : -1;
            best = std::min(best, e);
        }
        tree_[leaves_ + b] = static_cast<std::int32_t>(best);
    }
    for (std::uint64_t node = leaves_; node-- > 1;) {
        tree_[node] = std::min(tree_[2 * node], tree_[2 * node + 1]);
    }
}

RangeArgIndex::Extreme RangeArgIndex::scan(std::uint64_t from, std::uint64_t to) const noexcept {
    std::int64_t e = excess(from - 1);
    Extreme best{std::numeric_limits<std::int64_t>::max(), from};
    const auto words = parens_.words();
    std::uint64_t p = from;  // next prefix length to evaluate; its bit is p - 1
    while (p <= to) {
        const std::uint64_t t = p - 1;
        if ((t & 7) == 0 && p + 7 <= to) {
            const auto byte = static_cast<std::uint8_t>(words[t >> 6] >> (t & 63));
            const ByteExcess& entry = kByteTable[byte];
            if (e + entry.min <= best.value) {
                best = {e + entry.min, p - 1 + entry.last_argmin};
            }
            e += entry.delta;
            p += 8;
            continue;
        }
        e += parens_.get0(t) ? 1 : -1;
        if (e <= best.value) best = {e, p};
        ++p;
    }
    return best;
}

std::pair<std::int64_t, std::uint64_t> RangeArgIndex::tree_query(std::uint64_t node,
                                                                 std::uint64_t node_lo,
                                                                 std::uint64_t node_hi,
                                                                 std::uint64_t lo,
                                                                 std::uint64_t hi) const noexcept {
    if (hi < node_lo || node_hi < lo) {
        return {std::numeric_limits<std::int64_t>::max(), 0};
    }
    if (lo <= node_lo && node_hi <= hi) {
        const std::int32_t target = tree_[node];
        while (node < leaves_) {
            node = tree_[2 * node + 1] == target ? 2 * node + 1 : 2 * node;
        }
        return {target, node - leaves_};
    }
    const std::uint64_t mid = node_lo + (node_hi - node_lo) / 2;
    const auto left = tree_query(2 * node, node_lo, mid, lo, hi);
    const auto right = tree_query(2 * node + 1, mid + 1, node_hi, lo, hi);
    return right.first <= left.first ? right : left;
}

std::uint64_t RangeArgIndex::query_unchecked(std::uint64_t i, std::uint64_t j) const noexcept {
    // Prefix lengths just before open(i) and at open(j).
    const std::uint64_t from = parens_.select_unchecked(true, i + 1);
    const std::uint64_t to = parens_.select_unchecked(true, j + 1) + 1;
    const std::uint64_t first_block = (from - 1) / kBlockBits;
    const std::uint64_t last_block = (to - 1) / kBlockBits;

    Extreme best{};
    if (first_block == last_block) {
        best = scan(from, to);
    } else {
        best = scan(last_block * kBlockBits + 1, to);
        if (last_block > first_block + 1) {
            const auto [value, block] =
                tree_query(1, 0, leaves_ - 1, first_block + 1, last_block - 1);
            if (value < best.value) {
                best = scan(block * kBlockBits + 1, (block + 1) * kBlockBits);
            }
        }
        const Extreme left = scan(from, (first_block + 1) * kBlockBits);
        if (left.value < best.value) best = left;
    }
    return parens_.rank1_unchecked(best.prefix + 1) - 1;
}

std::uint64_t RangeArgIndex::query(std::uint64_t i, std::uint64_t j) const {
    if (i < 1 || i > j || j > size_) {
        throw RangeError("range [" + std::to_string(i) + ", " + std::to_string(j) +
                         "] invalid for length " + std::to_string(size_));
    }
    return query_unchecked(i, j);
}

std::uint64_t RangeArgIndex::bits_used() const noexcept {
    return parens_.bits_used() + 32 * tree_.size() + 3 * 64;
}

void RangeArgIndex::serialize(ByteWriter& out) const {
    out.put_u64(size_);
    out.put_u8(static_cast<std::uint8_t>(mode_));
    parens_.serialize(out);
}

RangeArgIndex RangeArgIndex::deserialize(ByteReader& in) {
    RangeArgIndex idx;
    idx.size_ = in.get_u64();
    const std::uint8_t mode = in.get_u8();
    if (mode > 1) throw FormatError("unknown range index mode");
    idx.mode_ = static_cast<ArgMode>(mode);
    idx.parens_ = BitVector::deserialize(in);
    if (idx.parens_.size() != 2 * idx.size_ + 2 || idx.parens_.count(true) != idx.size_ + 1) {
        throw FormatError("range index parentheses do not match its length");
    }
    idx.build_tree();
    return idx;
}

}  // namespace sno
