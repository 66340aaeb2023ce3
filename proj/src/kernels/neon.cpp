#include "sno/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>

namespace sno::kernels::detail {
namespace {

std::uint64_t popcount_words_neon(const std::uint64_t* words, std::size_t count) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(words + i));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
    }
    std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < count; ++i) total += std::popcount(words[i]);
    return total;
}

void pack_bits_neon(const std::uint8_t* bytes, std::size_t count, std::uint64_t* out) {
    // Per-lane weights 1,2,4,...,128 turn 8 lanes of 0/1 into one byte.
    static const std::uint8_t weights_data[16] = {1, 2, 4, 8, 16, 32, 64, 128,
                                                  1, 2, 4, 8, 16, 32, 64, 128};
    const uint8x16_t weights = vld1q_u8(weights_data);
    const std::size_t full_words = count / 64;
    for (std::size_t w = 0; w < full_words; ++w) {
        std::uint64_t word = 0;
        for (int chunk = 0; chunk < 4; ++chunk) {
            const uint8x16_t v = vld1q_u8(bytes + w * 64 + chunk * 16);
            const uint8x16_t set = vandq_u8(vtstq_u8(v, v), weights);
            const std::uint64_t lo = vaddv_u8(vget_low_u8(set));
            const std::uint64_t hi = vaddv_u8(vget_high_u8(set));
            word |= (lo | hi << 8) << (chunk * 16);
        }
        out[w] = word;
    }
    const std::size_t rest = count - full_words * 64;
    if (rest != 0) {
        std::uint64_t word = 0;
        const std::uint8_t* tail = bytes + full_words * 64;
        for (std::size_t b = 0; b < rest; ++b) {
            word |= static_cast<std::uint64_t>(tail[b] != 0) << b;
        }
        out[full_words] = word;
    }
}

}  // namespace

KernelTable neon_table() {
    return {Isa::neon, &popcount_words_neon, &pack_bits_neon};
}

}  // namespace sno::kernels::detail

#endif
