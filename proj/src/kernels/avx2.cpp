#include "sno/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

#define SNO_TARGET_AVX2 __attribute__((target("avx2")))

namespace sno::kernels::detail {
namespace {

// Nibble lookup popcount (Mula et al.), accumulated with vpsadbw.
SNO_TARGET_AVX2 std::uint64_t popcount_words_avx2(const std::uint64_t* words,
                                                  std::size_t count) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();

    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i v =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        const __m256i lo = _mm256_and_si256(v, low_mask);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                            _mm256_shuffle_epi8(lookup, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }

    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < count; ++i) total += std::popcount(words[i]);
    return total;
}

SNO_TARGET_AVX2 void pack_bits_avx2(const std::uint8_t* bytes, std::size_t count,
                                    std::uint64_t* out) {
    const __m256i zero = _mm256_setzero_si256();
    const std::size_t full_words = count / 64;
    for (std::size_t w = 0; w < full_words; ++w) {
        const auto* p = reinterpret_cast<const __m256i*>(bytes + w * 64);
        const __m256i a = _mm256_loadu_si256(p);
        const __m256i b = _mm256_loadu_si256(p + 1);
        // movemask of (byte == 0) gives the clear bits; invert for set bits.
        const auto lo = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(a, zero)));
        const auto hi = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(b, zero)));
        out[w] = ~(static_cast<std::uint64_t>(hi) << 32 | lo);
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

KernelTable avx2_table() {
    return {Isa::avx2, &popcount_words_avx2, &pack_bits_avx2};
}

}  // namespace sno::kernels::detail

#endif
