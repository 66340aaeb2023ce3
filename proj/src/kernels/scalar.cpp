#include "sno/kernels.hpp"

#include <bit>

namespace sno::kernels::detail {
namespace {

std::uint64_t popcount_words_scalar(const std::uint64_t* words, std::size_t count) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < count; ++i) total += std::popcount(words[i]);
    return total;
}

void pack_bits_scalar(const std::uint8_t* bytes, std::size_t count, std::uint64_t* out) {
    const std::size_t n_words = (count + 63) / 64;
    for (std::size_t w = 0; w < n_words; ++w) {
        std::uint64_t word = 0;
        const std::size_t base = w * 64;
        const std::size_t limit = count - base < 64 ? count - base : 64;
        for (std::size_t b = 0; b < limit; ++b) {
            word |= static_cast<std::uint64_t>(bytes[base + b] != 0) << b;
        }
        out[w] = word;
    }
}

}  // namespace

KernelTable scalar_table() {
    return {Isa::scalar, &popcount_words_scalar, &pack_bits_scalar};
}

}  // namespace sno::kernels::detail
