#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Word-level kernels used by the bit-vector layer. Each kernel has a scalar
// reference implementation and optional SIMD variants; one variant is chosen
// at first use based on what the CPU reports. Setting SNO_KERNELS=scalar in
// the environment forces the reference path.
namespace sno::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
    Isa isa;
    // Number of set bits across `words`.
    std::uint64_t (*popcount_words)(const std::uint64_t* words, std::size_t count);
    // Packs `count` bytes (0 = clear, anything else = set) into little-endian
    // bit order: byte i goes to bit (i % 64) of word i / 64. `out` must hold
    // ceil(count / 64) words; trailing bits of the last word are zeroed.
    void (*pack_bits)(const std::uint8_t* bytes, std::size_t count, std::uint64_t* out);
};

// The table selected for this process.
const KernelTable& active();

// Every variant this CPU can run, scalar first. Used by equivalence tests.
std::vector<KernelTable> available();

inline std::uint64_t popcount_words(std::span<const std::uint64_t> words) {
    return active().popcount_words(words.data(), words.size());
}

inline void pack_bits(std::span<const std::uint8_t> bytes, std::uint64_t* out) {
    active().pack_bits(bytes.data(), bytes.size(), out);
}

namespace detail {
KernelTable scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
KernelTable avx2_table();
#endif
#if defined(__aarch64__)
KernelTable neon_table();
#endif
}  // namespace detail

}  // namespace sno::kernels
