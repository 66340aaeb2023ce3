#include <bit>
#include <random>

#include "doctest.h"
#include "sno/kernels.hpp"

using namespace sno::kernels;

TEST_CASE("scalar kernels match a bit-by-bit reference") {
    const KernelTable t = detail::scalar_table();
    std::vector<std::uint8_t> bytes = {1, 0, 7, 0, 0, 255, 1};
    std::vector<std::uint64_t> words(1, ~0ULL);
    t.pack_bits(bytes.data(), bytes.size(), words.data());
    CHECK(words[0] == 0b1100101ULL);
    CHECK(t.popcount_words(words.data(), 1) == 4);
    CHECK(t.popcount_words(words.data(), 0) == 0);
}

TEST_CASE("every available kernel variant agrees with scalar") {
    const auto tables = available();
    REQUIRE(!tables.empty());
    CHECK(tables.front().isa == Isa::scalar);
    const KernelTable ref = detail::scalar_table();
    std::mt19937_64 rng(11);
    for (const auto& t : tables) {
        CAPTURE(isa_name(t.isa));
        for (std::size_t n : {0, 1, 3, 31, 32, 33, 63, 64, 65, 127, 128, 255, 256, 257, 1000, 4099}) {
            std::vector<std::uint8_t> bytes(n);
            for (auto& b : bytes) b = static_cast<std::uint8_t>(rng() % 3 == 0 ? rng() : 0);
            const std::size_t nw = (n + 63) / 64;
            std::vector<std::uint64_t> a(nw + 1, 0xdeadbeefULL), b(nw + 1, 0xdeadbeefULL);
            ref.pack_bits(bytes.data(), n, a.data());
            t.pack_bits(bytes.data(), n, b.data());
            CHECK(std::equal(a.begin(), a.begin() + nw, b.begin()));
            CHECK(b[nw] == 0xdeadbeefULL);

            std::vector<std::uint64_t> words(n);
            for (auto& w : words) w = rng();
            CHECK(ref.popcount_words(words.data(), n) == t.popcount_words(words.data(), n));
            std::uint64_t naive = 0;
            for (auto w : words) naive += std::popcount(w);
            CHECK(t.popcount_words(words.data(), n) == naive);
        }
    }
}

TEST_CASE("active table is one of the available ones") {
    const auto tables = available();
    bool found = false;
    for (const auto& t : tables) found = found || t.isa == active().isa;
    CHECK(found);
}
