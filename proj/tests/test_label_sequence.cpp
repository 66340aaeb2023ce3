#include "doctest.h"
#include "sno/errors.hpp"
#include "sno/label_sequence.hpp"
#include "support.hpp"

using sno::LabelSequence;

TEST_CASE("small fixed sequence") {
    const std::vector<std::uint32_t> s = {1, 2, 1, 3, 2, 3};
    const LabelSequence seq(s, 4);
    CHECK(seq.rank(2, 5) == 2);
    CHECK(seq.select(3, 1) == 4);
    CHECK(seq.rank(1, 0) == 0);
    CHECK(seq.access(4) == 3);
    CHECK(seq.rank(0, 6) == 0);
    CHECK_THROWS_AS(seq.select(0, 1), sno::NotFoundError);
    CHECK_THROWS_AS(seq.access(7), sno::RangeError);
    CHECK_THROWS_AS(seq.rank(1, 7), sno::RangeError);
}

TEST_CASE("symbol outside the alphabet is rejected") {
    const std::vector<std::uint32_t> s = {0, 4};
    CHECK_THROWS_AS(LabelSequence(s, 4), sno::ValidationError);
}

TEST_CASE("sigma 1 has no levels") {
    const std::vector<std::uint32_t> s(5, 0);
    const LabelSequence seq(s, 1);
    CHECK(seq.levels() == 0);
    CHECK(seq.rank(0, 3) == 3);
    CHECK(seq.select(0, 5) == 5);
    CHECK(seq.access(2) == 0);
}

TEST_CASE("exhaustive against naive scans up to length 64") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 0; n <= 64; ++n) {
        for (std::uint32_t sigma : {1U, 2U, 3U, 5U, 8U, 17U}) {
            std::vector<std::uint32_t> s(n);
            for (auto& x : s) x = static_cast<std::uint32_t>(rng() % sigma);
            const LabelSequence seq(s, sigma);
            std::uint64_t sum = 0;
            for (std::uint32_t a = 0; a < sigma; ++a) {
                for (std::uint64_t i = 0; i <= n; ++i) REQUIRE(seq.rank(a, i) == testing::naive_rank(s, a, i));
                const std::uint64_t total = testing::naive_rank(s, a, n);
                sum += total;
                for (std::uint64_t j = 1; j <= total; ++j) REQUIRE(seq.select(a, j) == testing::naive_select(s, a, j));
            }
            CHECK(sum == n);
            for (std::uint64_t i = 1; i <= n; ++i) {
                REQUIRE(seq.access(i) == s[i - 1]);
                const auto [sym, before] = seq.access_rank_unchecked(i - 1);
                REQUIRE(sym == s[i - 1]);
                REQUIRE(before == testing::naive_rank(s, sym, i - 1));
            }
        }
    }
}

TEST_CASE("range counting and reporting") {
    std::mt19937_64 rng(6);
    const std::uint32_t sigma = 37;
    std::vector<std::uint32_t> s(700);
    for (auto& x : s) x = static_cast<std::uint32_t>(rng() % sigma);
    const LabelSequence seq(s, sigma);
    for (int q = 0; q < 500; ++q) {
        std::uint64_t b = rng() % 701, e = rng() % 701;
        if (b > e) std::swap(b, e);
        const std::uint32_t lo = rng() % sigma, hi = lo + rng() % (sigma - lo);
        const std::uint64_t bound = rng() % (sigma + 3);
        std::uint64_t less = 0;
        std::vector<std::pair<std::uint64_t, std::uint32_t>> want, got;
        for (std::uint64_t k = b; k < e; ++k) {
            less += s[k] < bound;
            if (s[k] >= lo && s[k] <= hi) want.emplace_back(k, s[k]);
        }
        REQUIRE(seq.count_less(b, e, bound) == less);
        seq.report_range(b, e, lo, hi, [&](std::uint64_t k, std::uint32_t v) { got.emplace_back(k, v); });
        std::sort(got.begin(), got.end());
        REQUIRE(got == want);
    }
}

TEST_CASE("space budget for a long sequence") {
    std::mt19937_64 rng(7);
    const std::uint32_t sigma = 1000;
    std::vector<std::uint32_t> s(1 << 16);
    for (auto& x : s) x = static_cast<std::uint32_t>(rng() % sigma);
    const LabelSequence seq(s, sigma);
    CHECK(static_cast<double>(seq.bits_used()) <= 1.6 * s.size() * 10 + 64.0 * s.size() / 64);
}

TEST_CASE("serialize round trip") {
    std::vector<std::uint32_t> s = {3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5};
    const LabelSequence seq(s, 10);
    sno::ByteWriter w;
    seq.serialize(w);
    sno::ByteReader r(w.bytes());
    const LabelSequence back = LabelSequence::deserialize(r);
    for (std::uint64_t i = 1; i <= s.size(); ++i) CHECK(back.access(i) == s[i - 1]);
    CHECK(back.select(5, 3) == 11);
}
