#include "doctest.h"
#include "sno/errors.hpp"
#include "sno/range_arg_index.hpp"
#include "support.hpp"

using sno::ArgMode;
using sno::RangeArgIndex;

TEST_CASE("fixed examples") {
    const std::vector<std::uint64_t> a = {3, 5, 7, 6, 7, 7};
    CHECK(RangeArgIndex(a, ArgMode::max).query(2, 5) == 3);
    const std::vector<std::uint64_t> one = {42};
    CHECK(RangeArgIndex(one, ArgMode::min).query(1, 1) == 1);
    const std::vector<std::uint64_t> p = {7, 7, 1, 7, 2, 4};
    CHECK(RangeArgIndex(p, ArgMode::min).query(2, 5) == 3);
    const std::vector<std::uint64_t> ties = {5, 5, 5};
    CHECK(RangeArgIndex(ties, ArgMode::min).query(1, 3) == 1);
    CHECK(RangeArgIndex(ties, ArgMode::max).query(2, 3) == 2);
}

TEST_CASE("bad ranges") {
    const std::vector<std::uint64_t> a = {1, 2, 3};
    const RangeArgIndex idx(a, ArgMode::min);
    CHECK_THROWS_AS(idx.query(2, 1), sno::RangeError);
    CHECK_THROWS_AS(idx.query(0, 1), sno::RangeError);
    CHECK_THROWS_AS(idx.query(1, 4), sno::RangeError);
}

TEST_CASE("built from an accessor, source not retained") {
    std::vector<std::uint64_t> src = {4, 1, 3, 1, 5};
    const RangeArgIndex idx = RangeArgIndex::build(5, ArgMode::min, [&](std::uint64_t i) { return src[i - 1]; });
    src.assign(5, 0);  // later answers cannot depend on this
    CHECK(idx.query(1, 5) == 2);
    CHECK(idx.query(3, 5) == 4);
    CHECK(idx.query(5, 5) == 5);
}

TEST_CASE("all ranges for every length up to 64, heavy ties") {
    std::mt19937_64 rng(8);
    for (std::size_t n = 1; n <= 64; ++n) {
        for (std::uint64_t range : {1ULL, 2ULL, 3ULL, 10ULL, 1000ULL}) {
            std::vector<std::uint64_t> v(n);
            for (auto& x : v) x = rng() % range;
            const RangeArgIndex mn(v, ArgMode::min), mx(v, ArgMode::max);
            for (std::uint64_t i = 1; i <= n; ++i) {
                for (std::uint64_t j = i; j <= n; ++j) {
                    REQUIRE(mn.query(i, j) == testing::naive_arg(v, i, j, false));
                    REQUIRE(mx.query(i, j) == testing::naive_arg(v, i, j, true));
                }
            }
        }
    }
}

TEST_CASE("random arrays up to 512 and monotone runs") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 2000; ++rep) {
        const std::size_t n = 1 + rng() % 512;
        std::vector<std::uint64_t> v(n);
        switch (rep % 4) {
            case 0: for (auto& x : v) x = rng() % 4; break;
            case 1: for (std::size_t k = 0; k < n; ++k) v[k] = k; break;
            case 2: for (std::size_t k = 0; k < n; ++k) v[k] = n - k; break;
            default: for (auto& x : v) x = rng(); break;
        }
        const RangeArgIndex mn(v, ArgMode::min), mx(v, ArgMode::max);
        for (int q = 0; q < 10; ++q) {
            std::uint64_t i = 1 + rng() % n, j = 1 + rng() % n;
            if (i > j) std::swap(i, j);
            REQUIRE(mn.query(i, j) == testing::naive_arg(v, i, j, false));
            REQUIRE(mx.query(i, j) == testing::naive_arg(v, i, j, true));
        }
    }
}

TEST_CASE("space budget and round trip") {
    std::mt19937_64 rng(10);
    std::vector<std::uint64_t> v(1 << 16);
    for (auto& x : v) x = rng() % 100;
    const RangeArgIndex idx(v, ArgMode::max);
    CHECK(idx.bits_used() <= 8ULL * v.size());
    sno::ByteWriter w;
    idx.serialize(w);
    sno::ByteReader r(w.bytes());
    const RangeArgIndex back = RangeArgIndex::deserialize(r);
    for (int q = 0; q < 1000; ++q) {
        std::uint64_t i = 1 + rng() % v.size(), j = 1 + rng() % v.size();
        if (i > j) std::swap(i, j);
        REQUIRE(back.query(i, j) == testing::naive_arg(v, i, j, true));
    }
}
