// Naive reference implementations shared by the unit tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sno/point_grid.hpp"

namespace testing {

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t n, unsigned one_in) {
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = rng() % one_in == 0 ? 1 : 0;
    return bits;
}

template <class T>
std::uint64_t naive_rank(const std::vector<T>& v, T value, std::uint64_t i) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 0; k < i; ++k) c += v[k] == value;
    return c;
}

// 1-based position of the j-th value, or 0.
template <class T>
std::uint64_t naive_select(const std::vector<T>& v, T value, std::uint64_t j) {
    for (std::uint64_t k = 0; k < v.size(); ++k) {
        if (v[k] == value && --j == 0) return k + 1;
    }
    return 0;
}

inline std::uint64_t naive_arg(const std::vector<std::uint64_t>& v, std::uint64_t i, std::uint64_t j, bool max) {
    std::uint64_t best = i;
    for (std::uint64_t k = i; k <= j; ++k) {
        if (max ? v[k - 1] > v[best - 1] : v[k - 1] < v[best - 1]) best = k;
    }
    return best;
}

inline std::vector<sno::Point> naive_report(const std::vector<sno::Point>& pts, const sno::Rect& r) {
    std::vector<sno::Point> out;
    for (const auto& p : pts) {
        if (p.x >= r.x1 && p.x <= r.x2 && p.y >= r.y1 && p.y <= r.y2) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testing
