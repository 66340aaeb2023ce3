#include "sno/check.hpp"

#include <algorithm>

namespace sno {
namespace {

constexpr std::size_t kMaxExamples = 5;

void note(CheckReport& r, std::string msg) {
    if (r.examples.size() < kMaxExamples) r.examples.push_back(std::move(msg));
}

}  // namespace

CheckReport run_check(const GraphOracle& oracle, const AdjacencyMatrix& truth) {
    CheckReport r;
    r.n = truth.n;
    if (oracle.vertex_count() != truth.n) {
        r.adjacency_mismatches = 1;
        note(r, "vertex count " + std::to_string(oracle.vertex_count()) + " != " + std::to_string(truth.n));
        return r;
    }
    for (std::uint32_t u = 1; u <= truth.n; ++u) {
        std::vector<std::uint32_t> expected;
        for (std::uint32_t v = 1; v <= truth.n; ++v) {
            const bool want = truth.at(u, v);
            if (want) expected.push_back(v);
            ++r.pairs;
            if (oracle.adjacent(u, v) != want) {
                ++r.adjacency_mismatches;
                note(r, "adjacent(" + std::to_string(u) + "," + std::to_string(v) + ") should be " +
                            (want ? "true" : "false"));
            }
        }
        if (oracle.degree(u) != expected.size()) {
            ++r.degree_mismatches;
            note(r, "degree(" + std::to_string(u) + ") should be " + std::to_string(expected.size()));
        }
        if (oracle.neighborhood(u) != expected) {
            ++r.neighborhood_mismatches;
            note(r, "neighborhood(" + std::to_string(u) + ") differs");
        }
    }
    return r;
}

bool FaultyOracle::adjacent(std::uint32_t u, std::uint32_t v) const {
    const bool real = inner_->adjacent(u, v);
    return std::min(u, v) == 1 && std::max(u, v) == 2 ? !real : real;
}

std::uint64_t FaultyOracle::degree(std::uint32_t u) const {
    return inner_->degree(u) + (u == 1 ? 1 : 0);
}

std::vector<std::uint32_t> FaultyOracle::neighborhood(std::uint32_t u) const {
    auto out = inner_->neighborhood(u);
    if (u == 1) out.push_back(1);
    return out;
}

}  // namespace sno
