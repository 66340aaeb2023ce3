#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sno/geometry.hpp"
#include "sno/oracle.hpp"

namespace sno {

struct CheckReport {
    std::uint32_t n = 0;
    std::uint64_t pairs = 0;
    std::uint64_t adjacency_mismatches = 0;
    std::uint64_t degree_mismatches = 0;
    std::uint64_t neighborhood_mismatches = 0;
    std::vector<std::string> examples;  // first few mismatches, human readable

    bool ok() const noexcept {
        return adjacency_mismatches == 0 && degree_mismatches == 0 && neighborhood_mismatches == 0;
    }
};

// Compares every adjacent pair, every degree and every neighborhood against
// a reference matrix.
CheckReport run_check(const GraphOracle& oracle, const AdjacencyMatrix& truth);

// Wraps an oracle and answers wrongly for vertex 1 (and the pair 1, 2 when
// n >= 2). Used to confirm that checks notice mismatches.
class FaultyOracle final : public GraphOracle {
public:
    explicit FaultyOracle(std::unique_ptr<GraphOracle> inner) : inner_(std::move(inner)) {}

    std::uint32_t vertex_count() const noexcept override { return inner_->vertex_count(); }
    bool adjacent(std::uint32_t u, std::uint32_t v) const override;
    std::uint64_t degree(std::uint32_t u) const override;
    std::vector<std::uint32_t> neighborhood(std::uint32_t u) const override;
    SpaceReport space_report() const override { return inner_->space_report(); }
    ImplTag impl() const noexcept override { return inner_->impl(); }

private:
    std::unique_ptr<GraphOracle> inner_;
};

}  // namespace sno
