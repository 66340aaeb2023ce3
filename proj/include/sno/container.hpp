#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sno/diagrams.hpp"
#include "sno/oracle.hpp"

namespace sno {

struct BuildOptions {
    ImplTag impl = ImplTag::unified;
    bool explicit_degrees = false;
};

// Builds the requested oracle for a canonical diagram of class `cls`.
// wavelet_circle needs class circle, wavelet_trapezoid class trapezoid;
// anything else raises std::invalid_argument.
std::unique_ptr<GraphOracle> build_oracle(const AnyDiagram& d, ClassTag cls, const BuildOptions& opts = {});

struct LoadedOracle {
    ClassTag cls;
    std::unique_ptr<GraphOracle> oracle;
};

// "SNO1" container: magic, version, class tag, impl tag, n, corner count,
// then the oracle's sections.
std::vector<std::uint8_t> save_oracle(const GraphOracle& oracle, ClassTag cls);
// Throws FormatError on a bad magic, version, tag or payload.
LoadedOracle load_oracle(std::span<const std::uint8_t> bytes);

}  // namespace sno
