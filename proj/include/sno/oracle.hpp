#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sno {

struct SpaceComponent {
    std::string name;
    std::uint64_t bits;
};

struct SpaceReport {
    std::vector<SpaceComponent> components;

    std::uint64_t total() const noexcept {
        std::uint64_t sum = 0;
        for (const auto& c : components) sum += c.bits;
        return sum;
    }
};

enum class ImplTag : std::uint8_t { unified = 0, wavelet_circle = 1, wavelet_trapezoid = 2 };

// Common query surface of every oracle. Vertices are 1-based; an
// out-of-range vertex raises RangeError.
class GraphOracle {
public:
    virtual ~GraphOracle() = default;

    virtual std::uint32_t vertex_count() const noexcept = 0;
    virtual bool adjacent(std::uint32_t u, std::uint32_t v) const = 0;
    virtual std::uint64_t degree(std::uint32_t u) const = 0;
    // Sorted ascending, without u.
    virtual std::vector<std::uint32_t> neighborhood(std::uint32_t u) const = 0;
    virtual SpaceReport space_report() const = 0;
    virtual ImplTag impl() const noexcept = 0;
};

}  // namespace sno
