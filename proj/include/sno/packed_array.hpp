#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sno/serialize.hpp"

namespace sno {

// Fixed-width unsigned integers packed back to back into 64-bit words.
class PackedArray {
public:
    PackedArray() = default;
    // Width is the bit length of the largest value (at least 1).
    explicit PackedArray(std::span<const std::uint64_t> values);

    std::uint64_t size() const noexcept { return size_; }
    unsigned width() const noexcept { return width_; }
    std::uint64_t operator[](std::uint64_t i) const noexcept;

    std::uint64_t bits_used() const noexcept { return 64 * words_.size() + 2 * 64; }

    void serialize(ByteWriter& out) const;
    static PackedArray deserialize(ByteReader& in);

private:
    std::uint64_t size_ = 0;
    unsigned width_ = 1;
    std::vector<std::uint64_t> words_;
};

}  // namespace sno
