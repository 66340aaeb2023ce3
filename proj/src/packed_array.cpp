#include "sno/packed_array.hpp"

#include <algorithm>
#include <bit>

#include "sno/errors.hpp"

namespace sno {

PackedArray::PackedArray(std::span<const std::uint64_t> values) : size_(values.size()) {
    std::uint64_t largest = 0;
    for (auto v : values) largest = std::max(largest, v);
    width_ = std::max<unsigned>(1, static_cast<unsigned>(std::bit_width(largest)));
    words_.assign((size_ * width_ + 63) / 64, 0);
    for (std::uint64_t i = 0; i < size_; ++i) {
        const std::uint64_t bit = i * width_;
        const std::uint64_t word = bit / 64;
        const unsigned offset = bit % 64;
        words_[word] |= values[i] << offset;
        if (offset + width_ > 64) words_[word + 1] |= values[i] >> (64 - offset);
    }
}

std::uint64_t PackedArray::operator[](std::uint64_t i) const noexcept {
    const std::uint64_t bit = i * width_;
    const std::uint64_t word = bit / 64;
    const unsigned offset = bit % 64;
    const std::uint64_t mask = width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
    std::uint64_t v = words_[word] >> offset;
    if (offset + width_ > 64) v |= words_[word + 1] << (64 - offset);
    return v & mask;
}

void PackedArray::serialize(ByteWriter& out) const {
    out.put_u64(size_);
    out.put_u8(static_cast<std::uint8_t>(width_));
    out.put_words(words_);
}

PackedArray PackedArray::deserialize(ByteReader& in) {
    PackedArray a;
    a.size_ = in.get_u64();
    a.width_ = in.get_u8();
    a.words_ = in.get_words();
    if (a.width_ < 1 || a.width_ > 64 || a.words_.size() != (a.size_ * a.width_ + 63) / 64) {
        throw FormatError("packed array header is inconsistent");
    }
    return a;
}

}  // namespace sno
