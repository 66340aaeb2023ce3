#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "sno/errors.hpp"

namespace sno {

// Little-endian byte sink used by every serializable component.
class ByteWriter {
public:
    void put_u8(std::uint8_t v) { bytes_.push_back(v); }

    void put_u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    void put_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    void put_raw(std::span<const std::uint8_t> data) {
        bytes_.insert(bytes_.end(), data.begin(), data.end());
    }

    void put_words(std::span<const std::uint64_t> words) {
        put_u64(words.size());
        for (auto w : words) put_u64(w);
    }

    // Writes a length-prefixed section produced by `fill`.
    template <class Fill>
    void put_section(Fill&& fill) {
        ByteWriter inner;
        fill(inner);
        put_u64(inner.bytes_.size());
        put_raw(inner.bytes_);
    }

    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    std::vector<std::uint8_t> take() noexcept { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t get_u8() {
        need(1);
        return data_[pos_++];
    }

    std::uint32_t get_u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }

    std::uint64_t get_u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }

    std::span<const std::uint8_t> get_raw(std::size_t count) {
        need(count);
        auto out = data_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

    std::vector<std::uint64_t> get_words() {
        const std::uint64_t count = get_u64();
        if (count > remaining() / 8) throw FormatError("word array exceeds input");
        std::vector<std::uint64_t> words(count);
        for (auto& w : words) w = get_u64();
        return words;
    }

    // Reader over the next length-prefixed section.
    ByteReader section() {
        const std::uint64_t len = get_u64();
        return ByteReader(get_raw(len));
    }

    std::size_t remaining() const noexcept { return data_.size() - pos_; }
    bool done() const noexcept { return pos_ == data_.size(); }

private:
    void need(std::size_t count) const {
        if (count > remaining()) throw FormatError("unexpected end of input");
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

}  // namespace sno
