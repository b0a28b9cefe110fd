#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldgm/errors.hpp"

namespace ldgm {

// Fixed-length binary word over {0,1}^L, packed 64 bits per word.
// Length is immutable after construction; bits past the length are kept zero
// so that whole-word operations (xor, popcount) need no masking.
//
// Display convention: bit i prints at string position i, so "1101" has
// bit 0 = 1, bit 1 = 1, bit 2 = 0, bit 3 = 1.
class BitVector {
  public:
    BitVector() = default;

    explicit BitVector(std::size_t length)
        : length_(length), words_((length + 63) / 64, 0) {}

    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') {
                v.set(i, true);
            } else if (bits[i] != '0') {
                throw IoError("BitVector::from_string: invalid character");
            }
        }
        return v;
    }

    static BitVector ones(std::size_t length) {
        BitVector v(length);
        for (auto& w : v.words_) w = ~std::uint64_t{0};
        v.mask_tail();
        return v;
    }

    // Unpacks an integer index: bit i of the vector = bit i of idx.
    // Only meaningful for length <= 64.
    static BitVector from_index(std::size_t length, std::uint64_t idx) {
        BitVector v(length);
        if (length > 0) v.words_[0] = (length >= 64) ? idx : (idx & ((std::uint64_t{1} << length) - 1));
        return v;
    }

    std::size_t length() const { return length_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const {
        std::size_t count = 0;
        for (auto w : words_) count += std::popcount(w);
        return count;
    }

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    BitVector& operator^=(const BitVector& other) {
        if (other.length_ != length_)
            throw DimensionError("BitVector xor: length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    bool operator==(const BitVector&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> mutable_words() { return words_; }

    // The packed value as an integer; requires length <= 64.
    std::uint64_t to_index() const {
        if (length_ > 64) throw DimensionError("BitVector::to_index: length > 64");
        return words_.empty() ? 0 : words_[0];
    }

    std::string to_string() const {
        std::string s(length_, '0');
        for (std::size_t i = 0; i < length_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

  private:
    void mask_tail() {
        const std::size_t rem = length_ & 63;
        if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
    if (a.length() != b.length())
        throw DimensionError("hamming_distance: length mismatch");
    std::size_t count = 0;
    auto wa = a.words(), wb = b.words();
    for (std::size_t w = 0; w < wa.size(); ++w) count += std::popcount(wa[w] ^ wb[w]);
    return count;
}

}  // namespace ldgm
