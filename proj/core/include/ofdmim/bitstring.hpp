#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "ofdmim/errors.hpp"

namespace ofdmim {

// Fixed-width bit string, at most 64 bits, MSB first. Bit 0 is the leftmost
// (most significant) position, matching the written form "b0 b1 ... b_{w-1}".
struct BitString {
    std::uint64_t value = 0;
    int width = 0;

    BitString() = default;
    BitString(std::uint64_t v, int w) : value(v), width(w) {
        if (w < 0 || w > 64)
            throw ContractViolation("BitString width must be in [0, 64]");
        if (w < 64 && (v >> w) != 0)
            throw ContractViolation("BitString value does not fit its width");
    }

    static BitString parse(std::string_view text) {
        if (text.size() > 64)
            throw ContractViolation("bit string longer than 64 bits");
        std::uint64_t v = 0;
        for (char c : text) {
            if (c != '0' && c != '1')
                throw ContractViolation("bit string must contain only '0'/'1'");
            v = (v << 1) | static_cast<std::uint64_t>(c - '0');
        }
        return {v, static_cast<int>(text.size())};
    }

    bool bit(int i) const {
        if (i < 0 || i >= width) throw ContractViolation("bit index out of range");
        return (value >> (width - 1 - i)) & 1u;
    }

    // Sub-string of `len` bits starting at MSB-first position `pos`.
    BitString slice(int pos, int len) const {
        if (pos < 0 || len < 0 || pos + len > width)
            throw ContractViolation("bit slice out of range");
        if (len == 0) return {0, 0};
        std::uint64_t v = value >> (width - pos - len);
        if (len < 64) v &= (std::uint64_t{1} << len) - 1;
        return {v, len};
    }

    int hamming_distance(const BitString& other) const {
        if (width != other.width)
            throw ContractViolation("hamming distance requires equal widths");
        return std::popcount(value ^ other.value);
    }

    std::string str() const {
        std::string s(static_cast<std::size_t>(width), '0');
        for (int i = 0; i < width; ++i)
            if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    friend bool operator==(const BitString&, const BitString&) = default;
};

// Reflected binary (Gray) code and its inverse.
inline std::uint64_t gray_encode(std::uint64_t n) { return n ^ (n >> 1); }

inline std::uint64_t gray_decode(std::uint64_t g) {
    std::uint64_t n = g;
    for (int shift = 1; shift < 64; shift <<= 1) n ^= n >> shift;
    return n;
}

}  // namespace ofdmim
