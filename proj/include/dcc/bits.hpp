#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcc {

// Runtime-sized bitset backed by 64-bit words. Bit i lives at word i/64,
// position i%64. Hex serialization treats the bits as one unsigned value
// (bit 0 = least significant) printed with ceil(n/4) lowercase digits.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative size");
    }

    int size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool v = true) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

    bool operator==(const Bitset&) const = default;

    std::string to_hex() const {
        int digits = (n_ + 3) / 4;
        std::string s(digits, '0');
        for (int d = 0; d < digits; ++d) {
            int shift = 4 * d;
            unsigned nib = (w_[shift >> 6] >> (shift & 63)) & 0xF;
            s[digits - 1 - d] = "0123456789abcdef"[nib];
        }
        return s;
    }

    // Parses exactly ceil(nbits/4) hex digits; bits beyond nbits must be zero.
    static Bitset from_hex(const std::string& hex, int nbits) {
        int digits = (nbits + 3) / 4;
        if ((int)hex.size() != digits)
            throw std::invalid_argument("Bitset: expected " + std::to_string(digits) +
                                        " hex digits, got " + std::to_string(hex.size()));
        Bitset b(nbits);
        for (int d = 0; d < digits; ++d) {
            char c = hex[digits - 1 - d];
            unsigned nib;
            if (c >= '0' && c <= '9')
                nib = c - '0';
            else if (c >= 'a' && c <= 'f')
                nib = 10 + c - 'a';
            else if (c >= 'A' && c <= 'F')
                nib = 10 + c - 'A';
            else
                throw std::invalid_argument("Bitset: invalid hex digit");
            int shift = 4 * d;
            b.w_[shift >> 6] |= std::uint64_t(nib) << (shift & 63);
        }
        for (int i = nbits; i < digits * 4; ++i)
            if (b.test(i)) throw std::invalid_argument("Bitset: set bit beyond size");
        return b;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace dcc
