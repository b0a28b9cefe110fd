#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "ldgm/bit_vector.hpp"
#include "ldgm/errors.hpp"

namespace ldgm {

// Integer ball radius together with the distortion it was derived from.
// The radius is floor(D*n); both values are carried explicitly so that no
// silent rounding happens downstream. floor() snaps values within 1e-9 of
// an integer first, so D = 1/3 at n = 12 gives radius 4, not 3.
struct HammingRadius {
    std::uint32_t radius_bits = 0;
    double distortion = 0.0;

    static HammingRadius from_distortion(double D, std::size_t n) {
        if (D < 0.0 || D > 1.0) throw DomainError("HammingRadius: D outside [0,1]");
        const double scaled = D * static_cast<double>(n);
        const double snapped = std::round(scaled);
        const double bits = (std::abs(scaled - snapped) < 1e-9) ? snapped : std::floor(scaled);
        HammingRadius r;
        r.radius_bits = static_cast<std::uint32_t>(bits);
        r.distortion = D;
        return r;
    }

    static HammingRadius from_bits(std::uint32_t bits, std::size_t n) {
        if (bits > n) throw DomainError("HammingRadius: radius exceeds block length");
        HammingRadius r;
        r.radius_bits = bits;
        r.distortion = (n == 0) ? 0.0 : static_cast<double>(bits) / static_cast<double>(n);
        return r;
    }
};

inline bool ball_contains(const BitVector& center, HammingRadius r, const BitVector& x) {
    return hamming_distance(center, x) <= r.radius_bits;
}

// Sum_{k<=r} binom(n,k); exact in 64 bits for n <= 63.
std::uint64_t ball_size(std::size_t n, std::uint32_t radius_bits);

// All vectors within radius r of center, in a fixed deterministic order:
// weight-major, and within a weight class by lexicographic flip positions
// (so for center 0^4, radius 1: 0000, 1000, 0100, 0010, 0001).
std::vector<BitVector> enumerate_ball(const BitVector& center, HammingRadius r);

// Same enumeration as packed offset masks relative to the center, for
// n <= 64. Offsets are xored onto a center index by dense-array consumers.
void for_each_ball_offset(std::size_t n, std::uint32_t radius_bits,
                          const std::function<void(std::uint64_t)>& visit);

}  // namespace ldgm
