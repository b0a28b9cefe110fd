#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace ldgm {

// Exact arithmetic backend. All probabilities and counting identities in the
// overlap/PMF layer are big-integer rationals; floating point only enters
// when a logarithm is reported.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::uint64_t num, std::uint64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& q) { return q.str(); }

// 2^k as a big integer.
inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

// log2 of a positive rational, safe for values far outside double range.
inline double log2_rational(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    auto log2_big = [](const BigInt& v) {
        const std::size_t bits = boost::multiprecision::msb(v);  // floor(log2 v)
        // Mantissa via the top 64 bits to keep full double precision.
        if (bits < 63) return std::log2(v.convert_to<double>());
        const BigInt top = v >> (bits - 62);
        return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 62);
    };
    return log2_big(num) - log2_big(den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace ldgm
