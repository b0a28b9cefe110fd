#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ldgm/bit_vector.hpp"
#include "ldgm/generator_matrix.hpp"
#include "ldgm/hamming.hpp"
#include "ldgm/rational.hpp"

namespace ldgm {

// Caps for the dense brute-force passes: overlap reports allocate 2^n
// counters and scan all 2^m information sequences.
struct OverlapCaps {
    std::uint32_t max_block_bits = 20;
    std::uint32_t max_info_bits = 26;
    std::uint32_t max_pmf_info_bits = 16;
};

// Exact counting quantities for one code at one radius, all in big-integer
// rational arithmetic. Logarithms (the excess coefficient) are the only
// floating-point values.
//
// The ball average of 1/N is taken over {u in ball : N(u) >= 1}; the
// excluded complement is counted and reported. Because z = 0 always encodes
// to the zero codeword, every u in the ball around 0 has N(u) >= 1, so the
// excluded count is provably zero; it is still computed rather than assumed.
struct OverlapReport {
    HammingRadius radius;
    std::vector<std::pair<BitVector, std::uint64_t>> N_by_u;  // ball order
    Rational q;              // 2^-n * sum over included u of 1/N(u)
    Rational p_n;            // success probability of the D-ball encoder
    Rational mean_inv_N;     // average of 1/N over included u
    double excess_coefficient = 0.0;  // (1/n) log2 mean_inv_N, <= 0
    std::uint64_t W = 0;     // codeword support confined to first r coords
    std::vector<std::uint64_t> M_by_k;  // k = 0..r, count in both balls
    std::uint64_t excluded_count = 0;   // ball points with N(u) == 0
    Rational excluded_mass;             // excluded_count / |ball|
};

// |{z : Gz within radius r of u}| by full 2^m scan.
std::uint64_t count_N(const GeneratorMatrix& g, const BitVector& u, HammingRadius r,
                      const OverlapCaps& caps = {});

// |{z : Gz within radius r of both the origin and u}|.
std::uint64_t count_M(const GeneratorMatrix& g, const BitVector& u, HammingRadius r,
                      const OverlapCaps& caps = {});

// |{z : (Gz)_i = 0 for every i >= r}|. Coordinate convention: the free
// coordinates are the first r, the fixed checks are the last n - r.
std::uint64_t count_W(const GeneratorMatrix& g, HammingRadius r,
                      const OverlapCaps& caps = {});

// Weight-k probe vector: ones in coordinates 0..k-1.
BitVector canonical_uk(std::size_t n, std::uint32_t k);

// Full report. p_n is computed two independent ways (2^m * q via the PMF
// normalization, and a direct count of sources whose ball contains a
// codeword); a mismatch means an implementation bug and throws.
OverlapReport overlap_report(const GeneratorMatrix& g, HammingRadius r,
                             const OverlapCaps& caps = {});

// Exact PMF of the D-ball encoder output under a uniform source, computed
// source-by-source, next to the constant-off-z* prediction derived from the
// overlap report for comparison.
struct ZhatPmf {
    std::vector<Rational> pmf;     // index = information sequence as integer
    std::uint64_t z_star_index = 0;
    Rational q_predicted;
    Rational p_n;
};
ZhatPmf pmf_of_zhat(const GeneratorMatrix& g, HammingRadius r,
                    const OverlapCaps& caps = {});

// Exact E[distortion] of the D-ball encoder (normalized by n): successes
// average over their candidate sets, failures reconstruct with the z*
// codeword.
Rational exact_dball_expected_distortion(const GeneratorMatrix& g, HammingRadius r,
                                         const OverlapCaps& caps = {});

}  // namespace ldgm
