#pragma once

#include <cstdint>

#include "ldgm/bit_vector.hpp"
#include "ldgm/generator_matrix.hpp"
#include "ldgm/hamming.hpp"
#include "ldgm/rational.hpp"

namespace ldgm {

// Explicit resource caps for the exhaustive scans. Defaults match what a
// desktop machine handles in seconds; callers widen or narrow them
// deliberately (the CLI also honors LDGM_MAX_INFO_BITS / LDGM_MAX_BLOCK_BITS).
struct EncoderLimits {
    std::uint32_t max_info_bits = 26;    // 2^m codeword scans
    std::uint32_t max_block_bits = 24;   // 2^n source scans

    static EncoderLimits from_env();
};

struct EncodingResult {
    BitVector chosen_z;
    BitVector codeword;              // always encode(chosen_z)
    std::uint64_t distortion_bits = 0;  // ||codeword xor s||_1
    bool succeeded = true;           // D-ball mode only; ML is always true
    std::uint64_t num_candidates = 0;   // |argmin| for ML, N(s,D;C) for D-ball
};

// Exact nearest-codeword encoding by full 2^m scan; ties broken uniformly
// among the argmin set using tie_seed. The draw happens after a full
// deterministic pass (min + count), so the result does not depend on how the
// scan might be partitioned.
EncodingResult ml_encode(const GeneratorMatrix& g, const BitVector& source,
                         std::uint64_t tie_seed, const EncoderLimits& limits = {});

// D-ball encoding: succeeds iff some codeword lies within the radius;
// uniform choice among qualifying information sequences. On failure the
// sentinel z* (the all-ones m-vector) is returned with succeeded = false.
// z* being a genuine candidate elsewhere is fine; it is only a sentinel.
EncodingResult dball_encode(const GeneratorMatrix& g, const BitVector& source,
                            HammingRadius radius, std::uint64_t tie_seed,
                            const EncoderLimits& limits = {});

// Exact E[d_n(S;C)] over uniform sources, as a rational. Runs a hypercube
// BFS from the codeword set, so it needs 2^n bytes of scratch.
Rational expected_distortion_exhaustive(const GeneratorMatrix& g,
                                        const EncoderLimits& limits = {});

}  // namespace ldgm
