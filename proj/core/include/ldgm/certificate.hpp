#pragma once

#include <cstdint>
#include <vector>

#include "ldgm/generator_matrix.hpp"
#include "ldgm/hamming.hpp"
#include "ldgm/overlap.hpp"

namespace ldgm {

// Which bits count as "touched" by a check. SelectedAtLeastOnce marks a bit
// fixed even when a repeated selection cancels under GF(2); this matches the
// per-check ((m-1)/m)^dc freeness probability and never overcounts free
// bits, so the 2^F <= W certificate stays valid. OddMultiplicity is the
// diagnostic variant (F' >= F) and is not used in ensemble comparisons.
enum class AdjacencyRule { SelectedAtLeastOnce, OddMultiplicity };

struct CertificateResult {
    std::vector<std::uint32_t> fixed_checks;  // the last n - r checks
    std::vector<std::uint32_t> fixed_bits;    // adjacent to any fixed check
    std::vector<std::uint32_t> free_bits;     // the complement
    std::uint64_t free_count = 0;             // F
};

// Linear-time graph scan; works at any n, m. This is the scalable
// counterpart of count_W: setting every fixed bit to zero and sweeping the
// free bits produces 2^F information sequences whose codewords vanish on
// the fixed checks, so 2^F <= W.
CertificateResult free_bits_certificate(const GeneratorMatrix& g, HammingRadius r,
                                        AdjacencyRule rule = AdjacencyRule::SelectedAtLeastOnce);

// Property check 2^F <= W on exhaustively countable codes.
bool certificate_vs_W_check(const GeneratorMatrix& g, HammingRadius r,
                            const OverlapCaps& caps = {});

}  // namespace ldgm
