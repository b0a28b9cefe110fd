#include "ldgm/encoders.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "ldgm/errors.hpp"
#include "ldgm/gray_scan.hpp"
#include "ldgm/rng.hpp"

namespace ldgm {

EncoderLimits EncoderLimits::from_env() {
    EncoderLimits limits;
    if (const char* v = std::getenv("LDGM_MAX_INFO_BITS"))
        limits.max_info_bits = static_cast<std::uint32_t>(std::strtoul(v, nullptr, 10));
    if (const char* v = std::getenv("LDGM_MAX_BLOCK_BITS"))
        limits.max_block_bits = static_cast<std::uint32_t>(std::strtoul(v, nullptr, 10));
    return limits;
}

namespace {

void check_info_cap(const GeneratorMatrix& g, const EncoderLimits& limits) {
    if (g.info_bits() > limits.max_info_bits)
        throw ResourceLimitError("exhaustive encoder: m = " + std::to_string(g.info_bits()) +
                                 " exceeds cap " + std::to_string(limits.max_info_bits));
}

void check_source(const GeneratorMatrix& g, const BitVector& source) {
    if (source.length() != g.checks())
        throw DimensionError("encode: source length != n");
}

// Two-pass uniform selection: pass 1 reduces (threshold, count)
// deterministically, one draw picks an index, pass 2 retrieves it.
struct CandidateScan {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t count = 0;
};

}  // namespace

EncodingResult ml_encode(const GeneratorMatrix& g, const BitVector& source,
                         std::uint64_t tie_seed, const EncoderLimits& limits) {
    check_source(g, source);
    check_info_cap(g, limits);
    const CodewordScan scan(g);
    const std::uint64_t* s = source.words().data();
    const std::size_t words = scan.words_per_codeword();

    CandidateScan pass1;
    scan.run([&](std::uint64_t, const std::uint64_t* x) {
        const std::uint64_t d = distance_words(x, s, words);
        if (d < pass1.best) {
            pass1.best = d;
            pass1.count = 1;
        } else if (d == pass1.best) {
            ++pass1.count;
        }
    });

    Rng rng(tie_seed);
    const std::uint64_t pick = rng.below(pass1.count);

    EncodingResult result;
    std::uint64_t seen = 0;
    scan.run([&](std::uint64_t z, const std::uint64_t* x) {
        if (distance_words(x, s, words) != pass1.best) return;
        if (seen++ == pick) {
            result.chosen_z = BitVector::from_index(g.info_bits(), z);
            BitVector cw(g.checks());
            for (std::size_t w = 0; w < words; ++w) cw.mutable_words()[w] = x[w];
            result.codeword = std::move(cw);
        }
    });
    result.distortion_bits = pass1.best;
    result.succeeded = true;
    result.num_candidates = pass1.count;
    return result;
}

EncodingResult dball_encode(const GeneratorMatrix& g, const BitVector& source,
                            HammingRadius radius, std::uint64_t tie_seed,
                            const EncoderLimits& limits) {
    check_source(g, source);
    check_info_cap(g, limits);
    const CodewordScan scan(g);
    const std::uint64_t* s = source.words().data();
    const std::size_t words = scan.words_per_codeword();
    const std::uint64_t r = radius.radius_bits;

    std::uint64_t candidates = 0;
    scan.run([&](std::uint64_t, const std::uint64_t* x) {
        if (distance_words(x, s, words) <= r) ++candidates;
    });

    EncodingResult result;
    result.num_candidates = candidates;
    if (candidates == 0) {
        result.succeeded = false;
        result.chosen_z = BitVector::ones(g.info_bits());
        result.codeword = g.encode(result.chosen_z);
        result.distortion_bits = hamming_distance(result.codeword, source);
        return result;
    }

    Rng rng(tie_seed);
    const std::uint64_t pick = rng.below(candidates);
    std::uint64_t seen = 0;
    scan.run([&](std::uint64_t z, const std::uint64_t* x) {
        if (distance_words(x, s, words) > r) return;
        if (seen++ == pick) {
            result.chosen_z = BitVector::from_index(g.info_bits(), z);
            BitVector cw(g.checks());
            for (std::size_t w = 0; w < words; ++w) cw.mutable_words()[w] = x[w];
            result.codeword = std::move(cw);
        }
    });
    result.succeeded = true;
    result.distortion_bits = hamming_distance(result.codeword, source);
    return result;
}

Rational expected_distortion_exhaustive(const GeneratorMatrix& g,
                                        const EncoderLimits& limits) {
    const std::size_t n = g.checks();
    if (n > limits.max_block_bits)
        throw ResourceLimitError("expected_distortion_exhaustive: n = " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(limits.max_block_bits));
    check_info_cap(g, limits);

    // Multi-source BFS over the hypercube: distance transform from the
    // codeword set gives min-distance for every source in O(2^n * n).
    const std::size_t space = std::size_t{1} << n;
    std::vector<std::uint8_t> dist(space, 0xff);
    std::vector<std::uint32_t> frontier, next;

    const CodewordScan scan(g);
    scan.run([&](std::uint64_t, const std::uint64_t* x) {
        const std::uint64_t idx = x[0];
        if (dist[idx] == 0xff) {
            dist[idx] = 0;
            frontier.push_back(static_cast<std::uint32_t>(idx));
        }
    });

    std::uint64_t total = 0;
    for (std::uint8_t level = 0; !frontier.empty(); ++level) {
        total += static_cast<std::uint64_t>(level) * frontier.size();
        next.clear();
        for (std::uint32_t v : frontier) {
            for (std::size_t b = 0; b < n; ++b) {
                const std::uint32_t u = v ^ (std::uint32_t{1} << b);
                if (dist[u] == 0xff) {
                    dist[u] = static_cast<std::uint8_t>(level + 1);
                    next.push_back(u);
                }
            }
        }
        frontier.swap(next);
    }
    return Rational(BigInt(total), BigInt(space) * n);
}

}  // namespace ldgm
