#include "ldgm/hamming.hpp"

#include <numeric>

namespace ldgm {

std::uint64_t ball_size(std::size_t n, std::uint32_t radius_bits) {
    if (n > 63) throw ResourceLimitError("ball_size: n > 63");
    std::uint64_t total = 0, binom = 1;
    for (std::uint32_t k = 0; k <= radius_bits && k <= n; ++k) {
        total += binom;
        binom = binom * (n - k) / (k + 1);
    }
    return total;
}

namespace {

// Visits weight classes 0..r; within a class, flip-position combinations in
// lexicographic order.
template <typename OnCombination>
void for_each_flip_set(std::size_t n, std::uint32_t r, OnCombination&& on_combination) {
    std::vector<std::size_t> positions;
    for (std::uint32_t k = 0; k <= r && k <= n; ++k) {
        positions.resize(k);
        std::iota(positions.begin(), positions.end(), std::size_t{0});
        for (;;) {
            on_combination(positions);
            if (k == 0) break;
            // next lexicographic combination of k positions out of n
            std::size_t i = k;
            while (i > 0 && positions[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++positions[i - 1];
            for (std::size_t j = i; j < k; ++j) positions[j] = positions[j - 1] + 1;
        }
    }
}

}  // namespace

std::vector<BitVector> enumerate_ball(const BitVector& center, HammingRadius r) {
    const std::size_t n = center.length();
    if (r.radius_bits > n) throw DomainError("enumerate_ball: radius exceeds length");
    std::vector<BitVector> out;
    if (n <= 63) out.reserve(ball_size(n, r.radius_bits));
    for_each_flip_set(n, r.radius_bits, [&](const std::vector<std::size_t>& flips) {
        BitVector v = center;
        for (std::size_t p : flips) v.flip(p);
        out.push_back(std::move(v));
    });
    return out;
}

void for_each_ball_offset(std::size_t n, std::uint32_t radius_bits,
                          const std::function<void(std::uint64_t)>& visit) {
    if (n > 64) throw ResourceLimitError("for_each_ball_offset: n > 64");
    if (radius_bits > n) throw DomainError("for_each_ball_offset: radius exceeds length");
    for_each_flip_set(n, radius_bits, [&](const std::vector<std::size_t>& flips) {
        std::uint64_t mask = 0;
        for (std::size_t p : flips) mask |= std::uint64_t{1} << p;
        visit(mask);
    });
}

}  // namespace ldgm
