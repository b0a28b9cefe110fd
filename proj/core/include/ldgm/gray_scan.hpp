#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "ldgm/errors.hpp"
#include "ldgm/generator_matrix.hpp"

namespace ldgm {

// Exhaustive codeword scan in Gray-code order over the information sequence.
// Consecutive z differ in one bit, so each step is a single column xor:
// that is what makes full 2^m scans tractable up to m around 26.
//
// The visitor sees every (z, x=Gz) pair exactly once, z packed as an
// integer. The scan order is fixed (standard reflected Gray code), so any
// "first z achieving X" reduction is deterministic.
class CodewordScan {
  public:
    explicit CodewordScan(const GeneratorMatrix& g)
        : m_(g.info_bits()), words_((g.checks() + 63) / 64) {
        if (m_ >= 63) throw ResourceLimitError("CodewordScan: m too large to enumerate");
        cols_.resize(m_ * words_, 0);
        for (std::size_t j = 0; j < m_; ++j) {
            const BitVector col = g.column(j);
            for (std::size_t w = 0; w < words_; ++w) cols_[j * words_ + w] = col.words()[w];
        }
    }

    std::size_t words_per_codeword() const { return words_; }
    std::size_t info_bits() const { return m_; }

    template <typename Visitor>
    void run(Visitor&& visit) const {
        std::vector<std::uint64_t> x(words_, 0);
        const std::uint64_t total = std::uint64_t{1} << m_;
        std::uint64_t z = 0;
        for (std::uint64_t i = 0;; ++i) {
            visit(z, x.data());
            if (i + 1 == total) break;
            const unsigned j = std::countr_zero(i + 1);
            const std::uint64_t* col = cols_.data() + j * words_;
            for (std::size_t w = 0; w < words_; ++w) x[w] ^= col[w];
            z ^= std::uint64_t{1} << j;
        }
    }

  private:
    std::size_t m_;
    std::size_t words_;
    std::vector<std::uint64_t> cols_;
};

inline std::size_t distance_words(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t words) {
    std::size_t count = 0;
    for (std::size_t w = 0; w < words; ++w) count += std::popcount(a[w] ^ b[w]);
    return count;
}

}  // namespace ldgm
