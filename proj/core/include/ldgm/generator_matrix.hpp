#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ldgm/bit_vector.hpp"
#include "ldgm/rational.hpp"

namespace ldgm {

// Sparse bipartite check<->bit structure of an LDGM code. Row i lists the
// information bits feeding check i, in sampling order. The list is a
// multiset: sampling with replacement may select a bit twice, and the two
// selections cancel under GF(2) encoding. Consumers that need "connected at
// least once" adjacency (the graph certificate) use the set view instead.
class GeneratorMatrix {
  public:
    GeneratorMatrix(std::size_t n, std::size_t m,
                    std::vector<std::vector<std::uint32_t>> check_adjacency);

    std::size_t checks() const { return n_; }      // n, also the block length
    std::size_t info_bits() const { return m_; }   // m

    Rational rate() const { return make_rational(m_, n_); }

    const std::vector<std::uint32_t>& check_neighbors(std::size_t check) const {
        return rows_[check];
    }
    const std::vector<std::vector<std::uint32_t>>& check_adjacency() const { return rows_; }

    // Bit -> checks view, consistent with the row view (same edge multiset).
    std::vector<std::vector<std::uint32_t>> bit_adjacency() const;

    // GF(2) column of bit j: checks where j appears an odd number of times.
    BitVector column(std::size_t bit) const;

    // x = Gz over GF(2); a bit listed twice by one check cancels.
    BitVector encode(const BitVector& z) const;

  private:
    std::size_t n_ = 0, m_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_;
};

inline BitVector encode_codeword(const GeneratorMatrix& g, const BitVector& z) {
    return g.encode(z);
}

// "LDGM v1" text format:
//   line 1:  LDGM v1
//   line 2:  n m
//   n lines: d i_1 i_2 ... i_d   (check degree, 0-based bit indices, sampling order)
// Lines starting with '#' after line 1 are comments and are skipped on read;
// round-trips are lossless including adjacency order.
void save_ldgm(std::ostream& out, const GeneratorMatrix& g,
               const std::string& comment = "");
GeneratorMatrix load_ldgm(std::istream& in);

void save_ldgm_file(const std::string& path, const GeneratorMatrix& g,
                    const std::string& comment = "");
GeneratorMatrix load_ldgm_file(const std::string& path);

}  // namespace ldgm
