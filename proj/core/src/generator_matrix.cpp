#include "ldgm/generator_matrix.hpp"

#include <fstream>
#include <sstream>

#include "ldgm/errors.hpp"

namespace ldgm {

GeneratorMatrix::GeneratorMatrix(std::size_t n, std::size_t m,
                                 std::vector<std::vector<std::uint32_t>> check_adjacency)
    : n_(n), m_(m), rows_(std::move(check_adjacency)) {
    if (n_ < 1 || m_ < 1) throw ValidationError("GeneratorMatrix: n and m must be >= 1");
    if (rows_.size() != n_)
        throw DimensionError("GeneratorMatrix: adjacency row count != n");
    for (const auto& row : rows_)
        for (std::uint32_t bit : row)
            if (bit >= m_) throw DimensionError("GeneratorMatrix: bit index out of range");
}

std::vector<std::vector<std::uint32_t>> GeneratorMatrix::bit_adjacency() const {
    std::vector<std::vector<std::uint32_t>> cols(m_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::uint32_t bit : rows_[i]) cols[bit].push_back(static_cast<std::uint32_t>(i));
    return cols;
}

BitVector GeneratorMatrix::column(std::size_t bit) const {
    BitVector col(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        std::size_t multiplicity = 0;
        for (std::uint32_t b : rows_[i])
            if (b == bit) ++multiplicity;
        if (multiplicity & 1) col.set(i, true);
    }
    return col;
}

BitVector GeneratorMatrix::encode(const BitVector& z) const {
    if (z.length() != m_) throw DimensionError("encode: z length != m");
    BitVector x(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        bool parity = false;
        for (std::uint32_t bit : rows_[i]) parity ^= z.get(bit);
        x.set(i, parity);
    }
    return x;
}

void save_ldgm(std::ostream& out, const GeneratorMatrix& g, const std::string& comment) {
    out << "LDGM v1\n";
    if (!comment.empty()) out << "# " << comment << "\n";
    out << g.checks() << ' ' << g.info_bits() << '\n';
    for (std::size_t i = 0; i < g.checks(); ++i) {
        const auto& row = g.check_neighbors(i);
        out << row.size();
        for (std::uint32_t bit : row) out << ' ' << bit;
        out << '\n';
    }
    if (!out) throw IoError("save_ldgm: write failed");
}

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        return line;
    }
    throw IoError("load_ldgm: unexpected end of file");
}

}  // namespace

GeneratorMatrix load_ldgm(std::istream& in) {
    std::string magic;
    if (!std::getline(in, magic) || magic != "LDGM v1")
        throw IoError("load_ldgm: missing 'LDGM v1' header");
    std::istringstream dims(next_content_line(in));
    std::size_t n = 0, m = 0;
    if (!(dims >> n >> m)) throw IoError("load_ldgm: bad dimension line");
    std::vector<std::vector<std::uint32_t>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::istringstream row_in(next_content_line(in));
        std::size_t degree = 0;
        if (!(row_in >> degree)) throw IoError("load_ldgm: bad check line");
        rows[i].resize(degree);
        for (std::size_t k = 0; k < degree; ++k)
            if (!(row_in >> rows[i][k])) throw IoError("load_ldgm: truncated check line");
    }
    return GeneratorMatrix(n, m, std::move(rows));
}

void save_ldgm_file(const std::string& path, const GeneratorMatrix& g,
                    const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw IoError("save_ldgm_file: cannot open " + path);
    save_ldgm(out, g, comment);
}

GeneratorMatrix load_ldgm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("load_ldgm_file: cannot open " + path);
    return load_ldgm(in);
}

}  // namespace ldgm
