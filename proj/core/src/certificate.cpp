#include "ldgm/certificate.hpp"

namespace ldgm {

CertificateResult free_bits_certificate(const GeneratorMatrix& g, HammingRadius r,
                                        AdjacencyRule rule) {
    const std::size_t n = g.checks();
    const std::size_t m = g.info_bits();
    if (r.radius_bits > n) throw DomainError("free_bits_certificate: radius exceeds n");

    CertificateResult result;
    result.fixed_checks.reserve(n - r.radius_bits);
    std::vector<std::uint8_t> fixed(m, 0);

    for (std::size_t i = r.radius_bits; i < n; ++i) {
        result.fixed_checks.push_back(static_cast<std::uint32_t>(i));
        if (rule == AdjacencyRule::SelectedAtLeastOnce) {
            for (std::uint32_t bit : g.check_neighbors(i)) fixed[bit] = 1;
        } else {
            const auto& row = g.check_neighbors(i);
            for (std::uint32_t bit : row) {
                std::size_t multiplicity = 0;
                for (std::uint32_t other : row)
                    if (other == bit) ++multiplicity;
                if (multiplicity & 1) fixed[bit] = 1;
            }
        }
    }

    for (std::uint32_t b = 0; b < m; ++b)
        (fixed[b] ? result.fixed_bits : result.free_bits).push_back(b);
    result.free_count = result.free_bits.size();
    return result;
}

bool certificate_vs_W_check(const GeneratorMatrix& g, HammingRadius r,
                            const OverlapCaps& caps) {
    const CertificateResult cert = free_bits_certificate(g, r);
    const std::uint64_t w = count_W(g, r, caps);
    if (cert.free_count >= 64) return false;  // certificate claims more than countable
    return (std::uint64_t{1} << cert.free_count) <= w;
}

}  // namespace ldgm
