#include "ldgm/overlap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "ldgm/errors.hpp"
#include "ldgm/gray_scan.hpp"

namespace ldgm {

namespace {

void check_caps(const GeneratorMatrix& g, const OverlapCaps& caps, bool dense_block) {
    if (g.info_bits() > caps.max_info_bits)
        throw ResourceLimitError("overlap: m = " + std::to_string(g.info_bits()) +
                                 " exceeds cap " + std::to_string(caps.max_info_bits));
    // the dense passes allocate 2^n counters and index by packed source
    if (dense_block && (g.checks() > caps.max_block_bits || g.checks() > 30))
        throw ResourceLimitError("overlap: n = " + std::to_string(g.checks()) +
                                 " exceeds cap " + std::to_string(caps.max_block_bits));
}

std::vector<std::uint64_t> pack(const BitVector& v) {
    return {v.words().begin(), v.words().end()};
}

// Dense N array over all 2^n sources: scatter each codeword over the ball
// around it. N[u] = #{z : Gz in B(u; r)}.
std::vector<std::uint32_t> dense_N(const GeneratorMatrix& g, HammingRadius r) {
    const std::size_t n = g.checks();
    std::vector<std::uint32_t> N(std::size_t{1} << n, 0);
    std::vector<std::uint64_t> offsets;
    for_each_ball_offset(n, r.radius_bits, [&](std::uint64_t off) { offsets.push_back(off); });
    const CodewordScan scan(g);
    scan.run([&](std::uint64_t, const std::uint64_t* x) {
        const std::uint64_t cw = x[0];
        for (std::uint64_t off : offsets) ++N[cw ^ off];
    });
    return N;
}

}  // namespace

std::uint64_t count_N(const GeneratorMatrix& g, const BitVector& u, HammingRadius r,
                      const OverlapCaps& caps) {
    if (u.length() != g.checks()) throw DimensionError("count_N: u length != n");
    check_caps(g, caps, false);
    const CodewordScan scan(g);
    const auto uw = pack(u);
    const std::size_t words = scan.words_per_codeword();
    std::uint64_t count = 0;
    scan.run([&](std::uint64_t, const std::uint64_t* x) {
        if (distance_words(x, uw.data(), words) <= r.radius_bits) ++count;
    });
    return count;
}

std::uint64_t count_M(const GeneratorMatrix& g, const BitVector& u, HammingRadius r,
                      const OverlapCaps& caps) {
    if (u.length() != g.checks()) throw DimensionError("count_M: u length != n");
    check_caps(g, caps, false);
    const CodewordScan scan(g);
    const auto uw = pack(u);
    const std::size_t words = scan.words_per_codeword();
    std::uint64_t count = 0;
    scan.run([&](std::uint64_t, const std::uint64_t* x) {
        std::size_t origin_dist = 0;
        for (std::size_t w = 0; w < words; ++w) origin_dist += std::popcount(x[w]);
        if (origin_dist <= r.radius_bits &&
            distance_words(x, uw.data(), words) <= r.radius_bits)
            ++count;
    });
    return count;
}

std::uint64_t count_W(const GeneratorMatrix& g, HammingRadius r, const OverlapCaps& caps) {
    check_caps(g, caps, false);
    const std::size_t n = g.checks();
    const CodewordScan scan(g);
    const std::size_t words = scan.words_per_codeword();
    // Complement mask: bits r..n-1 (the fixed checks) must all be zero.
    BitVector fixed_mask(n);
    for (std::size_t i = r.radius_bits; i < n; ++i) fixed_mask.set(i, true);
    const auto mask = pack(fixed_mask);
    std::uint64_t count = 0;
    scan.run([&](std::uint64_t, const std::uint64_t* x) {
        for (std::size_t w = 0; w < words; ++w)
            if (x[w] & mask[w]) return;
        ++count;
    });
    return count;
}

BitVector canonical_uk(std::size_t n, std::uint32_t k) {
    if (k > n) throw DomainError("canonical_uk: k > n");
    BitVector u(n);
    for (std::uint32_t i = 0; i < k; ++i) u.set(i, true);
    return u;
}

OverlapReport overlap_report(const GeneratorMatrix& g, HammingRadius r,
                             const OverlapCaps& caps) {
    check_caps(g, caps, true);
    const std::size_t n = g.checks();
    const std::size_t m = g.info_bits();
    if (r.radius_bits > n) throw DomainError("overlap_report: radius exceeds n");

    const auto N = dense_N(g, r);

    OverlapReport report;
    report.radius = r;

    // Ball members around the origin, in enumeration order.
    std::vector<std::uint64_t> ball;
    for_each_ball_offset(n, r.radius_bits, [&](std::uint64_t off) { ball.push_back(off); });

    std::map<std::uint64_t, std::uint64_t> count_by_N;
    report.N_by_u.reserve(ball.size());
    for (std::uint64_t u : ball) {
        const std::uint64_t nu = N[u];
        report.N_by_u.emplace_back(BitVector::from_index(n, u), nu);
        ++count_by_N[nu];
    }

    std::uint64_t included = 0;
    Rational inv_sum = 0;
    for (const auto& [value, count] : count_by_N) {
        if (value == 0) {
            report.excluded_count += count;
            continue;
        }
        included += count;
        inv_sum += make_rational(count, value);
    }
    report.excluded_mass = make_rational(report.excluded_count, ball.size());
    report.q = inv_sum / Rational(pow2(static_cast<unsigned>(n)));
    report.mean_inv_N = (included == 0) ? Rational(0) : inv_sum / Rational(included);
    report.excess_coefficient =
        (included == 0) ? 0.0 : log2_rational(report.mean_inv_N) / static_cast<double>(n);

    // p_n route (i): the PMF normalization gives p_n = 2^m q.
    const Rational p_from_identity = Rational(pow2(static_cast<unsigned>(m))) * report.q;
    // p_n route (ii): direct count of sources whose ball contains a codeword.
    std::uint64_t covered = 0;
    for (std::uint32_t nu : N)
        if (nu > 0) ++covered;
    const Rational p_direct = make_rational(covered, std::uint64_t{1} << n);
    if (p_from_identity != p_direct)
        throw std::logic_error("overlap_report: p_n cross-check failed (identity " +
                               to_string(p_from_identity) + " vs direct " +
                               to_string(p_direct) + ")");
    report.p_n = p_direct;

    report.W = count_W(g, r, caps);
    report.M_by_k.resize(r.radius_bits + 1);
    for (std::uint32_t k = 0; k <= r.radius_bits; ++k)
        report.M_by_k[k] = count_M(g, canonical_uk(n, k), r, caps);
    return report;
}

ZhatPmf pmf_of_zhat(const GeneratorMatrix& g, HammingRadius r, const OverlapCaps& caps) {
    check_caps(g, caps, true);
    const std::size_t n = g.checks();
    const std::size_t m = g.info_bits();
    if (m > caps.max_pmf_info_bits)
        throw ResourceLimitError("pmf_of_zhat: m = " + std::to_string(m) + " exceeds cap " +
                                 std::to_string(caps.max_pmf_info_bits));

    const auto N = dense_N(g, r);
    std::vector<std::uint64_t> offsets;
    for_each_ball_offset(n, r.radius_bits, [&](std::uint64_t off) { offsets.push_back(off); });

    ZhatPmf result;
    result.z_star_index = (std::uint64_t{1} << m) - 1;  // all-ones sentinel
    result.pmf.assign(std::uint64_t{1} << m, Rational(0));
    const Rational source_mass = Rational(1) / Rational(pow2(static_cast<unsigned>(n)));

    // Each source s with N(s) >= 1 spreads mass 2^-n uniformly over its
    // candidate set; P[z] = 2^-n * sum over sources in the ball around Gz of
    // 1/N(s). Group candidate sources by N value to keep rational work low.
    const CodewordScan scan(g);
    std::map<std::uint64_t, std::uint64_t> histogram;
    scan.run([&](std::uint64_t z, const std::uint64_t* x) {
        histogram.clear();
        const std::uint64_t cw = x[0];
        for (std::uint64_t off : offsets) ++histogram[N[cw ^ off]];
        Rational mass = 0;
        for (const auto& [value, count] : histogram)
            if (value > 0) mass += make_rational(count, value);
        result.pmf[z] += mass * source_mass;
    });

    // Failing sources contribute their whole mass to z*.
    std::uint64_t failures = 0;
    for (std::uint32_t nu : N)
        if (nu == 0) ++failures;
    result.pmf[result.z_star_index] += Rational(failures) * source_mass;

    // The prediction from the overlap quantities, for comparison.
    std::map<std::uint64_t, std::uint64_t> count_by_N;
    for (std::uint64_t off : offsets) ++count_by_N[N[off]];
    Rational inv_sum = 0;
    for (const auto& [value, count] : count_by_N)
        if (value > 0) inv_sum += make_rational(count, value);
    result.q_predicted = inv_sum * source_mass;
    result.p_n = make_rational((std::uint64_t{1} << n) - failures, std::uint64_t{1} << n);
    return result;
}

Rational exact_dball_expected_distortion(const GeneratorMatrix& g, HammingRadius r,
                                         const OverlapCaps& caps) {
    check_caps(g, caps, true);
    const std::size_t n = g.checks();
    const std::size_t space = std::size_t{1} << n;

    // S[u] = total candidate distance around source u; N[u] as usual.
    std::vector<std::uint32_t> N(space, 0);
    std::vector<std::uint64_t> S(space, 0);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> offsets;  // (mask, weight)
    for_each_ball_offset(n, r.radius_bits, [&](std::uint64_t off) {
        offsets.emplace_back(off, static_cast<std::uint32_t>(std::popcount(off)));
    });
    const CodewordScan scan(g);
    scan.run([&](std::uint64_t, const std::uint64_t* x) {
        const std::uint64_t cw = x[0];
        for (const auto& [off, weight] : offsets) {
            ++N[cw ^ off];
            S[cw ^ off] += weight;
        }
    });

    // Success part: sum over sources of S/N, grouped by N value.
    std::map<std::uint32_t, std::uint64_t> dist_sum_by_N;
    std::uint64_t fail_distance = 0;
    const BitVector z_star = BitVector::ones(g.info_bits());
    const std::uint64_t star_cw = g.encode(z_star).to_index();
    for (std::size_t u = 0; u < space; ++u) {
        if (N[u] > 0)
            dist_sum_by_N[N[u]] += S[u];
        else
            fail_distance += std::popcount(star_cw ^ u);
    }
    Rational total = Rational(fail_distance);
    for (const auto& [value, dist_sum] : dist_sum_by_N)
        total += make_rational(dist_sum, value);
    return total / (Rational(pow2(static_cast<unsigned>(n))) * n);
}

}  // namespace ldgm
