#include "ldgm/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ldgm/errors.hpp"

namespace ldgm {

double binary_entropy(double D) {
    if (D < 0.0 || D > 1.0) throw DomainError("binary_entropy: D outside [0,1]");
    if (D == 0.0 || D == 1.0) return 0.0;
    return -D * std::log2(D) - (1.0 - D) * std::log2(1.0 - D);
}

double shannon_rate(double D) {
    if (D < 0.0 || D > 0.5) throw DomainError("shannon_rate: D outside [0,1/2]");
    return 1.0 - binary_entropy(D);
}

double excess_rate_threshold(double D, double excess_coefficient) {
    if (excess_coefficient > 0.0)
        throw DomainError("excess_rate_threshold: excess coefficient must be <= 0");
    return 1.0 - binary_entropy(D) - excess_coefficient;
}

double beta_check_regular_exact(std::uint64_t n, std::uint64_t m, std::uint32_t d_c,
                                double D) {
    if (m < 2) throw DomainError("beta_check_regular_exact: m must be >= 2");
    if (D < 0.0 || D > 1.0) throw DomainError("beta_check_regular_exact: D outside [0,1]");
    const double exponent = (1.0 - D) * static_cast<double>(n) * d_c;
    return std::pow(1.0 - 1.0 / static_cast<double>(m), exponent);
}

double beta_check_regular_limit(double R, std::uint32_t d_c, double D) {
    if (R <= 0.0) throw DomainError("beta_check_regular_limit: R must be positive");
    if (D < 0.0 || D > 1.0) throw DomainError("beta_check_regular_limit: D outside [0,1]");
    return std::exp(-(1.0 - D) * d_c / R);
}

double beta_bit_check_regular(std::uint32_t d_v, double D) {
    if (d_v < 1) throw DomainError("beta_bit_check_regular: d_v must be >= 1");
    if (D < 0.0 || D > 0.5) throw DomainError("beta_bit_check_regular: D outside [0,1/2]");
    double factorial = 1.0;
    for (std::uint32_t i = 2; i <= d_v; ++i) factorial *= i;
    return factorial / 2.0 * std::pow(D / d_v, static_cast<double>(d_v));
}

Rational q_free_exact(std::uint32_t n, std::uint32_t d_c, std::uint32_t d_v, double D) {
    const std::uint64_t total_stubs = std::uint64_t{n} * d_c;
    if (total_stubs < d_v) throw DomainError("q_free_exact: n d_c < d_v");
    const double free_real = D * static_cast<double>(total_stubs);
    const double snapped = std::round(free_real);
    if (std::abs(free_real - snapped) > 1e-9)
        throw DomainError("q_free_exact: D d_c n is not an integer stub count");
    const auto free_stubs = static_cast<unsigned>(snapped);

    // d_v! * binom(free, d_v) * (total - d_v)! / total!
    const BigInt numerator = factorial(d_v) *
                             binomial(free_stubs, d_v) *
                             factorial(static_cast<unsigned>(total_stubs) - d_v);
    const BigInt denominator = factorial(static_cast<unsigned>(total_stubs));
    return Rational(numerator, denominator);
}

double g_check_regular(double delta, double beta) {
    if (beta <= 0.0 || beta >= 1.0) throw DomainError("g_check_regular: beta outside (0,1)");
    if (delta < 0.0 || delta > 1.0) throw DomainError("g_check_regular: delta outside [0,1]");
    return kLog2E * ((1.0 - beta) + delta * beta) *
           std::log1p(delta * beta / (1.0 - beta));
}

double kl_bernoulli(double a, double b) {
    if (a < 0.0 || a > 1.0 || b <= 0.0 || b >= 1.0)
        throw DomainError("kl_bernoulli: arguments outside domain");
    double kl = 0.0;
    if (a > 0.0) kl += a * std::log(a / b);
    if (a < 1.0) kl += (1.0 - a) * std::log((1.0 - a) / (1.0 - b));
    return kl;
}

bool kl_bernoulli_lower_bound_check(double delta, double beta) {
    const double kl = kl_bernoulli((1.0 - delta) * beta, beta);
    const double bound = ((1.0 - beta) + delta * beta) *
                         std::log1p(delta * beta / (1.0 - beta));
    return kl >= bound;
}

double g_bit_check_regular(double delta, double beta, std::uint32_t d_v, double R,
                           double D) {
    if (R <= 0.0 || D >= 1.0 || d_v < 1)
        throw DomainError("g_bit_check_regular: arguments outside domain");
    return kLog2E * delta * delta * beta * beta /
           (2.0 * static_cast<double>(d_v) * d_v * R * (1.0 - D));
}

ExcessResult proposition1_excess(double alpha, const std::function<double(double)>& f) {
    ExcessResult result;
    if (alpha <= 0.0) {
        result.excess = 0.0;
        result.delta_star = 0.0;
        result.at_boundary = true;
        return result;
    }
    // The max is over the open interval (0,1); clip to stay off the poles.
    constexpr double kLo = 1e-12;
    constexpr double kHi = 1.0 - 1e-12;
    auto arm_min = [&](double delta) { return std::min(f(delta), (1.0 - delta) * alpha); };
    auto crossing = [&](double delta) { return f(delta) - (1.0 - delta) * alpha; };

    if (crossing(kLo) >= 0.0) {
        // f dominates everywhere: the decreasing arm is binding, best at kLo.
        result.excess = (1.0 - kLo) * alpha;
        result.delta_star = kLo;
        result.at_boundary = true;
        return result;
    }
    if (crossing(kHi) <= 0.0) {
        // f never catches up: f is binding, best at kHi since f increases.
        result.excess = f(kHi);
        result.delta_star = kHi;
        result.at_boundary = true;
        return result;
    }

    double lo = kLo, hi = kHi;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (crossing(mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    result.delta_star = 0.5 * (lo + hi);
    result.excess = arm_min(result.delta_star);
    result.at_boundary = false;

    // Coarse-grid safety net in case f is not perfectly monotone numerically.
    constexpr int kGrid = 1000;
    for (int k = 1; k < kGrid; ++k) {
        const double delta = static_cast<double>(k) / kGrid;
        const double value = arm_min(delta);
        if (value > result.excess) {
            result.excess = value;
            result.delta_star = delta;
        }
    }
    return result;
}

namespace {

// Shared solver skeleton: smallest R in [shannon, 1] with
// R (1 - E(R)) >= shannon, for an excess factor E(R) in [0,1) that does not
// increase in R. Endpoint signs are verified before bisecting, and the
// result is reported through the fixed point R = shannon / (1 - E(R)) so the
// gap to the Shannon rate never cancels away.
template <typename ExcessFn>
BoundResult solve_min_rate(double D, ExcessFn&& excess_at, double tol,
                           const char* what) {
    if (D <= 0.0 || D >= 0.5) throw DomainError(std::string(what) + ": D outside (0, 1/2)");
    if (tol <= 0.0) throw DomainError(std::string(what) + ": tol must be positive");
    const double r_shannon = shannon_rate(D);

    auto lhs_minus_rhs = [&](double R) { return R * (1.0 - excess_at(R)) - r_shannon; };

    const double f_lo = lhs_minus_rhs(r_shannon);
    const double f_hi = lhs_minus_rhs(1.0);
    if (f_lo > 0.0 || f_hi < 0.0)
        throw BracketError(std::string(what) + ": no sign change on [1-H(D), 1] (f(lo)=" +
                           std::to_string(f_lo) + ", f(hi)=" + std::to_string(f_hi) + ")");

    double lo = r_shannon, hi = 1.0;
    while (hi - lo > tol * 1e-3) {
        const double mid = 0.5 * (lo + hi);
        if (lhs_minus_rhs(mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
    }

    // Fixed-point polish: R = r_shannon / (1 - E(R)).
    double rate = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) rate = r_shannon / (1.0 - excess_at(rate));

    const double excess_factor = excess_at(rate);
    BoundResult result;
    result.D = D;
    result.shannon_rate = r_shannon;
    result.min_rate = r_shannon / (1.0 - excess_factor);
    result.excess_gap = r_shannon * excess_factor / (1.0 - excess_factor);
    result.excess_percent = 100.0 * excess_factor / (1.0 - excess_factor);
    result.residual = std::abs(lhs_minus_rhs(result.min_rate));
    return result;
}

}  // namespace

BoundResult min_rate_check_regular(double D, std::uint32_t d_c, double tol) {
    if (d_c < 1) throw DomainError("min_rate_check_regular: d_c must be >= 1");
    auto excess_at = [&](double R) {
        return 0.5 * std::exp(-(1.0 - D) * d_c / R);
    };
    BoundResult result = solve_min_rate(D, excess_at, tol, "min_rate_check_regular");
    result.d_c = d_c;
    result.delta_star = std::numeric_limits<double>::quiet_NaN();
    return result;
}

BoundResult min_rate_bit_check_regular(double D, std::uint32_t d_v, double tol) {
    if (d_v < 1) throw DomainError("min_rate_bit_check_regular: d_v must be >= 1");
    const double beta = beta_bit_check_regular(d_v, D);
    ExcessResult last_excess;
    auto excess_at = [&](double R) {
        last_excess = proposition1_excess(
            beta, [&](double delta) { return g_bit_check_regular(delta, beta, d_v, R, D); });
        return last_excess.excess;
    };
    BoundResult result = solve_min_rate(D, excess_at, tol, "min_rate_bit_check_regular");
    result.d_v = d_v;
    excess_at(result.min_rate);
    result.delta_star = last_excess.delta_star;
    result.delta_at_boundary = last_excess.at_boundary;
    return result;
}

double tail_bound_check_regular(std::uint64_t m, double beta, double delta) {
    if (beta <= 0.0 || beta >= 1.0 || delta < 0.0 || delta > 1.0)
        throw DomainError("tail_bound_check_regular: arguments outside domain");
    const double exponent = static_cast<double>(m) * ((1.0 - beta) + delta * beta) *
                            std::log1p(delta * beta / (1.0 - beta));
    return 2.0 * std::exp(-exponent);
}

double tail_bound_bit_check_regular(std::uint64_t m, double beta, double delta,
                                    std::uint32_t d_v, double R, double D) {
    if (beta < 0.0 || delta < 0.0 || delta > 1.0 || R <= 0.0 || D >= 1.0 || d_v < 1)
        throw DomainError("tail_bound_bit_check_regular: arguments outside domain");
    const double exponent = static_cast<double>(m) * delta * delta * beta * beta /
                            (2.0 * static_cast<double>(d_v) * d_v * R * (1.0 - D));
    return 2.0 * std::exp(-exponent);
}

DominanceReport verify_g_dominance(std::size_t grid_points) {
    DominanceReport report;
    report.min_margin = std::numeric_limits<double>::infinity();
    constexpr double kLo = 1e-9;
    const double hi = 1.0 - 1e-9;
    for (std::size_t k = 0; k < grid_points; ++k) {
        const double beta =
            kLo + (hi - kLo) * static_cast<double>(k) / static_cast<double>(grid_points - 1);
        const double margin = g_check_regular(0.5, beta) - 0.5 * beta;
        if (margin < report.min_margin) {
            report.min_margin = margin;
            report.argmin_beta = beta;
        }
    }
    // As beta -> 0: g(0.5; beta)/beta -> log2(e)/2, so margin/beta ->
    // log2(e)/2 - 1/2 > 0. As beta -> 1 the log term diverges, so the margin
    // is eventually positive there too.
    report.small_beta_slope = kLog2E / 2.0 - 0.5;
    report.holds = report.min_margin > 0.0 && report.small_beta_slope > 0.0;
    return report;
}

}  // namespace ldgm
