#pragma once

#include <cstdint>
#include <functional>

#include "ldgm/rational.hpp"

namespace ldgm {

// Closed-form and implicit rate bounds. Everything here is in bits
// (base-2); the concentration exponents arrive in nats and are converted in
// exactly one place (kLog2E) to avoid double conversions.
inline constexpr double kLog2E = 1.4426950408889634074;

// H(D) = -D log2 D - (1-D) log2(1-D), with 0 log 0 = 0.
double binary_entropy(double D);

// Shannon rate-distortion for the symmetric Bernoulli source: 1 - H(D).
double shannon_rate(double D);

// Rate threshold from a measured excess coefficient (the per-check log of
// the ball-average of 1/N, always <= 0): any rate strictly below
// 1 - H(D) - coefficient is infeasible for that code.
double excess_rate_threshold(double D, double excess_coefficient);

// Per-bit freeness probability for the check-regular ensemble,
// (1 - 1/m)^((1-D) n d_c), exact at finite n, and its n -> infinity limit
// exp(-(1-D) d_c / R).
double beta_check_regular_exact(std::uint64_t n, std::uint64_t m, std::uint32_t d_c,
                                double D);
double beta_check_regular_limit(double R, std::uint32_t d_c, double D);

// Asymptotic freeness floor for the bit-check-regular ensemble,
// (d_v!/2) (D/d_v)^d_v.
double beta_bit_check_regular(std::uint32_t d_v, double D);

// Exact finite-n freeness probability for the bit-check-regular ensemble:
// the hypergeometric chance that all d_v stubs of one bit land on stubs of
// free checks. Requires D*d_c*n to be an integer (the free-stub count).
Rational q_free_exact(std::uint32_t n, std::uint32_t d_c, std::uint32_t d_v, double D);

// Concentration exponent rate (bits per information bit) for the
// check-regular ensemble: log2(e) [(1-b)+db] ln(1 + db/(1-b)).
double g_check_regular(double delta, double beta);

// Bernoulli KL divergence KL(a || b) in nats.
double kl_bernoulli(double a, double b);

// Whether KL((1-d)b || b) >= [(1-b)+db] ln(1 + db/(1-b)) holds at the given
// point. (The two differ by (1-d)b ln(1-d), which is negative, so this
// generally fails; the check exists to measure that gap, not to assume it.)
bool kl_bernoulli_lower_bound_check(double delta, double beta);

// Quadratic concentration exponent rate for the bit-check-regular ensemble:
// log2(e) d^2 b^2 / (2 d_v^2 R (1-D)).
double g_bit_check_regular(double delta, double beta, std::uint32_t d_v, double R,
                           double D);

// max over delta in (0,1) of min{f(delta), (1-delta)*alpha} for an
// increasing f and alpha > 0. Grid scan plus bisection on the crossing;
// optima attained at the clipped boundary are flagged.
struct ExcessResult {
    double excess = 0.0;
    double delta_star = 0.0;
    bool at_boundary = false;
};
ExcessResult proposition1_excess(double alpha, const std::function<double(double)>& f);

struct BoundResult {
    double D = 0.0;
    std::uint32_t d_c = 0;  // 0 when not applicable
    std::uint32_t d_v = 0;
    double shannon_rate = 0.0;
    double min_rate = 0.0;
    // min_rate - shannon_rate via the identity gap = R_sh * E / (1 - E),
    // where E is the excess factor at the solution. This form cannot cancel,
    // so it stays strictly positive even when the gap is far below the
    // floating-point resolution of min_rate itself.
    double excess_gap = 0.0;
    double excess_percent = 0.0;
    double delta_star = 0.0;        // NaN when the bound has no delta
    bool delta_at_boundary = false;
    double residual = 0.0;          // |LHS - RHS| at min_rate
};

// Smallest R in [1-H(D), 1] with R [1 - (1/2) exp(-(1-D) d_c / R)] >= 1-H(D)
// (check-regular ensemble bound). Bisection with endpoint sign verification;
// a missing sign change raises BracketError.
BoundResult min_rate_check_regular(double D, std::uint32_t d_c, double tol = 1e-9);

// Smallest R in [1-H(D), 1] with
// R [1 - max_delta min{g(delta,beta), (1-delta) beta}] >= 1 - H(D)
// (bit-check-regular ensemble bound); beta from d_v and D, g carries R.
BoundResult min_rate_bit_check_regular(double D, std::uint32_t d_v, double tol = 1e-9);

// Upper bounds on P[F <= (1-delta) E F], unclamped as stated; callers clamp
// to 1 for reporting.
double tail_bound_check_regular(std::uint64_t m, double beta, double delta);
double tail_bound_bit_check_regular(std::uint64_t m, double beta, double delta,
                                    std::uint32_t d_v, double R, double D);

// Numeric sweep of the claim g(0.5; beta) >= 0.5 beta over beta in (0,1),
// with the small-beta limit slope checked analytically. A false result is a
// finding, reported not thrown.
struct DominanceReport {
    bool holds = false;
    double min_margin = 0.0;
    double argmin_beta = 0.0;
    double small_beta_slope = 0.0;  // limit of margin/beta as beta -> 0
};
DominanceReport verify_g_dominance(std::size_t grid_points = 100000);

}  // namespace ldgm
