#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ldgm/encoders.hpp"
#include "ldgm/ensembles.hpp"
#include "ldgm/overlap.hpp"
#include "ldgm/rational.hpp"

namespace ldgm {

struct SummaryStats {
    double mean = 0.0;
    double sample_sd = 0.0;
    double std_error = 0.0;
};
SummaryStats summarize(std::span<const double> values);

// Shared experiment configuration. Trials are independent units: trial t
// derives its seed chain from derive_seed(master_seed, t), so results are
// identical for any thread count and any scheduling.
struct ExperimentConfig {
    EnsembleSpec spec;               // spec.seed is ignored; trials derive their own
    double D = 0.0;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    std::uint32_t sources_per_code = 4;  // distortion experiment only
    int threads = 1;
    EncoderLimits limits{};
    OverlapCaps caps{};
};

// ---- free-bits expectation -------------------------------------------------

struct FreeBitsRow {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t F = 0;
    double F_over_m = 0.0;
};

struct FreeBitsSummary {
    std::vector<FreeBitsRow> rows;
    SummaryStats f_over_m;
    double target = 0.0;            // exact E[F]/m for the configured ensemble
    double asymptotic_floor = 0.0;  // bit-check-regular closed form; 0 otherwise
    double z_score = 0.0;           // (mean - target) / SE
};

// Samples `trials` codes and compares mean(F/m) against the exact
// expectation: (1-1/m)^((1-D) n d_c) for check-regular, the exact
// hypergeometric q for bit-check-regular. Requires (1-D)n integral.
FreeBitsSummary free_bits_experiment(const ExperimentConfig& cfg);

// ---- concentration tails ---------------------------------------------------

struct ConcentrationRow {
    double delta = 0.0;
    double threshold = 0.0;   // (1 - delta) E[F]
    double empirical = 0.0;   // frequency of F <= threshold
    double std_error = 0.0;
    double bound = 0.0;       // analytic tail bound, clamped to 1
    bool violated = false;    // empirical > bound + 3 SE: a finding, not an error
};

struct ConcentrationTable {
    std::vector<ConcentrationRow> rows;
    std::uint64_t trials = 0;
    double expected_F = 0.0;
    bool any_violation = false;
};

ConcentrationTable concentration_experiment(const ExperimentConfig& cfg,
                                            std::span<const double> delta_grid);

// ---- exhaustive ML distortion ----------------------------------------------

struct DistortionRow {
    std::uint64_t trial = 0;
    std::uint32_t n = 0, m = 0;
    double D_target = 0.0;
    double d_ml = 0.0;  // normalized exact minimal distortion for one source
};

struct DistortionSummary {
    std::vector<DistortionRow> rows;  // one per (trial, source)
    SummaryStats distortion;
    // the ensemble rate bound at the configured (D, degrees), for
    // side-by-side reading; NaN when D is outside (0, 1/2) or the solver
    // bracket fails. Reported, never asserted: the bound is asymptotic.
    double bound_min_rate = 0.0;
};

DistortionSummary distortion_experiment(const ExperimentConfig& cfg);

// ---- success-probability / distortion chain ---------------------------------

// Per code: exact p_n, exact mean D-ball distortion, and the chain value
// (D + delta/2) p_n + (1 - p_n)/2 with D = r/n, all as rationals; `holds`
// is the exact comparison mean <= chain.
struct ChainRow {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::uint32_t n = 0, m = 0, radius = 0;
    Rational p_n;
    Rational mean_dball_distortion;
    Rational chain_bound;
    bool holds = false;
};

struct ChainTable {
    std::vector<ChainRow> rows;
    bool all_hold = true;
};

ChainTable distortion_chain_report(const ExperimentConfig& cfg, const Rational& delta);

// ---- PMF structure over random codes ----------------------------------------

struct PmfCheckRow {
    std::uint64_t index = 0;
    std::uint64_t seed = 0;
    std::uint32_t n = 0, m = 0, radius = 0;
    bool exact_match = false;
};

struct PmfCheckTable {
    std::vector<PmfCheckRow> rows;
    bool all_match = true;
};

struct SizeBounds {
    std::uint32_t max_n = 12;
    std::uint32_t max_m = 8;
};

// Draws random small codes of both ensembles and checks the D-ball encoder
// output PMF exactly: constant off z* with value q, z* atom q + (1 - p_n).
PmfCheckTable pmf_structure_experiment(std::uint64_t code_count, SizeBounds bounds,
                                       std::uint64_t master_seed,
                                       const OverlapCaps& caps = {});

// ---- rate-bound sweeps -------------------------------------------------------

struct SweepRow {
    char panel = 'a';
    std::string ensemble;
    double D = 0.0;
    std::uint32_t degree = 0;
    double shannon_rate = 0.0;
    double min_rate = 0.0;
    double excess_percent = 0.0;
    double delta_star = 0.0;
    double residual = 0.0;
    bool ok = true;
    std::string error;  // bracket failures are flagged, the sweep continues
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool monotone_ok = true;  // excess strictly decreasing in degree per curve
};

// Panel 'a': check-regular bound over d_c; panel 'b': bit-check-regular
// bound over d_v. One row per (D, degree), D-major order.
SweepResult figure2_sweep(char panel, std::span<const double> D_list,
                          std::uint32_t degree_min, std::uint32_t degree_max, double tol);

// ---- CSV writers (fixed schemas) ---------------------------------------------

void write_freebits_csv(std::ostream& out, const std::string& provenance,
                        const ExperimentConfig& cfg, const FreeBitsSummary& summary);
void write_concentration_csv(std::ostream& out, const std::string& provenance,
                             const ConcentrationTable& table);
void write_distortion_csv(std::ostream& out, const std::string& provenance,
                          const DistortionSummary& summary);
void write_figure2_csv(std::ostream& out, const std::string& provenance,
                       const SweepResult& sweep);

}  // namespace ldgm
