#include "ldgm/experiments.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include "ldgm/bounds.hpp"
#include "ldgm/certificate.hpp"
#include "ldgm/csv.hpp"
#include "ldgm/errors.hpp"
#include "ldgm/rng.hpp"

namespace ldgm {

SummaryStats summarize(std::span<const double> values) {
    SummaryStats stats;
    if (values.empty()) return stats;
    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
        stats.sample_sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
        stats.std_error = stats.sample_sd / std::sqrt(static_cast<double>(values.size()));
    }
    return stats;
}

namespace {

// Runs body(t) for t in [0, trials) across up to `threads` workers. Each
// trial writes only its own slot, so the merged result is independent of
// scheduling.
void run_trials(std::uint64_t trials, int threads,
                const std::function<void(std::uint64_t)>& body) {
    const unsigned worker_count =
        std::max(1u, std::min<unsigned>(static_cast<unsigned>(std::max(threads, 1)),
                                        std::thread::hardware_concurrency()));
    if (worker_count == 1 || trials < 2) {
        for (std::uint64_t t = 0; t < trials; ++t) body(t);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
        workers.emplace_back([&]() {
            for (;;) {
                const std::uint64_t t = next.fetch_add(1);
                if (t >= trials) return;
                body(t);
            }
        });
    }
    for (auto& worker : workers) worker.join();
}

double require_integral(double value, const char* what) {
    const double snapped = std::round(value);
    if (std::abs(value - snapped) > 1e-9)
        throw ValidationError(std::string(what) + " must be an integer, got " +
                              std::to_string(value));
    return snapped;
}

struct FreeBitsTargets {
    double target = 0.0;
    double asymptotic_floor = 0.0;
};

FreeBitsTargets free_bits_targets(const EnsembleSpec& spec, double D) {
    FreeBitsTargets targets;
    if (spec.kind == EnsembleKind::CheckRegular) {
        targets.target = beta_check_regular_exact(spec.n, spec.m, spec.d_c, D);
    } else {
        targets.target = to_double(q_free_exact(spec.n, spec.d_c, spec.d_v, D));
        targets.asymptotic_floor = beta_bit_check_regular(spec.d_v, D);
    }
    return targets;
}

void check_config(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw ValidationError("experiment: trials must be >= 1");
    const SpecDiagnostics diag = validate_spec(cfg.spec);
    if (!diag.ok) throw ValidationError("experiment: infeasible ensemble spec");
}

std::vector<std::uint64_t> sample_free_counts(const ExperimentConfig& cfg,
                                              std::vector<std::uint64_t>* seeds_out) {
    check_config(cfg);
    require_integral((1.0 - cfg.D) * cfg.spec.n, "(1-D) n");
    const HammingRadius radius = HammingRadius::from_distortion(cfg.D, cfg.spec.n);

    std::vector<std::uint64_t> free_counts(cfg.trials);
    if (seeds_out) seeds_out->resize(cfg.trials);
    run_trials(cfg.trials, cfg.threads, [&](std::uint64_t t) {
        EnsembleSpec spec = cfg.spec;
        spec.seed = derive_seed(cfg.master_seed, t);
        const GeneratorMatrix g = sample(spec);
        free_counts[t] = free_bits_certificate(g, radius).free_count;
        if (seeds_out) (*seeds_out)[t] = spec.seed;
    });
    return free_counts;
}

}  // namespace

FreeBitsSummary free_bits_experiment(const ExperimentConfig& cfg) {
    std::vector<std::uint64_t> seeds;
    const std::vector<std::uint64_t> free_counts = sample_free_counts(cfg, &seeds);
    const FreeBitsTargets targets = free_bits_targets(cfg.spec, cfg.D);

    FreeBitsSummary summary;
    summary.rows.resize(cfg.trials);
    std::vector<double> fractions(cfg.trials);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const double fraction =
            static_cast<double>(free_counts[t]) / static_cast<double>(cfg.spec.m);
        summary.rows[t] = FreeBitsRow{t, seeds[t], free_counts[t], fraction};
        fractions[t] = fraction;
    }
    summary.f_over_m = summarize(fractions);
    summary.target = targets.target;
    summary.asymptotic_floor = targets.asymptotic_floor;
    if (summary.f_over_m.std_error > 0.0) {
        summary.z_score = (summary.f_over_m.mean - summary.target) / summary.f_over_m.std_error;
    } else {
        summary.z_score = (summary.f_over_m.mean == summary.target)
                              ? 0.0
                              : std::numeric_limits<double>::infinity();
    }
    return summary;
}

ConcentrationTable concentration_experiment(const ExperimentConfig& cfg,
                                            std::span<const double> delta_grid) {
    const std::vector<std::uint64_t> free_counts = sample_free_counts(cfg, nullptr);
    const FreeBitsTargets targets = free_bits_targets(cfg.spec, cfg.D);

    ConcentrationTable table;
    table.trials = cfg.trials;
    table.expected_F = targets.target * static_cast<double>(cfg.spec.m);
    const double R = static_cast<double>(cfg.spec.m) / cfg.spec.n;

    for (double delta : delta_grid) {
        ConcentrationRow row;
        row.delta = delta;
        row.threshold = (1.0 - delta) * table.expected_F;
        std::uint64_t hits = 0;
        for (std::uint64_t f : free_counts)
            if (static_cast<double>(f) <= row.threshold) ++hits;
        row.empirical = static_cast<double>(hits) / static_cast<double>(cfg.trials);
        row.std_error =
            std::sqrt(row.empirical * (1.0 - row.empirical) / static_cast<double>(cfg.trials));
        const double raw =
            cfg.spec.kind == EnsembleKind::CheckRegular
                ? tail_bound_check_regular(cfg.spec.m, targets.target, delta)
                : tail_bound_bit_check_regular(cfg.spec.m,
                                               beta_bit_check_regular(cfg.spec.d_v, cfg.D),
                                               delta, cfg.spec.d_v, R, cfg.D);
        row.bound = std::min(1.0, raw);
        row.violated = row.empirical > row.bound + 3.0 * row.std_error;
        table.any_violation = table.any_violation || row.violated;
        table.rows.push_back(row);
    }
    return table;
}

DistortionSummary distortion_experiment(const ExperimentConfig& cfg) {
    check_config(cfg);
    if (cfg.spec.m > cfg.limits.max_info_bits)
        throw ResourceLimitError("distortion_experiment: m exceeds exhaustive cap");

    const std::uint32_t per_code = std::max<std::uint32_t>(1, cfg.sources_per_code);
    std::vector<std::vector<DistortionRow>> per_trial(cfg.trials);
    run_trials(cfg.trials, cfg.threads, [&](std::uint64_t t) {
        const std::uint64_t base = derive_seed(cfg.master_seed, t);
        EnsembleSpec spec = cfg.spec;
        spec.seed = derive_seed(base, 0);
        const GeneratorMatrix g = sample(spec);
        Rng source_rng(derive_seed(base, 1));
        auto& rows = per_trial[t];
        rows.reserve(per_code);
        for (std::uint32_t k = 0; k < per_code; ++k) {
            BitVector source(cfg.spec.n);
            for (std::uint32_t b = 0; b < cfg.spec.n; ++b) source.set(b, source_rng.coin());
            const EncodingResult enc =
                ml_encode(g, source, derive_seed(base, 2 + k), cfg.limits);
            rows.push_back(DistortionRow{
                t, cfg.spec.n, cfg.spec.m, cfg.D,
                static_cast<double>(enc.distortion_bits) / static_cast<double>(cfg.spec.n)});
        }
    });

    DistortionSummary summary;
    std::vector<double> values;
    for (auto& rows : per_trial)
        for (auto& row : rows) {
            values.push_back(row.d_ml);
            summary.rows.push_back(row);
        }
    summary.distortion = summarize(values);

    summary.bound_min_rate = std::numeric_limits<double>::quiet_NaN();
    if (cfg.D > 0.0 && cfg.D < 0.5) {
        try {
            summary.bound_min_rate =
                cfg.spec.kind == EnsembleKind::CheckRegular
                    ? min_rate_check_regular(cfg.D, cfg.spec.d_c).min_rate
                    : min_rate_bit_check_regular(cfg.D, cfg.spec.d_v).min_rate;
        } catch (const BracketError&) {
        }
    }
    return summary;
}

ChainTable distortion_chain_report(const ExperimentConfig& cfg, const Rational& delta) {
    check_config(cfg);
    const HammingRadius radius = HammingRadius::from_distortion(cfg.D, cfg.spec.n);

    ChainTable table;
    table.rows.resize(cfg.trials);
    run_trials(cfg.trials, cfg.threads, [&](std::uint64_t t) {
        EnsembleSpec spec = cfg.spec;
        spec.seed = derive_seed(cfg.master_seed, t);
        const GeneratorMatrix g = sample(spec);
        const OverlapReport report = overlap_report(g, radius, cfg.caps);
        const Rational mean = exact_dball_expected_distortion(g, radius, cfg.caps);
        const Rational d_eff = make_rational(radius.radius_bits, cfg.spec.n);
        const Rational chain = (d_eff + delta / 2) * report.p_n +
                               (Rational(1) - report.p_n) / 2;
        table.rows[t] = ChainRow{t,      spec.seed, cfg.spec.n, cfg.spec.m,
                                 radius.radius_bits, report.p_n, mean,
                                 chain,  mean <= chain};
    });
    for (const auto& row : table.rows) table.all_hold = table.all_hold && row.holds;
    return table;
}

PmfCheckTable pmf_structure_experiment(std::uint64_t code_count, SizeBounds bounds,
                                       std::uint64_t master_seed, const OverlapCaps& caps) {
    // Feasible bit-check-regular shapes within the small-code budget.
    struct Shape {
        std::uint32_t n, m, d_c, d_v;
    };
    static const Shape kFeasible[] = {{4, 2, 1, 2},  {4, 4, 2, 2}, {6, 3, 1, 2},
                                      {6, 4, 2, 3},  {8, 4, 1, 2}, {8, 6, 3, 4},
                                      {9, 6, 2, 3},  {10, 5, 1, 2}, {12, 8, 2, 3},
                                      {12, 9, 3, 4}};
    static const double kDistortions[] = {0.2, 0.25, 1.0 / 3.0, 0.4, 0.5};

    PmfCheckTable table;
    table.rows.resize(code_count);
    for (std::uint64_t i = 0; i < code_count; ++i) {
        const std::uint64_t base = derive_seed(master_seed, i);
        Rng rng(base);
        EnsembleSpec spec;
        if (rng.coin()) {
            spec.kind = EnsembleKind::CheckRegular;
            spec.n = 4 + static_cast<std::uint32_t>(rng.below(bounds.max_n - 3));
            spec.m = 2 + static_cast<std::uint32_t>(rng.below(bounds.max_m - 1));
            spec.d_c = 1 + static_cast<std::uint32_t>(rng.below(4));
        } else {
            std::vector<Shape> usable;
            for (const Shape& s : kFeasible)
                if (s.n <= bounds.max_n && s.m <= bounds.max_m) usable.push_back(s);
            const Shape s = usable[rng.below(usable.size())];
            spec.kind = EnsembleKind::BitCheckRegular;
            spec.n = s.n;
            spec.m = s.m;
            spec.d_c = s.d_c;
            spec.d_v = s.d_v;
        }
        spec.seed = derive_seed(base, 1);
        const double D = kDistortions[rng.below(std::size(kDistortions))];
        const GeneratorMatrix g = sample(spec);
        const HammingRadius radius = HammingRadius::from_distortion(D, spec.n);

        const ZhatPmf pmf = pmf_of_zhat(g, radius, caps);
        bool match = true;
        const Rational z_star_expected = pmf.q_predicted + (Rational(1) - pmf.p_n);
        for (std::uint64_t z = 0; z < pmf.pmf.size(); ++z) {
            const Rational& expected =
                (z == pmf.z_star_index) ? z_star_expected : pmf.q_predicted;
            if (pmf.pmf[z] != expected) {
                match = false;
                break;
            }
        }
        table.rows[i] =
            PmfCheckRow{i, spec.seed, spec.n, spec.m, radius.radius_bits, match};
        table.all_match = table.all_match && match;
    }
    return table;
}

SweepResult figure2_sweep(char panel, std::span<const double> D_list,
                          std::uint32_t degree_min, std::uint32_t degree_max, double tol) {
    if (panel != 'a' && panel != 'b') throw DomainError("figure2_sweep: panel must be a or b");
    if (degree_min < 1 || degree_min > degree_max)
        throw DomainError("figure2_sweep: bad degree range");

    SweepResult sweep;
    for (double D : D_list) {
        double previous_excess = std::numeric_limits<double>::infinity();
        for (std::uint32_t degree = degree_min; degree <= degree_max; ++degree) {
            SweepRow row;
            row.panel = panel;
            row.ensemble = (panel == 'a') ? "check-regular" : "bit-check-regular";
            row.D = D;
            row.degree = degree;
            try {
                const BoundResult bound = (panel == 'a')
                                              ? min_rate_check_regular(D, degree, tol)
                                              : min_rate_bit_check_regular(D, degree, tol);
                row.shannon_rate = bound.shannon_rate;
                row.min_rate = bound.min_rate;
                row.excess_percent = bound.excess_percent;
                row.delta_star = bound.delta_star;
                row.residual = bound.residual;
                if (row.excess_percent >= previous_excess) sweep.monotone_ok = false;
                previous_excess = row.excess_percent;
            } catch (const BracketError& e) {
                row.ok = false;
                row.error = e.what();
                row.shannon_rate = shannon_rate(D);
                row.min_rate = std::numeric_limits<double>::quiet_NaN();
                row.excess_percent = std::numeric_limits<double>::quiet_NaN();
                row.delta_star = std::numeric_limits<double>::quiet_NaN();
                row.residual = std::numeric_limits<double>::quiet_NaN();
            }
            sweep.rows.push_back(std::move(row));
        }
    }
    return sweep;
}

void write_freebits_csv(std::ostream& out, const std::string& provenance,
                        const ExperimentConfig& cfg, const FreeBitsSummary& summary) {
    write_provenance(out, provenance);
    out << "trial,seed,n,m,ensemble,D,F,F_over_m\n";
    for (const auto& row : summary.rows)
        out << row.trial << ',' << row.seed << ',' << cfg.spec.n << ',' << cfg.spec.m << ','
            << ensemble_name(cfg.spec.kind) << ',' << csv_double(cfg.D) << ',' << row.F << ','
            << csv_double(row.F_over_m) << '\n';
}

void write_concentration_csv(std::ostream& out, const std::string& provenance,
                             const ConcentrationTable& table) {
    write_provenance(out, provenance);
    out << "delta,threshold,empirical,std_error,bound,violated\n";
    for (const auto& row : table.rows)
        out << csv_double(row.delta) << ',' << csv_double(row.threshold) << ','
            << csv_double(row.empirical) << ',' << csv_double(row.std_error) << ','
            << csv_double(row.bound) << ',' << (row.violated ? 1 : 0) << '\n';
}

void write_distortion_csv(std::ostream& out, const std::string& provenance,
                          const DistortionSummary& summary) {
    write_provenance(out, provenance);
    out << "trial,n,m,D_target,d_ml\n";
    for (const auto& row : summary.rows)
        out << row.trial << ',' << row.n << ',' << row.m << ',' << csv_double(row.D_target)
            << ',' << csv_double(row.d_ml) << '\n';
}

void write_figure2_csv(std::ostream& out, const std::string& provenance,
                       const SweepResult& sweep) {
    write_provenance(out, provenance);
    out << "panel,ensemble,D,degree,shannon_rate,min_rate,excess_percent,delta_star,residual\n";
    for (const auto& row : sweep.rows)
        out << row.panel << ',' << row.ensemble << ',' << csv_double(row.D) << ',' << row.degree
            << ',' << csv_double(row.shannon_rate) << ',' << csv_double(row.min_rate) << ','
            << csv_double(row.excess_percent) << ',' << csv_double(row.delta_star) << ','
            << csv_double(row.residual) << '\n';
}

}  // namespace ldgm
