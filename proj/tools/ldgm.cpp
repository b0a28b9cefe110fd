// Batch front end for the LDGM rate-distortion laboratory.
//
// Subcommands: sample, encode, analyze, certificate, bounds, experiment,
// figure2. Every run echoes its fully resolved configuration, every output
// file starts with a provenance comment (tool version, argv, seed), and the
// same argv + seed always produces byte-identical output.
//
// Exit codes: 0 ok, 2 usage, 3 invalid/infeasible spec, 4 resource limit,
// 5 domain error, 6 solver bracket failure, 7 I/O failure, 1 internal.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <cmath>

#include "ldgm/bounds.hpp"
#include "ldgm/certificate.hpp"
#include "ldgm/csv.hpp"
#include "ldgm/encoders.hpp"
#include "ldgm/ensembles.hpp"
#include "ldgm/errors.hpp"
#include "ldgm/experiments.hpp"
#include "ldgm/overlap.hpp"
#include "ldgm/rng.hpp"
#include "ldgm/version.hpp"

namespace {

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "kv";  // kv | csv
    int threads = 1;
};

std::string join_argv(int argc, char** argv) {
    std::string joined;
    for (int i = 0; i < argc; ++i) {
        if (i) joined += ' ';
        joined += argv[i];
    }
    return joined;
}

std::string provenance_line(const std::string& argv_line, std::uint64_t seed) {
    return std::string("ldgm ") + ldgm::kVersion + " | argv: " + argv_line +
           " | seed: " + std::to_string(seed);
}

void echo(const std::string& key, const std::string& value) {
    std::cout << "config: " << key << " = " << value << '\n';
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ldgm::IoError("cannot open output file " + path);
    return out;
}

ldgm::EnsembleKind parse_kind(const std::string& name) {
    if (name == "check-regular") return ldgm::EnsembleKind::CheckRegular;
    if (name == "bit-check-regular") return ldgm::EnsembleKind::BitCheckRegular;
    throw ldgm::ValidationError("unknown ensemble '" + name + "'");
}

ldgm::HammingRadius radius_from_flags(double D, int radius_bits, std::size_t n) {
    if (radius_bits >= 0)
        return ldgm::HammingRadius::from_bits(static_cast<std::uint32_t>(radius_bits), n);
    if (D < 0.0) throw ldgm::ValidationError("need --D or --radius");
    return ldgm::HammingRadius::from_distortion(D, n);
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            values.push_back(std::stod(token));
        } catch (const std::exception&) {
            throw ldgm::ValidationError("bad number '" + token + "' in list '" + text + "'");
        }
    }
    if (values.empty()) throw ldgm::ValidationError("empty list '" + text + "'");
    return values;
}

// ---------------------------------------------------------------- sample ----

struct SampleArgs {
    std::string ensemble = "check-regular";
    std::uint32_t n = 0, m = 0, d_c = 0, d_v = 0;
};

int run_sample(const SampleArgs& args, const GlobalOptions& global,
               const std::string& argv_line) {
    ldgm::EnsembleSpec spec;
    spec.kind = parse_kind(args.ensemble);
    spec.n = args.n;
    spec.m = args.m;
    spec.d_c = args.d_c;
    spec.d_v = args.d_v;
    spec.seed = global.seed;

    echo("ensemble", args.ensemble);
    echo("n", std::to_string(spec.n));
    echo("m", std::to_string(spec.m));
    echo("dc", std::to_string(spec.d_c));
    echo("dv", std::to_string(spec.d_v));
    echo("seed", std::to_string(spec.seed));
    echo("out", global.out);

    const auto diag = ldgm::validate_spec(spec);
    if (!diag.ok) {
        std::string all;
        for (const auto& issue : diag.issues) all += issue + "; ";
        throw ldgm::ValidationError(all);
    }
    const ldgm::GeneratorMatrix g = ldgm::sample(spec);
    if (global.out.empty()) throw ldgm::ValidationError("sample requires --out FILE");
    ldgm::save_ldgm_file(global.out, g, provenance_line(argv_line, spec.seed));
    std::cout << "wrote " << global.out << " (n=" << g.checks() << ", m=" << g.info_bits()
              << ", rate=" << ldgm::to_string(g.rate()) << ")\n";
    return 0;
}

// ---------------------------------------------------------------- encode ----

struct EncodeArgs {
    std::string code_path;
    std::string source_bits;  // empty = draw uniformly from seed
    std::string mode = "ml";
    double D = -1.0;
    int radius_bits = -1;
    std::uint64_t tie_seed = 0;
    bool tie_seed_set = false;
};

int run_encode(const EncodeArgs& args, const GlobalOptions& global,
               const std::string& argv_line) {
    (void)argv_line;
    const ldgm::GeneratorMatrix g = ldgm::load_ldgm_file(args.code_path);
    const std::uint64_t tie_seed = args.tie_seed_set ? args.tie_seed : global.seed;

    ldgm::BitVector source(g.checks());
    if (args.source_bits.empty()) {
        ldgm::Rng rng(ldgm::derive_seed(global.seed, 1));
        for (std::size_t i = 0; i < g.checks(); ++i) source.set(i, rng.coin());
    } else {
        source = ldgm::BitVector::from_string(args.source_bits);
        if (source.length() != g.checks())
            throw ldgm::DimensionError("--source length != code block length");
    }

    echo("code", args.code_path);
    echo("mode", args.mode);
    echo("source", source.to_string());
    echo("tie_seed", std::to_string(tie_seed));

    const ldgm::EncoderLimits limits = ldgm::EncoderLimits::from_env();
    ldgm::EncodingResult result;
    if (args.mode == "ml") {
        result = ldgm::ml_encode(g, source, tie_seed, limits);
    } else if (args.mode == "dball") {
        const auto radius = radius_from_flags(args.D, args.radius_bits, g.checks());
        echo("radius_bits", std::to_string(radius.radius_bits));
        result = ldgm::dball_encode(g, source, radius, tie_seed, limits);
    } else {
        throw ldgm::ValidationError("unknown --mode '" + args.mode + "'");
    }

    std::cout << "chosen_z = " << result.chosen_z.to_string() << '\n'
              << "codeword = " << result.codeword.to_string() << '\n'
              << "distortion_bits = " << result.distortion_bits << '\n'
              << "distortion = "
              << ldgm::csv_double(static_cast<double>(result.distortion_bits) /
                                  static_cast<double>(g.checks()))
              << '\n'
              << "succeeded = " << (result.succeeded ? "true" : "false") << '\n'
              << "num_candidates = " << result.num_candidates << '\n';
    return 0;
}

// --------------------------------------------------------------- analyze ----

struct AnalyzeArgs {
    std::string code_path;
    double D = -1.0;
    int radius_bits = -1;
    std::string dump_n;
};

int run_analyze(const AnalyzeArgs& args, const GlobalOptions& global,
                const std::string& argv_line) {
    const ldgm::GeneratorMatrix g = ldgm::load_ldgm_file(args.code_path);
    const auto radius = radius_from_flags(args.D, args.radius_bits, g.checks());

    echo("code", args.code_path);
    echo("D", ldgm::csv_double(radius.distortion));
    echo("radius_bits", std::to_string(radius.radius_bits));
    echo("format", global.format);

    const ldgm::OverlapReport report = ldgm::overlap_report(g, radius);
    const ldgm::Rational normalization =
        ldgm::Rational(ldgm::pow2(static_cast<unsigned>(g.info_bits()))) * report.q +
        (ldgm::Rational(1) - report.p_n);

    if (global.format == "csv") {
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!global.out.empty()) {
            file = open_output(global.out);
            out = &file;
        }
        ldgm::write_provenance(*out, provenance_line(argv_line, global.seed));
        *out << "n,m,radius_bits,D,q,p_n,mean_inv_N,excess_coefficient,W,excluded_count\n"
             << g.checks() << ',' << g.info_bits() << ',' << radius.radius_bits << ','
             << ldgm::csv_double(radius.distortion) << ',' << ldgm::to_string(report.q) << ','
             << ldgm::to_string(report.p_n) << ',' << ldgm::to_string(report.mean_inv_N) << ','
             << ldgm::csv_double(report.excess_coefficient) << ',' << report.W << ','
             << report.excluded_count << '\n';
    } else {
        std::cout << "n = " << g.checks() << '\n'
                  << "m = " << g.info_bits() << '\n'
                  << "radius_bits = " << radius.radius_bits << '\n'
                  << "q = " << ldgm::to_string(report.q) << '\n'
                  << "p_n = " << ldgm::to_string(report.p_n) << '\n'
                  << "mean_inv_N = " << ldgm::to_string(report.mean_inv_N) << '\n'
                  << "excess_coefficient = " << ldgm::csv_double(report.excess_coefficient)
                  << '\n'
                  << "W = " << report.W << '\n'
                  << "excluded_count = " << report.excluded_count << '\n'
                  << "excluded_mass = " << ldgm::to_string(report.excluded_mass) << '\n'
                  << "normalization_identity = " << ldgm::to_string(normalization) << '\n';
        // rate threshold implied by this code's measured excess coefficient
        if (radius.distortion <= 0.5)
            std::cout << "rate_threshold = "
                      << ldgm::csv_double(ldgm::excess_rate_threshold(
                             radius.distortion, report.excess_coefficient))
                      << '\n';
        for (std::size_t k = 0; k < report.M_by_k.size(); ++k)
            std::cout << "M_" << k << " = " << report.M_by_k[k] << '\n';
    }

    if (!args.dump_n.empty()) {
        std::ofstream dump = open_output(args.dump_n);
        ldgm::write_provenance(dump, provenance_line(argv_line, global.seed));
        dump << "u,N\n";
        for (const auto& [u, count] : report.N_by_u)
            dump << u.to_string() << ',' << count << '\n';
        std::cout << "wrote " << args.dump_n << '\n';
    }
    return 0;
}

// ----------------------------------------------------------- certificate ----

struct CertificateArgs {
    std::string code_path;
    double D = -1.0;
    int radius_bits = -1;
    std::string rule = "at-least-once";
};

int run_certificate(const CertificateArgs& args, const GlobalOptions& global,
                    const std::string& argv_line) {
    const ldgm::GeneratorMatrix g = ldgm::load_ldgm_file(args.code_path);
    const auto radius = radius_from_flags(args.D, args.radius_bits, g.checks());
    const ldgm::AdjacencyRule rule = args.rule == "odd-multiplicity"
                                         ? ldgm::AdjacencyRule::OddMultiplicity
                                         : ldgm::AdjacencyRule::SelectedAtLeastOnce;

    echo("code", args.code_path);
    echo("radius_bits", std::to_string(radius.radius_bits));
    echo("rule", args.rule);

    const ldgm::CertificateResult cert = ldgm::free_bits_certificate(g, radius, rule);
    auto join = [](const std::vector<std::uint32_t>& xs) {
        std::string s;
        for (auto x : xs) {
            if (!s.empty()) s += ' ';
            s += std::to_string(x);
        }
        return s;
    };

    if (global.format == "csv") {
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!global.out.empty()) {
            file = open_output(global.out);
            out = &file;
        }
        ldgm::write_provenance(*out, provenance_line(argv_line, global.seed));
        *out << "n,m,r,F\n"
             << g.checks() << ',' << g.info_bits() << ',' << radius.radius_bits << ','
             << cert.free_count << '\n';
    } else {
        std::cout << "F = " << cert.free_count << '\n'
                  << "fixed_checks = " << join(cert.fixed_checks) << '\n'
                  << "fixed_bits = " << join(cert.fixed_bits) << '\n'
                  << "free_bits = " << join(cert.free_bits) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- bounds ----

struct BoundsArgs {
    int corollary = 0;  // 1 = check-regular bound, 2 = bit-check-regular bound
    double D = -1.0;
    std::uint32_t d_c = 0, d_v = 0;
    double tol = 1e-9;
};

int run_bounds(const BoundsArgs& args, const GlobalOptions& global,
               const std::string& argv_line) {
    echo("corollary", std::to_string(args.corollary));
    echo("D", ldgm::csv_double(args.D));
    echo("dc", std::to_string(args.d_c));
    echo("dv", std::to_string(args.d_v));
    echo("tol", ldgm::csv_double(args.tol));

    ldgm::BoundResult result;
    std::string ensemble;
    if (args.corollary == 1) {
        if (args.d_c == 0) throw ldgm::ValidationError("--corollary 1 requires --dc");
        result = ldgm::min_rate_check_regular(args.D, args.d_c, args.tol);
        ensemble = "check-regular";
    } else if (args.corollary == 2) {
        if (args.d_v == 0) throw ldgm::ValidationError("--corollary 2 requires --dv");
        result = ldgm::min_rate_bit_check_regular(args.D, args.d_v, args.tol);
        ensemble = "bit-check-regular";
    } else {
        throw ldgm::ValidationError("--corollary must be 1 or 2");
    }

    if (global.format == "csv") {
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!global.out.empty()) {
            file = open_output(global.out);
            out = &file;
        }
        ldgm::write_provenance(*out, provenance_line(argv_line, global.seed));
        *out << "ensemble,D,d_c,d_v,shannon_rate,min_rate,excess_percent,delta_star,residual\n"
             << ensemble << ',' << ldgm::csv_double(result.D) << ',' << result.d_c << ','
             << result.d_v << ',' << ldgm::csv_double(result.shannon_rate) << ','
             << ldgm::csv_double(result.min_rate) << ','
             << ldgm::csv_double(result.excess_percent) << ','
             << ldgm::csv_double(result.delta_star) << ',' << ldgm::csv_double(result.residual)
             << '\n';
    } else {
        std::cout << "ensemble = " << ensemble << '\n'
                  << "shannon_rate = " << ldgm::csv_double(result.shannon_rate) << '\n'
                  << "min_rate = " << ldgm::csv_double(result.min_rate) << '\n'
                  << "excess_gap = " << ldgm::csv_double(result.excess_gap) << '\n'
                  << "excess_percent = " << ldgm::csv_double(result.excess_percent) << '\n'
                  << "delta_star = " << ldgm::csv_double(result.delta_star) << '\n'
                  << "delta_at_boundary = " << (result.delta_at_boundary ? "true" : "false")
                  << '\n'
                  << "residual = " << ldgm::csv_double(result.residual) << '\n';
    }
    return 0;
}

// ------------------------------------------------------------ experiment ----

struct ExperimentArgs {
    std::string kind = "freebits";  // freebits | concentration | distortion | chain | pmf
    std::string ensemble = "check-regular";
    std::uint32_t n = 0, m = 0, d_c = 0, d_v = 0;
    double D = 0.0;
    std::uint64_t trials = 1000;
    std::uint32_t sources_per_code = 4;
    std::string delta_grid = "0.1,0.25,0.5,0.75,0.9";
    std::string chain_delta = "0";
    std::uint64_t pmf_codes = 100;
    std::uint32_t pmf_max_n = 12, pmf_max_m = 8;
};

int run_experiment(const ExperimentArgs& args, const GlobalOptions& global,
                   const std::string& argv_line) {
    ldgm::ExperimentConfig cfg;
    cfg.spec.kind = parse_kind(args.ensemble);
    cfg.spec.n = args.n;
    cfg.spec.m = args.m;
    cfg.spec.d_c = args.d_c;
    cfg.spec.d_v = args.d_v;
    cfg.D = args.D;
    cfg.trials = args.trials;
    cfg.master_seed = global.seed;
    cfg.sources_per_code = args.sources_per_code;
    cfg.threads = global.threads;
    cfg.limits = ldgm::EncoderLimits::from_env();

    echo("kind", args.kind);
    echo("ensemble", args.ensemble);
    echo("n", std::to_string(cfg.spec.n));
    echo("m", std::to_string(cfg.spec.m));
    echo("dc", std::to_string(cfg.spec.d_c));
    echo("dv", std::to_string(cfg.spec.d_v));
    echo("D", ldgm::csv_double(cfg.D));
    echo("trials", std::to_string(cfg.trials));
    echo("seed", std::to_string(cfg.master_seed));
    echo("threads", std::to_string(cfg.threads));

    const std::string provenance = provenance_line(argv_line, global.seed);

    if (args.kind == "freebits") {
        const auto summary = ldgm::free_bits_experiment(cfg);
        if (!global.out.empty()) {
            auto file = open_output(global.out);
            ldgm::write_freebits_csv(file, provenance, cfg, summary);
            std::cout << "wrote " << global.out << '\n';
        }
        std::cout << "mean_F_over_m = " << ldgm::csv_double(summary.f_over_m.mean) << '\n'
                  << "std_error = " << ldgm::csv_double(summary.f_over_m.std_error) << '\n'
                  << "target = " << ldgm::csv_double(summary.target) << '\n'
                  << "z_score = " << ldgm::csv_double(summary.z_score) << '\n';
        if (summary.asymptotic_floor > 0.0)
            std::cout << "asymptotic_floor = " << ldgm::csv_double(summary.asymptotic_floor)
                      << '\n';
        return 0;
    }
    if (args.kind == "concentration") {
        const auto grid = parse_double_list(args.delta_grid);
        const auto table = ldgm::concentration_experiment(cfg, grid);
        if (!global.out.empty()) {
            auto file = open_output(global.out);
            ldgm::write_concentration_csv(file, provenance, table);
            std::cout << "wrote " << global.out << '\n';
        } else {
            ldgm::write_concentration_csv(std::cout, provenance, table);
        }
        std::cout << "expected_F = " << ldgm::csv_double(table.expected_F) << '\n'
                  << "any_violation = " << (table.any_violation ? "true" : "false") << '\n';
        return 0;
    }
    if (args.kind == "distortion") {
        const auto summary = ldgm::distortion_experiment(cfg);
        if (!global.out.empty()) {
            auto file = open_output(global.out);
            ldgm::write_distortion_csv(file, provenance, summary);
            std::cout << "wrote " << global.out << '\n';
        }
        std::cout << "mean_distortion = " << ldgm::csv_double(summary.distortion.mean) << '\n'
                  << "std_error = " << ldgm::csv_double(summary.distortion.std_error) << '\n'
                  << "bound_min_rate = " << ldgm::csv_double(summary.bound_min_rate) << '\n';
        return 0;
    }
    if (args.kind == "chain") {
        const ldgm::Rational delta(args.chain_delta);
        const auto table = ldgm::distortion_chain_report(cfg, delta);
        for (const auto& row : table.rows)
            std::cout << "trial " << row.trial << ": p_n = " << ldgm::to_string(row.p_n)
                      << ", mean_dball = " << ldgm::to_string(row.mean_dball_distortion)
                      << ", chain = " << ldgm::to_string(row.chain_bound)
                      << ", holds = " << (row.holds ? "true" : "false") << '\n';
        std::cout << "all_hold = " << (table.all_hold ? "true" : "false") << '\n';
        return table.all_hold ? 0 : 1;
    }
    if (args.kind == "pmf") {
        const auto table = ldgm::pmf_structure_experiment(
            args.pmf_codes, ldgm::SizeBounds{args.pmf_max_n, args.pmf_max_m}, global.seed);
        std::size_t matched = 0;
        for (const auto& row : table.rows)
            if (row.exact_match) ++matched;
        std::cout << "codes = " << table.rows.size() << '\n'
                  << "exact_matches = " << matched << '\n'
                  << "all_match = " << (table.all_match ? "true" : "false") << '\n';
        return table.all_match ? 0 : 1;
    }
    throw ldgm::ValidationError("unknown experiment kind '" + args.kind + "'");
}

// --------------------------------------------------------------- figure2 ----

struct Figure2Args {
    std::string panel = "a";
    std::string D_list = "0.11,0.31";
    std::uint32_t degree_min = 2;
    std::uint32_t degree_max = 12;
    double tol = 1e-9;
};

int run_figure2(const Figure2Args& args, const GlobalOptions& global,
                const std::string& argv_line) {
    echo("panel", args.panel);
    echo("D_list", args.D_list);
    echo("degree_min", std::to_string(args.degree_min));
    echo("degree_max", std::to_string(args.degree_max));
    echo("tol", ldgm::csv_double(args.tol));

    if (args.panel.size() != 1 || (args.panel[0] != 'a' && args.panel[0] != 'b'))
        throw ldgm::ValidationError("--panel must be a or b");
    const auto D_values = parse_double_list(args.D_list);
    const auto sweep = ldgm::figure2_sweep(args.panel[0], D_values, args.degree_min,
                                           args.degree_max, args.tol);
    const std::string provenance = provenance_line(argv_line, global.seed);
    if (!global.out.empty()) {
        auto file = open_output(global.out);
        ldgm::write_figure2_csv(file, provenance, sweep);
        std::cout << "wrote " << global.out << '\n';
    } else {
        ldgm::write_figure2_csv(std::cout, provenance, sweep);
    }
    std::cout << "monotone_decreasing = " << (sweep.monotone_ok ? "true" : "false") << '\n';
    for (const auto& row : sweep.rows)
        if (!row.ok)
            std::cout << "flagged_row: D = " << ldgm::csv_double(row.D)
                      << ", degree = " << row.degree << ", error = " << row.error << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string argv_line = join_argv(argc, argv);

    CLI::App app{"LDGM lossy source coding laboratory"};
    app.require_subcommand(1);
    // global flags (--seed, --out, ...) remain valid after the subcommand name
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--seed", global.seed, "Master seed")->capture_default_str();
    app.add_option("--out", global.out, "Output file path");
    app.add_option("--format", global.format, "Output format: kv or csv")
        ->check(CLI::IsMember({"kv", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", global.threads, "Worker thread cap")->capture_default_str();

    SampleArgs sample_args;
    auto* sample_cmd = app.add_subcommand("sample", "Draw a random code and write LDGM v1");
    sample_cmd->add_option("--ensemble", sample_args.ensemble)->capture_default_str();
    sample_cmd->add_option("--n", sample_args.n)->required();
    sample_cmd->add_option("--m", sample_args.m)->required();
    sample_cmd->add_option("--dc", sample_args.d_c)->required();
    sample_cmd->add_option("--dv", sample_args.d_v);

    EncodeArgs encode_args;
    auto* encode_cmd = app.add_subcommand("encode", "Run the exact ML or D-ball encoder");
    encode_cmd->add_option("--code", encode_args.code_path)->required();
    encode_cmd->add_option("--source", encode_args.source_bits);
    encode_cmd->add_option("--mode", encode_args.mode)->check(CLI::IsMember({"ml", "dball"}));
    encode_cmd->add_option("--D", encode_args.D);
    encode_cmd->add_option("--radius", encode_args.radius_bits);
    auto* tie_opt = encode_cmd->add_option("--tie-seed", encode_args.tie_seed);

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Exact overlap report for a code");
    analyze_cmd->add_option("--code", analyze_args.code_path)->required();
    analyze_cmd->add_option("--D", analyze_args.D);
    analyze_cmd->add_option("--radius", analyze_args.radius_bits);
    analyze_cmd->add_option("--dump-n", analyze_args.dump_n);

    CertificateArgs cert_args;
    auto* cert_cmd = app.add_subcommand("certificate", "Free-bits graph certificate");
    cert_cmd->add_option("--code", cert_args.code_path)->required();
    cert_cmd->add_option("--D", cert_args.D);
    cert_cmd->add_option("--radius", cert_args.radius_bits);
    cert_cmd->add_option("--rule", cert_args.rule)
        ->check(CLI::IsMember({"at-least-once", "odd-multiplicity"}));

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "Solve an ensemble rate bound");
    bounds_cmd->add_option("--corollary", bounds_args.corollary)->required();
    bounds_cmd->add_option("--D", bounds_args.D)->required();
    bounds_cmd->add_option("--dc", bounds_args.d_c);
    bounds_cmd->add_option("--dv", bounds_args.d_v);
    bounds_cmd->add_option("--tol", bounds_args.tol)->capture_default_str();

    ExperimentArgs exp_args;
    auto* exp_cmd = app.add_subcommand("experiment", "Seeded Monte Carlo experiments");
    exp_cmd->add_option("--kind", exp_args.kind)
        ->check(CLI::IsMember({"freebits", "concentration", "distortion", "chain", "pmf"}));
    exp_cmd->add_option("--ensemble", exp_args.ensemble)->capture_default_str();
    exp_cmd->add_option("--n", exp_args.n);
    exp_cmd->add_option("--m", exp_args.m);
    exp_cmd->add_option("--dc", exp_args.d_c);
    exp_cmd->add_option("--dv", exp_args.d_v);
    exp_cmd->add_option("--D", exp_args.D);
    exp_cmd->add_option("--trials", exp_args.trials)->capture_default_str();
    exp_cmd->add_option("--sources-per-code", exp_args.sources_per_code)->capture_default_str();
    exp_cmd->add_option("--delta-grid", exp_args.delta_grid)->capture_default_str();
    exp_cmd->add_option("--delta", exp_args.chain_delta)->capture_default_str();
    exp_cmd->add_option("--codes", exp_args.pmf_codes)->capture_default_str();
    exp_cmd->add_option("--max-n", exp_args.pmf_max_n)->capture_default_str();
    exp_cmd->add_option("--max-m", exp_args.pmf_max_m)->capture_default_str();

    Figure2Args fig_args;
    auto* fig_cmd = app.add_subcommand("figure2", "Excess-rate sweep CSV");
    fig_cmd->add_option("--panel", fig_args.panel)->capture_default_str();
    fig_cmd->add_option("--D-list", fig_args.D_list)->capture_default_str();
    fig_cmd->add_option("--degree-min", fig_args.degree_min)->capture_default_str();
    fig_cmd->add_option("--degree-max", fig_args.degree_max)->capture_default_str();
    fig_cmd->add_option("--tol", fig_args.tol)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    encode_args.tie_seed_set = tie_opt->count() > 0;

    // Global flags echo once, resolved defaults included; subcommands echo
    // their own settings next.
    echo("seed", std::to_string(global.seed));
    echo("format", global.format);
    echo("threads", std::to_string(global.threads));

    try {
        if (sample_cmd->parsed()) return run_sample(sample_args, global, argv_line);
        if (encode_cmd->parsed()) return run_encode(encode_args, global, argv_line);
        if (analyze_cmd->parsed()) return run_analyze(analyze_args, global, argv_line);
        if (cert_cmd->parsed()) return run_certificate(cert_args, global, argv_line);
        if (bounds_cmd->parsed()) return run_bounds(bounds_args, global, argv_line);
        if (exp_cmd->parsed()) return run_experiment(exp_args, global, argv_line);
        if (fig_cmd->parsed()) return run_figure2(fig_args, global, argv_line);
    } catch (const ldgm::ValidationError& e) {
        std::cerr << "error: class=validation message=" << e.what() << '\n';
        return 3;
    } catch (const ldgm::ResourceLimitError& e) {
        std::cerr << "error: class=resource-limit message=" << e.what() << '\n';
        return 4;
    } catch (const ldgm::DimensionError& e) {
        std::cerr << "error: class=dimension message=" << e.what() << '\n';
        return 5;
    } catch (const ldgm::DomainError& e) {
        std::cerr << "error: class=domain message=" << e.what() << '\n';
        return 5;
    } catch (const ldgm::BracketError& e) {
        std::cerr << "error: class=bracket message=" << e.what() << '\n';
        return 6;
    } catch (const ldgm::IoError& e) {
        std::cerr << "error: class=io message=" << e.what() << '\n';
        return 7;
    } catch (const std::exception& e) {
        std::cerr << "error: class=internal message=" << e.what() << '\n';
        return 1;
    }
    return 2;
}
