#include "ldgm/ensembles.hpp"

#include <numeric>

#include "ldgm/errors.hpp"
#include "ldgm/rng.hpp"

namespace ldgm {

const char* ensemble_name(EnsembleKind kind) {
    return kind == EnsembleKind::CheckRegular ? "check-regular" : "bit-check-regular";
}

SpecDiagnostics validate_spec(const EnsembleSpec& spec) {
    SpecDiagnostics diag;
    auto report = [&](const std::string& issue) {
        diag.ok = false;
        diag.issues.push_back(issue);
    };
    if (spec.n < 1) report("invalid-dimension: n must be >= 1");
    if (spec.m < 1) report("invalid-dimension: m must be >= 1");
    if (spec.d_c < 1) report("invalid-degree: d_c must be >= 1");
    if (spec.kind == EnsembleKind::BitCheckRegular) {
        if (spec.d_v < 1) report("invalid-degree: d_v must be >= 1");
        const std::uint64_t check_stubs = std::uint64_t{spec.n} * spec.d_c;
        const std::uint64_t bit_stubs = std::uint64_t{spec.m} * spec.d_v;
        if (spec.d_v >= 1 && check_stubs != bit_stubs)
            report("infeasible-degrees: n*d_c = " + std::to_string(check_stubs) +
                   " != m*d_v = " + std::to_string(bit_stubs));
    }
    return diag;
}

std::string spec_to_kv(const EnsembleSpec& spec) {
    return std::string("ensemble=") + ensemble_name(spec.kind) + " n=" + std::to_string(spec.n) +
           " m=" + std::to_string(spec.m) + " dc=" + std::to_string(spec.d_c) +
           " dv=" + std::to_string(spec.d_v) + " seed=" + std::to_string(spec.seed);
}

EnsembleSpec spec_from_kv(const std::string& text) {
    EnsembleSpec spec;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eq = text.find('=', pos);
        if (eq == std::string::npos) break;
        const std::string key = text.substr(pos, eq - pos);
        std::size_t end = text.find(' ', eq + 1);
        if (end == std::string::npos) end = text.size();
        const std::string value = text.substr(eq + 1, end - eq - 1);
        if (key == "ensemble") {
            if (value == "check-regular")
                spec.kind = EnsembleKind::CheckRegular;
            else if (value == "bit-check-regular")
                spec.kind = EnsembleKind::BitCheckRegular;
            else
                throw ValidationError("spec_from_kv: unknown ensemble '" + value + "'");
        } else if (key == "n") {
            spec.n = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "m") {
            spec.m = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "dc") {
            spec.d_c = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "dv") {
            spec.d_v = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "seed") {
            spec.seed = std::stoull(value);
        } else {
            throw ValidationError("spec_from_kv: unknown key '" + key + "'");
        }
        pos = end + (end < text.size() ? 1 : 0);
    }
    return spec;
}

namespace {

void require_valid(const EnsembleSpec& spec) {
    const SpecDiagnostics diag = validate_spec(spec);
    if (!diag.ok) {
        std::string all;
        for (const auto& issue : diag.issues) {
            if (!all.empty()) all += "; ";
            all += issue;
        }
        throw ValidationError("ensemble spec: " + all);
    }
}

}  // namespace

GeneratorMatrix sample_check_regular(const EnsembleSpec& spec) {
    if (spec.kind != EnsembleKind::CheckRegular)
        throw ValidationError("sample_check_regular: wrong ensemble kind");
    require_valid(spec);
    Rng rng(spec.seed);
    std::vector<std::vector<std::uint32_t>> rows(spec.n);
    for (std::uint32_t i = 0; i < spec.n; ++i) {
        rows[i].resize(spec.d_c);
        for (std::uint32_t e = 0; e < spec.d_c; ++e)
            rows[i][e] = static_cast<std::uint32_t>(rng.below(spec.m));
    }
    return GeneratorMatrix(spec.n, spec.m, std::move(rows));
}

GeneratorMatrix sample_bit_check_regular(const EnsembleSpec& spec) {
    if (spec.kind != EnsembleKind::BitCheckRegular)
        throw ValidationError("sample_bit_check_regular: wrong ensemble kind");
    require_valid(spec);
    Rng rng(spec.seed);
    // One stub per bit slot: bit b owns stubs [b*d_v, (b+1)*d_v). A uniform
    // shuffle of the stub array is a uniform permutation of the d_c*n edges;
    // check i takes stubs [i*d_c, (i+1)*d_c) in order.
    const std::size_t edges = std::size_t{spec.n} * spec.d_c;
    std::vector<std::uint32_t> stubs(edges);
    for (std::size_t s = 0; s < edges; ++s)
        stubs[s] = static_cast<std::uint32_t>(s / spec.d_v);
    rng.shuffle(std::span<std::uint32_t>(stubs));
    std::vector<std::vector<std::uint32_t>> rows(spec.n);
    for (std::uint32_t i = 0; i < spec.n; ++i)
        rows[i].assign(stubs.begin() + std::size_t{i} * spec.d_c,
                       stubs.begin() + std::size_t{i + 1} * spec.d_c);
    return GeneratorMatrix(spec.n, spec.m, std::move(rows));
}

GeneratorMatrix sample(const EnsembleSpec& spec) {
    return spec.kind == EnsembleKind::CheckRegular ? sample_check_regular(spec)
                                                   : sample_bit_check_regular(spec);
}

}  // namespace ldgm
