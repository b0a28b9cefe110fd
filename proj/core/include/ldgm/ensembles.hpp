#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldgm/generator_matrix.hpp"
#include "ldgm/rational.hpp"

namespace ldgm {

enum class EnsembleKind { CheckRegular, BitCheckRegular };

const char* ensemble_name(EnsembleKind kind);

// Which random LDGM ensemble to draw from, with its degrees and seed.
//
// CheckRegular: each of the n checks picks d_c bits i.i.d. uniform on [0,m),
// with replacement (d_v unused). BitCheckRegular: a uniformly random perfect
// matching of n*d_c check stubs to m*d_v bit stubs; requires n*d_c == m*d_v.
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::CheckRegular;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint32_t d_c = 0;
    std::uint32_t d_v = 0;  // BitCheckRegular only
    std::uint64_t seed = 0;

    Rational rate() const { return make_rational(m, n); }
};

struct SpecDiagnostics {
    bool ok = true;
    std::vector<std::string> issues;
};

// Reports every violated invariant instead of stopping at the first.
SpecDiagnostics validate_spec(const EnsembleSpec& spec);

// Flat key-value form: "ensemble=... n=... m=... dc=... dv=... seed=...".
// Round-trips exactly.
std::string spec_to_kv(const EnsembleSpec& spec);
EnsembleSpec spec_from_kv(const std::string& text);

// Samplers are pure functions of the spec (including its seed): same spec,
// same code, edge lists in sampling order. Multi-edges from the
// configuration model are kept, not resampled.
GeneratorMatrix sample_check_regular(const EnsembleSpec& spec);
GeneratorMatrix sample_bit_check_regular(const EnsembleSpec& spec);
GeneratorMatrix sample(const EnsembleSpec& spec);

}  // namespace ldgm
