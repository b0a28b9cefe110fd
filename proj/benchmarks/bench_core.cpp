#include <benchmark/benchmark.h>

#include "ldgm/certificate.hpp"
#include "ldgm/encoders.hpp"
#include "ldgm/ensembles.hpp"
#include "ldgm/gray_scan.hpp"
#include "ldgm/hamming.hpp"
#include "ldgm/overlap.hpp"

namespace {

ldgm::GeneratorMatrix make_code(std::uint32_t n, std::uint32_t m, std::uint32_t d_c,
                                std::uint64_t seed) {
    ldgm::EnsembleSpec spec{ldgm::EnsembleKind::CheckRegular, n, m, d_c, 0, seed};
    return ldgm::sample_check_regular(spec);
}

void BM_gray_scan(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    const ldgm::GeneratorMatrix g = make_code(2 * m, m, 3, 17);
    const ldgm::CodewordScan scan(g);
    for (auto _ : state) {
        std::uint64_t acc = 0;
        scan.run([&](std::uint64_t, const std::uint64_t* x) { acc ^= x[0]; });
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << m));
}
BENCHMARK(BM_gray_scan)->Arg(16)->Arg(20)->Arg(22);

void BM_ml_encode(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    const ldgm::GeneratorMatrix g = make_code(2 * m, m, 3, 17);
    ldgm::BitVector source(2 * m);
    for (std::size_t i = 0; i < source.length(); i += 3) source.set(i, true);
    for (auto _ : state) {
        auto result = ldgm::ml_encode(g, source, 1);
        benchmark::DoNotOptimize(result.distortion_bits);
    }
}
BENCHMARK(BM_ml_encode)->Arg(16)->Arg(20);

void BM_ball_enumeration(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto r = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) {
        std::uint64_t acc = 0;
        ldgm::for_each_ball_offset(n, r, [&](std::uint64_t off) { acc ^= off; });
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(ldgm::ball_size(n, r)));
}
BENCHMARK(BM_ball_enumeration)->Args({16, 4})->Args({20, 5})->Args({24, 6});

void BM_sample_check_regular(benchmark::State& state) {
    ldgm::EnsembleSpec spec{ldgm::EnsembleKind::CheckRegular, 3000, 1500, 4, 0, 1};
    for (auto _ : state) {
        spec.seed++;
        auto g = ldgm::sample_check_regular(spec);
        benchmark::DoNotOptimize(g.checks());
    }
}
BENCHMARK(BM_sample_check_regular);

void BM_sample_bit_check_regular(benchmark::State& state) {
    ldgm::EnsembleSpec spec{ldgm::EnsembleKind::BitCheckRegular, 3000, 2250, 3, 4, 1};
    for (auto _ : state) {
        spec.seed++;
        auto g = ldgm::sample_bit_check_regular(spec);
        benchmark::DoNotOptimize(g.checks());
    }
}
BENCHMARK(BM_sample_bit_check_regular);

void BM_free_bits_certificate(benchmark::State& state) {
    const ldgm::GeneratorMatrix g = make_code(3000, 1500, 4, 23);
    const auto radius = ldgm::HammingRadius::from_distortion(0.2, 3000);
    for (auto _ : state) {
        auto cert = ldgm::free_bits_certificate(g, radius);
        benchmark::DoNotOptimize(cert.free_count);
    }
}
BENCHMARK(BM_free_bits_certificate);

void BM_overlap_report(benchmark::State& state) {
    const ldgm::GeneratorMatrix g = make_code(12, 6, 3, 29);
    const auto radius = ldgm::HammingRadius::from_distortion(0.25, 12);
    for (auto _ : state) {
        auto report = ldgm::overlap_report(g, radius);
        benchmark::DoNotOptimize(report.W);
    }
}
BENCHMARK(BM_overlap_report);

}  // namespace

BENCHMARK_MAIN();
