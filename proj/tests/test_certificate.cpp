#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldgm/certificate.hpp"
#include "ldgm/ensembles.hpp"
#include "ldgm/rng.hpp"

using namespace ldgm;

namespace {

GeneratorMatrix example_code() {
    return GeneratorMatrix(4, 2, {{0}, {0}, {}, {1}});
}

GeneratorMatrix random_code(std::uint32_t n, std::uint32_t m, std::uint32_t d_c,
                            std::uint64_t seed) {
    EnsembleSpec spec{EnsembleKind::CheckRegular, n, m, d_c, 0, seed};
    return sample_check_regular(spec);
}

}  // namespace

TEST_CASE("radius n fixes nothing") {
    const GeneratorMatrix g = random_code(10, 6, 2, 3);
    const auto cert = free_bits_certificate(g, HammingRadius::from_bits(10, 10));
    CHECK(cert.fixed_checks.empty());
    CHECK(cert.fixed_bits.empty());
    CHECK(cert.free_count == 6);
}

TEST_CASE("example code at radius 1") {
    const auto cert = free_bits_certificate(example_code(), HammingRadius::from_bits(1, 4));
    CHECK(cert.fixed_checks == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(cert.fixed_bits == std::vector<std::uint32_t>{0, 1});
    CHECK(cert.free_count == 0);
    CHECK(certificate_vs_W_check(example_code(), HammingRadius::from_bits(1, 4)));
}

TEST_CASE("isolated bit is always free") {
    // bit 2 appears in no check
    const GeneratorMatrix g(3, 3, {{0}, {0, 1}, {1}});
    for (std::uint32_t r = 0; r <= 3; ++r) {
        const auto cert = free_bits_certificate(g, HammingRadius::from_bits(r, 3));
        bool bit2_free = false;
        for (auto b : cert.free_bits) bit2_free |= (b == 2);
        CHECK(bit2_free);
    }
}

TEST_CASE("F is nondecreasing in the radius") {
    const GeneratorMatrix g = random_code(14, 8, 3, 77);
    std::uint64_t previous = 0;
    for (std::uint32_t r = 0; r <= 14; ++r) {
        const auto cert = free_bits_certificate(g, HammingRadius::from_bits(r, 14));
        CHECK(cert.free_count >= previous);
        previous = cert.free_count;
    }
}

TEST_CASE("constructive validity: free sweeps vanish on fixed checks") {
    Rng geometry(13);
    for (int i = 0; i < 20; ++i) {
        const std::uint32_t n = 6 + static_cast<std::uint32_t>(geometry.below(6));
        const std::uint32_t m = 3 + static_cast<std::uint32_t>(geometry.below(5));
        const GeneratorMatrix g = random_code(n, m, 2, derive_seed(1000, i));
        const auto radius =
            HammingRadius::from_bits(static_cast<std::uint32_t>(geometry.below(n + 1)), n);
        const auto cert = free_bits_certificate(g, radius);
        REQUIRE(cert.free_count <= 16);
        for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << cert.free_count);
             ++assignment) {
            BitVector z(m);
            for (std::size_t j = 0; j < cert.free_bits.size(); ++j)
                z.set(cert.free_bits[j], (assignment >> j) & 1);
            const BitVector x = g.encode(z);
            for (std::size_t i2 = radius.radius_bits; i2 < n; ++i2) CHECK_FALSE(x.get(i2));
        }
    }
}

TEST_CASE("2^F <= W on random codes") {
    Rng geometry(14);
    for (int i = 0; i < 60; ++i) {
        const std::uint32_t n = 5 + static_cast<std::uint32_t>(geometry.below(10));
        const std::uint32_t m = 2 + static_cast<std::uint32_t>(geometry.below(8));
        const std::uint32_t d_c = 1 + static_cast<std::uint32_t>(geometry.below(3));
        const GeneratorMatrix g = random_code(n, m, d_c, derive_seed(1100, i));
        const auto radius =
            HammingRadius::from_bits(static_cast<std::uint32_t>(geometry.below(n + 1)), n);
        CHECK(certificate_vs_W_check(g, radius));
    }
}

TEST_CASE("adjacency rule: cancelled double edge still fixes the bit") {
    // check 1 selects bit 0 twice; the GF(2) column is zero but the bit is
    // still adjacent "at least once".
    const GeneratorMatrix g(2, 1, {{}, {0, 0}});
    const auto radius = HammingRadius::from_bits(1, 2);

    const auto conservative = free_bits_certificate(g, radius);
    CHECK(conservative.free_count == 0);

    const auto diagnostic =
        free_bits_certificate(g, radius, AdjacencyRule::OddMultiplicity);
    CHECK(diagnostic.free_count == 1);

    // both remain valid lower bounds here: W = 2 (both z encode to 00)
    CHECK(count_W(g, radius) == 2);
}

TEST_CASE("F depends only on adjacency presence, not multiplicity") {
    const GeneratorMatrix once(3, 2, {{0}, {1}, {}});
    const GeneratorMatrix twice(3, 2, {{0, 0, 0}, {1, 1}, {}});
    for (std::uint32_t r = 0; r <= 3; ++r) {
        const auto a = free_bits_certificate(once, HammingRadius::from_bits(r, 3));
        const auto b = free_bits_certificate(twice, HammingRadius::from_bits(r, 3));
        CHECK(a.free_count == b.free_count);
        CHECK(a.fixed_bits == b.fixed_bits);
    }
}
