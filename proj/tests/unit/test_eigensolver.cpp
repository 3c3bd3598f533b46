#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "xxzent/eigensolver.hpp"

using namespace xxzent;

TEST(Lanczos, SingletIsExact) {
    const auto lat = build_lattice({1, 2, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 1.0, enumerate_basis(2, 0.0));
    const auto g = lanczos_ground(h);
    EXPECT_NEAR(g.energy, -0.75, 1e-12);
    ASSERT_EQ(g.vector.size(), 2u);
    EXPECT_NEAR(std::abs(g.vector[0]), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(g.vector[0], -g.vector[1], 1e-12);
}

TEST(Lanczos, OneDimensionalSector) {
    const auto lat = build_lattice({1, 4, Boundary::periodic});
    const auto g = lanczos_ground(build_hamiltonian(lat, 1.0, enumerate_basis(4, 2.0)));
    EXPECT_DOUBLE_EQ(g.energy, 1.0);
    EXPECT_DOUBLE_EQ(g.vector[0], 1.0);
}

TEST(Lanczos, FourRing) {
    const auto lat = build_lattice({1, 4, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 1.0, enumerate_basis(4, 0.0));
    EXPECT_NEAR(lanczos_ground(h).energy, -2.0, 1e-12);
    EXPECT_NEAR(dense_ground_oracle(h).energy, -2.0, 1e-12);
}

TEST(Lanczos, TwelveRingAgreesWithDense) {
    const auto lat = build_lattice({1, 12, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 1.0, enumerate_basis(12, 0.0));
    const auto g = lanczos_ground(h);
    EXPECT_NEAR(g.energy, dense_ground_oracle(h).energy, 1e-9);
    EXPECT_LE(g.residual, 1e-10);
    EXPECT_NEAR(g.residual, residual_norm(h, g.vector, g.energy), 1e-13);
}

TEST(Lanczos, ResidualAndPhaseAcrossAnisotropies) {
    const auto lat = build_lattice({1, 10, Boundary::periodic});
    const auto basis = enumerate_basis(10, 0.0);
    for (double delta : {0.0, 0.25, 1.0, 1.75, 3.0}) {
        const auto h = build_hamiltonian(lat, delta, basis);
        const auto g = lanczos_ground(h);
        const auto d = dense_ground_oracle(h);
        EXPECT_NEAR(g.energy, d.energy, 1e-10) << delta;
        EXPECT_LE(g.residual, 1e-10);
        double norm = 0, overlap = 0;
        for (std::size_t k = 0; k < g.vector.size(); ++k) {
            norm += g.vector[k] * g.vector[k];
            overlap += g.vector[k] * d.vector[k];
        }
        EXPECT_NEAR(norm, 1.0, 1e-12);
        EXPECT_NEAR(overlap, 1.0, 1e-9);
    }
}

TEST(Lanczos, DeterministicForSeed) {
    const auto lat = build_lattice({1, 12, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 0.6, enumerate_basis(12, 0.0));
    const auto a = lanczos_ground(h);
    const auto b = lanczos_ground(h);
    EXPECT_EQ(a.energy, b.energy);
    EXPECT_EQ(a.vector, b.vector);
    EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Lanczos, SeedIndependentEnergy) {
    const auto lat = build_lattice({2, 4, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 1.0, enumerate_basis(16, 0.0));
    LanczosOptions o;
    o.seed = 99;
    const auto a = lanczos_ground(h);
    const auto b = lanczos_ground(h, o);
    EXPECT_NEAR(a.energy, b.energy, 1e-11);
    EXPECT_NEAR(a.energy, -11.228483208428, 1e-9);
}

TEST(Lanczos, LowestFewMatchDenseSpectrum) {
    const auto lat = build_lattice({1, 10, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 0.5, enumerate_basis(10, 0.0));
    const auto spec = dense_spectrum(h);
    const auto few = lanczos_lowest(h, 3);
    ASSERT_EQ(few.size(), 3u);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(few[k].energy, spec[k], 1e-9);
}

TEST(Lanczos, IterationCapRaises) {
    const auto lat = build_lattice({1, 14, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 1.0, enumerate_basis(14, 0.0));
    LanczosOptions o;
    o.max_iter = 3;
    o.krylov_dim = 3;
    try {
        lanczos_ground(h, o);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_GT(e.best_estimate().residual, o.tol);
        EXPECT_FALSE(e.best_estimate().vector.empty());
    }
}

TEST(Lanczos, DenseOracleRefusesLargeSectors) {
    const auto lat = build_lattice({2, 4, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 1.0, enumerate_basis(16, 0.0));
    EXPECT_THROW(dense_ground_oracle(h), std::length_error);
}

TEST(Lanczos, FixPhase) {
    std::vector<double> v{0.1, -0.9, 0.3};
    fix_phase(v);
    EXPECT_GT(v[1], 0);
    EXPECT_LT(v[0], 0);
}
