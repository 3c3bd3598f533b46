// Randomized invariants across small lattices, sectors and anisotropies.
#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "xxzent/ed.hpp"
#include "xxzent/entanglement.hpp"

using namespace xxzent;

namespace {

struct Case {
    LatticeSpec spec;
    double delta;
    int n_up;
};

std::vector<Case> cases(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ud(-0.5, 3.0);
    const std::vector<LatticeSpec> specs{{1, 4, Boundary::periodic}, {1, 6, Boundary::periodic},
                                         {1, 8, Boundary::periodic}, {1, 10, Boundary::periodic},
                                         {1, 7, Boundary::open},     {1, 9, Boundary::open},
                                         {2, 2, Boundary::periodic}, {2, 3, Boundary::open}};
    std::vector<Case> out;
    for (std::size_t k = 0; k < count; ++k) {
        const auto spec = specs[rng() % specs.size()];
        const int n = static_cast<int>(site_count(spec));
        out.push_back({spec, ud(rng), static_cast<int>(rng() % (n + 1))});
    }
    return out;
}

oracle::Pairs pairs_of(const Lattice& lat) {
    oracle::Pairs p;
    for (const auto& b : lat.bonds()) p.emplace_back(static_cast<int>(b.i), static_cast<int>(b.j));
    return p;
}

}  // namespace

TEST(Properties, SectorGroundEnergyMatchesBruteForce) {
    for (const auto& c : cases(60, 1)) {
        const auto lat = build_lattice(c.spec);
        const int n = static_cast<int>(lat.site_count());
        const double m = c.n_up - n / 2.0;
        const auto sol = solve_ground_state(lat, c.delta, m);
        const auto ref = oracle::ground(n, pairs_of(lat), c.delta, c.n_up);
        EXPECT_NEAR(sol.ground.energy, ref.energy, 1e-10) << lat.describe() << " delta=" << c.delta << " up=" << c.n_up;
        EXPECT_NEAR(sol.ground.magnetization, m, 0);
    }
}

TEST(Properties, SpinFlipSymmetry) {
    for (const auto& c : cases(30, 2)) {
        const auto lat = build_lattice(c.spec);
        const int n = static_cast<int>(lat.site_count());
        const double m = c.n_up - n / 2.0;
        EXPECT_NEAR(solve_ground_state(lat, c.delta, m).ground.energy,
                    solve_ground_state(lat, c.delta, -m).ground.energy, 1e-10);
    }
}

TEST(Properties, IsotropicPointIsRotationInvariant) {
    for (const auto& spec : {LatticeSpec{1, 8, Boundary::periodic}, LatticeSpec{1, 7, Boundary::open},
                             LatticeSpec{2, 4, Boundary::periodic}}) {
        const auto lat = build_lattice(spec);
        const int n = static_cast<int>(lat.site_count());
        const auto sol = solve_ground_state(lat, 1.0, n % 2 ? 0.5 : 0.0);
        for (const auto& b : lat.bonds()) {
            const auto g = correlators(sol.ground, sol.basis, b);
            if (n % 2 == 0) EXPECT_NEAR(g.gxx, g.gzz, 1e-9);
            EXPECT_NEAR(g.gxx, g.gyy, 1e-14);
        }
    }
}

TEST(Properties, EnergyIsSumOfBondCorrelators) {
    for (const auto& c : cases(40, 3)) {
        const auto lat = build_lattice(c.spec);
        const int n = static_cast<int>(lat.site_count());
        const auto sol = solve_ground_state(lat, c.delta, c.n_up - n / 2.0);
        double e = 0;
        for (const auto& b : lat.bonds()) {
            const auto g = correlators(sol.ground, sol.basis, b);
            e += g.gxx + g.gyy + c.delta * g.gzz;
        }
        EXPECT_NEAR(e, sol.ground.energy, 1e-10);
    }
}

TEST(Properties, ConcurrenceRoutesAgreeOnGroundStates) {
    for (const auto& c : cases(40, 4)) {
        const auto lat = build_lattice(c.spec);
        const int n = static_cast<int>(lat.site_count());
        const auto sol = solve_ground_state(lat, c.delta, c.n_up - n / 2.0);
        for (const auto& b : lat.bonds()) {
            const auto rdm = two_site_rdm(sol.ground, sol.basis, b.i, b.j);
            const double block = concurrence_block(rdm);
            // the correlator form assumes u+ = u-, which holds in the zero sector only
            if (2 * c.n_up == n) EXPECT_NEAR(block, concurrence_corr(correlators(sol.ground, sol.basis, b)), 1e-10);
            EXPECT_NEAR(block, wootters_concurrence(reduced_density_matrix(sol.ground.vector, sol.basis, b.i, b.j)),
                        1e-10);
        }
    }
}

TEST(Properties, GroundVectorNormalizedAndPhased) {
    for (const auto& c : cases(30, 5)) {
        const auto lat = build_lattice(c.spec);
        const int n = static_cast<int>(lat.site_count());
        const auto g = solve_ground_state(lat, c.delta, c.n_up - n / 2.0).ground;
        double s = 0;
        for (double x : g.vector) s += x * x;
        EXPECT_NEAR(s, 1.0, 1e-12);
        const auto big = std::max_element(g.vector.begin(), g.vector.end(),
                                          [](double a, double b) { return std::abs(a) < std::abs(b); });
        EXPECT_GT(*big, 0.0);
    }
}
