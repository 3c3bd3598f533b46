#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "xxzent/hamiltonian.hpp"

using namespace xxzent;

namespace {

Eigen::MatrixXd dense(const SparseHamiltonian& h) {
    const auto n = static_cast<Eigen::Index>(h.dimension());
    const auto flat = h.to_dense();
    return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        flat.data(), n, n);
}

oracle::Pairs pairs_of(const Lattice& lat) {
    oracle::Pairs p;
    for (const auto& b : lat.bonds()) p.emplace_back(static_cast<int>(b.i), static_cast<int>(b.j));
    return p;
}

}  // namespace

TEST(Hamiltonian, TwoSiteZeroSector) {
    const auto lat = build_lattice({1, 2, Boundary::periodic});
    for (double delta : {0.0, 0.7, 1.0, 2.5}) {
        const auto h = build_hamiltonian(lat, delta, enumerate_basis(2, 0.0));
        const auto m = dense(h);
        // basis order {01, 10}: site 0 up then site 1 up
        EXPECT_DOUBLE_EQ(m(0, 0), -delta / 4);
        EXPECT_DOUBLE_EQ(m(1, 1), -delta / 4);
        EXPECT_DOUBLE_EQ(m(0, 1), 0.5);
        EXPECT_DOUBLE_EQ(m(1, 0), 0.5);
    }
}

TEST(Hamiltonian, TwoSitePolarized) {
    const auto lat = build_lattice({1, 2, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 1.3, enumerate_basis(2, 1.0));
    ASSERT_EQ(h.dimension(), 1u);
    EXPECT_DOUBLE_EQ(dense(h)(0, 0), 1.3 / 4);
}

TEST(Hamiltonian, FourSiteRingLowestIsMinusTwo) {
    const auto lat = build_lattice({1, 4, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 1.0, enumerate_basis(4, 0.0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(h));
    EXPECT_NEAR(es.eigenvalues()(0), -2.0, 1e-12);
}

TEST(Hamiltonian, MatchesBruteForceBlock) {
    for (LatticeSpec spec : {LatticeSpec{1, 6, Boundary::periodic}, LatticeSpec{1, 7, Boundary::open},
                             LatticeSpec{2, 3, Boundary::open}}) {
        const auto lat = build_lattice(spec);
        const int n = static_cast<int>(lat.site_count());
        for (int up = 0; up <= n; ++up) {
            const double delta = 0.37 + 0.2 * up;
            const auto h = build_hamiltonian(lat, delta, SectorBasis(n, up));
            const auto ref = oracle::xxz_block(n, pairs_of(lat), delta, up);
            EXPECT_LT((dense(h) - ref.h).cwiseAbs().maxCoeff(), 1e-14) << lat.describe() << " up=" << up;
        }
    }
}

TEST(Hamiltonian, SymmetricWithHalfFlipEntries) {
    const auto lat = build_lattice({2, 4, Boundary::periodic});
    const auto h = build_hamiltonian(lat, 1.0, enumerate_basis(16, 0.0));
    const auto entries = h.off_diagonal_entries();
    EXPECT_EQ(entries.size(), h.off_diagonal_count());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : entries) {
        EXPECT_DOUBLE_EQ(e.value, 0.5);
        seen.emplace(e.row, e.col);
    }
    for (const auto& e : entries) EXPECT_TRUE(seen.count({e.col, e.row}));
}

TEST(Hamiltonian, MatrixFreeAgreesWithExplicit) {
    const auto lat = build_lattice({1, 12, Boundary::periodic});
    const auto basis = enumerate_basis(12, 0.0);
    HamiltonianOptions free;
    free.explicit_entry_limit = 0;
    const auto a = build_hamiltonian(lat, 0.8, basis);
    const auto b = build_hamiltonian(lat, 0.8, basis, free);
    EXPECT_TRUE(a.is_explicit());
    EXPECT_FALSE(b.is_explicit());
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    std::vector<double> x(a.dimension()), ya(a.dimension()), yb(a.dimension());
    for (auto& v : x) v = nd(rng);
    a.apply(x, ya);
    b.apply(x, yb);
    for (std::size_t k = 0; k < x.size(); ++k) EXPECT_NEAR(ya[k], yb[k], 1e-13);
}

TEST(Hamiltonian, LinearInDelta) {
    const auto lat = build_lattice({1, 8, Boundary::periodic});
    const auto basis = enumerate_basis(8, 0.0);
    const auto h0 = dense(build_hamiltonian(lat, 0.0, basis));
    const auto h1 = dense(build_hamiltonian(lat, 1.0, basis));
    for (double delta : {-0.4, 0.3, 1.7, 3.0}) {
        const auto hd = dense(build_hamiltonian(lat, delta, basis));
        EXPECT_LT((hd - (h0 + delta * (h1 - h0))).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(Hamiltonian, IsingEnergyOfNeelState) {
    const auto lat = build_lattice({1, 8, Boundary::periodic});
    EXPECT_DOUBLE_EQ(ising_energy(lat, 2.0, 0b01010101), -2.0 * 8 / 4);
    EXPECT_DOUBLE_EQ(ising_energy(lat, 2.0, 0b11111111), 2.0 * 8 / 4);
}

TEST(Hamiltonian, FaultInjectionFlipsDiagonal) {
    const auto lat = build_lattice({1, 4, Boundary::periodic});
    HamiltonianOptions o;
    o.flip_ising_sign = true;
    const auto a = build_hamiltonian(lat, 1.0, enumerate_basis(4, 0.0));
    const auto b = build_hamiltonian(lat, 1.0, enumerate_basis(4, 0.0), o);
    for (std::size_t k = 0; k < a.dimension(); ++k) EXPECT_DOUBLE_EQ(a.diagonal()[k], -b.diagonal()[k]);
}
