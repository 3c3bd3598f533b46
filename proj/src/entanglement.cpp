#include "xxzent/entanglement.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xxzent {

namespace {

// index of the local pair state: 0 = up-up, 1 = up-down, 2 = down-up, 3 = down-down
inline int pair_index(Config c, std::size_t i, std::size_t j) {
    const int si_down = ((c >> i) & 1U) ? 0 : 1;
    const int sj_down = ((c >> j) & 1U) ? 0 : 1;
    return 2 * si_down + sj_down;
}

inline Config with_pair(Config c, std::size_t i, std::size_t j, int pair) {
    const Config mi = Config{1} << i;
    const Config mj = Config{1} << j;
    c &= ~(mi | mj);
    if ((pair & 2) == 0) c |= mi;
    if ((pair & 1) == 0) c |= mj;
    return c;
}

void check_sites(const SectorBasis& basis, std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("two-site quantities need distinct sites");
    const auto n = static_cast<std::size_t>(basis.sites());
    if (i >= n || j >= n) throw std::out_of_range("site index out of range");
}

}  // namespace

Eigen::Matrix4cd TwoSiteRDM::to_matrix() const {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = u_plus;
    m(1, 1) = w1;
    m(1, 2) = z;
    m(2, 1) = std::conj(z);
    m(2, 2) = w2;
    m(3, 3) = u_minus;
    return m;
}

Eigen::Matrix4cd reduced_density_matrix(std::span<const double> amplitudes,
                                        const SectorBasis& basis, std::size_t i, std::size_t j) {
    check_sites(basis, i, j);
    if (amplitudes.size() != basis.size()) {
        throw std::invalid_argument("amplitude vector does not match the basis");
    }
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const double psi_a = amplitudes[a];
        if (psi_a == 0.0) continue;
        const Config c = basis.state(a);
        const int row = pair_index(c, i, j);
        for (int col = 0; col < 4; ++col) {
            const std::size_t b = basis.index_of(with_pair(c, i, j, col));
            if (b == basis.size()) continue;
            rho(row, col) += psi_a * amplitudes[b];
        }
    }
    return rho.cast<std::complex<double>>();
}

TwoSiteRDM two_site_rdm(const GroundState& state, const SectorBasis& basis, std::size_t i,
                        std::size_t j) {
    const auto rho = reduced_density_matrix(state.vector, basis, i, j);
    static constexpr std::array<std::array<bool, 4>, 4> in_block{{{true, false, false, false},
                                                                  {false, true, true, false},
                                                                  {false, true, true, false},
                                                                  {false, false, false, true}}};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (!in_block[r][c] && std::abs(rho(r, c)) > 1e-12) {
                throw std::domain_error("density matrix has weight outside the S^z block pattern");
            }
        }
    }
    TwoSiteRDM out;
    out.u_plus = rho(0, 0).real();
    out.w1 = rho(1, 1).real();
    out.w2 = rho(2, 2).real();
    out.u_minus = rho(3, 3).real();
    out.z = rho(1, 2);
    return out;
}

void validate(const TwoSiteRDM& rdm) {
    const double trace = rdm.u_plus + rdm.w1 + rdm.w2 + rdm.u_minus;
    std::ostringstream os;
    os.precision(17);
    if (std::abs(trace - 1.0) > 1e-12) {
        os << "density matrix trace " << trace << " differs from 1";
        throw std::domain_error(os.str());
    }
    for (double d : {rdm.u_plus, rdm.w1, rdm.w2, rdm.u_minus}) {
        if (d < -1e-14) {
            os << "negative diagonal entry " << d;
            throw std::domain_error(os.str());
        }
    }
    if (rdm.w1 * rdm.w2 - std::norm(rdm.z) < -psd_tolerance) {
        os << "density matrix is not positive semidefinite (w1 w2 - |z|^2 = "
           << rdm.w1 * rdm.w2 - std::norm(rdm.z) << ")";
        throw std::domain_error(os.str());
    }
}

BondCorrelators correlators(const GroundState& state, const SectorBasis& basis, const Bond& bond) {
    check_sites(basis, bond.i, bond.j);
    if (state.vector.size() != basis.size()) {
        throw std::invalid_argument("state does not match the basis");
    }
    const Config mask = (Config{1} << bond.i) | (Config{1} << bond.j);
    double zz = 0.0;
    double flip = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const Config c = basis.state(a);
        const double psi = state.vector[a];
        const bool anti = (((c >> bond.i) ^ (c >> bond.j)) & 1U) != 0;
        zz += (anti ? -0.25 : 0.25) * psi * psi;
        if (anti) flip += psi * state.vector[basis.index_of(c ^ mask)];
    }
    // <Sx Sx + Sy Sy> = <S+S- + S-S+>/2, split evenly between x and y
    const double transverse = 0.5 * flip;
    return {0.5 * transverse, 0.5 * transverse, zz};
}

BondCorrelators bond_averaged_correlators(const GroundState& state, const SectorBasis& basis,
                                          const Lattice& lattice) {
    if (lattice.bond_count() == 0) throw std::invalid_argument("lattice has no bonds");
    BondCorrelators sum;
    for (const auto& b : lattice.bonds()) {
        const auto g = correlators(state, basis, b);
        sum.gxx += g.gxx;
        sum.gyy += g.gyy;
        sum.gzz += g.gzz;
    }
    const auto nb = static_cast<double>(lattice.bond_count());
    return {sum.gxx / nb, sum.gyy / nb, sum.gzz / nb};
}

double concurrence_block(const TwoSiteRDM& rdm) {
    validate(rdm);
    const double pp = std::max(rdm.u_plus * rdm.u_minus, 0.0);
    return 2.0 * std::max(std::abs(rdm.z) - std::sqrt(pp), 0.0);
}

double concurrence_corr(const BondCorrelators& g) {
    return 2.0 * std::max(std::abs(g.gxx + g.gyy) - g.gzz - 0.25, 0.0);
}

double wootters_concurrence(const Eigen::Matrix4cd& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > psd_tolerance) {
        throw std::domain_error("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > psd_tolerance) {
        throw std::domain_error("density matrix trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
    if (es.eigenvalues().minCoeff() < -psd_tolerance) {
        throw std::domain_error("density matrix is not positive semidefinite");
    }
    const Eigen::Vector4d root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::Matrix4cd sqrt_rho = es.eigenvectors() * root.asDiagonal() *
                                      es.eigenvectors().adjoint();

    // sigma_y (x) sigma_y is real: antidiagonal (-1, 1, 1, -1)
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4cd sqrt_flipped = yy * sqrt_rho.conjugate() * yy;

    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(sqrt_rho * sqrt_flipped);
    const auto& l = svd.singularValues();  // decreasing
    return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

double concurrence_from_energy(double eps0, double gzz, double delta) {
    return 2.0 * std::max(-eps0 - 0.25 + (delta - 1.0) * gzz, 0.0);
}

}  // namespace xxzent
