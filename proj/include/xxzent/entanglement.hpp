#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Core>

#include "xxzent/basis.hpp"
#include "xxzent/eigensolver.hpp"
#include "xxzent/lattice.hpp"

namespace xxzent {

inline constexpr double psd_tolerance = 1e-12;

/// Two-spin density matrix in the S^z-conserving block form, basis order
/// {up-up, up-down, down-up, down-down} with the first spin on site i:
///
///   [ u+  0   0   0  ]
///   [ 0   w1  z   0  ]
///   [ 0   z*  w2  0  ]
///   [ 0   0   0   u- ]
struct TwoSiteRDM {
    double u_plus = 0.0;
    double w1 = 0.0;
    double w2 = 0.0;
    double u_minus = 0.0;
    std::complex<double> z{0.0, 0.0};

    Eigen::Matrix4cd to_matrix() const;
};

/// <S^a_i S^a_j> on one bond, spin-1/2 units.
struct BondCorrelators {
    double gxx = 0.0;
    double gyy = 0.0;
    double gzz = 0.0;
};

/// Full 4x4 partial trace of a sector state onto sites (i, j).
Eigen::Matrix4cd reduced_density_matrix(std::span<const double> amplitudes,
                                        const SectorBasis& basis, std::size_t i, std::size_t j);

/// Block entries of the two-site density matrix. Throws if i == j or if the
/// entries outside the block pattern exceed 1e-12.
TwoSiteRDM two_site_rdm(const GroundState& state, const SectorBasis& basis, std::size_t i,
                        std::size_t j);

/// Throws std::domain_error when trace, positivity or the diagonal bound fail.
void validate(const TwoSiteRDM& rdm);

BondCorrelators correlators(const GroundState& state, const SectorBasis& basis, const Bond& bond);

/// Correlators averaged over every bond of the lattice. On a periodic lattice
/// this equals the value on any single bond.
BondCorrelators bond_averaged_correlators(const GroundState& state, const SectorBasis& basis,
                                          const Lattice& lattice);

/// 2 max(|z| - sqrt(u+ u-), 0). Validates the input first.
double concurrence_block(const TwoSiteRDM& rdm);

/// 2 max(|Gxx + Gyy| - Gzz - 1/4, 0).
double concurrence_corr(const BondCorrelators& g);

/// General two-qubit concurrence max(0, l1 - l2 - l3 - l4), with l the
/// decreasing singular values of sqrt(rho) sqrt(rho~), rho~ the spin-flipped
/// state. Rejects non-Hermitian, non-unit-trace or non-PSD input.
double wootters_concurrence(const Eigen::Matrix4cd& rho);

/// Concurrence rebuilt from the energy per bond and Gzz:
///   2 max(-eps0 - 1/4 + (delta - 1) Gzz, 0)
double concurrence_from_energy(double eps0, double gzz, double delta);

}  // namespace xxzent
