#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "xxzent/eigensolver.hpp"
#include "xxzent/hamiltonian.hpp"
#include "xxzent/lattice.hpp"
#include "xxzent/spinwave.hpp"

namespace xxzent {

enum class Engine { ed, spinwave };

std::string to_string(Engine e);

/// Exact-diagonalization model: lattice, sector and solver settings.
struct EdModel {
    LatticeSpec lattice;
    double magnetization = 0.0;
    LanczosOptions solver;
    HamiltonianOptions hamiltonian;
};

using ScanModel = std::variant<EdModel, SpinWaveParams>;

struct CurveSample {
    double delta = 0.0;
    double concurrence = 0.0;
    double energy_per_bond = 0.0;
    double gzz = 0.0;
    /// Total ground-state energy for ED; energy per site for spin waves.
    double energy = 0.0;
    bool ok = true;
    std::string error;  ///< set when ok is false
    int iterations = 0;
    double residual = 0.0;
};

struct ConcurrenceCurve {
    Engine engine = Engine::ed;
    std::string provenance;
    std::vector<CurveSample> samples;

    bool complete() const;
    std::vector<double> deltas() const;
    std::vector<double> concurrences() const;
};

/// from, from + step, ..., to (inclusive when reachable), each value rounded
/// to 1e-12 so that grid points such as 1.0 land exactly.
std::vector<double> uniform_grid(double from, double to, double step);

/// One sample per grid value. ED concurrences use bond-averaged correlators,
/// which coincide with any single bond on periodic lattices. A solver failure
/// leaves a sample with ok = false and NaN values instead of dropping it.
ConcurrenceCurve scan(const ScanModel& model, std::span<const double> grid);

/// |(E0(d+h) - E0(d-h)) / 2h - sum_bonds Gzz(d)|
double hellmann_feynman_residual(const EdModel& model, double delta, double h = 1e-4);

struct ConcavityReport {
    std::vector<double> second_differences;
    double max_second_difference = 0.0;
    bool concave(double tol = 1e-10) const { return max_second_difference <= tol; }
};

/// Second central differences of the energy column; needs >= 3 samples on a
/// uniform grid.
ConcavityReport concavity_check(const ConcurrenceCurve& curve);

struct ExtremumReport {
    double argmax = 0.0;
    double left_slope = 0.0;   ///< (C(1) - C(1 - h)) / h
    double right_slope = 0.0;  ///< (C(1 + h) - C(1)) / h
    double cusp = 0.0;         ///< |right - left|
};

/// Discrete argmax and one-sided slopes at delta = 1. The grid must contain 1
/// and a neighbor on each side.
ExtremumReport extremum_and_derivative(const ConcurrenceCurve& curve);

/// Grid points where the forward difference of C changes sign.
std::vector<double> slope_sign_changes(const ConcurrenceCurve& curve);

/// Pointwise |dC/dDelta - 2 (Delta - 1) d^2 eps0 / dDelta^2| at interior
/// points, both derivatives by central differences on the curve's grid.
std::vector<double> slope_identity_residuals(const ConcurrenceCurve& curve);

struct FitResult {
    std::vector<double> coefficients;
    double residual_norm = 0.0;
    /// residual_norm / ||data||
    double relative_residual = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::size_t points = 0;
    bool low_confidence = false;
};

/// Least squares C = C0 - C1 (Delta - 1)^2 on samples inside [lo, hi].
/// coefficients = {C0, C1}.
FitResult quadratic_fit_near_iso(const ConcurrenceCurve& curve, double lo = 0.9, double hi = 1.1);

/// Least squares q(L) = sum_n a_n L^-n, n = 0..degree; a_0 is the L -> inf
/// extrapolation. Flagged low-confidence when the fit has no spare degrees of
/// freedom or fewer than three sizes.
FitResult polynomial_inverse_L_fit(std::span<const std::pair<double, double>> values, int degree);

}  // namespace xxzent
