#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace xxzent {

/// Ising-like (order along z, delta >= 1) or planar (order in the xy plane,
/// 0 <= delta <= 1). Both reduce to the same integrand at delta = 1.
enum class Branch { ising, planar };

std::string to_string(Branch b);
Branch branch_for(double delta);

/// Default BZ points per direction: 512 in 2D, 96 in 3D.
int default_kgrid(int dimension);

struct SpinWaveParams {
    int dimension = 2;
    double spin = 0.5;
    int kgrid = 0;         ///< points per direction; 0 selects default_kgrid()
    double fd_step = 1e-4; ///< finite-difference step for Gzz

    int resolved_kgrid() const { return kgrid > 0 ? kgrid : default_kgrid(dimension); }
};

/// Uniform midpoint-shifted grid k = -pi + pi (2n + 1) / G over [-pi, pi)^d,
/// equal weights 1/G^d. The shift keeps k = 0 and k = (pi, ...) off the grid.
class BzGrid {
public:
    BzGrid(int dimension, int points_per_direction);

    int dimension() const noexcept { return dimension_; }
    int points_per_direction() const noexcept { return static_cast<int>(momenta_.size()); }
    std::size_t size() const noexcept;
    double weight() const noexcept { return 1.0 / static_cast<double>(size()); }
    /// Momenta along one direction (same for every direction).
    const std::vector<double>& momenta() const noexcept { return momenta_; }
    /// cos k for every entry of momenta().
    const std::vector<double>& cosines() const noexcept { return cosines_; }

    /// Weighted sum of f(gamma_k) over the grid, compensated summation.
    template <typename F>
    double average(F&& f) const;

private:
    int dimension_;
    std::vector<double> momenta_;
    std::vector<double> cosines_;
};

/// gamma_k = (2/z) sum_m cos k_m.
double gamma(std::span<const double> k, int coordination);

struct BogoliubovFactors {
    double u = 1.0;
    double v = 0.0;
};

/// Solves u^2 - v^2 = 1 and (t/2)(u^2 + v^2) - u v = 0 for t = x gamma_k.
/// Rejects |t| >= 1 - 1e-12.
BogoliubovFactors bogoliubov_factors(double x_gamma);

/// Largest violation of the two Bogoliubov constraints over every grid point
/// for the branch matching delta.
double bogoliubov_max_violation(double delta, const SpinWaveParams& params);

struct SpinWaveEnergy {
    double per_site = 0.0;
    double per_bond = 0.0;
    Branch branch = Branch::ising;
};

/// Ising-like branch (delta >= 1), x = 1/delta. The bracketed spin-wave
/// expression is derived for H/delta, so the result is multiplied by delta.
SpinWaveEnergy sw_energy_density_ising(double delta, const SpinWaveParams& params);

/// Planar branch (0 <= delta <= 1), x = (1 + delta)/2, y = (1 - delta)/2.
SpinWaveEnergy sw_energy_density_planar(double delta, const SpinWaveParams& params);

SpinWaveEnergy sw_energy_density(double delta, Branch branch, const SpinWaveParams& params);

enum class Side { automatic, below, above };

/// Gzz per bond as d(eps0)/d(delta) by finite differences within one branch:
/// central in the interior, second-order one-sided at delta = 1 (side chooses
/// the branch, automatic means above) and near delta = 0. Throws when a
/// central stencil would straddle delta = 1.
double sw_gzz(double delta, const SpinWaveParams& params, Side side = Side::automatic);

struct SpinWavePoint {
    double delta = 0.0;
    Branch branch = Branch::ising;
    double energy_per_site = 0.0;
    double energy_per_bond = 0.0;
    double gzz = 0.0;
    double concurrence = 0.0;
};

/// Energy, Gzz and concurrence at one anisotropy, delta > 0, d >= 2.
SpinWavePoint sw_evaluate(double delta, const SpinWaveParams& params, Side side = Side::automatic);

double sw_concurrence(double delta, const SpinWaveParams& params, Side side = Side::automatic);

// ---------------------------------------------------------------------------

namespace detail {

/// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace detail

template <typename F>
double BzGrid::average(F&& f) const {
    const auto& c = cosines_;
    const double norm = 1.0 / static_cast<double>(dimension_);  // 2/z with z = 2d
    detail::CompensatedSum total;
    if (dimension_ == 1) {
        for (double a : c) total.add(f(norm * a));
    } else if (dimension_ == 2) {
        for (double a : c) {
            detail::CompensatedSum row;
            for (double b : c) row.add(f(norm * (a + b)));
            total.add(row.value());
        }
    } else {
        for (double a : c) {
            detail::CompensatedSum plane;
            for (double b : c) {
                detail::CompensatedSum row;
                const double ab = a + b;
                for (double e : c) row.add(f(norm * (ab + e)));
                plane.add(row.value());
            }
            total.add(plane.value());
        }
    }
    return total.value() * weight();
}

}  // namespace xxzent
