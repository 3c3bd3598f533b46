#include "xxzent/spinwave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "xxzent/entanglement.hpp"
#include "xxzent/lattice.hpp"

namespace xxzent {

namespace {

constexpr double iso_tolerance = 1e-12;

bool is_isotropic(double delta) { return std::abs(delta - 1.0) <= iso_tolerance; }

void check_params(const SpinWaveParams& p) {
    if (p.dimension < 2 || p.dimension > 3) {
        throw std::invalid_argument("spin-wave theory is implemented for d = 2 and d = 3 only");
    }
    if (!(p.spin > 0.0)) throw std::invalid_argument("spin must be positive");
    if (p.resolved_kgrid() < 2) throw std::invalid_argument("k-grid needs at least 2 points");
    if (!(p.fd_step > 0.0) || p.fd_step > 0.1) {
        throw std::invalid_argument("finite-difference step must be in (0, 0.1]");
    }
}

SpinWaveEnergy finish(double per_site, int dimension, Branch branch) {
    // z/2 = d bonds per site
    return {per_site, per_site / dimension, branch};
}

}  // namespace

std::string to_string(Branch b) { return b == Branch::ising ? "ising" : "planar"; }

Branch branch_for(double delta) { return delta >= 1.0 - iso_tolerance ? Branch::ising : Branch::planar; }

int default_kgrid(int dimension) { return dimension == 3 ? 96 : 512; }

BzGrid::BzGrid(int dimension, int points_per_direction) : dimension_(dimension) {
    if (dimension < 1 || dimension > 3) throw std::invalid_argument("BZ dimension must be 1..3");
    if (points_per_direction < 1) throw std::invalid_argument("BZ grid needs points");
    const double pi = std::numbers::pi;
    momenta_.resize(static_cast<std::size_t>(points_per_direction));
    cosines_.resize(momenta_.size());
    for (int n = 0; n < points_per_direction; ++n) {
        const double k = -pi + pi * (2.0 * n + 1.0) / points_per_direction;
        momenta_[static_cast<std::size_t>(n)] = k;
        cosines_[static_cast<std::size_t>(n)] = std::cos(k);
    }
}

std::size_t BzGrid::size() const noexcept {
    std::size_t n = 1;
    for (int m = 0; m < dimension_; ++m) n *= momenta_.size();
    return n;
}

double gamma(std::span<const double> k, int coordination) {
    if (coordination <= 0) throw std::invalid_argument("coordination number must be positive");
    double s = 0.0;
    for (double km : k) s += std::cos(km);
    return 2.0 * s / coordination;
}

BogoliubovFactors bogoliubov_factors(double x_gamma) {
    if (!(std::abs(x_gamma) < 1.0 - 1e-12)) {
        throw std::domain_error("Bogoliubov transformation is singular for |x gamma| >= 1");
    }
    const double root = std::sqrt(1.0 - x_gamma * x_gamma);
    // (1/root - 1)/2 rewritten without the cancellation at small x gamma
    const double v2 = 0.5 * x_gamma * x_gamma / (root * (1.0 + root));
    const double u2 = 1.0 + v2;
    return {std::sqrt(u2), std::copysign(std::sqrt(v2), x_gamma)};
}

double bogoliubov_max_violation(double delta, const SpinWaveParams& params) {
    check_params(params);
    const BzGrid grid(params.dimension, params.resolved_kgrid());
    const Branch branch = branch_for(delta);
    double worst = 0.0;
    grid.average([&](double g) {
        // planar branch: the quadratic form is (1 + y g) a+a + (x g / 2)(aa + a+a+)
        const double t = branch == Branch::ising ? g / delta
                                                 : 0.5 * (1.0 + delta) * g / (1.0 + 0.5 * (1.0 - delta) * g);
        const auto f = bogoliubov_factors(t);
        const double norm = f.u * f.u - f.v * f.v - 1.0;
        const double offdiag = 0.5 * t * (f.u * f.u + f.v * f.v) - f.u * f.v;
        worst = std::max({worst, std::abs(norm), std::abs(offdiag)});
        return 0.0;
    });
    return worst;
}

SpinWaveEnergy sw_energy_density_ising(double delta, const SpinWaveParams& params) {
    check_params(params);
    if (delta < 1.0 - iso_tolerance) {
        throw std::domain_error("Ising-like spin-wave branch needs delta >= 1");
    }
    const BzGrid grid(params.dimension, params.resolved_kgrid());
    const double z = coordination_number(params.dimension);
    const double s = params.spin;
    const double x = 1.0 / delta;
    const double fluct = grid.average([x](double g) {
        return std::sqrt(std::max(0.0, 1.0 - x * x * g * g)) - 1.0;
    });
    const double scaled = -0.5 * z * s * s + 0.5 * z * s * fluct;
    return finish(delta * scaled, params.dimension, Branch::ising);
}

SpinWaveEnergy sw_energy_density_planar(double delta, const SpinWaveParams& params) {
    check_params(params);
    if (delta < 0.0 || delta > 1.0 + iso_tolerance) {
        throw std::domain_error("planar spin-wave branch needs 0 <= delta <= 1");
    }
    const BzGrid grid(params.dimension, params.resolved_kgrid());
    const double z = coordination_number(params.dimension);
    const double s = params.spin;
    const double x = 0.5 * (1.0 + delta);
    const double y = 0.5 * (1.0 - delta);
    const double fluct = grid.average([x, y](double g) {
        const double a = 1.0 + y * g;
        const double r = x * g / a;
        return a * (std::sqrt(std::max(0.0, 1.0 - r * r)) - 1.0);
    });
    return finish(-0.5 * z * s * s + 0.5 * z * s * fluct, params.dimension, Branch::planar);
}

SpinWaveEnergy sw_energy_density(double delta, Branch branch, const SpinWaveParams& params) {
    return branch == Branch::ising ? sw_energy_density_ising(delta, params)
                                   : sw_energy_density_planar(delta, params);
}

double sw_gzz(double delta, const SpinWaveParams& params, Side side) {
    check_params(params);
    const double h = params.fd_step;
    auto eps = [&](Branch b, double d) { return sw_energy_density(d, b, params).per_bond; };
    auto forward = [&](Branch b, double d) {
        return (-3.0 * eps(b, d) + 4.0 * eps(b, d + h) - eps(b, d + 2.0 * h)) / (2.0 * h);
    };
    auto backward = [&](Branch b, double d) {
        return (3.0 * eps(b, d) - 4.0 * eps(b, d - h) + eps(b, d - 2.0 * h)) / (2.0 * h);
    };

    if (is_isotropic(delta)) {
        return side == Side::below ? backward(Branch::planar, 1.0) : forward(Branch::ising, 1.0);
    }
    if (delta < 0.0) throw std::domain_error("spin-wave Gzz needs delta >= 0");
    const Branch b = branch_for(delta);
    if (side == Side::below && b == Branch::ising) {
        throw std::invalid_argument("side=below only applies at delta = 1");
    }
    if (side == Side::above && b == Branch::planar) {
        throw std::invalid_argument("side=above only applies at delta = 1");
    }
    if ((delta - h < 1.0) != (delta + h < 1.0)) {
        throw std::domain_error("finite-difference stencil at delta=" + std::to_string(delta) +
                                " would cross the branch point delta = 1");
    }
    if (b == Branch::planar && delta - h < 0.0) return forward(b, delta);
    return (eps(b, delta + h) - eps(b, delta - h)) / (2.0 * h);
}

SpinWavePoint sw_evaluate(double delta, const SpinWaveParams& params, Side side) {
    if (!(delta > 0.0)) throw std::domain_error("spin-wave concurrence needs delta > 0");
    if (is_isotropic(delta)) delta = 1.0;
    SpinWavePoint p;
    p.delta = delta;
    p.branch = is_isotropic(delta) && side == Side::below ? Branch::planar : branch_for(delta);
    const auto e = sw_energy_density(delta, p.branch, params);
    p.energy_per_site = e.per_site;
    p.energy_per_bond = e.per_bond;
    p.gzz = sw_gzz(delta, params, side);
    p.concurrence = concurrence_from_energy(p.energy_per_bond, p.gzz, delta);
    return p;
}

double sw_concurrence(double delta, const SpinWaveParams& params, Side side) {
    return sw_evaluate(delta, params, side).concurrence;
}

}  // namespace xxzent
