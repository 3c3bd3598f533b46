#include "xxzent/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "xxzent/basis.hpp"
#include "xxzent/entanglement.hpp"

namespace xxzent {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double grid_tolerance = 1e-9;

double snap(double x) { return std::round(x * 1e12) / 1e12; }

void require_complete(const ConcurrenceCurve& curve) {
    if (!curve.complete()) {
        throw std::invalid_argument("curve has failed samples; analysis needs a complete curve");
    }
}

double uniform_step(const ConcurrenceCurve& curve) {
    const auto& s = curve.samples;
    const double h = s[1].delta - s[0].delta;
    if (!(h > 0)) throw std::invalid_argument("grid must be strictly increasing");
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (std::abs((s[k].delta - s[k - 1].delta) - h) > grid_tolerance * std::max(1.0, h)) {
            throw std::invalid_argument("grid is not uniform");
        }
    }
    return h;
}

ConcurrenceCurve scan_ed(const EdModel& model, std::span<const double> grid) {
    const Lattice lattice = build_lattice(model.lattice);
    const auto basis = enumerate_basis(static_cast<int>(lattice.site_count()), model.magnetization);
    const auto nb = static_cast<double>(lattice.bond_count());

    ConcurrenceCurve curve;
    curve.engine = Engine::ed;
    std::ostringstream prov;
    prov << "ed " << lattice.describe() << " M=" << model.magnetization
         << " tol=" << model.solver.tol << " seed=" << model.solver.seed;
    curve.provenance = prov.str();

    for (double delta : grid) {
        CurveSample s;
        s.delta = delta;
        try {
            const auto h = build_hamiltonian(lattice, delta, basis, model.hamiltonian);
            const auto g = lanczos_ground(h, model.solver);
            const auto corr = bond_averaged_correlators(g, basis, lattice);
            s.energy = g.energy;
            s.energy_per_bond = g.energy / nb;
            s.gzz = corr.gzz;
            s.concurrence = concurrence_corr(corr);
            s.iterations = g.iterations;
            s.residual = g.residual;
        } catch (const ConvergenceError& e) {
            s.ok = false;
            s.error = e.what();
            s.concurrence = s.energy_per_bond = s.gzz = s.energy = nan;
            s.iterations = e.best_estimate().iterations;
            s.residual = e.best_estimate().residual;
        }
        curve.samples.push_back(std::move(s));
    }
    return curve;
}

ConcurrenceCurve scan_spinwave(const SpinWaveParams& params, std::span<const double> grid) {
    for (double d : grid) {
        if (!(d > 0.0)) throw std::invalid_argument("spin-wave scans need delta > 0");
    }
    ConcurrenceCurve curve;
    curve.engine = Engine::spinwave;
    std::ostringstream prov;
    prov << "spinwave d=" << params.dimension << " S=" << params.spin
         << " kgrid=" << params.resolved_kgrid() << " fd_step=" << params.fd_step;
    curve.provenance = prov.str();

    for (double delta : grid) {
        CurveSample s;
        s.delta = delta;
        try {
            const auto p = sw_evaluate(delta, params);
            s.concurrence = p.concurrence;
            s.energy_per_bond = p.energy_per_bond;
            s.gzz = p.gzz;
            s.energy = p.energy_per_site;
        } catch (const std::domain_error& e) {
            // stencil straddling delta = 1 and similar per-point failures
            s.ok = false;
            s.error = e.what();
            s.concurrence = s.energy_per_bond = s.gzz = s.energy = nan;
        }
        curve.samples.push_back(std::move(s));
    }
    return curve;
}

}  // namespace

std::string to_string(Engine e) { return e == Engine::ed ? "ed" : "spinwave"; }

bool ConcurrenceCurve::complete() const {
    return std::all_of(samples.begin(), samples.end(), [](const auto& s) { return s.ok; });
}

std::vector<double> ConcurrenceCurve::deltas() const {
    std::vector<double> d;
    for (const auto& s : samples) d.push_back(s.delta);
    return d;
}

std::vector<double> ConcurrenceCurve::concurrences() const {
    std::vector<double> c;
    for (const auto& s : samples) c.push_back(s.concurrence);
    return c;
}

std::vector<double> uniform_grid(double from, double to, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("step must be positive");
    if (!std::isfinite(from) || !std::isfinite(to) || to < from) {
        throw std::invalid_argument("grid needs from <= to");
    }
    const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    if (n > 10'000'000) throw std::invalid_argument("grid has too many points");
    std::vector<double> g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = snap(from + static_cast<double>(k) * step);
    return g;
}

ConcurrenceCurve scan(const ScanModel& model, std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("empty anisotropy grid");
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) throw std::invalid_argument("grid must be strictly increasing");
    }
    if (const auto* ed = std::get_if<EdModel>(&model)) return scan_ed(*ed, grid);
    return scan_spinwave(std::get<SpinWaveParams>(model), grid);
}

double hellmann_feynman_residual(const EdModel& model, double delta, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("step must be positive");
    const Lattice lattice = build_lattice(model.lattice);
    const auto basis = enumerate_basis(static_cast<int>(lattice.site_count()), model.magnetization);
    auto energy = [&](double d) {
        return lanczos_ground(build_hamiltonian(lattice, d, basis, model.hamiltonian), model.solver);
    };
    const double slope = (energy(delta + h).energy - energy(delta - h).energy) / (2.0 * h);
    const auto g = energy(delta);
    const auto avg = bond_averaged_correlators(g, basis, lattice);
    return std::abs(slope - static_cast<double>(lattice.bond_count()) * avg.gzz);
}

ConcavityReport concavity_check(const ConcurrenceCurve& curve) {
    require_complete(curve);
    if (curve.samples.size() < 3) throw std::invalid_argument("concavity check needs >= 3 samples");
    uniform_step(curve);
    ConcavityReport r;
    r.max_second_difference = -std::numeric_limits<double>::infinity();
    const auto& s = curve.samples;
    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
        const double d2 = s[k + 1].energy - 2.0 * s[k].energy + s[k - 1].energy;
        r.second_differences.push_back(d2);
        r.max_second_difference = std::max(r.max_second_difference, d2);
    }
    return r;
}

ExtremumReport extremum_and_derivative(const ConcurrenceCurve& curve) {
    require_complete(curve);
    const auto& s = curve.samples;
    std::size_t iso = s.size();
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (std::abs(s[k].delta - 1.0) <= 1e-12) iso = k;
    }
    if (iso == s.size()) throw std::invalid_argument("grid does not contain delta = 1");
    if (iso == 0 || iso + 1 == s.size()) {
        throw std::invalid_argument("delta = 1 needs a grid neighbor on each side");
    }
    ExtremumReport r;
    std::size_t best = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k].concurrence > s[best].concurrence) best = k;
    }
    r.argmax = s[best].delta;
    r.left_slope = (s[iso].concurrence - s[iso - 1].concurrence) / (s[iso].delta - s[iso - 1].delta);
    r.right_slope = (s[iso + 1].concurrence - s[iso].concurrence) / (s[iso + 1].delta - s[iso].delta);
    r.cusp = std::abs(r.right_slope - r.left_slope);
    return r;
}

std::vector<double> slope_sign_changes(const ConcurrenceCurve& curve) {
    require_complete(curve);
    const auto& s = curve.samples;
    std::vector<double> changes;
    int prev = 0;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        const double d = s[k + 1].concurrence - s[k].concurrence;
        const int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (sign != 0 && prev != 0 && sign != prev) changes.push_back(s[k].delta);
        if (sign != 0) prev = sign;
    }
    return changes;
}

std::vector<double> slope_identity_residuals(const ConcurrenceCurve& curve) {
    require_complete(curve);
    if (curve.samples.size() < 3) throw std::invalid_argument("need >= 3 samples");
    const double h = uniform_step(curve);
    const auto& s = curve.samples;
    std::vector<double> out;
    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
        const double dc = (s[k + 1].concurrence - s[k - 1].concurrence) / (2.0 * h);
        const double d2e =
            (s[k + 1].energy_per_bond - 2.0 * s[k].energy_per_bond + s[k - 1].energy_per_bond) /
            (h * h);
        out.push_back(std::abs(dc - 2.0 * (s[k].delta - 1.0) * d2e));
    }
    return out;
}

FitResult quadratic_fit_near_iso(const ConcurrenceCurve& curve, double lo, double hi) {
    require_complete(curve);
    if (!(lo < 1.0 && hi > 1.0) || std::abs(lo + hi - 2.0) > 1e-9) {
        throw std::invalid_argument("fit window must be centered at delta = 1");
    }
    std::vector<double> t, c;
    for (const auto& s : curve.samples) {
        if (s.delta >= lo - 1e-12 && s.delta <= hi + 1e-12) {
            t.push_back((s.delta - 1.0) * (s.delta - 1.0));
            c.push_back(s.concurrence);
        }
    }
    if (t.size() < 5) throw std::invalid_argument("fit window holds fewer than 5 samples");
    if (std::set<double>(t.begin(), t.end()).size() < 2) {
        throw std::invalid_argument("degenerate fit window");
    }
    const auto n = static_cast<Eigen::Index>(t.size());
    Eigen::MatrixXd a(n, 2);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, 0) = 1.0;
        a(i, 1) = -t[static_cast<std::size_t>(i)];
        y(i) = c[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd x = a.colPivHouseholderQr().solve(y);
    FitResult r;
    r.coefficients = {x(0), x(1)};
    r.residual_norm = (a * x - y).norm();
    r.relative_residual = y.norm() > 0 ? r.residual_norm / y.norm() : r.residual_norm;
    r.window_lo = lo;
    r.window_hi = hi;
    r.points = t.size();
    return r;
}

FitResult polynomial_inverse_L_fit(std::span<const std::pair<double, double>> values, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    std::set<double> sizes;
    for (const auto& [l, q] : values) {
        if (!(l > 0)) throw std::invalid_argument("system sizes must be positive");
        sizes.insert(l);
    }
    if (sizes.size() < static_cast<std::size_t>(degree) + 1) {
        throw std::invalid_argument("underdetermined fit: " + std::to_string(sizes.size()) +
                                    " distinct sizes for degree " + std::to_string(degree));
    }
    const auto n = static_cast<Eigen::Index>(values.size());
    Eigen::MatrixXd a(n, degree + 1);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& [l, q] = values[static_cast<std::size_t>(i)];
        double p = 1.0;
        for (int k = 0; k <= degree; ++k) {
            a(i, k) = p;
            p /= l;
        }
        y(i) = q;
    }
    const Eigen::VectorXd x = a.colPivHouseholderQr().solve(y);
    FitResult r;
    r.coefficients.assign(x.data(), x.data() + x.size());
    r.residual_norm = (a * x - y).norm();
    r.relative_residual = y.norm() > 0 ? r.residual_norm / y.norm() : r.residual_norm;
    r.window_lo = *sizes.begin();
    r.window_hi = *sizes.rbegin();
    r.points = values.size();
    r.low_confidence = sizes.size() == static_cast<std::size_t>(degree) + 1 || sizes.size() < 3;
    return r;
}

}  // namespace xxzent
