#include "xxzent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xxzent/analysis.hpp"
#include "xxzent/ed.hpp"
#include "xxzent/entanglement.hpp"
#include "xxzent/spinwave.hpp"

namespace xxzent {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

CheckResult upper_bound(std::string suite, std::string name, double measured, double tol) {
    return {std::move(suite), std::move(name), measured, tol, measured <= tol, "<="};
}

CheckResult lower_bound(std::string suite, std::string name, double measured, double bound) {
    return {std::move(suite), std::move(name), measured, bound, measured > bound, ">"};
}

std::string label(const Lattice& lat, double delta) {
    return lat.describe() + " delta=" + fmt(delta);
}

void ed_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
    HamiltonianOptions hopts;
    hopts.flip_ising_sign = opt.inject_ising_sign_fault;
    for (const auto& spec : opt.lattices) {
        const auto lat = build_lattice(spec);
        const auto basis = enumerate_basis(static_cast<int>(lat.site_count()), 0.0);
        for (double delta : {0.5, 1.0, 1.5}) {
            const auto h = build_hamiltonian(lat, delta, basis, hopts);
            const auto g = lanczos_ground(h, opt.solver);
            out.push_back(upper_bound("ed", "lanczos residual " + label(lat, delta), g.residual,
                                      opt.solver.tol));
            if (h.dimension() <= 4000) {
                const auto d = dense_ground_oracle(h);
                out.push_back(upper_bound("ed", "lanczos vs dense " + label(lat, delta),
                                          std::abs(g.energy - d.energy), 1e-9));
            }
        }
        const auto sectors = sector_ground_energies(lat, 1.0, {}, opt.solver);
        double others = sectors.size() > 1 ? sectors[1].energy : 0.0;
        for (std::size_t k = 1; k < sectors.size(); ++k) others = std::min(others, sectors[k].energy);
        out.push_back(upper_bound("ed", "M=0 holds the global ground state " + label(lat, 1.0),
                                  sectors[0].energy - others, 1e-10));
        const auto gap = ground_state_gap(lat, 1.0, 0.0, opt.solver);
        out.push_back(lower_bound("ed", "sector gap " + label(lat, 1.0), gap.gap, 0.0));
    }
}

void entanglement_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
    HamiltonianOptions hopts;
    hopts.flip_ising_sign = opt.inject_ising_sign_fault;
    for (const auto& spec : opt.lattices) {
        const auto lat = build_lattice(spec);
        for (double delta : {0.0, 0.5, 1.0, 1.5, 2.0}) {
            const auto sol = solve_ground_state(lat, delta, 0.0, opt.solver, hopts);
            const auto& bond = lat.bonds().front();
            const auto rdm = two_site_rdm(sol.ground, sol.basis, bond.i, bond.j);
            const auto g = correlators(sol.ground, sol.basis, bond);
            const double eps0 = sol.ground.energy / static_cast<double>(lat.bond_count());
            const double routes[] = {
                concurrence_block(rdm), concurrence_corr(g),
                concurrence_from_energy(eps0, g.gzz, delta),
                wootters_concurrence(reduced_density_matrix(sol.ground.vector, sol.basis, bond.i,
                                                            bond.j))};
            const auto [lo, hi] = std::minmax_element(std::begin(routes), std::end(routes));
            out.push_back(upper_bound("entanglement", "route agreement " + label(lat, delta),
                                      *hi - *lo, 1e-10));
            if (delta > 0) {
                out.push_back(upper_bound("entanglement", "correlators negative " + label(lat, delta),
                                          std::max({g.gxx, g.gyy, g.gzz}), 0.0));
            }
        }
    }
}

void analysis_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
    for (const auto& spec : opt.lattices) {
        EdModel model;
        model.lattice = spec;
        model.solver = opt.solver;
        model.hamiltonian.flip_ising_sign = opt.inject_ising_sign_fault;
        const auto lat = build_lattice(spec);
        const auto grid = uniform_grid(0.0, 2.0, 0.1);
        const auto curve = scan(model, grid);
        if (!curve.complete()) {
            out.push_back({"analysis", "scan " + lat.describe(), 0, 0, false, "solver failure"});
            continue;
        }
        const auto conc = concavity_check(curve);
        out.push_back(upper_bound("analysis", "E0 concavity " + lat.describe(),
                                  conc.max_second_difference, 1e-10));
        const auto ext = extremum_and_derivative(curve);
        out.push_back(upper_bound("analysis", "argmax at delta=1 " + lat.describe(),
                                  std::abs(ext.argmax - 1.0), 1e-12));
        for (double delta : {0.5, 1.5}) {
            out.push_back(upper_bound("analysis", "Hellmann-Feynman " + label(lat, delta),
                                      hellmann_feynman_residual(model, delta, 1e-4), 1e-7));
        }
    }
}

double cusp_jump(int dimension, int kgrid, double step) {
    SpinWaveParams p;
    p.dimension = dimension;
    p.kgrid = kgrid;
    const double c0 = sw_concurrence(1.0, p);
    const double right = (sw_concurrence(1.0 + step, p) - c0) / step;
    const double left = (c0 - sw_concurrence(1.0 - step, p)) / step;
    return std::abs(right - left);
}

void spinwave_suite(const VerifyOptions&, std::vector<CheckResult>& out) {
    for (int d : {2, 3}) {
        SpinWaveParams p;
        p.dimension = d;
        const std::string tag = std::to_string(d) + "D kgrid=" + std::to_string(p.resolved_kgrid());
        for (double delta : {0.5, 1.0, 2.0}) {
            out.push_back(upper_bound("spinwave", "Bogoliubov constraints " + tag + " delta=" + fmt(delta),
                                      bogoliubov_max_violation(delta, p), 1e-12));
        }
        const double cont = std::abs(sw_energy_density_ising(1.0, p).per_site -
                                     sw_energy_density_planar(1.0, p).per_site);
        out.push_back(upper_bound("spinwave", "branch continuity " + tag, cont, 1e-8));

        const int g = p.resolved_kgrid();
        const double j1 = cusp_jump(d, g, 0.01);
        const double j2 = cusp_jump(d, 2 * g, 0.01);
        out.push_back(lower_bound("spinwave", "cusp jump " + tag, j1, 0.0));
        out.push_back(upper_bound("spinwave", "cusp stable under k-grid doubling " + tag,
                                  std::abs(j2 - j1) / j1, 0.05));

        const auto curve = scan(p, uniform_grid(0.9, 1.1, 0.01));
        const auto ext = extremum_and_derivative(curve);
        out.push_back(upper_bound("spinwave", "argmax at delta=1 " + tag,
                                  std::abs(ext.argmax - 1.0), 1e-12));
    }
}

}  // namespace

const std::vector<std::string>& verification_suites() {
    static const std::vector<std::string> names{"ed", "entanglement", "analysis", "spinwave"};
    return names;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    for (const auto& s : options.suites) {
        const auto& all = verification_suites();
        if (std::find(all.begin(), all.end(), s) == all.end()) {
            throw std::invalid_argument("unknown verification suite '" + s + "'");
        }
    }
    auto wanted = [&](const std::string& s) {
        return options.suites.empty() || options.suites.count(s) > 0;
    };
    std::vector<CheckResult> out;
    if (wanted("ed")) ed_suite(options, out);
    if (wanted("entanglement")) entanglement_suite(options, out);
    if (wanted("analysis")) analysis_suite(options, out);
    if (wanted("spinwave")) spinwave_suite(options, out);
    return out;
}

}  // namespace xxzent
