#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "xxzent/analysis.hpp"
#include "xxzent/basis.hpp"
#include "xxzent/cli.hpp"
#include "xxzent/ed.hpp"
#include "xxzent/entanglement.hpp"
#include "xxzent/lattice.hpp"
#include "xxzent/spinwave.hpp"

namespace py = pybind11;
using namespace xxzent;

namespace {

LanczosOptions solver_options(double tol, int max_iter, std::uint64_t seed) {
    LanczosOptions o;
    o.tol = tol;
    o.max_iter = max_iter;
    o.seed = seed;
    return o;
}

py::dict sample_dict(const CurveSample& s) {
    py::dict d;
    d["delta"] = s.delta;
    d["concurrence"] = s.concurrence;
    d["energy_per_bond"] = s.energy_per_bond;
    d["gzz"] = s.gzz;
    d["energy"] = s.energy;
    d["ok"] = s.ok;
    d["error"] = s.error;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "XXZ ground-state concurrence: exact diagonalization and linear spin waves";
    m.attr("__version__") = version;

    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<GapUndefined>(m, "GapUndefined", PyExc_ValueError);

    // lattice
    py::enum_<Boundary>(m, "Boundary")
        .value("periodic", Boundary::periodic)
        .value("open", Boundary::open);

    py::class_<LatticeSpec>(m, "LatticeSpec")
        .def(py::init([](int dimension, int linear_size, Boundary boundary) {
                 return LatticeSpec{dimension, linear_size, boundary};
             }),
             py::arg("dimension"), py::arg("linear_size"), py::arg("boundary") = Boundary::periodic)
        .def_readwrite("dimension", &LatticeSpec::dimension)
        .def_readwrite("linear_size", &LatticeSpec::linear_size)
        .def_readwrite("boundary", &LatticeSpec::boundary);

    py::class_<Lattice>(m, "Lattice")
        .def_property_readonly("site_count", &Lattice::site_count)
        .def_property_readonly("bond_count", &Lattice::bond_count)
        .def_property_readonly("bonds",
                               [](const Lattice& l) {
                                   std::vector<std::pair<std::size_t, std::size_t>> b;
                                   for (const auto& x : l.bonds()) b.emplace_back(x.i, x.j);
                                   return b;
                               })
        .def_property_readonly("sublattices",
                               [](const Lattice& l) {
                                   std::vector<int> s;
                                   for (auto x : l.sublattices()) s.push_back(static_cast<int>(x));
                                   return s;
                               })
        .def_property_readonly("warnings", &Lattice::warnings)
        .def("coordinates", &Lattice::coordinates)
        .def("__repr__", [](const Lattice& l) { return "<Lattice " + l.describe() + ">"; });

    m.def("build_lattice", &build_lattice, py::arg("spec"));
    m.def("coordination_number", &coordination_number);

    // ed engine
    py::class_<SectorBasis>(m, "SectorBasis")
        .def_property_readonly("sites", &SectorBasis::sites)
        .def_property_readonly("n_up", &SectorBasis::n_up)
        .def_property_readonly("magnetization", &SectorBasis::magnetization)
        .def("__len__", &SectorBasis::size)
        .def_property_readonly("states",
                               [](const SectorBasis& b) {
                                   auto s = b.states();
                                   return std::vector<Config>(s.begin(), s.end());
                               })
        .def("index_of", [](const SectorBasis& b, Config c) -> py::object {
            const auto i = b.index_of(c);
            if (i == b.size()) return py::none();
            return py::int_(i);
        });
    m.def("enumerate_basis", &enumerate_basis, py::arg("sites"), py::arg("magnetization"));

    py::class_<GroundState>(m, "GroundState")
        .def_readonly("energy", &GroundState::energy)
        .def_readonly("vector", &GroundState::vector)
        .def_readonly("magnetization", &GroundState::magnetization)
        .def_readonly("residual", &GroundState::residual)
        .def_readonly("iterations", &GroundState::iterations)
        .def_readonly("seed", &GroundState::seed);

    m.def(
        "solve_ground_state",
        [](const Lattice& lat, double delta, double magnetization, double tol, int max_iter,
           std::uint64_t seed) {
            auto sol = solve_ground_state(lat, delta, magnetization,
                                          solver_options(tol, max_iter, seed));
            return std::make_pair(sol.basis, sol.ground);
        },
        py::arg("lattice"), py::arg("delta"), py::arg("magnetization") = 0.0,
        py::arg("tol") = 1e-10, py::arg("max_iter") = 20000, py::arg("seed") = default_seed,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "dense_ground_energy",
        [](const Lattice& lat, double delta, double magnetization) {
            const auto basis = enumerate_basis(static_cast<int>(lat.site_count()), magnetization);
            return dense_ground_oracle(build_hamiltonian(lat, delta, basis)).energy;
        },
        py::arg("lattice"), py::arg("delta"), py::arg("magnetization") = 0.0);

    py::class_<SectorGap>(m, "SectorGap")
        .def_readonly("e0", &SectorGap::e0)
        .def_readonly("e1", &SectorGap::e1)
        .def_readonly("gap", &SectorGap::gap);
    m.def(
        "ground_state_gap",
        [](const Lattice& lat, double delta, double magnetization) {
            return ground_state_gap(lat, delta, magnetization);
        },
        py::arg("lattice"), py::arg("delta"), py::arg("magnetization") = 0.0,
        py::call_guard<py::gil_scoped_release>());

    // entanglement
    py::class_<TwoSiteRDM>(m, "TwoSiteRDM")
        .def(py::init<>())
        .def_readwrite("u_plus", &TwoSiteRDM::u_plus)
        .def_readwrite("w1", &TwoSiteRDM::w1)
        .def_readwrite("w2", &TwoSiteRDM::w2)
        .def_readwrite("u_minus", &TwoSiteRDM::u_minus)
        .def_readwrite("z", &TwoSiteRDM::z)
        .def("to_matrix", &TwoSiteRDM::to_matrix);

    py::class_<BondCorrelators>(m, "BondCorrelators")
        .def(py::init([](double gxx, double gyy, double gzz) {
                 return BondCorrelators{gxx, gyy, gzz};
             }),
             py::arg("gxx"), py::arg("gyy"), py::arg("gzz"))
        .def_readwrite("gxx", &BondCorrelators::gxx)
        .def_readwrite("gyy", &BondCorrelators::gyy)
        .def_readwrite("gzz", &BondCorrelators::gzz);

    m.def("two_site_rdm", &two_site_rdm, py::arg("state"), py::arg("basis"), py::arg("i"),
          py::arg("j"));
    m.def(
        "correlators",
        [](const GroundState& s, const SectorBasis& b, std::size_t i, std::size_t j) {
            return correlators(s, b, Bond{i, j});
        },
        py::arg("state"), py::arg("basis"), py::arg("i"), py::arg("j"));
    m.def(
        "reduced_density_matrix",
        [](const GroundState& s, const SectorBasis& b, std::size_t i, std::size_t j) {
            return Eigen::Matrix4cd(reduced_density_matrix(s.vector, b, i, j));
        },
        py::arg("state"), py::arg("basis"), py::arg("i"), py::arg("j"));
    m.def("concurrence_block", &concurrence_block);
    m.def("concurrence_corr", &concurrence_corr);
    m.def("wootters_concurrence", &wootters_concurrence);
    m.def("concurrence_from_energy", &concurrence_from_energy, py::arg("eps0"), py::arg("gzz"),
          py::arg("delta"));

    // spin waves
    py::enum_<Branch>(m, "Branch").value("ising", Branch::ising).value("planar", Branch::planar);
    py::enum_<Side>(m, "Side")
        .value("automatic", Side::automatic)
        .value("below", Side::below)
        .value("above", Side::above);

    py::class_<SpinWaveParams>(m, "SpinWaveParams")
        .def(py::init([](int dimension, double spin, int kgrid, double fd_step) {
                 return SpinWaveParams{dimension, spin, kgrid, fd_step};
             }),
             py::arg("dimension") = 2, py::arg("spin") = 0.5, py::arg("kgrid") = 0,
             py::arg("fd_step") = 1e-4)
        .def_readwrite("dimension", &SpinWaveParams::dimension)
        .def_readwrite("spin", &SpinWaveParams::spin)
        .def_readwrite("kgrid", &SpinWaveParams::kgrid)
        .def_readwrite("fd_step", &SpinWaveParams::fd_step);

    py::class_<SpinWavePoint>(m, "SpinWavePoint")
        .def_readonly("delta", &SpinWavePoint::delta)
        .def_readonly("branch", &SpinWavePoint::branch)
        .def_readonly("energy_per_site", &SpinWavePoint::energy_per_site)
        .def_readonly("energy_per_bond", &SpinWavePoint::energy_per_bond)
        .def_readonly("gzz", &SpinWavePoint::gzz)
        .def_readonly("concurrence", &SpinWavePoint::concurrence);

    m.def("gamma", [](const std::vector<double>& k, int z) { return gamma(k, z); });
    m.def("bogoliubov_factors", [](double t) {
        const auto f = bogoliubov_factors(t);
        return std::make_pair(f.u, f.v);
    });
    m.def("sw_energy_density_ising",
          [](double d, const SpinWaveParams& p) { return sw_energy_density_ising(d, p).per_site; });
    m.def("sw_energy_density_planar",
          [](double d, const SpinWaveParams& p) { return sw_energy_density_planar(d, p).per_site; });
    m.def("sw_gzz", &sw_gzz, py::arg("delta"), py::arg("params"), py::arg("side") = Side::automatic);
    m.def("sw_evaluate", &sw_evaluate, py::arg("delta"), py::arg("params"),
          py::arg("side") = Side::automatic, py::call_guard<py::gil_scoped_release>());
    m.def("sw_concurrence", &sw_concurrence, py::arg("delta"), py::arg("params"),
          py::arg("side") = Side::automatic);

    // analysis
    py::class_<ConcurrenceCurve>(m, "ConcurrenceCurve")
        .def_property_readonly("engine", [](const ConcurrenceCurve& c) { return to_string(c.engine); })
        .def_readonly("provenance", &ConcurrenceCurve::provenance)
        .def_property_readonly("samples",
                               [](const ConcurrenceCurve& c) {
                                   py::list out;
                                   for (const auto& s : c.samples) out.append(sample_dict(s));
                                   return out;
                               })
        .def_property_readonly("deltas", &ConcurrenceCurve::deltas)
        .def_property_readonly("concurrences", &ConcurrenceCurve::concurrences)
        .def("complete", &ConcurrenceCurve::complete);

    m.def("uniform_grid", &uniform_grid, py::arg("start"), py::arg("stop"), py::arg("step"));
    m.def(
        "scan_ed",
        [](const LatticeSpec& spec, const std::vector<double>& grid, double tol, std::uint64_t seed) {
            EdModel model;
            model.lattice = spec;
            model.solver.tol = tol;
            model.solver.seed = seed;
            return scan(model, grid);
        },
        py::arg("spec"), py::arg("grid"), py::arg("tol") = 1e-10, py::arg("seed") = default_seed,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "scan_spinwave",
        [](const SpinWaveParams& p, const std::vector<double>& grid) { return scan(p, grid); },
        py::arg("params"), py::arg("grid"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "hellmann_feynman_residual",
        [](const LatticeSpec& spec, double delta, double h) {
            EdModel model;
            model.lattice = spec;
            return hellmann_feynman_residual(model, delta, h);
        },
        py::arg("spec"), py::arg("delta"), py::arg("h") = 1e-4);
    m.def("concavity_check",
          [](const ConcurrenceCurve& c) { return concavity_check(c).second_differences; });

    py::class_<ExtremumReport>(m, "ExtremumReport")
        .def_readonly("argmax", &ExtremumReport::argmax)
        .def_readonly("left_slope", &ExtremumReport::left_slope)
        .def_readonly("right_slope", &ExtremumReport::right_slope)
        .def_readonly("cusp", &ExtremumReport::cusp);
    m.def("extremum_and_derivative", &extremum_and_derivative);

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("coefficients", &FitResult::coefficients)
        .def_readonly("residual_norm", &FitResult::residual_norm)
        .def_readonly("relative_residual", &FitResult::relative_residual)
        .def_readonly("points", &FitResult::points)
        .def_readonly("low_confidence", &FitResult::low_confidence);
    m.def("quadratic_fit_near_iso", &quadratic_fit_near_iso, py::arg("curve"), py::arg("lo") = 0.9,
          py::arg("hi") = 1.1);
    m.def(
        "polynomial_inverse_L_fit",
        [](const std::vector<std::pair<double, double>>& v, int degree) {
            return polynomial_inverse_L_fit(v, degree);
        },
        py::arg("values"), py::arg("degree"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
