#include "xxzent/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "xxzent/basis.hpp"
#include "xxzent/ed.hpp"
#include "xxzent/entanglement.hpp"
#include "xxzent/spinwave.hpp"
#include "xxzent/verify.hpp"

namespace xxzent {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return std::stod(format_number(v));
}

// Metadata block shared by every output file: key/value pairs in fixed order.
using Meta = std::vector<std::pair<std::string, std::string>>;

Meta base_meta(const std::string& command, const std::string& engine) {
    return {{"program", std::string("xxzent ") + version}, {"command", command}, {"engine", engine}};
}

void add_solver_meta(Meta& meta, const LanczosOptions& s) {
    meta.emplace_back("solver", "lanczos tol=" + format_number(s.tol) +
                                    " max_iter=" + std::to_string(s.max_iter) +
                                    " krylov=" + std::to_string(s.krylov_dim));
    meta.emplace_back("seed", std::to_string(s.seed));
}

std::string csv_document(const Meta& meta, const std::string& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (const auto& [k, v] : meta) os << "# " << k << ": " << v << "\n";
    os << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    return os.str();
}

json meta_json(const Meta& meta) {
    json m = json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    return m;
}

void emit(const RunConfig& cfg, const std::string& doc, std::ostream& out) {
    if (!cfg.out_path) {
        out << doc;
        return;
    }
    std::ofstream f(*cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::ios_base::failure("cannot open '" + *cfg.out_path + "' for writing");
    f << doc;
    if (!f) throw std::ios_base::failure("failed writing '" + *cfg.out_path + "'");
}

SpinWaveParams spinwave_params(const RunConfig& cfg) {
    SpinWaveParams p;
    p.dimension = cfg.lattice.dimension;
    p.spin = cfg.spin;
    p.kgrid = cfg.kgrid;
    return p;
}

std::string lattice_meta(const LatticeSpec& spec) {
    std::ostringstream os;
    os << "d=" << spec.dimension << " L=" << spec.linear_size << " " << to_string(spec.boundary);
    return os.str();
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s(buf);
    return s == "-0" ? "0" : s;
}

void check_feasible(const LatticeSpec& spec, double magnetization, double max_states) {
    const auto n = site_count(spec);
    if (n > static_cast<std::size_t>(max_sites)) {
        throw InfeasibleSize("lattice has " + std::to_string(n) +
                                 " sites; exact diagonalization supports at most 64",
                             std::numeric_limits<long double>::infinity());
    }
    const long double dim = sector_dimension(static_cast<int>(n), magnetization);
    if (dim > static_cast<long double>(max_states)) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "refusing: the M=%g sector of the %s lattice has %.0Lf basis states "
                      "(~%.3Le), above the cap of %.3g",
                      magnetization, lattice_meta(spec).c_str(), dim, dim, max_states);
        std::string msg(buf);
        if (spec.dimension == 2 && spec.linear_size == 6) {
            msg += "; the 6x6 square lattice needs ~9.08e9 states and is not feasible for "
                   "exact diagonalization at desk scale";
        }
        throw InfeasibleSize(msg, dim);
    }
}

int cmd_ed(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    check_feasible(cfg.lattice, cfg.magnetization, cfg.max_states);
    const auto lat = build_lattice(cfg.lattice);
    for (const auto& w : lat.warnings()) err << "warning: " << w << "\n";

    const auto basis = enumerate_basis(static_cast<int>(lat.site_count()), cfg.magnetization);
    const auto h = build_hamiltonian(lat, cfg.delta, basis);
    double gap = std::numeric_limits<double>::quiet_NaN();
    GroundState g;
    if (basis.size() >= 2) {
        auto pairs = lanczos_lowest(h, 2, cfg.solver);
        gap = pairs[1].energy - pairs[0].energy;
        g = std::move(pairs[0]);
    } else {
        g = lanczos_ground(h, cfg.solver);
    }
    const auto corr = bond_averaged_correlators(g, basis, lat);
    const double eps0 = g.energy / static_cast<double>(lat.bond_count());
    const double c = concurrence_corr(corr);

    Meta meta = base_meta("ed", "ed");
    meta.emplace_back("lattice", lattice_meta(cfg.lattice));
    meta.emplace_back("sites", std::to_string(lat.site_count()));
    meta.emplace_back("bonds", std::to_string(lat.bond_count()));
    meta.emplace_back("sector", "M=" + format_number(cfg.magnetization) +
                                    " dimension=" + std::to_string(basis.size()));
    meta.emplace_back("delta", format_number(cfg.delta));
    add_solver_meta(meta, cfg.solver);

    const std::vector<std::pair<std::string, double>> values{
        {"energy", g.energy},       {"energy_per_bond", eps0}, {"gxx", corr.gxx},
        {"gyy", corr.gyy},          {"gzz", corr.gzz},         {"concurrence", c},
        {"gap", gap},               {"iterations", g.iterations}, {"residual", g.residual}};

    std::string doc;
    if (cfg.format == OutputFormat::json) {
        json j;
        j["meta"] = meta_json(meta);
        json r = json::object();
        for (const auto& [k, v] : values) r[k] = number(v);
        j["result"] = r;
        doc = j.dump(2) + "\n";
    } else {
        std::string header;
        std::vector<std::string> row;
        for (const auto& [k, v] : values) {
            header += (header.empty() ? "" : ",") + k;
            row.push_back(format_number(v));
        }
        doc = csv_document(meta, header, {row});
    }
    emit(cfg, doc, out);
    return exit_code::ok;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto grid = uniform_grid(cfg.from, cfg.to, cfg.step);
    Meta meta = base_meta("scan", to_string(cfg.engine));
    ConcurrenceCurve curve;
    if (cfg.engine == Engine::ed) {
        check_feasible(cfg.lattice, cfg.magnetization, cfg.max_states);
        const auto lat = build_lattice(cfg.lattice);
        for (const auto& w : lat.warnings()) err << "warning: " << w << "\n";
        EdModel model;
        model.lattice = cfg.lattice;
        model.magnetization = cfg.magnetization;
        model.solver = cfg.solver;
        meta.emplace_back("lattice", lattice_meta(cfg.lattice));
        meta.emplace_back("sector", "M=" + format_number(cfg.magnetization));
        add_solver_meta(meta, cfg.solver);
        curve = scan(model, grid);
    } else {
        const auto p = spinwave_params(cfg);
        meta.emplace_back("dimension", std::to_string(p.dimension));
        meta.emplace_back("spin", format_number(p.spin));
        meta.emplace_back("kgrid", std::to_string(p.resolved_kgrid()) + " midpoint-shifted");
        meta.emplace_back("fd_step", format_number(p.fd_step));
        curve = scan(p, grid);
    }
    meta.emplace_back("grid", "from=" + format_number(cfg.from) + " to=" + format_number(cfg.to) +
                                  " step=" + format_number(cfg.step) +
                                  " points=" + std::to_string(grid.size()));
    std::size_t failed = 0;
    for (const auto& s : curve.samples) {
        if (s.ok) continue;
        ++failed;
        meta.emplace_back("failed", "delta=" + format_number(s.delta) + " " + s.error);
    }

    const std::string engine = to_string(cfg.engine);
    std::string doc;
    if (cfg.format == OutputFormat::json) {
        json j;
        j["meta"] = meta_json(meta);
        json rows = json::array();
        for (const auto& s : curve.samples) {
            json r;
            r["delta"] = number(s.delta);
            r["concurrence"] = number(s.concurrence);
            r["energy_per_bond"] = number(s.energy_per_bond);
            r["gzz"] = number(s.gzz);
            r["engine"] = engine;
            r["ok"] = s.ok;
            if (!s.ok) r["error"] = s.error;
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        doc = j.dump(2) + "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : curve.samples) {
            rows.push_back({format_number(s.delta), format_number(s.concurrence),
                            format_number(s.energy_per_bond), format_number(s.gzz), engine});
        }
        doc = csv_document(meta, "delta,concurrence,energy_per_bond,gzz,engine", rows);
    }
    emit(cfg, doc, out);
    if (failed > 0) {
        err << failed << " of " << grid.size() << " grid points failed\n";
        return exit_code::solver;
    }
    return exit_code::ok;
}

int cmd_spinwave(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto p = spinwave_params(cfg);
    const auto pt = sw_evaluate(cfg.delta, p);
    Meta meta = base_meta("spinwave", "spinwave");
    meta.emplace_back("dimension", std::to_string(p.dimension));
    meta.emplace_back("spin", format_number(p.spin));
    meta.emplace_back("kgrid", std::to_string(p.resolved_kgrid()) + " midpoint-shifted");
    meta.emplace_back("fd_step", format_number(p.fd_step));

    std::string doc;
    if (cfg.format == OutputFormat::json) {
        json j;
        j["meta"] = meta_json(meta);
        j["result"] = {{"delta", number(pt.delta)},
                       {"branch", to_string(pt.branch)},
                       {"energy_per_site", number(pt.energy_per_site)},
                       {"energy_per_bond", number(pt.energy_per_bond)},
                       {"gzz", number(pt.gzz)},
                       {"concurrence", number(pt.concurrence)}};
        doc = j.dump(2) + "\n";
    } else {
        doc = csv_document(meta, "delta,branch,energy_per_site,energy_per_bond,gzz,concurrence",
                           {{format_number(pt.delta), to_string(pt.branch),
                             format_number(pt.energy_per_site), format_number(pt.energy_per_bond),
                             format_number(pt.gzz), format_number(pt.concurrence)}});
    }
    emit(cfg, doc, out);
    return exit_code::ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    VerifyOptions opt;
    opt.suites = {cfg.suites.begin(), cfg.suites.end()};
    opt.solver = cfg.solver;
    opt.inject_ising_sign_fault = cfg.inject_fault;
    const auto results = run_verification(opt);

    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        os << (r.passed ? "PASS" : "FAIL") << " [" << r.suite << "] " << r.name
           << ": measured=" << format_number(r.measured) << " (" << r.detail << " "
           << format_number(r.tolerance) << ")\n";
    }
    os << results.size() - failed << "/" << results.size() << " checks passed\n";
    emit(cfg, os.str(), out);
    if (failed > 0) {
        err << failed << " verification check(s) failed:\n";
        for (const auto& r : results) {
            if (!r.passed) err << "  [" << r.suite << "] " << r.name << "\n";
        }
        return exit_code::verification;
    }
    return exit_code::ok;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ground-state concurrence of the XXZ model: exact diagonalization and spin waves",
                 "xxzent"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    RunConfig cfg;
    std::string boundary = "periodic";
    std::string engine = "ed";
    std::string format = "csv";
    std::string out_path;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "Write output to this file instead of stdout");
    };
    auto add_solver = [&](CLI::App* sub) {
        sub->add_option("--tol", cfg.solver.tol, "Lanczos residual tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-iter", cfg.solver.max_iter, "Lanczos matrix-vector product cap")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.solver.seed, "Start-vector seed");
    };

    auto* ed = app.add_subcommand("ed", "Exact diagonalization at one anisotropy");
    ed->add_option("--dim", cfg.lattice.dimension, "Lattice dimension")
        ->required()
        ->check(CLI::IsMember({1, 2, 3}));
    ed->add_option("--size", cfg.lattice.linear_size, "Sites per direction")->required();
    ed->add_option("--delta", cfg.delta, "Anisotropy Jz/Jx")->capture_default_str();
    ed->add_option("--boundary", boundary, "Boundary conditions")
        ->check(CLI::IsMember({"periodic", "open"}));
    ed->add_option("--sector", cfg.magnetization, "Total Sz sector M");
    ed->add_option("--max-states", cfg.max_states, "Refuse sectors larger than this");
    add_solver(ed);
    add_format(ed);

    auto* sc = app.add_subcommand("scan", "Concurrence curve over an anisotropy grid");
    sc->add_option("--engine", engine, "ed or spinwave")->check(CLI::IsMember({"ed", "spinwave"}));
    sc->add_option("--dim", cfg.lattice.dimension, "Lattice dimension")
        ->required()
        ->check(CLI::IsMember({1, 2, 3}));
    auto* size_opt = sc->add_option("--size", cfg.lattice.linear_size, "Sites per direction (ed)");
    auto* boundary_opt = sc->add_option("--boundary", boundary, "Boundary conditions (ed)")
                             ->check(CLI::IsMember({"periodic", "open"}));
    sc->add_option("--from", cfg.from, "First anisotropy")->required();
    sc->add_option("--to", cfg.to, "Last anisotropy")->required();
    sc->add_option("--step", cfg.step, "Grid step")->required()->check(CLI::PositiveNumber);
    auto* kgrid_opt = sc->add_option("--kgrid", cfg.kgrid, "BZ points per direction (spinwave)")
                          ->check(CLI::PositiveNumber);
    auto* spin_opt = sc->add_option("--spin", cfg.spin, "Spin length (spinwave)")
                         ->check(CLI::PositiveNumber);
    sc->add_option("--max-states", cfg.max_states, "Refuse sectors larger than this (ed)");
    add_solver(sc);
    add_format(sc);

    auto* sw = app.add_subcommand("spinwave", "Linear spin-wave values at one anisotropy");
    sw->add_option("--dim", cfg.lattice.dimension, "Lattice dimension")
        ->required()
        ->check(CLI::IsMember({2, 3}));
    sw->add_option("--delta", cfg.delta, "Anisotropy Jz/Jx")->required();
    sw->add_option("--kgrid", cfg.kgrid, "BZ points per direction")->check(CLI::PositiveNumber);
    sw->add_option("--spin", cfg.spin, "Spin length")->check(CLI::PositiveNumber);
    add_format(sw);

    auto* ver = app.add_subcommand("verify", "Run the built-in verification suites");
    ver->add_option("--suite", cfg.suites, "Restrict to these suites")
        ->check(CLI::IsMember(verification_suites()));
    ver->add_flag("--inject-fault", cfg.inject_fault,
                  "Flip the Ising sign in the ED Hamiltonian (the suite must then fail)")
        ->group("");
    add_solver(ver);
    ver->add_option("--out", out_path, "Write the report to this file");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        cfg.lattice.boundary = parse_boundary(boundary);
        cfg.engine = engine == "ed" ? Engine::ed : Engine::spinwave;
        cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
        if (!out_path.empty()) cfg.out_path = out_path;

        if (ed->parsed()) {
            cfg.subcommand = "ed";
            return cmd_ed(cfg, out, err);
        }
        if (sc->parsed()) {
            cfg.subcommand = "scan";
            if (cfg.engine == Engine::ed) {
                if (kgrid_opt->count() || spin_opt->count()) {
                    throw UsageError("--kgrid and --spin apply to --engine spinwave only");
                }
                if (!size_opt->count()) throw UsageError("--engine ed requires --size");
            } else {
                if (size_opt->count() || boundary_opt->count()) {
                    throw UsageError("--size and --boundary apply to --engine ed only");
                }
            }
            return cmd_scan(cfg, out, err);
        }
        if (sw->parsed()) {
            cfg.subcommand = "spinwave";
            return cmd_spinwave(cfg, out, err);
        }
        cfg.subcommand = "verify";
        return cmd_verify(cfg, out, err);
    } catch (const InfeasibleSize& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::infeasible;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::solver;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::io;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::solver;
    }
}

}  // namespace xxzent
