#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xxzent/analysis.hpp"
#include "xxzent/eigensolver.hpp"
#include "xxzent/lattice.hpp"

namespace xxzent {

inline constexpr const char* version = "0.1.0";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int infeasible = 3;
inline constexpr int solver = 4;
inline constexpr int verification = 5;
inline constexpr int io = 6;
}  // namespace exit_code

enum class OutputFormat { csv, json };

/// Everything a subcommand needs, after flag parsing.
struct RunConfig {
    std::string subcommand;
    Engine engine = Engine::ed;
    LatticeSpec lattice;
    double delta = 1.0;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
    double magnetization = 0.0;
    double spin = 0.5;
    int kgrid = 0;
    LanczosOptions solver;
    double max_states = 2e7;
    OutputFormat format = OutputFormat::csv;
    std::optional<std::string> out_path;
    std::vector<std::string> suites;
    bool inject_fault = false;
};

/// Raised when an ED sector would exceed the configured basis-state cap.
class InfeasibleSize : public std::runtime_error {
public:
    InfeasibleSize(const std::string& what, long double dimension)
        : std::runtime_error(what), dimension_(dimension) {}
    long double dimension() const noexcept { return dimension_; }

private:
    long double dimension_;
};

/// Throws InfeasibleSize if the requested ED sector is above the cap.
void check_feasible(const LatticeSpec& spec, double magnetization, double max_states);

int cmd_ed(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_spinwave(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (args[0] is the program name) and dispatches. Returns the
/// process exit code; never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.12g")
std::string format_number(double v);

}  // namespace xxzent
