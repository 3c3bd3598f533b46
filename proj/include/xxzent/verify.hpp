#pragma once

#include <set>
#include <string>
#include <vector>

#include "xxzent/eigensolver.hpp"
#include "xxzent/lattice.hpp"

namespace xxzent {

struct CheckResult {
    std::string suite;
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Empty means every suite: ed, entanglement, analysis, spinwave.
    std::set<std::string> suites;
    std::vector<LatticeSpec> lattices{{1, 4, Boundary::periodic},
                                      {1, 8, Boundary::periodic},
                                      {2, 4, Boundary::periodic}};
    LanczosOptions solver;
    /// Flip the Ising sign in every ED Hamiltonian (fault-injection smoke test).
    bool inject_ising_sign_fault = false;
};

const std::vector<std::string>& verification_suites();

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace xxzent
