#pragma once

#include <stdexcept>
#include <vector>

#include "xxzent/basis.hpp"
#include "xxzent/eigensolver.hpp"
#include "xxzent/hamiltonian.hpp"
#include "xxzent/lattice.hpp"

namespace xxzent {

struct EdSolution {
    SectorBasis basis;
    GroundState ground;
};

/// Ground state of the XXZ model in the sector S^z_total = m.
EdSolution solve_ground_state(const Lattice& lattice, double delta, double m = 0.0,
                              const LanczosOptions& solver = {},
                              const HamiltonianOptions& hopts = {});

struct SectorGap {
    double e0 = 0.0;
    double e1 = 0.0;
    double gap = 0.0;
};

/// Raised when the sector has a single state, so no gap exists.
class GapUndefined : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two lowest eigenvalues of one sector.
SectorGap ground_state_gap(const Lattice& lattice, double delta, double m = 0.0,
                           const LanczosOptions& solver = {});

struct SectorEnergy {
    double magnetization = 0.0;
    double energy = 0.0;
};

/// Lowest energy in each of the requested sectors; by default M in {0, +1, -1}
/// (M in {+-1/2, +-3/2} for odd site counts).
std::vector<SectorEnergy> sector_ground_energies(const Lattice& lattice, double delta,
                                                 std::vector<double> sectors = {},
                                                 const LanczosOptions& solver = {});

}  // namespace xxzent
