#include "xxzent/ed.hpp"

#include <cmath>

namespace xxzent {

EdSolution solve_ground_state(const Lattice& lattice, double delta, double m,
                              const LanczosOptions& solver, const HamiltonianOptions& hopts) {
    auto basis = enumerate_basis(static_cast<int>(lattice.site_count()), m);
    const auto h = build_hamiltonian(lattice, delta, basis, hopts);
    auto ground = lanczos_ground(h, solver);
    return {std::move(basis), std::move(ground)};
}

SectorGap ground_state_gap(const Lattice& lattice, double delta, double m,
                           const LanczosOptions& solver) {
    const auto basis = enumerate_basis(static_cast<int>(lattice.site_count()), m);
    if (basis.size() < 2) {
        throw GapUndefined("sector has a single state; the gap is undefined");
    }
    const auto h = build_hamiltonian(lattice, delta, basis);
    const auto pairs = lanczos_lowest(h, 2, solver);
    return {pairs[0].energy, pairs[1].energy, pairs[1].energy - pairs[0].energy};
}

std::vector<SectorEnergy> sector_ground_energies(const Lattice& lattice, double delta,
                                                 std::vector<double> sectors,
                                                 const LanczosOptions& solver) {
    const auto n = static_cast<int>(lattice.site_count());
    if (sectors.empty()) {
        sectors = (n % 2 == 0) ? std::vector<double>{0.0, 1.0, -1.0}
                               : std::vector<double>{0.5, -0.5, 1.5, -1.5};
    }
    std::vector<SectorEnergy> out;
    for (double m : sectors) {
        if (2.0 * std::abs(m) > n) continue;
        out.push_back({m, solve_ground_state(lattice, delta, m, solver).ground.energy});
    }
    return out;
}

}  // namespace xxzent
