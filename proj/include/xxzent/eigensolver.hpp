#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "xxzent/hamiltonian.hpp"

namespace xxzent {

inline constexpr std::uint64_t default_seed = 20040915;

struct LanczosOptions {
    /// Convergence threshold on the eigenvector residual ||H v - E v||.
    double tol = 1e-10;
    /// Cap on the total number of matrix-vector products.
    int max_iter = 20000;
    /// Krylov vectors kept per restart cycle.
    int krylov_dim = 120;
    std::uint64_t seed = default_seed;
};

struct GroundState {
    double energy = 0.0;
    std::vector<double> vector;  ///< unit norm, largest-magnitude amplitude positive
    double magnetization = 0.0;  ///< sector M
    double residual = 0.0;
    int iterations = 0;          ///< matrix-vector products used
    std::uint64_t seed = 0;
};

/// Thrown when Lanczos exhausts max_iter; carries the best estimate so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, GroundState best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const GroundState& best_estimate() const noexcept { return best_; }

private:
    GroundState best_;
};

/// Lowest eigenpair by restarted Lanczos with full reorthogonalization.
/// The start vector is drawn from a mt19937_64 seeded with options.seed.
GroundState lanczos_ground(const SparseHamiltonian& h, const LanczosOptions& options = {});

/// The `count` lowest eigenpairs, found one at a time with the previous ones
/// projected out of every Krylov vector.
std::vector<GroundState> lanczos_lowest(const SparseHamiltonian& h, int count,
                                        const LanczosOptions& options = {});

/// Full dense diagonalization. Test-only verification path.
GroundState dense_ground_oracle(const SparseHamiltonian& h, std::size_t max_dim = 4000);

/// All eigenvalues in ascending order (dense).
std::vector<double> dense_spectrum(const SparseHamiltonian& h, std::size_t max_dim = 4000);

/// ||H v - e v||_2
double residual_norm(const SparseHamiltonian& h, const std::vector<double>& v, double e);

/// Flip the sign of v so that its largest-magnitude entry is positive.
void fix_phase(std::vector<double>& v);

}  // namespace xxzent
