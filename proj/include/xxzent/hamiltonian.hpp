#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "xxzent/basis.hpp"
#include "xxzent/lattice.hpp"

namespace xxzent {

struct HamiltonianOptions {
    /// Above this many stored entries the operator is applied matrix-free.
    std::size_t explicit_entry_limit = 10'000'000;
    /// Fault injection for the verification suite: flips the sign of the
    /// Ising term so that H no longer matches its own Hellmann-Feynman slope.
    bool flip_ising_sign = false;
};

struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0.0;
};

/// XXZ Hamiltonian restricted to one S^z sector:
///   H = sum_<ij> (Sx_i Sx_j + Sy_i Sy_j + delta Sz_i Sz_j)
/// Diagonal entries carry the Ising part, off-diagonal entries are the 1/2
/// amplitudes of the (S+S- + S-S+)/2 flip terms.
class SparseHamiltonian {
public:
    SparseHamiltonian(const Lattice& lattice, double delta, SectorBasis basis,
                      const HamiltonianOptions& options = {});

    std::size_t dimension() const noexcept { return diagonal_.size(); }
    double delta() const noexcept { return delta_; }
    const SectorBasis& basis() const noexcept { return basis_; }
    const std::vector<double>& diagonal() const noexcept { return diagonal_; }
    bool is_explicit() const noexcept { return explicit_; }
    /// Stored off-diagonal entries (0 in matrix-free mode).
    std::size_t off_diagonal_count() const noexcept { return col_.size(); }

    /// out = H in. Both spans must have dimension() elements and not alias.
    void apply(std::span<const double> in, std::span<double> out) const;

    /// Off-diagonal entries in row-major order, computed on the fly if needed.
    std::vector<MatrixEntry> off_diagonal_entries() const;

    /// Dense row-major copy; refuses dimensions above max_dim.
    std::vector<double> to_dense(std::size_t max_dim = 4000) const;

private:
    void apply_matrix_free(std::span<const double> in, std::span<double> out) const;

    double delta_;
    SectorBasis basis_;
    std::vector<Bond> bonds_;
    std::vector<double> diagonal_;
    bool explicit_ = true;
    // CSR storage of the off-diagonal part
    std::vector<std::size_t> row_ptr_;
    std::vector<std::uint32_t> col_;
    std::vector<double> val_;
};

SparseHamiltonian build_hamiltonian(const Lattice& lattice, double delta, const SectorBasis& basis,
                                    const HamiltonianOptions& options = {});

/// Ising energy of one configuration, delta * sum_<ij> s_i s_j with s = +-1/2.
double ising_energy(const Lattice& lattice, double delta, Config c);

}  // namespace xxzent
