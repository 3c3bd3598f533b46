#include "xxzent/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace xxzent {

namespace {

inline bool antiparallel(Config c, const Bond& b) {
    return (((c >> b.i) ^ (c >> b.j)) & 1U) != 0;
}

inline Config flip(Config c, const Bond& b) {
    return c ^ ((Config{1} << b.i) | (Config{1} << b.j));
}

double diagonal_element(std::span<const Bond> bonds, double delta, Config c) {
    int parallel = 0;
    for (const auto& b : bonds) parallel += antiparallel(c, b) ? -1 : 1;
    return 0.25 * delta * parallel;
}

}  // namespace

double ising_energy(const Lattice& lattice, double delta, Config c) {
    return diagonal_element(lattice.bonds(), delta, c);
}

SparseHamiltonian::SparseHamiltonian(const Lattice& lattice, double delta, SectorBasis basis,
                                     const HamiltonianOptions& options)
    : delta_(delta), basis_(std::move(basis)), bonds_(lattice.bonds()) {
    if (lattice.site_count() != static_cast<std::size_t>(basis_.sites())) {
        throw std::invalid_argument("lattice has " + std::to_string(lattice.site_count()) +
                                    " sites but the basis has " + std::to_string(basis_.sites()));
    }
    const std::size_t dim = basis_.size();
    const double zz = options.flip_ising_sign ? -delta : delta;

    diagonal_.resize(dim);
    std::size_t flips = 0;
    for (std::size_t a = 0; a < dim; ++a) {
        const Config c = basis_.state(a);
        diagonal_[a] = diagonal_element(bonds_, zz, c);
        for (const auto& b : bonds_) flips += antiparallel(c, b) ? 1 : 0;
    }

    explicit_ = flips <= options.explicit_entry_limit;
    if (!explicit_) return;

    row_ptr_.assign(dim + 1, 0);
    col_.reserve(flips);
    val_.reserve(flips);
    std::vector<std::pair<std::uint32_t, double>> row;
    for (std::size_t a = 0; a < dim; ++a) {
        const Config c = basis_.state(a);
        row.clear();
        for (const auto& b : bonds_) {
            if (!antiparallel(c, b)) continue;
            row.emplace_back(static_cast<std::uint32_t>(basis_.index_of(flip(c, b))), 0.5);
        }
        std::sort(row.begin(), row.end());
        // merge repeated targets (multiplicity of connecting bonds)
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!col_.empty() && col_.size() > row_ptr_[a] && col_.back() == row[k].first) {
                val_.back() += row[k].second;
            } else {
                col_.push_back(row[k].first);
                val_.push_back(row[k].second);
            }
        }
        row_ptr_[a + 1] = col_.size();
    }
}

void SparseHamiltonian::apply(std::span<const double> in, std::span<double> out) const {
    const std::size_t dim = dimension();
    if (in.size() != dim || out.size() != dim) {
        throw std::invalid_argument("vector length does not match Hamiltonian dimension");
    }
    if (!explicit_) {
        apply_matrix_free(in, out);
        return;
    }
    for (std::size_t a = 0; a < dim; ++a) {
        double acc = diagonal_[a] * in[a];
        for (std::size_t k = row_ptr_[a]; k < row_ptr_[a + 1]; ++k) acc += val_[k] * in[col_[k]];
        out[a] = acc;
    }
}

void SparseHamiltonian::apply_matrix_free(std::span<const double> in,
                                          std::span<double> out) const {
    const std::size_t dim = dimension();
    for (std::size_t a = 0; a < dim; ++a) {
        const Config c = basis_.state(a);
        double acc = diagonal_[a] * in[a];
        for (const auto& b : bonds_) {
            if (antiparallel(c, b)) acc += 0.5 * in[basis_.index_of(flip(c, b))];
        }
        out[a] = acc;
    }
}

std::vector<MatrixEntry> SparseHamiltonian::off_diagonal_entries() const {
    std::vector<MatrixEntry> entries;
    const std::size_t dim = dimension();
    if (explicit_) {
        entries.reserve(col_.size());
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t k = row_ptr_[a]; k < row_ptr_[a + 1]; ++k) {
                entries.push_back({a, col_[k], val_[k]});
            }
        }
        return entries;
    }
    std::vector<std::pair<std::size_t, double>> row;
    for (std::size_t a = 0; a < dim; ++a) {
        const Config c = basis_.state(a);
        row.clear();
        for (const auto& b : bonds_) {
            if (antiparallel(c, b)) row.emplace_back(basis_.index_of(flip(c, b)), 0.5);
        }
        std::sort(row.begin(), row.end());
        for (const auto& [col, v] : row) {
            if (!entries.empty() && entries.back().row == a && entries.back().col == col) {
                entries.back().value += v;
            } else {
                entries.push_back({a, col, v});
            }
        }
    }
    return entries;
}

std::vector<double> SparseHamiltonian::to_dense(std::size_t max_dim) const {
    const std::size_t dim = dimension();
    if (dim > max_dim) {
        throw std::length_error("dense copy refused: dimension " + std::to_string(dim) +
                                " exceeds " + std::to_string(max_dim));
    }
    std::vector<double> m(dim * dim, 0.0);
    for (std::size_t a = 0; a < dim; ++a) m[a * dim + a] = diagonal_[a];
    for (const auto& e : off_diagonal_entries()) m[e.row * dim + e.col] += e.value;
    return m;
}

SparseHamiltonian build_hamiltonian(const Lattice& lattice, double delta, const SectorBasis& basis,
                                    const HamiltonianOptions& options) {
    return SparseHamiltonian(lattice, delta, basis, options);
}

}  // namespace xxzent
