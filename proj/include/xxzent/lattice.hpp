#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace xxzent {

enum class Boundary { periodic, open };

enum class Sublattice : std::uint8_t { A = 0, B = 1 };

/// Finite d-dimensional hypercubic lattice with L sites per direction.
struct LatticeSpec {
    int dimension = 1;
    int linear_size = 2;
    Boundary boundary = Boundary::periodic;

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Nearest-neighbor bond, stored with i < j.
struct Bond {
    std::size_t i = 0;
    std::size_t j = 0;

    friend bool operator==(const Bond&, const Bond&) = default;
};

class Lattice {
public:
    const LatticeSpec& spec() const noexcept { return spec_; }
    std::size_t site_count() const noexcept { return sublattice_.size(); }
    std::size_t bond_count() const noexcept { return bonds_.size(); }
    const std::vector<Bond>& bonds() const noexcept { return bonds_; }
    Sublattice sublattice(std::size_t site) const { return sublattice_.at(site); }
    const std::vector<Sublattice>& sublattices() const noexcept { return sublattice_; }

    /// Non-fatal diagnostics raised while building (e.g. the L=2 ring collapse).
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    bool degenerate() const noexcept { return !warnings_.empty(); }

    /// Row-major coordinates of a site; the first coordinate varies slowest.
    std::vector<int> coordinates(std::size_t site) const;
    std::size_t site_index(const std::vector<int>& coords) const;

    std::string describe() const;

private:
    friend Lattice build_lattice(const LatticeSpec& spec);

    LatticeSpec spec_;
    std::vector<Bond> bonds_;
    std::vector<Sublattice> sublattice_;
    std::vector<std::string> warnings_;
};

/// Enumerates sites and bonds. Bonds come out in generation order: site by
/// site, then direction by direction, each pair normalized to i < j and listed
/// once. Throws std::invalid_argument for d outside {1,2,3}, L < 2, or odd L
/// with periodic boundaries.
Lattice build_lattice(const LatticeSpec& spec);

/// Coordination number of the infinite hypercubic lattice, z = 2d.
int coordination_number(int dimension);

/// L^d, throwing on overflow.
std::size_t site_count(const LatticeSpec& spec);

std::string to_string(Boundary b);
Boundary parse_boundary(const std::string& s);

}  // namespace xxzent
