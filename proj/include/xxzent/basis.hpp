#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace xxzent {

/// Spin configuration: bit n set means site n is up.
using Config = std::uint64_t;

/// Largest site count a Config can hold.
inline constexpr int max_sites = 64;

/// All N-site configurations with a fixed number of up spins, in increasing
/// integer order. Copies share the state table.
///
/// Lookup uses the combinatorial number system: for fixed popcount, ascending
/// integer order coincides with colex order, so the rank of a configuration
/// with up-spins at positions p_0 < p_1 < ... is sum_k binom(p_k, k+1).
class SectorBasis {
public:
    SectorBasis(int sites, int n_up);

    int sites() const noexcept { return sites_; }
    int n_up() const noexcept { return n_up_; }
    /// Total S^z in units of hbar; half-integer for odd N.
    double magnetization() const noexcept { return n_up_ - 0.5 * sites_; }
    /// 2M as an exact integer.
    int two_m() const noexcept { return 2 * n_up_ - sites_; }

    std::size_t size() const noexcept { return states_->size(); }
    Config state(std::size_t index) const { return (*states_)[index]; }
    std::span<const Config> states() const noexcept { return *states_; }

    /// Position of a configuration, or size() if it is not in the sector.
    std::size_t index_of(Config c) const noexcept;
    bool contains(Config c) const noexcept { return index_of(c) != size(); }

private:
    int sites_;
    int n_up_;
    std::shared_ptr<const std::vector<Config>> states_;
    std::shared_ptr<const std::vector<std::uint64_t>> binom_;  // (sites+1) x (n_up+2)
};

/// Sector with total S^z = m; m + N/2 must be an integer in [0, N].
SectorBasis enumerate_basis(int sites, double m);

/// binom(n, k) as long double; exact for every value that fits in 64 bits.
long double binomial(int n, int k);

/// Sector size for M = m without building it.
long double sector_dimension(int sites, double m);

}  // namespace xxzent
