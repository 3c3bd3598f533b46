#include "xxzent/basis.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace xxzent {

namespace {

int n_up_for(int sites, double m) {
    const double n_up = m + 0.5 * sites;
    if (std::nearbyint(n_up) != n_up) {
        throw std::invalid_argument("sector M=" + std::to_string(m) + " on " +
                                    std::to_string(sites) +
                                    " sites gives a non-integral number of up spins");
    }
    if (n_up < 0 || n_up > sites) {
        throw std::invalid_argument("sector M=" + std::to_string(m) + " is outside [-N/2, N/2]");
    }
    return static_cast<int>(n_up);
}

// Next integer with the same popcount (Gosper).
Config next_combination(Config x) {
    const Config low = x & (~x + 1);
    const Config ripple = x + low;
    return ripple | (((x ^ ripple) >> 2) / low);
}

}  // namespace

long double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0L;
    k = std::min(k, n - k);
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::nearbyintl(r);
}

long double sector_dimension(int sites, double m) {
    if (sites < 1) throw std::invalid_argument("site count must be positive");
    return binomial(sites, n_up_for(sites, m));
}

SectorBasis::SectorBasis(int sites, int n_up) : sites_(sites), n_up_(n_up) {
    if (sites < 1 || sites > max_sites) {
        throw std::invalid_argument("site count must be in [1, 64] (got " + std::to_string(sites) +
                                    ")");
    }
    if (n_up < 0 || n_up > sites) throw std::invalid_argument("n_up outside [0, N]");

    const long double dim = binomial(sites, n_up);
    if (dim > static_cast<long double>(std::numeric_limits<std::uint32_t>::max())) {
        throw std::length_error("sector dimension too large to enumerate");
    }

    const auto kcols = static_cast<std::size_t>(n_up + 2);
    auto binom = std::make_shared<std::vector<std::uint64_t>>(
        static_cast<std::size_t>(sites + 1) * kcols, 0);
    for (int n = 0; n <= sites; ++n) {
        for (int k = 0; k <= n_up + 1 && k <= n; ++k) {
            (*binom)[static_cast<std::size_t>(n) * kcols + static_cast<std::size_t>(k)] =
                static_cast<std::uint64_t>(binomial(n, k));
        }
    }

    auto states = std::make_shared<std::vector<Config>>();
    states->reserve(static_cast<std::size_t>(dim));
    if (n_up == 0) {
        states->push_back(0);
    } else {
        const Config last = (n_up == 64) ? ~Config{0} : (((Config{1} << n_up) - 1) << (sites - n_up));
        Config c = (n_up == 64) ? ~Config{0} : (Config{1} << n_up) - 1;
        while (true) {
            states->push_back(c);
            if (c == last) break;
            c = next_combination(c);
        }
    }
    states_ = std::move(states);
    binom_ = std::move(binom);
}

std::size_t SectorBasis::index_of(Config c) const noexcept {
    if (sites_ < 64 && (c >> sites_) != 0) return size();
    if (std::popcount(c) != n_up_) return size();
    const auto kcols = static_cast<std::size_t>(n_up_ + 2);
    std::uint64_t rank = 0;
    std::size_t k = 1;
    while (c) {
        const auto p = static_cast<std::size_t>(std::countr_zero(c));
        rank += (*binom_)[p * kcols + k];
        ++k;
        c &= c - 1;
    }
    return static_cast<std::size_t>(rank);
}

SectorBasis enumerate_basis(int sites, double m) {
    if (sites < 1) throw std::invalid_argument("site count must be positive");
    return SectorBasis(sites, n_up_for(sites, m));
}

}  // namespace xxzent
