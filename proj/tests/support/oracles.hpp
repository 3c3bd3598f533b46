#pragma once

// Test-only reference computations. Nothing here touches the sector basis,
// the sparse Hamiltonian or the Lanczos solver of the library.

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::vector<std::pair<int, int>>;

inline Pairs ring(int n) {
    Pairs p;
    for (int i = 0; i < n; ++i) {
        int a = i, b = (i + 1) % n;
        if (a > b) std::swap(a, b);
        if (std::find(p.begin(), p.end(), std::make_pair(a, b)) == p.end()) p.emplace_back(a, b);
    }
    return p;
}

inline Pairs torus(int L) {
    Pairs p;
    auto add = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (std::find(p.begin(), p.end(), std::make_pair(a, b)) == p.end()) p.emplace_back(a, b);
    };
    for (int x = 0; x < L; ++x)
        for (int y = 0; y < L; ++y) {
            add(x * L + y, ((x + 1) % L) * L + y);
            add(x * L + y, x * L + (y + 1) % L);
        }
    return p;
}

// Dense XXZ matrix on the states of the full 2^n space whose popcount is n_up,
// enumerated by a plain scan; index order is increasing integer value.
struct Block {
    std::vector<std::uint64_t> states;
    Eigen::MatrixXd h;
};

inline Block xxz_block(int n, const Pairs& bonds, double delta, int n_up) {
    Block b;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if (std::popcount(s) == n_up) b.states.push_back(s);
    const auto dim = static_cast<Eigen::Index>(b.states.size());
    b.h = Eigen::MatrixXd::Zero(dim, dim);
    auto find = [&](std::uint64_t s) {
        return std::lower_bound(b.states.begin(), b.states.end(), s) - b.states.begin();
    };
    for (Eigen::Index a = 0; a < dim; ++a) {
        const auto s = b.states[a];
        for (auto [i, j] : bonds) {
            const bool ui = (s >> i) & 1U, uj = (s >> j) & 1U;
            b.h(a, a) += delta * (ui == uj ? 0.25 : -0.25);
            if (ui != uj) {
                const auto t = s ^ (std::uint64_t{1} << i) ^ (std::uint64_t{1} << j);
                b.h(find(t), a) += 0.5;
            }
        }
    }
    return b;
}

struct Eigenpair {
    double energy;
    Eigen::VectorXd vector;
};

inline Eigenpair lowest(const Block& b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b.h);
    return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

inline Eigenpair ground(int n, const Pairs& bonds, double delta, int n_up) {
    return lowest(xxz_block(n, bonds, delta, n_up));
}

// Full-space lowest energy over all magnetization sectors.
inline double global_ground(int n, const Pairs& bonds, double delta) {
    double e = 1e300;
    for (int k = 0; k <= n; ++k) e = std::min(e, ground(n, bonds, delta, k).energy);
    return e;
}

// XX ring via Jordan-Wigner: with nf fermions the boundary condition is
// periodic for odd nf and antiperiodic for even nf; H = sum_k cos(k) n_k.
inline double xx_ring_free_fermion(int n, int nf) {
    std::vector<double> eps;
    const double shift = (nf % 2 == 0) ? 0.5 : 0.0;
    for (int m = 0; m < n; ++m) eps.push_back(std::cos(2.0 * std::numbers::pi * (m + shift) / n));
    std::sort(eps.begin(), eps.end());
    double e = 0;
    for (int m = 0; m < nf; ++m) e += eps[m];
    return e;
}

// rho[(a,b),(a',b')] = sum over the rest; 0 = up on each site, site i first.
inline Eigen::Matrix4cd partial_trace(const std::vector<std::uint64_t>& states,
                                      const Eigen::VectorXd& psi, int n, int i, int j) {
    std::vector<double> full(std::size_t{1} << n, 0.0);
    for (std::size_t a = 0; a < states.size(); ++a) full[states[a]] = psi(static_cast<Eigen::Index>(a));
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    const std::uint64_t mi = std::uint64_t{1} << i, mj = std::uint64_t{1} << j;
    for (std::uint64_t rest = 0; rest < full.size(); ++rest) {
        if (rest & (mi | mj)) continue;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                auto put = [&](int k) {
                    std::uint64_t s = rest;
                    if (!(k & 2)) s |= mi;
                    if (!(k & 1)) s |= mj;
                    return s;
                };
                rho(r, c) += full[put(r)] * full[put(c)];
            }
    }
    return rho;
}

// Eigenvalue form of the two-qubit concurrence: sqrt of the eigenvalues of
// rho * (sy x sy) rho^* (sy x sy), largest minus the rest.
inline double wootters_eig(const Eigen::Matrix4cd& rho) {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;
    const Eigen::Matrix4cd r = rho * yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r);
    std::vector<double> l;
    for (int k = 0; k < 4; ++k) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(k).real())));
    std::sort(l.rbegin(), l.rend());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

// Midpoint grid average over the d-dimensional zone, long double accumulation.
template <class F>
double bz_average(int d, int g, F&& f) {
    std::vector<double> c(g);
    for (int m = 0; m < g; ++m)
        c[m] = std::cos(-std::numbers::pi + std::numbers::pi * (2.0 * m + 1.0) / g);
    long double s = 0;
    if (d == 2) {
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < g; ++b) s += f((c[a] + c[b]) / 2.0);
    } else {
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < g; ++b)
                for (int e = 0; e < g; ++e) s += f((c[a] + c[b] + c[e]) / 3.0);
    }
    return static_cast<double>(s / std::pow(static_cast<long double>(g), d));
}

// d(E/N)/dDelta of the linear spin-wave energy, closed form.
inline double sw_denergy_ising(int d, int g, double delta, double S = 0.5) {
    const double z = 2.0 * d;
    const double avg = bz_average(d, g, [&](double gm) {
        return delta / std::sqrt(delta * delta - gm * gm) - 1.0;
    });
    return -z * S * S / 2.0 + z * S / 2.0 * avg;
}

inline double sw_denergy_planar(int d, int g, double delta, double S = 0.5) {
    const double z = 2.0 * d;
    const double avg = bz_average(d, g, [&](double gm) {
        return -gm * std::sqrt(1.0 + gm) / (2.0 * std::sqrt(1.0 - delta * gm));
    });
    return z * S / 2.0 * avg;
}

inline double sw_energy_closed(int d, int g, double delta, double S = 0.5) {
    const double z = 2.0 * d;
    if (delta >= 1.0) {
        const double avg = bz_average(d, g, [&](double gm) { return std::sqrt(delta * delta - gm * gm) - delta; });
        return -z * S * S * delta / 2.0 + z * S / 2.0 * avg;
    }
    const double avg = bz_average(d, g, [&](double gm) {
        return std::sqrt((1.0 - delta * gm) * (1.0 + gm)) - 1.0;
    });
    return -z * S * S / 2.0 + z * S / 2.0 * avg;
}

// Ground-state energy per site of the infinite Heisenberg chain.
inline double bethe_energy_per_site() { return 0.25 - std::numbers::ln2; }

}  // namespace oracle
