#include "xxzent/eigensolver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace xxzent {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const Vec& x, Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(Vec& x, double alpha) {
    for (auto& v : x) v *= alpha;
}

// Two passes of classical Gram-Schmidt against every vector in both sets.
void orthogonalize(Vec& w, const std::vector<Vec>& locked, const std::vector<Vec>& krylov) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : locked) axpy(-dot(q, w), q, w);
        for (const auto& q : krylov) axpy(-dot(q, w), q, w);
    }
}

GroundState lanczos_impl(const SparseHamiltonian& h, const LanczosOptions& opt,
                         const std::vector<Vec>& locked) {
    const std::size_t dim = h.dimension();
    if (dim == 0) throw std::invalid_argument("empty Hamiltonian");
    if (locked.size() >= dim) {
        throw std::invalid_argument("no eigenpairs left: dimension " + std::to_string(dim));
    }
    if (opt.tol <= 0 || opt.max_iter < 1 || opt.krylov_dim < 2) {
        throw std::invalid_argument("invalid Lanczos options");
    }

    GroundState result;
    result.magnetization = h.basis().magnetization();
    result.seed = opt.seed;

    if (dim == 1) {
        result.energy = h.diagonal()[0];
        result.vector = {1.0};
        result.iterations = 0;
        result.residual = 0.0;
        return result;
    }

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Vec v(dim);
    for (auto& x : v) x = uni(rng);
    orthogonalize(v, locked, {});
    scale(v, 1.0 / norm(v));

    const auto max_krylov =
        static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(opt.krylov_dim),
                                                       dim - locked.size()));
    int total = 0;
    Vec w(dim);
    std::vector<Vec> basis;
    std::vector<double> alpha, beta;

    while (true) {
        basis.clear();
        alpha.clear();
        beta.clear();
        basis.push_back(v);

        Eigen::VectorXd ritz;
        for (std::size_t j = 0;; ++j) {
            h.apply(basis[j], w);
            ++total;
            const double a = dot(basis[j], w);
            alpha.push_back(a);
            axpy(-a, basis[j], w);
            if (j > 0) axpy(-beta[j - 1], basis[j - 1], w);
            orthogonalize(w, locked, basis);
            const double b = norm(w);

            const bool last = j + 1 == max_krylov || total >= opt.max_iter;
            const bool breakdown = b <= 1e-13 * std::max(1.0, std::abs(a));
            bool converged = false;
            if (last || breakdown || j % 4 == 3) {
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
                Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(alpha.data(), alpha.size());
                Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(beta.data(), beta.size());
                tri.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
                ritz = tri.eigenvectors().col(0);
                converged = b * std::abs(ritz(static_cast<Eigen::Index>(j))) <= 0.1 * opt.tol;
            }
            if (last || breakdown || converged) break;

            beta.push_back(b);
            basis.emplace_back(w);
            scale(basis.back(), 1.0 / b);
        }

        Vec y(dim, 0.0);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            axpy(ritz(static_cast<Eigen::Index>(i)), basis[i], y);
        }
        orthogonalize(y, locked, {});
        scale(y, 1.0 / norm(y));

        h.apply(y, w);
        ++total;
        const double rq = dot(y, w);
        axpy(-rq, y, w);
        const double res = norm(w);

        result.energy = rq;
        result.vector = y;
        result.residual = res;
        result.iterations = total;

        if (res <= opt.tol) break;
        if (total >= opt.max_iter) {
            fix_phase(result.vector);
            std::ostringstream os;
            os.precision(12);
            os << "Lanczos did not converge after " << total << " matrix-vector products (residual "
               << res << ", tolerance " << opt.tol << ", best energy " << rq << ")";
            throw ConvergenceError(os.str(), std::move(result));
        }
        v = std::move(y);
    }

    fix_phase(result.vector);
    return result;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense_solve(const SparseHamiltonian& h,
                                                           std::size_t max_dim, bool vectors) {
    const auto dense = h.to_dense(max_dim);
    const auto n = static_cast<Eigen::Index>(h.dimension());
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        dense.data(), n, n);
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
        m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
}

}  // namespace

void fix_phase(std::vector<double>& v) {
    if (v.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    }
    if (v[best] < 0) {
        for (auto& x : v) x = -x;
    }
}

double residual_norm(const SparseHamiltonian& h, const std::vector<double>& v, double e) {
    std::vector<double> w(v.size());
    h.apply(v, w);
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double r = w[i] - e * v[i];
        s += r * r;
    }
    return std::sqrt(s);
}

GroundState lanczos_ground(const SparseHamiltonian& h, const LanczosOptions& options) {
    return lanczos_impl(h, options, {});
}

std::vector<GroundState> lanczos_lowest(const SparseHamiltonian& h, int count,
                                        const LanczosOptions& options) {
    if (count < 1) throw std::invalid_argument("count must be positive");
    if (static_cast<std::size_t>(count) > h.dimension()) {
        throw std::invalid_argument("requested more eigenpairs than the sector dimension");
    }
    std::vector<GroundState> out;
    std::vector<Vec> locked;
    for (int k = 0; k < count; ++k) {
        out.push_back(lanczos_impl(h, options, locked));
        locked.push_back(out.back().vector);
    }
    return out;
}

GroundState dense_ground_oracle(const SparseHamiltonian& h, std::size_t max_dim) {
    const auto es = dense_solve(h, max_dim, true);
    GroundState g;
    g.energy = es.eigenvalues()(0);
    const auto col = es.eigenvectors().col(0);
    g.vector.assign(col.data(), col.data() + col.size());
    fix_phase(g.vector);
    g.magnetization = h.basis().magnetization();
    g.residual = residual_norm(h, g.vector, g.energy);
    return g;
}

std::vector<double> dense_spectrum(const SparseHamiltonian& h, std::size_t max_dim) {
    const auto es = dense_solve(h, max_dim, false);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

}  // namespace xxzent
