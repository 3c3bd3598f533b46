#include "xxzent/lattice.hpp"

#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace xxzent {

namespace {

void validate(const LatticeSpec& spec) {
    if (spec.dimension < 1 || spec.dimension > 3) {
        throw std::invalid_argument("lattice dimension must be 1, 2 or 3 (got " +
                                    std::to_string(spec.dimension) + ")");
    }
    if (spec.linear_size < 2) {
        throw std::invalid_argument("linear size must be at least 2 (got " +
                                    std::to_string(spec.linear_size) + ")");
    }
    if (spec.boundary == Boundary::periodic && spec.linear_size % 2 != 0) {
        throw std::invalid_argument("odd linear size " + std::to_string(spec.linear_size) +
                                    " with periodic boundaries is not bipartite");
    }
}

}  // namespace

std::size_t site_count(const LatticeSpec& spec) {
    validate(spec);
    std::size_t n = 1;
    for (int m = 0; m < spec.dimension; ++m) {
        const auto l = static_cast<std::size_t>(spec.linear_size);
        if (n > std::numeric_limits<std::size_t>::max() / l) {
            throw std::overflow_error("lattice site count overflows");
        }
        n *= l;
    }
    return n;
}

int coordination_number(int dimension) { return 2 * dimension; }

std::vector<int> Lattice::coordinates(std::size_t site) const {
    if (site >= site_count()) throw std::out_of_range("site index out of range");
    std::vector<int> c(static_cast<std::size_t>(spec_.dimension));
    for (int m = spec_.dimension - 1; m >= 0; --m) {
        c[static_cast<std::size_t>(m)] = static_cast<int>(site % spec_.linear_size);
        site /= static_cast<std::size_t>(spec_.linear_size);
    }
    return c;
}

std::size_t Lattice::site_index(const std::vector<int>& coords) const {
    if (coords.size() != static_cast<std::size_t>(spec_.dimension)) {
        throw std::invalid_argument("coordinate rank does not match lattice dimension");
    }
    std::size_t idx = 0;
    for (int c : coords) {
        if (c < 0 || c >= spec_.linear_size) throw std::out_of_range("coordinate out of range");
        idx = idx * static_cast<std::size_t>(spec_.linear_size) + static_cast<std::size_t>(c);
    }
    return idx;
}

std::string Lattice::describe() const {
    std::ostringstream os;
    os << spec_.dimension << "D";
    for (int m = 0; m < spec_.dimension; ++m) os << (m ? "x" : " ") << spec_.linear_size;
    os << " " << to_string(spec_.boundary);
    return os.str();
}

Lattice build_lattice(const LatticeSpec& spec) {
    Lattice lat;
    lat.spec_ = spec;
    const std::size_t n = site_count(spec);
    const int d = spec.dimension;
    const int l = spec.linear_size;

    lat.sublattice_.resize(n);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    bool collapsed = false;

    for (std::size_t site = 0; site < n; ++site) {
        const auto c = lat.coordinates(site);
        int parity = 0;
        for (int v : c) parity += v;
        lat.sublattice_[site] = (parity % 2 == 0) ? Sublattice::A : Sublattice::B;

        for (int m = 0; m < d; ++m) {
            auto nb = c;
            if (nb[static_cast<std::size_t>(m)] + 1 == l) {
                if (spec.boundary == Boundary::open) continue;
                nb[static_cast<std::size_t>(m)] = 0;
            } else {
                ++nb[static_cast<std::size_t>(m)];
            }
            std::size_t a = site;
            std::size_t b = lat.site_index(nb);
            if (a > b) std::swap(a, b);
            if (!seen.emplace(a, b).second) {
                collapsed = true;
                continue;
            }
            lat.bonds_.push_back({a, b});
        }
    }

    if (collapsed) {
        lat.warnings_.push_back(
            "degenerate lattice: L=2 with periodic boundaries makes the forward and wrap-around "
            "bonds coincide; each bond is kept once");
    }
    return lat;
}

std::string to_string(Boundary b) { return b == Boundary::periodic ? "periodic" : "open"; }

Boundary parse_boundary(const std::string& s) {
    if (s == "periodic") return Boundary::periodic;
    if (s == "open") return Boundary::open;
    throw std::invalid_argument("unknown boundary '" + s + "' (expected periodic or open)");
}

}  // namespace xxzent
