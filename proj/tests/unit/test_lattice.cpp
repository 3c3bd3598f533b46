#include <gtest/gtest.h>

#include <set>

#include "xxzent/lattice.hpp"

using namespace xxzent;

TEST(Lattice, TwoSiteRingCollapsesToOneBond) {
    const auto lat = build_lattice({1, 2, Boundary::periodic});
    EXPECT_EQ(lat.site_count(), 2u);
    ASSERT_EQ(lat.bond_count(), 1u);
    EXPECT_EQ(lat.bonds()[0].i, 0u);
    EXPECT_EQ(lat.bonds()[0].j, 1u);
    EXPECT_TRUE(lat.degenerate());
    EXPECT_FALSE(lat.warnings().empty());
}

TEST(Lattice, FourSiteRing) {
    const auto lat = build_lattice({1, 4, Boundary::periodic});
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (const auto& b : lat.bonds()) got.emplace(b.i, b.j);
    const std::set<std::pair<std::size_t, std::size_t>> want{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    EXPECT_EQ(got, want);
    EXPECT_EQ(lat.sublattice(0), Sublattice::A);
    EXPECT_EQ(lat.sublattice(2), Sublattice::A);
    EXPECT_EQ(lat.sublattice(1), Sublattice::B);
    EXPECT_EQ(lat.sublattice(3), Sublattice::B);
    EXPECT_FALSE(lat.degenerate());
}

TEST(Lattice, SquareFourByFourHasThirtyTwoBonds) {
    const auto lat = build_lattice({2, 4, Boundary::periodic});
    EXPECT_EQ(lat.site_count(), 16u);
    EXPECT_EQ(lat.bond_count(), 32u);
}

TEST(Lattice, CubicBondCount) {
    const auto lat = build_lattice({3, 4, Boundary::periodic});
    EXPECT_EQ(lat.bond_count(), 3u * 64u);
}

TEST(Lattice, OpenChainAndSquare) {
    EXPECT_EQ(build_lattice({1, 5, Boundary::open}).bond_count(), 4u);
    EXPECT_EQ(build_lattice({2, 3, Boundary::open}).bond_count(), 12u);
}

TEST(Lattice, BondsConnectOppositeSublattices) {
    for (int d : {1, 2, 3}) {
        const auto lat = build_lattice({d, 4, Boundary::periodic});
        for (const auto& b : lat.bonds()) {
            EXPECT_LT(b.i, b.j);
            EXPECT_NE(lat.sublattice(b.i), lat.sublattice(b.j));
        }
    }
}

TEST(Lattice, EverySiteHasCoordinationNeighbours) {
    for (int d : {1, 2, 3}) {
        const auto lat = build_lattice({d, 4, Boundary::periodic});
        std::vector<int> deg(lat.site_count(), 0);
        for (const auto& b : lat.bonds()) {
            ++deg[b.i];
            ++deg[b.j];
        }
        for (int k : deg) EXPECT_EQ(k, coordination_number(d));
    }
}

TEST(Lattice, CoordinatesRoundTrip) {
    const auto lat = build_lattice({3, 4, Boundary::periodic});
    for (std::size_t s = 0; s < lat.site_count(); ++s) EXPECT_EQ(lat.site_index(lat.coordinates(s)), s);
}

TEST(Lattice, RejectsBadInput) {
    EXPECT_THROW(build_lattice({4, 4, Boundary::periodic}), std::invalid_argument);
    EXPECT_THROW(build_lattice({1, 1, Boundary::periodic}), std::invalid_argument);
    EXPECT_THROW(build_lattice({1, 5, Boundary::periodic}), std::invalid_argument);
    EXPECT_THROW(parse_boundary("twisted"), std::invalid_argument);
}

TEST(Lattice, BoundaryNames) {
    EXPECT_EQ(parse_boundary("open"), Boundary::open);
    EXPECT_EQ(to_string(Boundary::periodic), "periodic");
}
