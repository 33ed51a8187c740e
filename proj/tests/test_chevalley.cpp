#include "htower/chevalley.hpp"
#include "htower/orbits.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace htower;
using htower::testing::T;

namespace {

// Largest p with b - p a a root.
int string_below(const RootSystem& rs, const Root& a, const Root& b) {
    int p = 0;
    for (Root d = b - a; rs.is_root(d); d = d - a) ++p;
    return p;
}

} // namespace

TEST(Chevalley, MagnitudesArePPlusOne) {
    for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
        RootSystem rs = build_root_system(T(name));
        ChevalleyConstants nc(rs);
        for (const auto& a : rs.all_roots())
            for (const auto& b : rs.all_roots()) {
                if (!rs.is_root(a + b)) {
                    EXPECT_EQ(nc.N(a, b), 0);
                    continue;
                }
                EXPECT_EQ(std::abs(nc.N(a, b)), string_below(rs, a, b) + 1) << name << " " << root_str(a) << root_str(b);
                EXPECT_EQ(nc.N(a, b), -nc.N(b, a));
            }
    }
}

TEST(Chevalley, SmallExamples) {
    RootSystem g2 = build_root_system(T("G2"));
    ChevalleyConstants ng(g2);
    EXPECT_EQ(std::abs(ng.N({1, 0}, {1, 1})), 2);
    EXPECT_EQ(std::abs(ng.N({1, 0}, {2, 1})), 3);
    RootSystem c2 = build_root_system(T("C2"));
    ChevalleyConstants nc(c2);
    EXPECT_EQ(std::abs(nc.N({1, 0}, {1, 1})), 2);
    EXPECT_EQ(nc.N({1, 0}, {0, 1}), 1);  // extraspecial pair, default sign
}

TEST(Chevalley, FullAlgebraSatisfiesJacobi) {
    for (const char* name : {"A2", "B2", "C3", "G2", "A4", "D4"}) {
        RootSystem rs = build_root_system(T(name));
        ChevalleyConstants nc(rs);
        ChevalleyAlgebra g(nc);
        EXPECT_EQ(g.dim(), lie_algebra_dimension(T(name)));
        EXPECT_EQ(g.jacobi_violations(), 0) << name;
    }
}

TEST(Chevalley, CartanActsByPairings) {
    RootSystem rs = build_root_system(T("B2"));
    ChevalleyConstants nc(rs);
    ChevalleyAlgebra g(nc);
    int ea = g.index_of_root(rs.simple(0));
    IVec br = g.bracket(1, ea);  // [h_2, e_{a1}]
    ASSERT_EQ(br.size(), 1u);
    EXPECT_EQ(br.at(ea), rs.pairing(rs.simple(0), rs.simple(1)));
    EXPECT_EQ(g.label(0), "h1");
}

TEST(Chevalley, FlippedSignsChangeNoRank) {
    auto flip = [](const Root& r) { return height(r) % 3 == 0 ? -1 : 1; };
    for (const char* name : {"C4", "F4", "E6"}) {
        NilpotentAlgebra plain = NilpotentAlgebra::build(T(name));
        NilpotentAlgebra flipped = NilpotentAlgebra::build(T(name), flip);
        EXPECT_EQ(flipped.jacobi_violations(), 0) << name;
        bool differs = false;
        for (int i = 0; i < plain.dim(); ++i)
            for (int j = 0; j < plain.dim(); ++j) {
                const auto& a = plain.bracket(i, j);
                const auto& b = flipped.bracket(i, j);
                ASSERT_EQ(a.size(), b.size());
                if (!a.empty() && a[0].coeff != b[0].coeff) differs = true;
            }
        EXPECT_TRUE(differs) << name;
        RationalSampler rng(3);
        for (int k = 0; k <= plain.tower().height; ++k) {
            RankableSpec spec{k, {}};
            for (int s = 0; s < k; ++s) spec.central_values.push_back(rng.nonzero());
            EXPECT_EQ(orbit_dimension(plain, rankable_functional(plain, spec)),
                      orbit_dimension(flipped, rankable_functional(flipped, spec)));
        }
        Functional generic(plain.dim());
        for (auto& v : generic) v = rng.any();
        EXPECT_EQ(orbit_dimension(plain, generic), orbit_dimension(flipped, generic)) << name;
    }
}
