#include "htower/chevalley.hpp"
#include "htower/heisenberg.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace htower;
using htower::testing::T;

TEST(HeisenbergParabolic, StructuralInvariants) {
    for (const auto& t : htower::testing::split_types()) {
        RootSystem rs = build_root_system(t);
        HeisenbergParabolicInfo info = heisenberg_parabolic(rs);
        EXPECT_EQ(info.g1_dim % 2, 0) << t.str();
        ASSERT_GE(info.removed.size(), 1u);
        ASSERT_LE(info.removed.size(), 2u);
        EXPECT_EQ(info.removed.size() == 2, t.family == Family::A) << t.str();
        EXPECT_EQ(info.center, rs.highest_root());
        EXPECT_EQ(symplectic_form_rank_check(rs), info.g1_dim) << t.str();
        // [[g0, g0], g2] = 0: no level-0 root added to the highest root is a root.
        auto grading = rs.coroot_grading(info.center);
        for (const auto& a : grading[0]) EXPECT_FALSE(rs.is_root(a + info.center));
    }
}

TEST(HeisenbergParabolic, Examples) {
    auto e8 = heisenberg_parabolic(build_root_system(T("E8")));
    EXPECT_EQ(e8.levi_str(), "E7");
    EXPECT_EQ(e8.g1_str(), "V(w7)");
    EXPECT_EQ(e8.g1_dim, 56);

    auto a4 = heisenberg_parabolic(build_root_system(T("A4")));
    EXPECT_EQ(a4.removed, (std::vector<int>{0, 3}));
    EXPECT_EQ(a4.levi_str(), "A2");
    EXPECT_EQ(a4.g1_str(), "V(w1)+V(w1)*");

    auto g2 = heisenberg_parabolic(build_root_system(T("G2")));
    EXPECT_EQ(g2.g1_str(), "V(3w1)");
    EXPECT_EQ(g2.g1_dim, 4);

    auto b3 = heisenberg_parabolic(build_root_system(T("B3")));
    EXPECT_EQ(b3.levi_str(), "A1xA1");
}

TEST(HeisenbergParabolic, RejectsSl2) {
    EXPECT_THROW(heisenberg_parabolic(build_root_system(T("A1"))), PreconditionError);
}

TEST(RestrictedHeisenberg, NilradicalDimensions) {
    EXPECT_EQ(restricted_heisenberg(lookup_form("su(2,3)")).nilradical_dim, 7);
    EXPECT_EQ(restricted_heisenberg(lookup_form("(e8,so(12))")).nilradical_dim, 57);
    EXPECT_EQ(restricted_heisenberg(lookup_form("so(6,6)")).n_value, 8);
    const Catalog& c = default_catalog();
    for (const auto& [i, env] : c.sample_instances(7)) {
        FormDescriptor f = c.instantiate(c.entries()[i], env);
        if (!satisfies_gdefine(f)) {
            EXPECT_THROW(restricted_heisenberg(f), PreconditionError) << f.label;
            continue;
        }
        auto info = restricted_heisenberg(f);
        EXPECT_EQ(info.nilradical_dim % 2, 1) << f.label;
        EXPECT_EQ(restricted_system(f).mult_of(info.center), 1) << f.label;
    }
}

TEST(RestrictedHeisenberg, GdefineFailureNamesTheCondition) {
    try {
        restricted_heisenberg(lookup_form("sp(2,3)"));
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.condition, "gdefine");
        EXPECT_NE(std::string(e.what()).find("multiplicity 3"), std::string::npos);
    }
}
