#include "htower/rootsys.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace htower;
using htower::testing::T;

TEST(SimpleTypeParse, AcceptsCommonSpellings) {
    EXPECT_EQ(T("E8"), (SimpleType{Family::E, 8}));
    EXPECT_EQ(T("E_8"), (SimpleType{Family::E, 8}));
    EXPECT_EQ(T("E_{8}"), (SimpleType{Family::E, 8}));
    EXPECT_EQ(T("BC2"), (SimpleType{Family::BC, 2}));
    EXPECT_EQ(T("a4").str(), "A4");
}

TEST(SimpleTypeParse, RejectsGarbage) {
    EXPECT_FALSE(parse_simple_type(""));
    EXPECT_FALSE(parse_simple_type("X3"));
    EXPECT_FALSE(parse_simple_type("E"));
    EXPECT_FALSE(parse_simple_type("E8a"));
}

TEST(SimpleTypeLegality, RanksPerFamily) {
    EXPECT_TRUE(is_legal_absolute(T("A1")));
    EXPECT_FALSE(is_legal_absolute(T("B1")));
    EXPECT_FALSE(is_legal_absolute(T("D3")));
    EXPECT_FALSE(is_legal_absolute(T("E9")));
    EXPECT_FALSE(is_legal_absolute(T("F3")));
    EXPECT_FALSE(is_legal_absolute(T("BC2")));
    EXPECT_TRUE(is_legal_restricted(T("BC2")));
    try {
        require_legal(T("D3"));
        FAIL() << "D3 accepted";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("use A3"), std::string::npos);
    }
}

TEST(RootSystem, PositiveRootCountsMatchOracle) {
    for (const auto& t : htower::testing::split_types()) {
        RootSystem rs = build_root_system(t);
        EXPECT_EQ(static_cast<int>(rs.positive_roots().size()), htower::testing::frozen_tower(t.str()).positive_roots)
            << t.str();
        EXPECT_EQ(rs.num_roots(), 2 * rs.positive_roots().size());
    }
    EXPECT_EQ(build_root_system(T("E8")).num_roots(), 240u);
}

TEST(RootSystem, LongRootsHaveLengthTwoAndCartanIntegersAreSmall) {
    for (const auto& t : htower::testing::split_types()) {
        RootSystem rs = build_root_system(t);
        auto lens = rs.squared_lengths();
        EXPECT_EQ(lens.back(), Q(2)) << t.str();
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                int c = rs.pairing(rs.simple(i), rs.simple(j));
                EXPECT_GE(c, -3);
                EXPECT_LE(c, i == j ? 2 : 0);
            }
    }
}

TEST(RootSystem, EveryRootIsPositiveOrNegative) {
    RootSystem rs = build_root_system(T("F4"));
    for (const auto& r : rs.all_roots()) {
        bool pos = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
        bool neg = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
        EXPECT_TRUE(pos != neg) << root_str(r);
    }
}

TEST(RootSystem, HighestRoots) {
    EXPECT_EQ(build_root_system(T("E8")).highest_root(), (Root{2, 3, 4, 6, 5, 4, 3, 2}));
    EXPECT_EQ(build_root_system(T("F4")).highest_root(), (Root{2, 3, 4, 2}));
    EXPECT_EQ(build_root_system(T("G2")).highest_root(), (Root{3, 2}));
    EXPECT_EQ(build_root_system(T("C3")).highest_root(), (Root{2, 2, 1}));
    EXPECT_EQ(build_root_system(T("B3")).highest_root(), (Root{1, 2, 2}));
}

TEST(RootSystem, LevelTwoOfTheHighestRootGradingIsOneDimensional) {
    for (const auto& t : htower::testing::split_types()) {
        RootSystem rs = build_root_system(t);
        Root top = rs.highest_root();
        auto g = rs.coroot_grading(top);
        ASSERT_EQ(g[2].size(), 1u) << t.str();
        EXPECT_EQ(g[2][0], top);
        for (const auto& [lvl, roots] : g) EXPECT_LE(std::abs(lvl), 2) << t.str();
    }
}

TEST(RootSystem, LengthClasses) {
    RootSystem g2 = build_root_system(T("G2"));
    EXPECT_EQ(g2.length_class(g2.simple(0)), "short");
    EXPECT_EQ(g2.length_class(g2.simple(1)), "long");
    RootSystem e6 = build_root_system(T("E6"));
    EXPECT_EQ(e6.length_class(e6.simple(0)), "all");
}

TEST(RootSystem, NonReducedBCHasDoubledRoots) {
    RootSystem bc = build_restricted_root_system(T("BC2"));
    EXPECT_EQ(bc.positive_roots().size(), 6u);
    EXPECT_EQ(bc.squared_lengths().size(), 3u);
    EXPECT_EQ(bc.length_class(bc.highest_root()), "long");
}

TEST(RootSystem, ComponentsOfSubdiagrams) {
    RootSystem e8 = build_root_system(T("E8"));
    auto comps = e8.components({0, 1, 2, 3, 4, 5, 6});
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].type, T("E7"));
    RootSystem d6 = build_root_system(T("D6"));
    auto split = d6.components({0, 2, 3, 4, 5});
    ASSERT_EQ(split.size(), 2u);
}

TEST(RootSystem, CorootGradingRejectsNonRoots) {
    RootSystem a3 = build_root_system(T("A3"));
    EXPECT_THROW(a3.coroot_grading({1, 0, 1}), InputError);
}
