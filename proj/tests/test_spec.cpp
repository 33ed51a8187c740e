#include "htower/spec.hpp"

#include <gtest/gtest.h>

using namespace htower;

TEST(GroupSpec, CartanLabels) {
    GroupSpec e8 = parse_group_spec("E8");
    ASSERT_TRUE(e8.is_split_type());
    EXPECT_EQ(e8.form().label, "(e8,so(12))");
    GroupSpec c3 = parse_group_spec("C3 split");
    ASSERT_TRUE(c3.is_split_type());
    EXPECT_EQ(format_group_spec(c3), "C3");
    EXPECT_EQ(c3.form().label, "sp_6(R)");
}

TEST(GroupSpec, RealFormsAndTitsIndices) {
    GroupSpec su = parse_group_spec("su(2,3)");
    ASSERT_TRUE(su.is_form());
    EXPECT_EQ(su.form().restricted.str(), "BC2");
    EXPECT_EQ(parse_group_spec("so*(12)").form().label, "so*(12)");
    EXPECT_EQ(parse_group_spec("(e7,su8)").form().absolute.str(), "E7");
    GroupSpec tits = parse_group_spec("2A_{5,3}^{(1)}");
    EXPECT_EQ(tits.form().field, FieldKind::padic);
    GroupSpec so = parse_group_spec("so(5,11)");
    EXPECT_EQ(so.form().restricted.str(), "B5");
    EXPECT_EQ(so.form().mult.at("short"), 6);
}

TEST(GroupSpec, ClassicalGroups) {
    GroupSpec so = parse_group_spec("SO(6,6)");
    ASSERT_TRUE(so.is_classical());
    EXPECT_EQ(std::get<TypeIGroup>(so.resolved).k1(), 2);
    EXPECT_EQ(so.form().label, "so(6,6)");
    GroupSpec sl = parse_group_spec("SL(5,R)");
    ASSERT_TRUE(sl.is_sl());
    EXPECT_EQ(std::get<SLGroup>(sl.resolved).n, 5);
    EXPECT_EQ(sl.form().label, "sl_5(R)");
    EXPECT_EQ(std::get<TypeIGroup>(parse_group_spec("Sp(6,R)").resolved).D, DivisionKind::R);
    EXPECT_EQ(std::get<TypeIGroup>(parse_group_spec("SO*(12)").resolved).D, DivisionKind::H);
    EXPECT_EQ(std::get<TypeIGroup>(parse_group_spec("SU(2, 3)").resolved).D, DivisionKind::C);
    GroupSpec spq = parse_group_spec("Sp(2,3)");
    EXPECT_FALSE(satisfies_gdefine(spq.form()));
}

TEST(GroupSpec, RoundTrips) {
    for (const char* s : {"E8", "C3 split", "G2", "su(2,3)", "so*(12)", "(e7,su8)", "2A_{5,3}^{(1)}", "so(5,11)",
                          "SO(6,6)", "SL(5,R)", "Sp(6,R)", "SU(2,3)", "SO*(12)", "Sp(2,3)", "e8(8)", "sl(4,R)"}) {
        GroupSpec g = parse_group_spec(s);
        std::string canon = format_group_spec(g);
        GroupSpec back = parse_group_spec(canon);
        EXPECT_TRUE(same_group(g, back)) << s;
        EXPECT_EQ(format_group_spec(back), canon) << s;
    }
    EXPECT_EQ(format_group_spec(parse_group_spec("e8(8)")), "(e8,so(12))");
    EXPECT_EQ(format_group_spec(parse_group_spec("E_{8}")), "E8");
}

TEST(GroupSpec, ErrorsCarryPositions) {
    try {
        parse_group_spec("SO(6,6");
        FAIL();
    } catch (const SpecParseError& e) {
        EXPECT_EQ(e.position, 6u);
    }
    try {
        parse_group_spec("SL(5,C)");
        FAIL();
    } catch (const SpecParseError& e) {
        EXPECT_EQ(e.position, 5u);
    }
    try {
        parse_group_spec("SO(6,x)");
        FAIL();
    } catch (const SpecParseError& e) {
        EXPECT_EQ(e.position, 5u);
    }
    EXPECT_THROW(parse_group_spec("SO(6,6) extra"), SpecParseError);
    EXPECT_THROW(parse_group_spec(""), SpecParseError);
    EXPECT_THROW(parse_group_spec("su(2,3) split"), SpecParseError);
}

TEST(GroupSpec, MissesSuggestAlternatives) {
    try {
        parse_group_spec("su(2,3");
        FAIL();
    } catch (const SpecParseError& e) {
        EXPECT_NE(std::string(e.what()).find("nearest"), std::string::npos);
    }
    EXPECT_THROW(parse_group_spec("D3"), InputError);
}
