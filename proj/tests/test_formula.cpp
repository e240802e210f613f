#include <gtest/gtest.h>

#include <set>

#include <hornmx/bilateral.hpp>
#include <hornmx/formula.hpp>
#include <hornmx/identities.hpp>

using namespace hornmx;

TEST(FormulaParser, EulerOperatorWithPrefixPower) {
    Expression e = parse_formula("(x^2 d/dx)^r x^{A+(r-1)I} G1(A, B, B'; x, xy)");
    ASSERT_TRUE(e.op);
    EXPECT_TRUE(e.op->euler);
    EXPECT_EQ(e.op->var, 'x');
    ASSERT_EQ(e.atoms.size(), 2u);
    EXPECT_EQ(e.atoms[0].kind, AtomKind::power);
    EXPECT_EQ(e.atoms[0].param, ParamId::A);
    EXPECT_EQ(e.atoms[0].offset.at(3), 2);
    const SeriesCall& c = e.atoms[1].call;
    EXPECT_EQ(c.function, "G1");
    ASSERT_EQ(c.args.size(), 3u);
    EXPECT_EQ(c.args[2].param, ParamId::Bp);
    EXPECT_EQ(c.second.px, 1);
    EXPECT_EQ(c.second.py, 1);
}

TEST(FormulaParser, PochhammerAtoms) {
    Expression e = parse_formula("(-1)^r (A)_{2r} (I-B)_r^-1 (1-C')_r (C)_n");
    ASSERT_EQ(e.atoms.size(), 5u);
    EXPECT_EQ(e.atoms[0].kind, AtomKind::sign);
    EXPECT_EQ(e.atoms[1].index.at(3), 6);
    EXPECT_TRUE(e.atoms[2].one_minus);
    EXPECT_TRUE(e.atoms[2].inverted);
    EXPECT_TRUE(e.atoms[3].one_minus);
    EXPECT_EQ(e.atoms[3].param, ParamId::Cp);
    EXPECT_FALSE(e.atoms[4].inverted);
}

TEST(FormulaParser, ShiftedArgumentsAndQuotients) {
    Expression e = parse_formula("H3(A+2rI, B; C-rI; x^2, y/x)");
    const SeriesCall& c = e.atoms[0].call;
    ASSERT_EQ(c.args.size(), 3u);
    EXPECT_EQ(c.args[0].shift.at(2), 4);
    EXPECT_EQ(c.args[2].shift.at(2), -2);
    EXPECT_EQ(c.first.px, 2);
    EXPECT_EQ(c.second.px, -1);
    EXPECT_EQ(c.second.py, 1);
    EXPECT_NEAR(std::abs(c.second.value(0.5, 0.2) - 0.4), 0.0, 1e-15);
}

TEST(FormulaParser, SummationAtoms) {
    Expression e = parse_formula("(1-t)^{-A} G1(A, B, B'; x/(1-t), y/(1-t))");
    ASSERT_EQ(e.atoms.size(), 2u);
    EXPECT_EQ(e.atoms[0].kind, AtomKind::one_minus_t_power);
    EXPECT_EQ(e.atoms[1].call.first.pt, -1);
    EXPECT_NEAR(e.atoms[1].call.first.value(0.1, 0.1, 0.5).real(), 0.2, 1e-15);
}

TEST(FormulaParser, RejectsGarbage) {
    EXPECT_THROW(parse_formula("G1(A, B"), DomainError);
    EXPECT_THROW(parse_formula("(Q)_r"), DomainError);
    EXPECT_THROW(parse_formula("x^{A+rJ}"), DomainError);
}

TEST(BilateralParser, ExpandsPolynomialCoefficients) {
    auto terms = parse_bilateral("x(1+x)U_xx - yU_xy + U_x(I-B) + AUB'");
    ASSERT_EQ(terms.size(), 4u);
    ASSERT_EQ(terms[0].monomials.size(), 2u);
    EXPECT_EQ(terms[0].monomials[1].px, 2);
    EXPECT_EQ(terms[0].monomials[1].deriv, Deriv::Uxx);
    EXPECT_DOUBLE_EQ(terms[1].monomials[0].coef, -1.0);
    ASSERT_EQ(terms[2].monomials.size(), 2u);
    EXPECT_EQ(terms[2].monomials[1].right, std::vector<ParamId>{ParamId::B});
    EXPECT_DOUBLE_EQ(terms[2].monomials[1].coef, -1.0);
    EXPECT_EQ(terms[3].monomials[0].left, std::vector<ParamId>{ParamId::A});
    EXPECT_EQ(terms[3].monomials[0].right, std::vector<ParamId>{ParamId::Bp});
}

TEST(BilateralParser, RejectsSummandWithoutU) {
    EXPECT_THROW(parse_bilateral("xU_x + AB"), DomainError);
    EXPECT_THROW(parse_bilateral("U U_x"), DomainError);
}

TEST(Conditions, ParsesPrimedPairs) {
    auto c = parse_conditions("BB' CC'' C'C''");
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[1], std::pair(ParamId::C, ParamId::Cpp));
    EXPECT_EQ(c[2], std::pair(ParamId::Cp, ParamId::Cpp));
    EXPECT_THROW(parse_conditions("BQ"), DomainError);
}

TEST(IdentityTables, IdsUniqueAndFunctionsCataloged) {
    std::set<std::string> ids;
    auto check = [&](const std::string& id, const std::string& f) {
        EXPECT_TRUE(ids.insert(id).second) << id;
        EXPECT_NO_THROW(get_spec(f)) << id;
    };
    for (const auto& e : pde_table()) check(e.id, e.function);
    for (const auto& e : diff_table()) check(e.id, e.function);
    for (const auto& e : summation_table()) check(e.id, e.function);
    for (const auto& e : confluence_table()) check(e.id, e.function);
    for (const auto& e : integral_table()) check(e.id, e.function);
}

TEST(IdentityTables, EveryFunctionHasABilateralSystem) {
    for (const auto& s : catalog()) {
        int n = 0;
        for (const auto& e : pde_table()) n += e.function == s.name && e.note.empty();
        EXPECT_EQ(n, 2) << s.name;
    }
}

TEST(IdentityTables, EveryConfluentFunctionHasALimit) {
    std::set<std::string> seen;
    for (const auto& e : confluence_table()) {
        seen.insert(e.function);
        EXPECT_EQ(e.parent_args.size(), get_spec(e.parent).params.size()) << e.id;
    }
    for (const auto& s : catalog()) EXPECT_EQ(seen.count(s.name) == 1, s.confluent) << s.name;
}

TEST(IdentityTables, AllEntriesParse) {
    for (const auto& e : pde_table()) EXPECT_NO_THROW(parse_bilateral(e.equation)) << e.id;
    for (const auto* t : {&diff_table(), &summation_table()})
        for (const auto& e : *t) {
            EXPECT_NO_THROW(parse_formula(e.lhs)) << e.id;
            EXPECT_NO_THROW(parse_formula(e.rhs)) << e.id;
            EXPECT_NO_THROW(parse_conditions(e.conditions)) << e.id;
        }
}

TEST(IdentityTables, EulerRowsGainCorrectedSiblings) {
    int euler = 0;
    for (const auto& e : diff_table()) {
        if (e.lhs.rfind("(x^2", 0) != 0 && e.lhs.rfind("(y^2", 0) != 0) continue;
        ++euler;
        const bool corrected = e.id.size() > 10 && e.id.substr(e.id.size() - 10) == ".corrected";
        if (corrected) EXPECT_EQ(e.lhs.find("(r-1)"), std::string::npos) << e.id;
    }
    EXPECT_GT(euler, 40);
}
