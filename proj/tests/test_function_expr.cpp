#include <gtest/gtest.h>

#include <random>

#include "f2x/error.hpp"
#include "f2x/function_expr.hpp"
#include "oracles.hpp"

using namespace f2x;
using oracle::P;

TEST(FunctionExpr, ParsesGrammar) {
    EXPECT_EQ(to_string(parse_function_expr("sigma")), "sigma");
    EXPECT_EQ(to_string(parse_function_expr("sigma * mu")), "sigma*mu");
    EXPECT_EQ(to_string(parse_function_expr("inv(sigma)*phi")), "inv(sigma)*phi");
    EXPECT_EQ(to_string(parse_function_expr("sq(sigma_star)")), "sq(sigma_star)");
    EXPECT_EQ(to_string(parse_function_expr("z*mu*id")), "z*mu*id");
    EXPECT_EQ(to_string(parse_function_expr("z*(mu*id)")), "z*(mu*id)");
    EXPECT_EQ(to_string(parse_function_expr("inv(inv(phi))")), "inv(inv(phi))");
}

TEST(FunctionExpr, LeftAssociative) {
    const FunctionExpr e = parse_function_expr("z*mu*id");
    ASSERT_EQ(e.kind(), FunctionExpr::Kind::convolution);
    EXPECT_EQ(e.lhs().kind(), FunctionExpr::Kind::convolution);
    EXPECT_EQ(e.rhs().identifier(), "id");
}

TEST(FunctionExpr, Errors) {
    EXPECT_THROW(parse_function_expr(""), ParseError);
    EXPECT_THROW(parse_function_expr("tau"), ParseError);
    EXPECT_THROW(parse_function_expr("sigma*"), ParseError);
    EXPECT_THROW(parse_function_expr("inv(sigma"), ParseError);
    EXPECT_THROW(parse_function_expr("sigma mu"), ParseError);
    try {
        parse_function_expr("sigma*tau");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6u);
    }
}

TEST(FunctionExpr, CompiledNameMatchesText) {
    for (const char* t : {"sigma*mu", "inv(sigma)", "sq(phi)", "inv(sigma_star)*z", "z*(mu*id)"}) {
        EXPECT_EQ(compile(parse_function_expr(t)).name(), t);
    }
}

TEST(FunctionExpr, SymbolicAndLatticeRoutesAgree) {
    const char* exprs[] = {"sigma*mu",         "inv(sigma)*phi", "sq(sigma_star)",        "inv(sigma*z)",
                           "inv(inv(phi))*id", "z*(mu*sigma)",   "inv(sigma_star*inv(sigma))", "sq(inv(sigma))"};
    std::mt19937_64 rng(31);
    for (const char* t : exprs) {
        const FunctionExpr e = parse_function_expr(t);
        const auto f = compile(e);
        for (int i = 0; i < 60; ++i) {
            const Poly a = P(oracle::random_poly(rng, 14));
            ASSERT_EQ(oracle_evaluate(e, a), f(a)) << t << " at " << to_string(a);
        }
    }
}

TEST(FunctionExpr, LatticeRouteMatchesMaskOracle) {
    // inv(sigma)*phi from first principles
    oracle::Inverse sinv([](oracle::M d) { return oracle::sigma(d); });
    const FunctionExpr e = parse_function_expr("inv(sigma)*phi");
    for (oracle::M m = 1; m < 300; ++m) {
        const oracle::M expected = oracle::convolve(sinv, [](oracle::M d) { return oracle::phi(d); }, m);
        ASSERT_EQ(oracle_evaluate(e, P(m)), P(expected)) << m;
    }
}

TEST(FunctionTable, SwapsEntries) {
    FunctionTable t = FunctionTable::standard();
    t.set("sigma", builtin("id"));
    const FunctionExpr e = parse_function_expr("sigma");
    EXPECT_EQ(oracle_evaluate(e, P(0b100), t), P(0b100));
    EXPECT_EQ(oracle_evaluate(e, P(0b100)), P(0b111));
    EXPECT_THROW(FunctionTable{}.get("sigma"), DomainError);
    EXPECT_THROW(oracle_evaluate(e, Poly{}), DomainError);
}
