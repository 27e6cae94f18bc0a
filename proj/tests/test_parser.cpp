#include "ctrans/report.hpp"
#include "ctrans/series_expr.hpp"

#include <doctest.h>

using namespace ctrans;
using Kind = SeriesExpr::Kind;

namespace {

std::size_t error_position(const std::string& text) {
    try {
        parse_gf(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
}

}  // namespace

TEST_CASE("geometric series tree") {
    SeriesExpr e = parse_gf("1/(1-x)");
    const auto& root = e.root();
    REQUIRE(root.kind == Kind::Div);
    CHECK(root.lhs->kind == Kind::Integer);
    CHECK(root.lhs->value == 1);
    REQUIRE(root.rhs->kind == Kind::Sub);
    CHECK(root.rhs->lhs->kind == Kind::Integer);
    CHECK(root.rhs->rhs->kind == Kind::Var);
}

TEST_CASE("Catalan closed form tree") {
    SeriesExpr e = parse_gf("(1-sqrt(1-4*x))/(2*x)");
    REQUIRE(e.root().kind == Kind::Div);
    const auto& num = *e.root().lhs;
    REQUIRE(num.kind == Kind::Sub);
    CHECK(num.rhs->kind == Kind::Sqrt);
    CHECK(num.rhs->lhs->kind == Kind::Sub);
    CHECK(e.root().rhs->kind == Kind::Mul);
}

TEST_CASE("c() argument tree") {
    SeriesExpr e = parse_gf("1/(1-3*x*c(x))");
    REQUIRE(e.root().kind == Kind::Div);
    const auto& prod = *e.root().rhs->rhs;
    REQUIRE(prod.kind == Kind::Mul);
    CHECK(prod.rhs->kind == Kind::Catalan);
    CHECK(prod.rhs->lhs->kind == Kind::Var);
    CHECK(expand(e, 5).coeffs() == rationals({1, 3, 12, 51, 222, 978}));
}

TEST_CASE("whitespace, unary minus and powers") {
    CHECK(expand(" 1 / ( 1 - x ) ", 4) == expand("1/(1-x)", 4));
    CHECK(expand("-x+1", 3).coeffs() == rationals({1, -1, 0, 0}));
    CHECK(expand("--x", 2).coeffs() == rationals({0, 1, 0}));
    CHECK(expand("(1+x)^3", 4).coeffs() == rationals({1, 3, 3, 1, 0}));
    CHECK(parse_gf("-x^2").root().kind == Kind::Neg);
    CHECK(expand("2-x-x", 2).coeffs() == rationals({2, -2, 0}));
    CHECK(expand("12/3/2", 0).coeffs() == rationals({2}));
}

TEST_CASE("syntax errors report positions") {
    CHECK(error_position("1/(1-x") == 6);
    CHECK(error_position("1+") == 2);
    CHECK(error_position("2x") == 1);
    CHECK(error_position("1/(1-y)") == 5);
    CHECK(error_position("sin(x)") == 0);
    CHECK(error_position("x^y") == 2);
    CHECK(error_position("") == 0);
    CHECK(error_position("(1-x))") == 5);
}

TEST_CASE("to_string round trips") {
    for (const char* text : {"1/(1-x)", "(1-sqrt(1-4*x))/(2*x)", "1/(1-3*x*c(x))", "1-(x-x^2)", "x/(2/(1+x))",
                             "-(1+x)^2", "(c(x)-1)/x", "1-x*(1-x)^3/(1+x)^2"}) {
        SeriesExpr e = parse_gf(text);
        SeriesExpr back = parse_gf(e.to_string());
        CHECK_MESSAGE(back.to_string() == e.to_string(), text);
        CHECK_MESSAGE(expand(back, 10) == expand(e, 10), text);
    }
}
