#include "ctrans/report.hpp"
#include "ctrans/riordan.hpp"
#include "ctrans/series_expr.hpp"

#include <doctest.h>

using namespace ctrans;

namespace {

constexpr int N = 12;

RiordanArray array(const char* g, const char* f, int order = N) { return RiordanArray(expand(g, order), expand(f, order)); }

// The construction example ((1-2x)/(1-x)^2, x/(1-x)).
RiordanArray example() { return array("(1-2*x)/(1-x)^2", "x/(1-x)"); }

}  // namespace

TEST_CASE("construction validates normalization") {
    CHECK_NOTHROW(array("1/(1-x)", "x"));
    CHECK_NOTHROW(array("1/(1-x)", "x/(1-x)"));
    CHECK_THROWS_AS(array("1", "2*x"), MathError);
    CHECK_THROWS_AS(array("2", "x"), MathError);
    CHECK_THROWS_AS(array("1", "1+x"), MathError);
    CHECK(RiordanArray::appell(expand("1/(1-x)", N)) == array("1/(1-x)", "x"));
    CHECK(RiordanArray::pascal(N) == array("1/(1-x)", "x/(1-x)"));
}

TEST_CASE("element") {
    CHECK(RiordanArray::pascal(N).element(4, 2) == 6);
    CHECK(RiordanArray::central_binomial(N).element(3, 1) == 15);
    CHECK(RiordanArray::inverse_central(N).element(3, 1) == 9);
    CHECK_THROWS(RiordanArray::pascal(N).element(2, 3));
    CHECK_THROWS(RiordanArray::pascal(N).element(N + 1, 0));
}

TEST_CASE("matrix view has unit diagonal and Pascal rows") {
    TriangularMatrix p = RiordanArray::pascal(N).matrix(8);
    for (int n = 0; n < 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(p.at(n, k) == Rational(binomial(n, k)));
    for (const auto& a : {RiordanArray::catalan(N), RiordanArray::central_binomial(N), example()})
        for (int n = 0; n <= N; ++n) CHECK(a.element(n, n) == 1);
    CHECK(RiordanArray::appell(expand("1/(1-x)", 5)).matrix() ==
          TriangularMatrix::from_integers({{1}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}}));
}

TEST_CASE("matrix export") {
    TriangularMatrix m = RiordanArray::pascal(3).matrix();
    CHECK(m.to_json() == nlohmann::json::parse(R"([["1"],["1","1"],["1","2","1"],["1","3","3","1"]])"));
    CHECK(m.integer_rows()[3][1] == 3);
    TriangularMatrix frac(std::vector<std::vector<Rational>>{{Rational(1)}, {Rational(1, 2), Rational(1)}});
    CHECK_THROWS_AS(frac.integer_rows(), MathError);
    CHECK(m.to_text().find("1 3 3 1") != std::string::npos);
}

TEST_CASE("multiply") {
    CHECK(RiordanArray::pascal(N) * array("1-x", "x") == example());
    RiordanArray a = RiordanArray::central_binomial(N);
    CHECK(a * RiordanArray::identity(N) == a);
    CHECK(RiordanArray::catalan(N) * RiordanArray::pascal(N) == array("c(x)", "x*c(x)^2"));
    CHECK(RiordanArray::catalan_squared(N) == array("c(x)", "x*c(x)^2"));
    CHECK(multiply(RiordanArray::catalan(N), RiordanArray::pascal(N)) == RiordanArray::catalan(N) * RiordanArray::pascal(N));
}

TEST_CASE("inverse") {
    CHECK(inverse(array("1/(1-x)", "x")) == array("1-x", "x"));
    CHECK(inverse(array("1", "x*(1-x)")) == RiordanArray::catalan(N));
    CHECK(RiordanArray::catalan(N) == array("1", "x*c(x)"));
    CHECK(inverse(RiordanArray::central_binomial(N)) == array("(1-x)/(1+x)", "x/(1+x)^2"));
    CHECK(RiordanArray::central_binomial(N) == array("1/sqrt(1-4*x)", "x*c(x)^2"));
}

TEST_CASE("apply") {
    CHECK(apply(array("1/(1-x)", "x"), expand("1/(1-x)", N)).truncate(3).coeffs() == rationals({1, 2, 3, 4}));
    CHECK(apply(RiordanArray::pascal(N), PowerSeries::constant(1, N)) == expand("1/(1-x)", N));
    CHECK(apply(RiordanArray::catalan(N), expand("1/(1-2*x)", N)) == expand("1/(1-2*x*c(x))", N));
    PowerSeries h = expand("(1+x)/(1-3*x)", N);
    CHECK(apply(RiordanArray::central_binomial(N), h) == apply_matrix(RiordanArray::central_binomial(N), h));
}

TEST_CASE("vertical half") {
    RiordanArray v = vertical_half(example());
    CHECK(v.order() == N / 2);
    CHECK(v == array("c(x)", "x*c(x)", N / 2));
    CHECK(v.column(0).truncate(4).coeffs() == rationals({1, 1, 2, 5, 14}));
    CHECK(v.matrix(5).row(4) == rationals({14, 14, 9, 4, 1}));
    CHECK(vertical_half(RiordanArray::identity(N)) == RiordanArray::identity(N / 2));
    RiordanArray p = RiordanArray::pascal(N);
    RiordanArray pv = vertical_half(p);
    for (int n = 0; n <= N / 2; ++n) {
        CHECK(pv.element(n, 0) == p.element(2 * n, n));
        CHECK(pv.element(n, 0) == Rational(binomial(2 * n, n)));
    }
}

TEST_CASE("horizontal half") {
    RiordanArray h = horizontal_half(example());
    CHECK(h == array("c(x)", "x*c(x)^2", N / 2));
    CHECK(h.matrix(4).row(3) == rationals({5, 9, 5, 1}));
    CHECK(horizontal_half(RiordanArray::identity(N)) == RiordanArray::identity(N / 2));
    CHECK(inverse(vertical_half(example())) * h == array("1", "x/(1-x)", N / 2));
}
