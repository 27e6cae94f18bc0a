#include "ctrans/ctransform.hpp"
#include "ctrans/report.hpp"
#include "ctrans/riordan.hpp"
#include "ctrans/series_expr.hpp"

#include <doctest.h>

using namespace ctrans;

namespace {

constexpr int N = 14;

PowerSeries gf(const char* e, int order = N) { return expand(e, order); }
std::vector<Rational> head(const PowerSeries& s, int count) { return first_terms(s, count); }
std::vector<Rational> head(const IntSequence& s, int count) { return first_terms(s, count); }

}  // namespace

TEST_CASE("c_transform") {
    CHECK(head(c_transform(gf("1/(1-x)")), 5) == rationals({1, 1, 2, 5, 14}));
    CHECK(head(c_transform(gf("1")), 5) == rationals({1, 2, 6, 20, 70}));
    CHECK(c_transform(gf("(1+x)/(1-x)")) == PowerSeries::constant(1, N));
    CHECK(c_transform(gf("1/(1-x)")).order() == N);
    CHECK_THROWS_AS(c_transform(gf("2+x")), MathError);
}

TEST_CASE("constructive route") {
    CHECK(head(c_transform_constructive(gf("1/(1-x)")), 5) == rationals({1, 1, 2, 5, 14}));
    CHECK(head(c_transform_constructive(gf("1")), 4) == rationals({1, 2, 6, 20}));
    std::vector<Rational> odd;
    for (long n = 0; n < 4; ++n) odd.emplace_back(binomial(2 * n + 1, n + 1));
    CHECK(head(c_transform_constructive(gf("1/(1+x)")), 4) == odd);
    CHECK(head(c_transform_constructive(gf("1/(1+x)")), 4) == rationals({1, 3, 10, 35}));
    CHECK_THROWS_AS(c_transform_constructive(gf("3")), MathError);
}

TEST_CASE("sequence route") {
    CHECK(head(c_transform_sequence(IntSequence{1, 1, 1, 1, 1, 1}), 5) == rationals({1, 1, 2, 5, 14}));
    CHECK(head(c_transform_sequence(IntSequence{1, 0, 0, 0, 0}), 5) == rationals({1, 2, 6, 20, 70}));
    CHECK(c_transform_sequence(IntSequence{1, -1, -1, -1, -1, -1}) == IntSequence{1, 3, 12, 51, 222, 978});
    CHECK_THROWS_AS(c_transform_sequence(IntSequence{2, 1}), MathError);
}

TEST_CASE("Catalan matrix routes") {
    PowerSeries g = gf("(1+2*x)/(1-x-x^3)");
    CHECK(c_transform_catalan_squared(g) == c_transform(g));
    CHECK(c_transform_catalan_matrix(g) == c_transform(g));
}

TEST_CASE("c_inverse") {
    CHECK(c_inverse(gf("c(x)")) == gf("1/(1-x)"));
    CHECK(head(c_inverse(PowerSeries::constant(1, N)), 4) == rationals({1, 2, 2, 2}));
    CHECK(c_inverse(gf("1/sqrt(1-4*x)")) == PowerSeries::constant(1, N));
    CHECK(c_transform(c_inverse(gf("1/(1-3*x*c(x))"))) == gf("1/(1-3*x*c(x))"));
    CHECK_THROWS_AS(c_inverse(gf("2-x")), MathError);
}

TEST_CASE("reciprocal pre-image sequence") {
    IntSequence catalan = IntSequence::from_series(gf("c(x)", 10));
    CHECK(reciprocal_preimage_sequence(catalan) == IntSequence::from_series(gf("1-x", 10)));
    CHECK(reciprocal_preimage_sequence(IntSequence{1, 2, 6, 20, 70}) == IntSequence{1, 0, 0, 0, 0});
    // b_n = sum_k binom(2n, n-k) (-1)^binom(k+1, 2)
    std::vector<BigInt> b, star;
    for (long n = 0; n < 10; ++n) {
        BigInt s = 0;
        for (long k = 0; k <= n; ++k) {
            BigInt t = binomial(2 * n, n - k);
            s += (k * (k + 1) / 2) % 2 ? BigInt(-t) : t;
        }
        b.push_back(s);
        star.push_back((n * (n + 1) / 2) % 2 ? -1 : 1);
    }
    CHECK(first_terms(IntSequence(b), 6) == rationals({1, 1, 1, 0, -5, -24}));
    CHECK(reciprocal_preimage_sequence(IntSequence(b)) == IntSequence(star));
    CHECK_THROWS_AS(reciprocal_preimage_sequence(IntSequence{2, 1, 3}), MathError);
}

TEST_CASE("reciprocal sequence") {
    CHECK(reciprocal_sequence(IntSequence{1, 1, 1, 1}) == IntSequence{1, -1, 0, 0});
    CHECK(reciprocal_sequence(reciprocal_sequence(IntSequence{1, 3, -2, 7, 0})) == IntSequence{1, 3, -2, 7, 0});
}

TEST_CASE("invert_alpha") {
    PowerSeries c = gf("c(x)");
    CHECK(invert_alpha(c, 1) == gf("c(x)/(1+x*c(x))"));
    CHECK(head(invert_alpha(c, 1), 7) == rationals({1, 0, 1, 2, 6, 18, 57}));
    PowerSeries f = gf("(1-x)/(1+3*x^2)");
    CHECK(invert_alpha(f, 0) == f);
    CHECK(invert_alpha(c, -1) == gf("c(x)^2"));
}

TEST_CASE("binomial transform") {
    CHECK(head(binomial_transform(PowerSeries::constant(1, N)), 3) == rationals({1, 1, 1}));
    CHECK(head(binomial_transform(gf("1/(1-x)")), 4) == rationals({1, 2, 4, 8}));
    PowerSeries s = gf("(1-x)/(1-x-2*x^2)");
    std::vector<Rational> pascal_product;
    for (long n = 0; n <= N; ++n) {
        Rational acc = 0;
        for (long k = 0; k <= n; ++k) acc += Rational(binomial(n, k)) * s[static_cast<int>(k)];
        pascal_product.push_back(acc);
    }
    CHECK(binomial_transform(s).coeffs() == pascal_product);
    CHECK(binomial_transform(s) == apply(RiordanArray::pascal(N), s));
    CHECK(binomial_transform(binomial_transform(s, 3), -3) == s);
}

TEST_CASE("Catalan transform") {
    CHECK(catalan_transform(gf("1/(1-x)")) == gf("c(x)"));
    CHECK(catalan_transform(PowerSeries::constant(1, N)) == PowerSeries::constant(1, N));
    // 1, 0, 2, 1, 3, 2, 4, 3, ...
    std::vector<Rational> a{Rational(1)};
    for (long n = 1; n <= N; ++n) a.emplace_back(n % 2 ? (n - 1) / 2 : n / 2 + 1);
    CHECK(head(catalan_transform(PowerSeries(a)), 7) == rationals({1, 0, 2, 5, 16, 51, 168}));
    PowerSeries s = gf("(1+x)/(1-2*x)");
    CHECK(catalan_transform(s) == apply(RiordanArray::catalan(N), s));
}

TEST_CASE("partial sums") {
    CHECK(head(partial_sums(gf("1/(1-x)")), 3) == rationals({1, 2, 3}));
    CHECK(head(partial_sums(gf("1/(1+x)")), 4) == rationals({1, 0, 1, 0}));
    PowerSeries star = reciprocal(gf("1/(1-x)"));
    std::vector<Rational> cumulative;
    Rational acc = 0;
    for (const auto& v : star.coeffs()) cumulative.push_back(acc += v);
    CHECK(partial_sums(star).coeffs() == cumulative);
}
