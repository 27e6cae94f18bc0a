#pragma once

// Randomized property suites with fixed seeds. Shared by test_properties and
// the acceptance binary; every check is exact.

#include "ctrans/ctransform.hpp"
#include "ctrans/families.hpp"
#include "ctrans/hankel.hpp"
#include "ctrans/riordan.hpp"
#include "ctrans/series_expr.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ctrans::properties {

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0 && cases > 0; }
};

class Checker {
public:
    explicit Checker(std::string name) { r_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++r_.cases;
        if (!ok) {
            if (r_.failures == 0) r_.first_failure = what;
            ++r_.failures;
        }
    }
    PropertyResult result() const { return r_; }

private:
    PropertyResult r_;
};

class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    // c0 followed by order entries in [lo, hi].
    PowerSeries series(const Rational& c0, long lo, long hi, int order) {
        std::vector<Rational> c{c0};
        for (int i = 1; i <= order; ++i) c.emplace_back(integer(lo, hi));
        return PowerSeries(c);
    }
    // x + random higher terms.
    PowerSeries admissible_f(long lo, long hi, int order) {
        std::vector<Rational> c{Rational(0), Rational(1)};
        for (int i = 2; i <= order; ++i) c.emplace_back(integer(lo, hi));
        return PowerSeries(c);
    }
    RiordanArray array(long lo, long hi, int order) {
        return RiordanArray(series(1, lo, hi, order), admissible_f(lo, hi, order));
    }

private:
    std::mt19937_64 gen_;
};

inline std::string describe(const PowerSeries& s) { return s.to_text(); }

inline PropertyResult ring_laws(std::uint64_t seed = 1) {
    Checker c("series ring laws");
    Random rng(seed);
    for (int i = 0; i < 50; ++i) {
        int order = static_cast<int>(rng.integer(0, 12));
        PowerSeries a = rng.series(rng.integer(-9, 9), -9, 9, order);
        PowerSeries b = rng.series(rng.integer(-9, 9), -9, 9, order);
        PowerSeries d = rng.series(rng.integer(-9, 9), -9, 9, order);
        c.check(mul(mul(a, b), d) == mul(a, mul(b, d)), "associativity " + describe(a));
        c.check(mul(a, add(b, d)) == add(mul(a, b), mul(a, d)), "distributivity " + describe(a));
        c.check(mul(a, b) == mul(b, a), "commutativity " + describe(a));
    }
    return c.result();
}

inline PropertyResult div_mul_round_trip(std::uint64_t seed = 2) {
    Checker c("div/mul round trip");
    Random rng(seed);
    for (int i = 0; i < 50; ++i) {
        int order = static_cast<int>(rng.integer(0, 12));
        long b0 = 0;
        while (b0 == 0) b0 = rng.integer(-9, 9);
        PowerSeries a = rng.series(rng.integer(-9, 9), -9, 9, order);
        PowerSeries b = rng.series(b0, -9, 9, order);
        c.check(mul(div(a, b), b) == a, "a/b*b for b = " + describe(b));
    }
    return c.result();
}

inline PropertyResult reversion_round_trip(std::uint64_t seed = 3) {
    Checker c("reversion round trip");
    Random rng(seed);
    const int order = 12;
    PowerSeries x = PowerSeries::x(order);
    for (int i = 0; i < 50; ++i) {
        PowerSeries f = rng.admissible_f(-9, 9, order);
        PowerSeries r = reversion(f);
        c.check(compose(f, r) == x, "f(rev f) for f = " + describe(f));
        c.check(compose(r, f) == x, "rev f(f) for f = " + describe(f));
    }
    return c.result();
}

inline PropertyResult expand_determinism() {
    Checker c("expand determinism");
    for (const char* e : {"1/(1-3*x*c(x))", "(1-sqrt(1-4*x))/(2*x)", "(1+x*c(-x))/(1+x)", "sqrt(1-4*x)^3/(2-x)^2"}) {
        SeriesExpr tree = parse_gf(e);
        PowerSeries first = expand(tree, 20);
        for (int i = 0; i < 3; ++i) c.check(expand(tree, 20) == first && expand(e, 20) == first, e);
    }
    return c.result();
}

inline PropertyResult catalan_identities() {
    Checker c("Catalan identities");
    for (int order : {0, 1, 5, 20, 40}) {
        PowerSeries cs = catalan_series(order);
        PowerSeries x = PowerSeries::x(order);
        PowerSeries one = PowerSeries::constant(1, order);
        c.check(cs == one + x * cs * cs, "c = 1 + x c^2");
        c.check(div(one, one - x * cs) == cs, "1/(1 - x c) = c");
        c.check(sqrt(one - 4 * x) == one - 2 * x * cs, "sqrt(1-4x) = 1 - 2 x c");
    }
    return c.result();
}

inline PropertyResult riordan_group_laws(std::uint64_t seed = 4) {
    Checker c("Riordan group laws");
    Random rng(seed);
    const int order = 10;
    RiordanArray id = RiordanArray::identity(order);
    for (int i = 0; i < 25; ++i) {
        RiordanArray a = rng.array(-5, 5, order), b = rng.array(-5, 5, order), d = rng.array(-5, 5, order);
        c.check((a * b) * d == a * (b * d), "associativity");
        c.check(a * id == a && id * a == a, "identity");
        c.check(a * inverse(a) == id && inverse(a) * a == id, "inverse");
    }
    return c.result();
}

inline PropertyResult matrix_homomorphism(std::uint64_t seed = 5) {
    Checker c("matrix view homomorphism");
    Random rng(seed);
    const int order = 9;
    for (int i = 0; i < 25; ++i) {
        RiordanArray a = rng.array(-5, 5, order), b = rng.array(-5, 5, order);
        c.check((a * b).matrix() == a.matrix() * b.matrix(), "matrix(A B) = matrix(A) matrix(B)");
        PowerSeries h = rng.series(rng.integer(-5, 5), -5, 5, order);
        c.check(apply(a, h) == apply_matrix(a, h), "apply equals matrix-vector product");
    }
    return c.result();
}

inline PropertyResult half_identities(std::uint64_t seed = 6) {
    Checker c("half entry identities");
    Random rng(seed);
    const int order = 14;
    std::vector<RiordanArray> arrays = {RiordanArray::pascal(order), RiordanArray::catalan(order),
                                        RiordanArray::pascal(order) * inverse(RiordanArray::appell(expand("1/(1-x)", order)))};
    for (int i = 0; i < 10; ++i) arrays.push_back(rng.array(-4, 4, order));
    for (const auto& a : arrays) {
        RiordanArray v = vertical_half(a), h = horizontal_half(a);
        int half = order / 2;
        bool ok_v = true, ok_h = true;
        for (int n = 0; n <= half; ++n)
            for (int k = 0; k <= n; ++k) {
                ok_v = ok_v && v.element(n, k) == a.element(2 * n - k, n);
                ok_h = ok_h && h.element(n, k) == a.element(2 * n, n + k);
            }
        c.check(ok_v, "vertical half entries t(2n-k, n)");
        c.check(ok_h, "horizontal half entries t(2n, n+k)");
        RiordanArray rel = inverse(v) * h;
        c.check(rel == RiordanArray(PowerSeries::constant(1, half), a.f().truncate(half)), "V^-1 H = (1, F)");
    }
    return c.result();
}

// Random g with g(0) = 1, coefficients in [-3, 3], order 16.
inline std::vector<PowerSeries> transform_population(std::uint64_t seed = 7) {
    Random rng(seed);
    std::vector<PowerSeries> out;
    for (int i = 0; i < 30; ++i) out.push_back(rng.series(1, -3, 3, 16));
    return out;
}

inline PropertyResult c_transform_agreement() {
    Checker c("C transform route agreement");
    for (const auto& g : transform_population()) {
        PowerSeries closed = c_transform(g);
        c.check(IntSequence::from_series(closed) == c_transform_constructive(g), "constructive route, g = " + describe(g));
        c.check(IntSequence::from_series(closed) == c_transform_sequence(IntSequence::from_series(g)),
                "sequence route, g = " + describe(g));
        c.check(closed == c_transform_catalan_squared(g), "(c, x c^2) route, g = " + describe(g));
        c.check(closed == c_transform_catalan_matrix(g), "(1, x c) route, g = " + describe(g));
    }
    return c.result();
}

inline PropertyResult c_round_trips() {
    Checker c("C transform round trips");
    for (const auto& g : transform_population()) {
        c.check(c_inverse(c_transform(g)) == g, "C^-1 C g = g, g = " + describe(g));
        c.check(c_transform(c_inverse(g)) == g, "C C^-1 h = h, h = " + describe(g));
        IntSequence b = IntSequence::from_series(c_transform(g));
        c.check(reciprocal_preimage_sequence(b) == IntSequence::from_series(reciprocal(g)), "reciprocal pre-image formula");
        IntSequence a = IntSequence::from_series(g);
        c.check(reciprocal_sequence(reciprocal_sequence(a)) == a, "reciprocal involution");
    }
    return c.result();
}

inline PropertyResult riordan_identities() {
    Checker c("Riordan factorization identities");
    const int order = 16;
    c.check(RiordanArray::central_binomial(order) == RiordanArray::catalan(order) * RiordanArray::binomial_partial(order),
            "(1/sqrt(1-4x), x c^2) = (1, x c)(1/(1-2x), x/(1-x))");
    RiordanArray bp = RiordanArray::binomial_partial(order);
    bool ok = true;
    for (long n = 0; n <= order; ++n)
        for (long k = 0; k <= n; ++k) {
            BigInt s = 0;
            for (long j = k; j <= n; ++j) s += binomial(n, j);
            ok = ok && bp.element(static_cast<int>(n), static_cast<int>(k)) == Rational(s);
        }
    c.check(ok, "(1/(1-2x), x/(1-x)) entries are sum_{j=k..n} binom(n,j)");
    c.check(inverse(RiordanArray::central_binomial(order)) == RiordanArray::inverse_central(order),
            "inverse of (1/sqrt(1-4x), x c^2)");
    return c.result();
}

// Cofactor expansion along the first row; the independent oracle for Bareiss.
inline BigInt cofactor_determinant(const IntMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigInt> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        BigInt term = m[0][j] * cofactor_determinant(minor);
        det += j % 2 ? BigInt(-term) : term;
    }
    return det;
}

inline PropertyResult determinant_agreement(std::uint64_t seed = 8) {
    Checker c("Bareiss determinant agreement");
    Random rng(seed);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
        IntMatrix m(n, std::vector<BigInt>(n));
        bool singular_row = rng.integer(0, 9) == 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = rng.integer(-20, 20);
        if (singular_row && n > 1) m[n - 1] = m[0];
        if (rng.integer(0, 4) == 0) m[0][0] = 0;
        c.check(bareiss_determinant(m) == cofactor_determinant(m), "cofactor comparison");
    }
    for (int t = 0; t < 50; ++t) {
        IntMatrix m(8, std::vector<BigInt>(8));
        RatMatrix r(8, std::vector<Rational>(8));
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                m[i][j] = rng.integer(-20, 20);
                r[i][j] = m[i][j];
            }
        c.check(Rational(bareiss_determinant(m)) == rational_determinant(r), "rational elimination comparison");
    }
    return c.result();
}

inline PropertyResult fit_recovery(std::uint64_t seed = 9) {
    Checker c("rational GF fit recovery");
    Random rng(seed);
    for (int t = 0; t < 50; ++t) {
        Polynomial p, q{Rational(1)};
        long dp = rng.integer(0, 4), dq = rng.integer(0, 4);
        for (long i = 0; i <= dp; ++i) p.emplace_back(rng.integer(-5, 5));
        if (p[0] == 0) p[0] = 1;
        for (long i = 1; i <= dq; ++i) q.emplace_back(rng.integer(-5, 5));
        RationalGF expected(p, q);
        PowerSeries s = expected.expand(40);
        FitResult fit = fit_rational_gf(s.coeffs(), 4, 4);
        c.check(fit.gf && *fit.gf == expected, "fit of " + expected.to_text());
    }
    return c.result();
}

inline PropertyResult hankel_invariance(std::uint64_t seed = 10) {
    Checker c("Hankel invariance");
    Random rng(seed);
    const int count = 6, order = 2 * count - 2;
    for (int t = 0; t < 20; ++t) {
        PowerSeries s = rng.series(rng.integer(-5, 5), -5, 5, order);
        IntSequence h = hankel_transform(IntSequence::from_series(s), count);
        c.check(hankel_transform(IntSequence::from_series(binomial_transform(s)), count) == h, "binomial transform");
        std::vector<Rational> alt;
        PowerSeries inv4 = binomial_transform(s, -4);
        for (int n = 0; n <= order; ++n) alt.push_back(inv4[n] * (n % 2 ? -1 : 1));
        c.check(hankel_transform(IntSequence::from_series(PowerSeries(alt)), count) == h,
                "4th inverse binomial transform with alternating signs");
        c.check(hankel_transform(IntSequence::from_series(s), count) == hankel_transform_serial(IntSequence::from_series(s), count),
                "parallel equals serial");
    }
    return c.result();
}

inline PropertyResult narayana_properties() {
    Checker c("Narayana triangle");
    NarayanaTriangle tri(13);
    for (int n = 0; n <= 12; ++n) {
        bool sym = true;
        for (int k = 0; k <= n; ++k) sym = sym && tri.at(n, k) == tri.at(n, n - k);
        c.check(sym, "symmetry row " + std::to_string(n));
        c.check(tri.row_sum(n) == catalan_number(n + 1), "row sum row " + std::to_string(n));
    }
    return c.result();
}

inline PropertyResult orthogonal_quotient() {
    Checker c("orthogonal-polynomial quotient");
    for (long r = 1; r <= 8; ++r)
        for (const auto& rep : verify_aerated_family(r, kHankelPrefix))
            if (rep.claim_id == "aerated.orthogonal-quotient.corrected") c.check(rep.pass, "r = " + std::to_string(r));
    return c.result();
}

inline std::vector<std::function<PropertyResult()>> all_properties() {
    return {[] { return ring_laws(); },         [] { return div_mul_round_trip(); },
            [] { return reversion_round_trip(); }, expand_determinism,
            catalan_identities,                  [] { return riordan_group_laws(); },
            [] { return matrix_homomorphism(); }, [] { return half_identities(); },
            c_transform_agreement,               c_round_trips,
            riordan_identities,                  [] { return determinant_agreement(); },
            [] { return fit_recovery(); },        [] { return hankel_invariance(); },
            narayana_properties,                 orthogonal_quotient};
}

}  // namespace ctrans::properties
