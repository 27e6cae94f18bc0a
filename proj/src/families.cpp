#include "ctrans/families.hpp"

#include "ctrans/ctransform.hpp"
#include "ctrans/riordan.hpp"
#include "ctrans/series_expr.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <stdexcept>

namespace ctrans {

namespace {

// Closed-form identities are compared on coefficients 0..kIdentityOrder.
constexpr int kIdentityOrder = 20;
constexpr int kIdentityTerms = kIdentityOrder + 1;

int work_order(int prefix) { return 2 * std::max(prefix, kFitTerms); }

Rational frac(const BigInt& p, const BigInt& q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string P(long v) { return "(" + std::to_string(v) + ")"; }

PowerSeries gf(const std::string& e, int order) { return expand(e, order); }

template <typename F>
std::vector<Rational> terms(int count, F f) {
    std::vector<Rational> out;
    for (long n = 0; n < count; ++n) out.emplace_back(f(n));
    return out;
}

VerificationReport series_vs_expr(const std::string& id, const Params& p, const PowerSeries& s, const std::string& expr,
                                  int count = kIdentityTerms, const std::string& note = "") {
    return make_report(id, p, first_terms(s, count), first_terms(gf(expr, count - 1), count),
                       note.empty() ? "compared with " + expr : note);
}

VerificationReport series_vs_series(const std::string& id, const Params& p, const PowerSeries& a, const PowerSeries& b,
                                    int count = kIdentityTerms, const std::string& note = "") {
    return make_report(id, p, first_terms(a, count), first_terms(b, count), note);
}

VerificationReport series_vs_printed(const std::string& id, const Params& p, const PowerSeries& s,
                                     std::vector<Rational> printed, const std::string& note = "") {
    int n = static_cast<int>(printed.size());
    return make_report(id, p, first_terms(s, n), std::move(printed), note);
}

std::vector<Rational> flatten(const TriangularMatrix& m) {
    std::vector<Rational> out;
    for (int n = 0; n < m.size(); ++n) out.insert(out.end(), m.row(n).begin(), m.row(n).end());
    return out;
}

VerificationReport matrix_vs_printed(const std::string& id, const TriangularMatrix& m,
                                     const std::vector<std::vector<long>>& printed, const std::string& note = "") {
    return make_report(id, {}, flatten(m.leading(static_cast<int>(printed.size()))),
                       flatten(TriangularMatrix::from_integers(printed)), note.empty() ? "rows flattened" : note);
}

PowerSeries poly_series(const std::vector<long>& c, int order) {
    return PowerSeries::polynomial(std::vector<Rational>(c.begin(), c.end()), order);
}

Polynomial poly(const std::vector<long>& c) { return Polynomial(c.begin(), c.end()); }

Polynomial poly_pow(const Polynomial& p, int e) {
    Polynomial out{Rational(1)};
    for (int i = 0; i < e; ++i) out = poly_mul(out, p);
    return out;
}

int nominal_degree(const Polynomial& p) { return static_cast<int>(poly_trim(p).size()) - 1; }

// A claimed GF at specific parameters, with a note when it collapses.
RationalGF claimed_gf(const Polynomial& num, const Polynomial& den, std::string& note) {
    RationalGF r(num, den);
    if (r.num_degree() < nominal_degree(num) || r.den_degree() < nominal_degree(den))
        note = "claimed GF degenerates at these parameters to " + r.to_text();
    return r;
}

Rational eval_poly(const Polynomial& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational eval_gf(const RationalGF& r, const Rational& x) {
    Rational d = eval_poly(r.denominator(), x);
    if (d == 0) throw MathError("generating function has a pole at " + to_string(x));
    return eval_poly(r.numerator(), x) / d;
}

std::vector<Rational> fractions(std::initializer_list<std::pair<long, long>> v) {
    std::vector<Rational> out;
    for (auto [p, q] : v) {
        Rational r(p, q);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

BigInt fibonacci(long n) {
    BigInt f;
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

long sign_pow(long e) { return e % 2 ? -1 : 1; }

template <typename Cell, typename F>
Reports sweep(const std::vector<Cell>& cells, F fn, bool parallel) {
    std::vector<Reports> parts(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    long n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < n; ++i) {
        try {
            parts[static_cast<std::size_t>(i)] = fn(cells[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Reports out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<std::pair<long, long>> pairs(long lo, long hi) {
    std::vector<std::pair<long, long>> out;
    for (long a = lo; a <= hi; ++a)
        for (long b = lo; b <= hi; ++b) out.emplace_back(a, b);
    return out;
}

std::vector<long> range(long lo, long hi) {
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

}  // namespace

NarayanaTriangle::NarayanaTriangle(int rows) {
    for (long n = 0; n < rows; ++n) {
        std::vector<BigInt> row;
        for (long k = 0; k <= n; ++k) row.push_back(binomial(n, k) * binomial(n + 1, k) / (k + 1));
        rows_.push_back(std::move(row));
    }
}

BigInt NarayanaTriangle::row_sum(int n) const {
    BigInt s = 0;
    for (const auto& v : rows_[static_cast<std::size_t>(n)]) s += v;
    return s;
}

BigInt NarayanaTriangle::polynomial(int n, long r) const {
    BigInt acc = 0;
    BigInt p = 1;
    for (int k = 0; k <= n; ++k) {
        acc += at(n, k) * p;
        p *= r;
    }
    return acc;
}

IntSequence hankel_of(const PowerSeries& s, int count) {
    int need = 2 * count - 1;
    if (s.order() + 1 < need)
        throw InsufficientTerms("Hankel prefix of " + std::to_string(count) + " needs " + std::to_string(need) +
                                " series terms");
    return hankel_transform(IntSequence::from_series(s.truncate(need - 1)), count);
}

void check_hankel_gf(Reports& out, const std::string& id, const Params& params, const PowerSeries& image,
                     const RationalGF& claimed, int prefix, const std::string& note, int max_degree) {
    IntSequence h = hankel_of(image, prefix);
    out.push_back(make_report(id + ".hankel", params, rationals(h.terms), first_terms(claimed.expand(prefix - 1), prefix),
                              note.empty() ? "termwise against " + claimed.to_text() : note));
    IntSequence hf = hankel_of(image, kFitTerms);
    FitResult fit = fit_rational_gf(hf, max_degree, max_degree);
    std::string form = fit.gf ? fit.gf->to_text() : "no rational fit with degrees <= " + std::to_string(max_degree);
    std::string fit_note = "rational fit of " + std::to_string(kFitTerms) + " Hankel terms, holdout " +
                           std::to_string(fit.holdout);
    if (fit.underdetermined) fit_note += ", underdetermined system";
    if (!note.empty()) fit_note += "; " + note;
    out.push_back(make_report(id + ".hankel-fit", params, rationals(hf.terms),
                              first_terms(claimed.expand(kFitTerms - 1), kFitTerms), fit_note, form,
                              claimed.to_text()));
}

Reports verify_construction_example() {
    Reports out;
    const int n = 12;
    RiordanArray appell = RiordanArray::appell(gf("1/(1-x)", n));
    out.push_back(matrix_vs_printed("construction.appell-matrix", appell.matrix(),
                                    {{1}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1},
                                     {1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1}}));
    RiordanArray inv = inverse(appell);
    out.push_back(matrix_vs_printed("construction.inverse-matrix", inv.matrix(),
                                    {{1}, {-1, 1}, {0, -1, 1}, {0, 0, -1, 1}, {0, 0, 0, -1, 1}, {0, 0, 0, 0, -1, 1},
                                     {0, 0, 0, 0, 0, -1, 1}, {0, 0, 0, 0, 0, 0, -1, 1}}));
    out.push_back(series_vs_expr("construction.inverse-pair.g", {}, inv.g(), "1-x", n + 1));
    RiordanArray product = RiordanArray::pascal(n) * inv;
    out.push_back(matrix_vs_printed("construction.binomial-product-matrix", product.matrix(),
                                    {{1},
                                     {0, 1},
                                     {-1, 1, 1},
                                     {-2, 0, 2, 1},
                                     {-3, -2, 2, 3, 1},
                                     {-4, -5, 0, 5, 4, 1},
                                     {-5, -9, -5, 5, 9, 5, 1},
                                     {-6, -14, -14, 0, 14, 14, 6, 1}}));
    out.push_back(series_vs_expr("construction.binomial-product-pair.g", {}, product.g(), "(1-2*x)/(1-x)^2", n + 1));
    out.push_back(series_vs_expr("construction.binomial-product-pair.f", {}, product.f(), "x/(1-x)", n + 1));

    std::vector<Rational> central;
    for (int k = 0; k <= 6; ++k) central.push_back(product.element(2 * k, k));
    out.push_back(make_report("construction.central-elements", {}, central, rationals({1, 1, 2, 5, 14, 42, 132})));
    out.push_back(series_vs_printed("construction.c-transform-of-ones", {}, c_transform(gf("1/(1-x)", n)),
                                    rationals({1, 1, 2, 5, 14, 42, 132})));

    RiordanArray v = vertical_half(product);
    RiordanArray h = horizontal_half(product);
    out.push_back(matrix_vs_printed("construction.vertical-half-matrix", v.matrix(),
                                    {{1},
                                     {1, 1},
                                     {2, 2, 1},
                                     {5, 5, 3, 1},
                                     {14, 14, 9, 4, 1},
                                     {42, 42, 28, 14, 5, 1},
                                     {132, 132, 90, 48, 20, 6, 1}}));
    out.push_back(matrix_vs_printed("construction.horizontal-half-matrix", h.matrix(),
                                    {{1},
                                     {1, 1},
                                     {2, 3, 1},
                                     {5, 9, 5, 1},
                                     {14, 28, 20, 7, 1},
                                     {42, 90, 75, 35, 9, 1},
                                     {132, 297, 275, 154, 54, 11, 1}}));
    int half = v.order();
    out.push_back(series_vs_expr("construction.vertical-half-pair.g", {}, v.g(), "c(x)", half + 1));
    out.push_back(series_vs_expr("construction.vertical-half-pair.f", {}, v.f(), "x*c(x)", half + 1));
    out.push_back(series_vs_expr("construction.horizontal-half-pair.g", {}, h.g(), "c(x)", half + 1));
    out.push_back(series_vs_expr("construction.horizontal-half-pair.f", {}, h.f(), "x*c(x)^2", half + 1));
    RiordanArray vh = inverse(v) * h;
    out.push_back(series_vs_expr("construction.half-relation.g", {}, vh.g(), "1", half + 1, "V^-1 H against (1, x/(1-x))"));
    out.push_back(series_vs_expr("construction.half-relation.f", {}, vh.f(), "x/(1-x)", half + 1, "V^-1 H against (1, x/(1-x))"));

    RiordanArray cb = RiordanArray::central_binomial(n);
    out.push_back(matrix_vs_printed("construction.central-binomial-matrix", cb.matrix(),
                                    {{1},
                                     {2, 1},
                                     {6, 4, 1},
                                     {20, 15, 6, 1},
                                     {70, 56, 28, 8, 1},
                                     {252, 210, 120, 45, 10, 1}}));
    out.push_back(make_report("construction.central-binomial-entries", {}, flatten(cb.matrix()),
                              flatten(TriangularMatrix([&] {
                                  std::vector<std::vector<Rational>> rows;
                                  for (long i = 0; i <= n; ++i) {
                                      std::vector<Rational> r;
                                      for (long k = 0; k <= i; ++k) r.emplace_back(binomial(2 * i, i - k));
                                      rows.push_back(r);
                                  }
                                  return rows;
                              }())),
                              "general term binom(2n, n-k)"));
    RiordanArray ic = RiordanArray::inverse_central(n);
    out.push_back(matrix_vs_printed("construction.inverse-central-matrix", ic.matrix(),
                                    {{1},
                                     {-2, 1},
                                     {2, -4, 1},
                                     {-2, 9, -6, 1},
                                     {2, -16, 20, -8, 1},
                                     {-2, 25, -50, 35, -10, 1},
                                     {2, -36, 105, -112, 54, -12, 1}}));
    RiordanArray cb_inv = inverse(cb);
    out.push_back(make_report("construction.inverse-central-is-inverse", {}, flatten(cb_inv.matrix()),
                              flatten(ic.matrix())));
    out.push_back(make_report("construction.inverse-central-entries", {}, flatten(ic.matrix()),
                              flatten(TriangularMatrix([&] {
                                  std::vector<std::vector<Rational>> rows;
                                  for (long i = 0; i <= n; ++i) {
                                      std::vector<Rational> r;
                                      for (long k = 0; k <= i; ++k) {
                                          Rational w(2 * i + zero_pow(i), i + k + zero_pow(i + k));
                                          w.canonicalize();
                                          r.push_back(w * Rational(binomial(i + k, 2 * k)) * sign_pow(i - k));
                                      }
                                      rows.push_back(r);
                                  }
                                  return rows;
                              }())),
                              "general term (-1)^(n-k) (2n+0^n)/(n+k+0^(n+k)) binom(n+k,2k)"));
    RiordanArray bp = RiordanArray::binomial_partial(n);
    out.push_back(make_report("construction.binomial-partial-entries", {}, flatten(bp.matrix()),
                              flatten(TriangularMatrix([&] {
                                  std::vector<std::vector<Rational>> rows;
                                  for (long i = 0; i <= n; ++i) {
                                      std::vector<Rational> r;
                                      for (long k = 0; k <= i; ++k) {
                                          BigInt s = 0;
                                          for (long j = k; j <= i; ++j) s += binomial(i, j);
                                          r.emplace_back(s);
                                      }
                                      rows.push_back(r);
                                  }
                                  return rows;
                              }())),
                              "general term sum_{j=k..n} binom(n,j)"));
    out.push_back(make_report("construction.binomial-partial-factorization", {}, flatten(bp.matrix()),
                              flatten((RiordanArray::pascal(n) * RiordanArray::appell(gf("1/(1-x)", n))).matrix())));
    RiordanArray cat_pascal = RiordanArray::catalan(n) * bp;
    out.push_back(make_report("construction.central-binomial-factorization", {}, flatten(cat_pascal.matrix()),
                              flatten(cb.matrix()), "(1, x c) (1/(1-2x), x/(1-x))"));
    RiordanArray cs = RiordanArray::catalan_squared(n);
    out.push_back(make_report("construction.catalan-squared-factorization", {},
                              flatten((RiordanArray::catalan(n) * RiordanArray::pascal(n)).matrix()), flatten(cs.matrix()),
                              "(1, x c) (1/(1-x), x/(1-x))"));
    out.push_back(make_report("construction.catalan-squared-entries", {}, flatten(cs.matrix()),
                              flatten(TriangularMatrix([&] {
                                  std::vector<std::vector<Rational>> rows;
                                  for (long i = 0; i <= n; ++i) {
                                      std::vector<Rational> r;
                                      for (long k = 0; k <= i; ++k) {
                                          Rational w(2 * k + 1, i + k + 1);
                                          w.canonicalize();
                                          r.push_back(w * Rational(binomial(2 * i, i - k)));
                                      }
                                      rows.push_back(r);
                                  }
                                  return rows;
                              }())),
                              "general term (2k+1)/(n+k+1) binom(2n,n-k)"));
    return out;
}

Reports verify_simple_tables(int prefix) {
    Reports out;
    int w = work_order(prefix);
    int t = std::max(prefix, 11);
    auto image_of = [&](const std::string& g) { return c_transform(gf(g, w)); };

    // sequence, closed form and Hankel data of each simple input
    {
        PowerSeries img = image_of("1/(1+x)");
        Params p;
        out.push_back(series_vs_printed("simple.alternating.input", p, gf("1/(1+x)", t - 1),
                                        terms(t, [](long n) -> Rational { return sign_pow(n); })));
        out.push_back(series_vs_printed("simple.alternating.image-formula", p, img,
                                        terms(t, [](long n) -> Rational { return binomial(2 * n + 1, n + 1); }),
                                        "binom(2n+1, n+1)"));
        out.push_back(series_vs_expr("simple.alternating.image-gf", p, img, "(1+x*c(x)^2)/sqrt(1-4*x)"));
        out.push_back(make_report("simple.alternating.hankel-formula", p, rationals(hankel_of(img, prefix).terms),
                                  terms(prefix, [](long) -> Rational { return 1; }), "all ones"));
        check_hankel_gf(out, "simple.alternating", p, img, RationalGF::from_integers({1}, {1, -1}), prefix);
    }
    {
        PowerSeries img = image_of("1");
        Params p;
        out.push_back(series_vs_printed("simple.delta.image-formula", p, img,
                                        terms(t, [](long n) -> Rational { return binomial(2 * n, n); }), "binom(2n, n)"));
        out.push_back(series_vs_expr("simple.delta.image-gf", p, img, "1/sqrt(1-4*x)"));
        out.push_back(make_report("simple.delta.hankel-formula", p, rationals(hankel_of(img, prefix).terms),
                                  terms(prefix, [](long n) -> Rational { return ipow(2, static_cast<unsigned long>(n)); }), "2^n"));
        check_hankel_gf(out, "simple.delta", p, img, RationalGF::from_integers({1}, {1, -2}), prefix);
    }
    {
        PowerSeries img = image_of("1/(1-x)");
        Params p;
        out.push_back(series_vs_printed("simple.ones.image-formula", p, img,
                                        terms(t, [](long n) -> Rational { return catalan_number(n); }), "C_n"));
        out.push_back(series_vs_expr("simple.ones.image-gf", p, img, "c(x)"));
        out.push_back(make_report("simple.ones.hankel-formula", p, rationals(hankel_of(img, prefix).terms),
                                  terms(prefix, [](long) -> Rational { return 1; }), "all ones"));
        check_hankel_gf(out, "simple.ones", p, img, RationalGF::from_integers({1}, {1, -1}), prefix);
    }
    {
        PowerSeries img = image_of("1/(1-2*x)");
        Params p;
        out.push_back(series_vs_printed(
            "simple.powers-of-two.image-formula", p, img,
            terms(t, [](long n) -> Rational { return -zero_pow(n) - binomial(2 * n - 1, n + 1); }),
            "printed formula -0^n - binom(2n-1,n+1)"));
        out.push_back(series_vs_printed(
            "simple.powers-of-two.image-formula.corrected", p, img,
            terms(t, [](long n) -> Rational { return -zero_pow(n) - 2 * binomial(2 * n - 1, n + 1); }),
            "-0^n - 2 binom(2n-1,n+1)"));
        out.push_back(series_vs_expr("simple.powers-of-two.image-gf", p, img, "(-1+3*x+sqrt(1-4*x))/(x*sqrt(1-4*x))"));
        check_hankel_gf(out, "simple.powers-of-two", p, img, RationalGF::from_integers({1, -4}, {1, -2, 4}), prefix,
                        "trigonometric Hankel form validated through its rational GF");
    }

    struct Row {
        const char* id;
        const char* g;
        const char* image;
        std::vector<long> hnum, hden;
    };
    const std::vector<Row> rows = {
        {"simple.ratio-1-x-over-1+x", "(1-x)/(1+x)", "1/(1-4*x)", {1}, {1}},
        {"simple.ratio-1-2x-over-1+x", "(1-2*x)/(1+x)", "(1+3*sqrt(1-4*x))/(2*sqrt(1-4*x)*(2-9*x))", {1}, {1, 1}},
        {"simple.ratio-1+x-over-1-x", "(1+x)/(1-x)", "1", {1}, {1}},
        {"simple.fibonacci-like", "(1+x)/(1-x-x^2)", "", {1, -3, 2, -1}, {1, -2, 3, -2, 1}},
        {"simple.even-ones", "1/(1-x^2)", "(c(x)-1)/x", {1}, {1, -1}},
    };
    for (const auto& row : rows) {
        PowerSeries img = image_of(row.g);
        Params p;
        if (std::string(row.image).empty()) {
            out.push_back(series_vs_printed(std::string(row.id) + ".image-formula", p, img,
                                            terms(t, [](long n) -> Rational { return -binomial(2 * n - 1, n + 1); }),
                                            "-binom(2n-1, n+1)"));
        } else {
            out.push_back(series_vs_expr(std::string(row.id) + ".image-gf", p, img, row.image));
        }
        check_hankel_gf(out, row.id, p, img, RationalGF(poly(row.hnum), poly(row.hden)), prefix);
    }
    {
        PowerSeries img = image_of("1/(1-x^2)");
        out.push_back(series_vs_printed("simple.even-ones.image-formula", {}, img,
                                        terms(t, [](long n) -> Rational { return catalan_number(n + 1); }), "C_(n+1)"));
    }
    return out;
}

Reports verify_linear_ratio_family(long a, long b, int prefix) {
    Reports out;
    Params p{{"a", a}, {"b", b}};
    int w = work_order(prefix);
    PowerSeries g = div(poly_series({1, a}, w), poly_series({1, b}, w));
    PowerSeries img = c_transform(g);
    out.push_back(series_vs_expr("linear-ratio.closed-form", p, img,
                                 "(1+" + P(b - 1) + "*x*c(x))/((1-2*x*c(x))*(1+" + P(a - 1) + "*x*c(x)))"));
    out.push_back(series_vs_expr("linear-ratio.closed-form-sqrt", p, img,
                                 "(sqrt(1-4*x)*" + P(a - b) + "+2*x*" + P((a - 1) * (b - 1)) + "+" + P(a + b) +
                                     ")/(2*sqrt(1-4*x)*(x*" + P((a - 1) * (a - 1)) + "+" + P(a) + "))"));
    std::string note;
    RationalGF conj = claimed_gf(poly({1, -b * (a + b)}), poly({1, -2 * (1 + a * b), (a + b) * (a + b)}), note);
    check_hankel_gf(out, "linear-ratio.conjecture", p, img, conj, prefix, note);
    return out;
}

Reports verify_linear_ratio_examples(int prefix) {
    Reports out;
    int w = work_order(prefix);
    auto image = [&](long a, long b) {
        return c_transform(div(poly_series({1, a}, w), poly_series({1, b}, w)));
    };
    {
        Params p{{"a", -2}, {"b", 1}};
        PowerSeries img = image(-2, 1);
        out.push_back(series_vs_expr("linear-ratio.example.image-gf", p, img, "1/(sqrt(1-4*x)*(1-3*x*c(x)))"));
        out.push_back(series_vs_expr("linear-ratio.example.image-gf-product", p, img,
                                     "1/((1-2*x*c(x))*(1-3*x*c(x)))"));
        out.push_back(make_report("linear-ratio.example.hankel-formula", p, rationals(hankel_of(img, prefix).terms),
                                  terms(prefix, [](long n) -> Rational { return sign_pow(n); }), "(-1)^n"));
        check_hankel_gf(out, "linear-ratio.example", p, img, RationalGF::from_integers({1}, {1, 1}), prefix);
    }
    {
        Params p{{"a", 1}, {"b", 2}};
        PowerSeries img = image(1, 2);
        out.push_back(series_vs_expr("linear-ratio.example.image-gf", p, img, "(1+x*c(x))/(1-2*x*c(x))"));
        check_hankel_gf(out, "linear-ratio.example", p, img, RationalGF::from_integers({1, -6}, {1, -6, 9}), prefix);
    }
    {
        Params p{{"a", 1}, {"b", 3}};
        PowerSeries img = image(1, 3);
        out.push_back(series_vs_expr("linear-ratio.example.image-gf", p, img, "(1+2*x*c(x))/(1-2*x*c(x))"));
        out.push_back(series_vs_printed("linear-ratio.example.catalan-source", p, gf("(1+2*x)/(1-2*x)", 3),
                                        rationals({1, 4, 8, 16})));
        out.push_back(series_vs_series("linear-ratio.example.catalan-matrix-image", p,
                                       catalan_transform(gf("(1+2*x)/(1-2*x)", w)), img));
        check_hankel_gf(out, "linear-ratio.example", p, img, RationalGF::from_integers({1, -12}, {1, -8, 16}), prefix);
    }
    {
        Params p{{"a", 1}, {"b", 4}};
        PowerSeries img = image(1, 4);
        out.push_back(series_vs_expr("linear-ratio.example.image-gf", p, img, "(1+3*x*c(x))/(1-2*x*c(x))"));
        out.push_back(series_vs_expr("linear-ratio.example.image-gf-sqrt", p, img,
                                     "(5*sqrt(1-4*x)-3*(1-4*x))/(2*(1-4*x))"));
        check_hankel_gf(out, "linear-ratio.example", p, img, RationalGF::from_integers({1, -20}, {1, -10, 25}), prefix);
    }
    for (long a = -3; a <= 3; ++a) {
        Params p{{"a", a}, {"b", a + 1}};
        long b = a + 1;
        RationalGF general(poly({1, -b * (a + b)}), poly({1, -2 * (1 + a * b), (a + b) * (a + b)}));
        RationalGF special(poly({1, -(a + 1) * (2 * a + 1)}),
                           poly({1, -2 * (a * (a + 1) + 1), (2 * a + 1) * (2 * a + 1)}));
        out.push_back(make_report("linear-ratio.shifted-parameter-form", p, {}, {}, "b = a+1 specialization",
                                  special.to_text(), general.to_text()));
    }
    {
        Params p{{"a", -2}, {"b", -1}};
        PowerSeries img = image(-2, -1);
        out.push_back(series_vs_printed("linear-ratio.example.input", p, gf("(1-2*x)/(1-x)", 10),
                                        rationals({1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1})));
        out.push_back(series_vs_printed("linear-ratio.example.image", p, img,
                                        rationals({1, 3, 12, 51, 222, 978, 4338, 19323, 86310, 386250})));
        out.push_back(series_vs_expr("linear-ratio.example.image-gf", p, img, "1/(1-3*x*c(x))"));
        out.push_back(make_report("linear-ratio.example.hankel-formula", p, rationals(hankel_of(img, prefix).terms),
                                  terms(prefix, [](long n) -> Rational { return ipow(3, static_cast<unsigned long>(n)); }), "3^n"));
        check_hankel_gf(out, "linear-ratio.example", p, img, RationalGF::from_integers({1}, {1, -3}), prefix);
    }
    return out;
}

Reports verify_quadratic_denominator_family(long a, long b, int prefix) {
    Reports out;
    Params p{{"a", a}, {"b", b}};
    int w = work_order(prefix);
    PowerSeries img = c_transform(div(poly_series({1, a}, w), poly_series({1, 0, -b}, w)));
    out.push_back(series_vs_expr("quadratic-denominator.closed-form", p, img,
                                 "c(x)*(1-2*x*c(x)+" + P(1 - b) + "*x^2*c(x)^2)/((1-2*x*c(x))*(1+" + P(a - 1) +
                                     "*x*c(x)))"));
    long a2 = a * a, b2 = b * b, b4 = b2 * b2;
    Polynomial num = poly({1, -3 * b, b2 * (2 + b), -b4});
    std::string note;
    RationalGF printed = claimed_gf(num, poly({1, -2 * (1 + b), a2 + 4 * b - 2 * a2 * b + b2 + a2 * b2, -2 * b2 * (1 + b), b4}), note);
    check_hankel_gf(out, "quadratic-denominator.conjecture", p, img, printed, prefix, note);
    std::string note2;
    RationalGF corrected =
        claimed_gf(num, poly({1, -2 * (1 + b), a2 + 4 * b - 2 * a2 * b + 2 * b2 + a2 * b2, -2 * b2 * (1 + b), b4}), note2);
    check_hankel_gf(out, "quadratic-denominator.conjecture.corrected", p, img, corrected, prefix,
                    note2.empty() ? "x^2 denominator coefficient with 2b^2 in place of b^2" : note2);
    return out;
}

Reports verify_quadratic_denominator_examples(int prefix) {
    Reports out;
    int w = work_order(prefix);
    auto image = [&](long a, long b) {
        return c_transform(div(poly_series({1, a}, w), poly_series({1, 0, -b}, w)));
    };
    {
        Params p{{"a", 2}, {"b", 0}};
        PowerSeries img = image(2, 0);
        out.push_back(series_vs_expr("quadratic-denominator.example.image-gf", p, img,
                                     "(1-x+sqrt(1-4*x))/((2+x)*sqrt(1-4*x))"));
        out.push_back(series_vs_series("quadratic-denominator.example.catalan-matrix-image", p,
                                       catalan_transform(gf("(1-x)/(1-x-2*x^2)", w)), img));
        out.push_back(series_vs_expr("quadratic-denominator.example.jacobsthal-factored", p,
                                     gf("(1-x)/(1-x-2*x^2)", kIdentityOrder), "(1-x)/((1+x)*(1-2*x))"));
        out.push_back(make_report("quadratic-denominator.example.hankel-prefix", p, rationals(hankel_of(img, 11).terms),
                                  rationals({1, 2, 0, -8, -16, 0, 64, 128, 0, -512, -1024})));
        check_hankel_gf(out, "quadratic-denominator.example", p, img, RationalGF::from_integers({1}, {1, -2, 4}), prefix);
    }
    {
        Params p{{"a", 1}, {"b", -1}};
        PowerSeries img = image(1, -1);
        out.push_back(series_vs_printed("quadratic-denominator.example.image", p, img, rationals({1, 1, 4, 15, 56, 210, 792})));
        out.push_back(series_vs_printed("quadratic-denominator.example.image-formula", p, img,
                                        terms(kIdentityTerms,
                                              [](long n) -> Rational {
                                                  BigInt s = zero_pow(n);
                                                  for (long k = 0; k <= n; ++k) s += binomial(n, k) * binomial(n, k + 1);
                                                  return s;
                                              }),
                                        "0^n + sum_k binom(n,k) binom(n,k+1)"));
        out.push_back(series_vs_expr("quadratic-denominator.example.image-gf", p, img,
                                     "((1-4*x-sqrt(1-4*x))*(1-2*x))/(2*x*(4*x-1))"));
        IntSequence h = hankel_of(img, 11);
        out.push_back(make_report("quadratic-denominator.example.hankel-prefix", p, rationals(h.terms),
                                  rationals({1, 3, -1, -7, 1, 11, -1, -15, 1, 19, -1})));
        std::vector<Rational> shifted_abs{Rational(0)};
        for (const auto& v : h.terms) shifted_abs.emplace_back(abs(v));
        out.push_back(make_report("quadratic-denominator.example.hankel-absolute", p,
                                  std::vector<Rational>(shifted_abs.begin(), shifted_abs.begin() + 12),
                                  rationals({0, 1, 3, 1, 7, 1, 11, 1, 15, 1, 19, 1}), "absolute values with a leading 0"));
        check_hankel_gf(out, "quadratic-denominator.example", p, img,
                        RationalGF(poly({1, 3, 1, -1}), poly_pow(poly({1, 0, 1}), 2)), prefix);
    }
    {
        Params p{{"a", 1}, {"b", -2}};
        PowerSeries g = div(poly_series({1, 1}, w), poly_series({1, 0, 2}, w));
        PowerSeries img = c_transform(g);
        out.push_back(series_vs_printed("quadratic-denominator.example.input", p, g,
                                        rationals({1, 1, -2, -2, 4, 4, -8, -8, 16, 16, -32})));
        out.push_back(series_vs_printed("quadratic-denominator.example.input-formula", p, g,
                                        terms(kIdentityTerms,
                                              [](long n) -> Rational {
                                                  return BigInt(sign_pow(n * (n + 1) / 2) *
                                                                ipow(2, static_cast<unsigned long>(n / 2)));
                                              }),
                                        "printed (-1)^binom(n+1,2) 2^floor(n/2)"));
        out.push_back(series_vs_printed("quadratic-denominator.example.input-formula.corrected", p, g,
                                        terms(kIdentityTerms,
                                              [](long n) -> Rational {
                                                  return BigInt(sign_pow(n * (n - 1) / 2) *
                                                                ipow(2, static_cast<unsigned long>(n / 2)));
                                              }),
                                        "(-1)^binom(n,2) 2^floor(n/2)"));
        PowerSeries star = reciprocal(g);
        out.push_back(series_vs_printed("quadratic-denominator.example.reciprocal", p, star,
                                        rationals({1, -1, 3, -3, 3, -3, 3, -3, 3, -3, 3})));
        out.push_back(series_vs_printed("quadratic-denominator.example.image", p, img,
                                        rationals({1, 1, 5, 20, 77, 294, 1122, 4290, 16445})));
        out.push_back(series_vs_expr("quadratic-denominator.example.image-gf", p, img,
                                     "(sqrt(1-4*x)*(5*x-2)+12*x^2-11*x+2)/(2*x*(4*x-1))"));
        check_hankel_gf(out, "quadratic-denominator.example", p, img,
                        RationalGF(poly({1, 6, -16}), poly_pow(poly({1, 1, 4}), 2)), prefix);
        check_hankel_gf(out, "quadratic-denominator.example.corrected", p, img,
                        RationalGF(poly({1, 6, 0, -16}), poly_pow(poly({1, 1, 4}), 2)), prefix,
                        "numerator term -16x^3 in place of -16x^2");
        PowerSeries img_star = c_transform(star);
        check_hankel_gf(out, "quadratic-denominator.example.reciprocal-image", p, img_star,
                        RationalGF::from_integers({1}, {1, 1, 4}), prefix);
        out.push_back(series_vs_printed("quadratic-denominator.example.narayana-source", p, gf("(1-x+3*x^2)/(1-x)^2", 7),
                                        rationals({1, 1, 4, 7, 10, 13, 16, 19})));
        out.push_back(series_vs_printed(
            "quadratic-denominator.example.narayana-sum", p, img, terms(kIdentityTerms, [](long n) -> Rational {
                Rational s = 0;
                for (long k = 0; k <= n; ++k) {
                    Rational w(1, n - k + 1);
                    s += w * Rational(binomial(n - 1, n - k) * binomial(n, k) * (3 * k + 3 * zero_pow(k) - 2));
                }
                return s;
            }),
            "sum_k binom(n-1,n-k) binom(n,k) (3k+3*0^k-2)/(n-k+1)"));
        out.push_back(series_vs_printed("quadratic-denominator.example.image-formula", p, img,
                                        terms(kIdentityTerms,
                                              [](long n) -> Rational {
                                                  Rational r(3 * n - 1, n + 1);
                                                  r.canonicalize();
                                                  return r * Rational(binomial(2 * n - 1, n - 1)) + zero_pow(n);
                                              }),
                                        "(3n-1)/(n+1) binom(2n-1,n-1) + 0^n"));
        std::vector<Rational> tail(img.coeffs().begin() + 1, img.coeffs().end());
        check_hankel_gf(out, "quadratic-denominator.example.shifted-image", p, PowerSeries(tail),
                        RationalGF::from_integers({1, -4}, {1, 1, 4}), prefix);
    }
    return out;
}

Reports verify_invert_family(long a, int prefix) {
    (void)prefix;
    Reports out;
    Params p{{"a", a}};
    int w = kIdentityOrder;
    PowerSeries img = c_transform(div(poly_series({1, a}, w), poly_series({1, 0, -1}, w)));
    out.push_back(series_vs_series("invert.invert-transform", p, img, invert_alpha(catalan_series(w), a - 1),
                                   kIdentityTerms, "INVERT(a-1) of the Catalan numbers"));
    out.push_back(series_vs_expr("invert.closed-form", p, img, "c(x)/(1+" + P(a - 1) + "*x*c(x))"));
    PowerSeries chain = apply(RiordanArray::catalan(w), div(PowerSeries::constant(1, w),
                                                            poly_series({1, -1}, w) * poly_series({1, a - 1}, w)));
    out.push_back(series_vs_series("invert.catalan-matrix-route", p, img, chain, kIdentityTerms,
                                   "(1, x c) applied to 1/((1-x)(1+(a-1)x))"));
    return out;
}

Reports verify_invert_examples(int prefix) {
    (void)prefix;
    Reports out;
    int w = kIdentityOrder;
    Params p{{"a", 2}};
    out.push_back(series_vs_printed("invert.example.input", p, gf("(1+2*x)/(1-x^2)", 8),
                                    rationals({1, 2, 1, 2, 1, 2, 1, 2, 1})));
    PowerSeries fine = c_transform(gf("(1+2*x)/(1-x^2)", w));
    out.push_back(series_vs_expr("invert.example.fine-numbers", p, fine, "c(x)/(1+x*c(x))"));
    out.push_back(series_vs_series("invert.example.fine-invert", p, fine, invert_alpha(catalan_series(w), 1)));
    PowerSeries cubic = c_transform(gf("(1+2*x)/(1-x^3)", w));
    out.push_back(series_vs_series("invert.example.cubic-relation", p, cubic, gf("(1-x)*c(x)", w) * fine,
                                   kIdentityTerms, "C((1+2x)/(1-x^3)) = (1-x) c(x) F(x)"));
    out.push_back(series_vs_series("invert.example.unit-case", {{"a", 1}}, c_transform(gf("(1+x)/(1-x^2)", w)),
                                   catalan_series(w)));
    out.push_back(series_vs_expr("invert.example.zero-case", {{"a", 0}}, c_transform(gf("1/(1-x^2)", w)),
                                 "c(x)/(1-x*c(x))"));
    out.push_back(series_vs_expr("invert.example.zero-case-square", {{"a", 0}}, c_transform(gf("1/(1-x^2)", w)),
                                 "c(x)^2"));
    return out;
}

Reports verify_cubic_family(long a, int prefix) {
    Reports out;
    Params p{{"a", a}};
    int w = work_order(prefix);
    PowerSeries img = c_transform(div(poly_series({1, a}, w), poly_series({1, 0, 0, -1}, w)));
    out.push_back(series_vs_expr("cubic.closed-form", p, img, "(1+x*c(x)^3)/(1+" + P(a - 1) + "*x*c(x))"));
    out.push_back(series_vs_expr("cubic.closed-form-squared", p, img, "(1-x)*c(x)^2/(1+" + P(a - 1) + "*x*c(x))"));
    PowerSeries quad = c_transform(div(poly_series({1, a}, w), poly_series({1, 0, -1}, w)));
    out.push_back(series_vs_series("cubic.ratio-to-invert-image", p, img, gf("(1-x)*c(x)", w) * quad, kIdentityTerms,
                                   "image equals (1-x) c(x) times the image of (1+ax)/(1-x^2)"));
    std::string note;
    RationalGF printed = claimed_gf(poly({1, a - 1, 1, -1}), poly({1, -(a + 1), (a + 1) * (a + 1) - 1, -(a + 1), 1}), note);
    check_hankel_gf(out, "cubic.conjecture", p, img, printed, prefix, note);
    std::string note2;
    RationalGF corrected =
        claimed_gf(poly({1, -(a - 1), 1, -1}), poly({1, -(a + 1), (a + 1) * (a + 1) - 1, -(a + 1), 1}), note2);
    check_hankel_gf(out, "cubic.conjecture.corrected", p, img, corrected, prefix,
                    note2.empty() ? "numerator 1-(a-1)x+x^2-x^3" : note2);
    return out;
}

Reports verify_cubic_examples(int prefix) {
    Reports out;
    int w = work_order(prefix);
    out.push_back(series_vs_expr("cubic.identity", {}, gf("1+x*c(x)^3", kIdentityOrder), "(1-x)*c(x)^2"));
    {
        Params p{{"a", 1}};
        PowerSeries g = gf("(1+x)/(1-x^3)", w);
        PowerSeries img = c_transform(g);
        out.push_back(series_vs_printed("cubic.example.input", p, g, rationals({1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1})));
        out.push_back(series_vs_expr("cubic.example.image-gf", p, img, "(1-x)*(1-2*x-sqrt(1-4*x))/(2*x^2)"));
        out.push_back(series_vs_expr("cubic.example.image-gf-catalan", p, img, "1+x*c(x)^3"));
        out.push_back(series_vs_printed("cubic.example.image", p, img,
                                        rationals({1, 1, 3, 9, 28, 90, 297, 1001, 3432, 11934})));
        out.push_back(series_vs_printed("cubic.example.image-formula", p, img, terms(kIdentityTerms, [](long n) -> Rational {
                                            Rational r(3 * n, n + 2);
                                            r.canonicalize();
                                            return r * Rational(catalan_number(n)) + zero_pow(n);
                                        }),
                                        "0^n + 3n C_n/(n+2)"));
        RationalGF h(poly({1, 0, 1, -1}), poly_pow(poly({1, -1, 1}), 2));
        out.push_back(make_report("cubic.example.hankel-prefix", p, rationals(hankel_of(img, 11).terms),
                                  rationals({1, 2, 2, -1, -5, -5, 1, 8, 8, -1, -11})));
        check_hankel_gf(out, "cubic.example", p, img, h, prefix);
    }
    {
        Params p{{"a", 2}};
        PowerSeries g = gf("(1+2*x)/(1-x^3)", w);
        PowerSeries img = c_transform(g);
        out.push_back(series_vs_printed("cubic.example.input", p, g, rationals({1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2})));
        out.push_back(series_vs_expr("cubic.example.image-gf", p, img,
                                     "(1-x)*(1-x-(1+x)*sqrt(1-4*x))/(2*x^2*(x+2))"));
        out.push_back(series_vs_expr("cubic.example.image-gf-catalan", p, img, "(1+x*c(x)^3)/(1+x*c(x))"));
        out.push_back(series_vs_printed("cubic.example.image", p, img,
                                        rationals({1, 0, 2, 5, 16, 51, 168, 565, 1934, 6716})));
        std::vector<Rational> follow;
        for (long n = 0; n <= w; ++n) follow.emplace_back(n % 2 ? n / 2 : n / 2 + 1);
        PowerSeries source(follow);
        out.push_back(series_vs_printed("cubic.example.catalan-source", p, source,
                                        rationals({1, 0, 2, 1, 3, 2, 4, 3, 5, 4, 6, 5, 7})));
        out.push_back(series_vs_series("cubic.example.catalan-transform", p, catalan_transform(source), img));
        check_hankel_gf(out, "cubic.example", p, img,
                        RationalGF::from_integers({1, -1, 1, -1}, {1, -3, 8, -3, 1}), prefix);
    }
    {
        Params p{{"a", 0}};
        PowerSeries g = gf("1/(1-x^3)", w);
        PowerSeries img = c_transform(g);
        out.push_back(series_vs_printed("cubic.example.input", p, g, rationals({1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0})));
        out.push_back(series_vs_printed("cubic.example.image", p, img,
                                        rationals({1, 2, 6, 19, 62, 207, 704, 2431, 8502, 30056, 107236})));
        out.push_back(series_vs_expr("cubic.example.image-gf", p, img, "(1+x*c(x)^3)*c(x)"));
        out.push_back(make_report("cubic.example.hankel-prefix", p, rationals(hankel_of(img, 11).terms),
                                  rationals({1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0})));
        check_hankel_gf(out, "cubic.example", p, img, RationalGF::from_integers({1, 0, 1}, {1, 0, 0, -1}), prefix);
        check_hankel_gf(out, "cubic.example.corrected", p, img,
                        RationalGF::from_integers({1, 1, 1, -1}, {1, -1, 0, -1, 1}), prefix,
                        "conjecture with numerator 1-(a-1)x+x^2-x^3 at a = 0");
    }
    return out;
}

Reports verify_lucas_family(long r, long s, int prefix) {
    Reports out;
    Params p{{"r", r}, {"s", s}};
    int w = work_order(prefix);
    PowerSeries g = div(poly_series({1, -(r - 2), 1}, w), poly_series({1, -s, -1}, w));
    PowerSeries img = c_transform(g);
    RiordanArray reciprocal_array(gf("(1-" + P(s) + "*x-x^2)/(1+x)^2", w), gf("x/(1+x)^2", w));
    PowerSeries geo_r = div(PowerSeries::constant(1, w), poly_series({1, -r}, w));
    PowerSeries via_product = apply(RiordanArray::central_binomial(w) * reciprocal_array, geo_r);
    out.push_back(series_vs_series("lucas.riordan-product-route", p, img, via_product, kIdentityTerms,
                                   "(1/sqrt(1-4x), x c^2) ((1-sx-x^2)/(1+x)^2, x/(1+x)^2) 1/(1-rx)"));
    out.push_back(series_vs_expr("lucas.closed-form", p, img,
                                 "(sqrt(1-4*x)-" + P(s) + "*x)/((1-" + P(r) + "*x)*sqrt(1-4*x))"));
    RiordanArray prod = RiordanArray::central_binomial(kIdentityOrder) * reciprocal_array.truncate(kIdentityOrder);
    out.push_back(series_vs_expr("lucas.product-array.g", p, prod.g(), "(sqrt(1-4*x)-" + P(s) + "*x)/sqrt(1-4*x)"));
    out.push_back(series_vs_expr("lucas.product-array.f", p, prod.f(), "x"));
    RiordanArray appell_form = RiordanArray::appell(gf("1-" + P(s) + "*x/sqrt(1-4*x)", w));
    out.push_back(series_vs_series("lucas.appell-form", p, img, apply(appell_form, geo_r)));
    RiordanArray input_array(gf("(1-" + P(r - 2) + "*x+x^2)/(1-x^2)", w), gf("x/(1-x^2)", w));
    out.push_back(series_vs_series("lucas.input-array", p,
                                   apply(input_array, div(PowerSeries::constant(1, w), poly_series({1, -s}, w))), g));
    out.push_back(series_vs_series("lucas.reciprocal-array", p, apply(reciprocal_array, geo_r), reciprocal(g)));
    std::string note;
    RationalGF conj = claimed_gf(poly({1, -s * (r + s - 2)}), poly({1, 2 * s * (2 - r), 4 * s * s}), note);
    check_hankel_gf(out, "lucas.conjecture", p, img, conj, prefix, note);
    return out;
}

Reports verify_lucas_examples(int prefix) {
    Reports out;
    int w = work_order(prefix);
    Params p{{"r", 2}, {"s", -1}};
    PowerSeries g = gf("(1+x^2)/(1+x-x^2)", w);
    PowerSeries img = c_transform(g);
    out.push_back(series_vs_printed("lucas.example.input", p, g, rationals({1, -1, 3, -4, 7, -11, 18, -29, 47, -76, 123})));
    out.push_back(series_vs_expr("lucas.example.image-gf", p, img, "(sqrt(1-4*x)+x)/((1-2*x)*sqrt(1-4*x))"));
    out.push_back(series_vs_printed("lucas.example.image", p, img,
                                    rationals({1, 3, 8, 22, 64, 198, 648, 2220, 7872, 28614})));
    out.push_back(make_report("lucas.example.hankel-prefix", p, rationals(hankel_of(img, 11).terms),
                              rationals({1, -1, -4, 4, 16, -16, -64, 64, 256, -256, -1024})));
    check_hankel_gf(out, "lucas.example", p, img, RationalGF::from_integers({1, -1}, {1, 0, 4}), prefix);
    return out;
}

namespace {

// sum_j binom(n-j, j) (-x)^j
Polynomial ratio_numerator(long n) {
    Polynomial out;
    if (n < 0) return out;
    for (long j = 0; j <= n; ++j) out.emplace_back(binomial(n - j, j) * sign_pow(j));
    return poly_trim(out);
}

RationalGF ratio_formula(long n) {
    Polynomial num = ratio_numerator(n);
    Polynomial prev = ratio_numerator(n - 1);
    Polynomial den = num;
    den.resize(std::max(num.size(), prev.size() + 1), Rational(0));
    for (std::size_t i = 0; i < prev.size(); ++i) den[i + 1] -= 2 * prev[i];
    return RationalGF(num, den);
}

// x^m R_m(1/x) for the row polynomial R_m of a coefficient array.
Polynomial reversed_row(const RiordanArray& array, int m) {
    Polynomial out;
    for (int j = 0; j <= m; ++j) out.push_back(array.element(m, m - j));
    return out;
}

RiordanArray op_array(const char* g, int order) { return RiordanArray(gf(g, order), gf("x/(1+x)^2", order)); }

PowerSeries aerated_image(long r, int order) {
    PowerSeries num = PowerSeries::monomial(1, static_cast<int>(r), order) + PowerSeries::constant(1, order);
    PowerSeries den = PowerSeries::constant(1, order) - PowerSeries::monomial(1, static_cast<int>(r), order);
    return c_transform(div(num, den));
}

int central_agreement(const PowerSeries& s) {
    int n = 0;
    while (n <= s.order() && s[n] == Rational(binomial(2 * n, n))) ++n;
    return n;
}

}  // namespace

Reports verify_aerated_family(long r, int prefix) {
    (void)prefix;
    if (r < 1) throw MathError("aeration parameter r must be at least 1");
    Reports out;
    Params p{{"r", r}};
    int w = std::max<int>(kIdentityOrder, static_cast<int>(2 * r + 4));
    PowerSeries img = aerated_image(r, w);

    static const std::vector<const char*> table = {
        "1", "1/(1-2*x)", "1/(1-3*x)", "(1-2*x)/(1-4*x+2*x^2)", "(1-3*x+x^2)/(1-5*x+5*x^2)",
        "(1-4*x+3*x^2)/(1-6*x+9*x^2-2*x^2)"};
    if (r <= 6) {
        out.push_back(series_vs_expr("aerated.table", p, img, table[static_cast<std::size_t>(r - 1)]));
        if (r == 3) out.push_back(series_vs_expr("aerated.table.corrected", p, img, "(1-x)/(1-3*x)"));
        if (r == 6)
            out.push_back(series_vs_expr("aerated.table.corrected", p, img, "(1-4*x+3*x^2)/(1-6*x+9*x^2-2*x^3)",
                                         kIdentityTerms, "denominator read with -2x^3"));
    }
    RationalGF printed_ratio = ratio_formula(r);
    out.push_back(make_report("aerated.ratio-formula", p, first_terms(img, kIdentityTerms),
                              first_terms(printed_ratio.expand(kIdentityOrder), kIdentityTerms),
                              "[y^r] index as printed: " + printed_ratio.to_text()));
    RationalGF ratio = ratio_formula(r - 1);
    out.push_back(make_report("aerated.ratio-formula.corrected", p, first_terms(img, kIdentityTerms),
                              first_terms(ratio.expand(kIdentityOrder), kIdentityTerms),
                              "[y^(r-1)] index: " + ratio.to_text()));

    int m_verbatim = static_cast<int>(r);
    int arr_order = m_verbatim + 2;
    RiordanArray P_arr = op_array("1/(1+x)", arr_order), Q_arr = op_array("1/(1+x)^2", arr_order),
                 R_arr = op_array("(1-x)/(1+x)^2", arr_order), S_arr = op_array("(1-x)/(1+x)", arr_order);
    {
        std::vector<Rational> expected;
        std::string note;
        if (r % 2) {
            RationalGF q(reversed_row(P_arr, m_verbatim), reversed_row(R_arr, m_verbatim));
            expected = first_terms(q.expand(kIdentityOrder), kIdentityTerms);
            note = "P_r(1/x)/R_r(1/x) = " + q.to_text();
        } else {
            PowerSeries num = PowerSeries::polynomial(reversed_row(Q_arr, m_verbatim), kIdentityOrder);
            PowerSeries den = PowerSeries::polynomial(reversed_row(S_arr, m_verbatim), kIdentityOrder).shift_up(1);
            try {
                expected = first_terms(divide_removable(num, den), kIdentityTerms - 1);
                note = "(1/x) Q_r(1/x)/S_r(1/x)";
            } catch (const MathError& e) {
                note = std::string("(1/x) Q_r(1/x)/S_r(1/x) is not a power series: ") + e.what();
            }
        }
        // an empty expectation means the quotient has no expansion, which fails
        int shown = expected.empty() ? kIdentityTerms : static_cast<int>(expected.size());
        out.push_back(make_report("aerated.orthogonal-quotient", p, first_terms(img, shown), expected, note));
    }
    {
        RationalGF q = r % 2 ? RationalGF(reversed_row(P_arr, static_cast<int>((r - 1) / 2)),
                                          reversed_row(R_arr, static_cast<int>((r - 1) / 2)))
                             : RationalGF(reversed_row(Q_arr, static_cast<int>(r / 2 - 1)),
                                          reversed_row(S_arr, static_cast<int>(r / 2)));
        out.push_back(make_report("aerated.orthogonal-quotient.corrected", p, first_terms(img, kIdentityTerms),
                                  first_terms(q.expand(kIdentityOrder), kIdentityTerms),
                                  r % 2 ? "P_m(1/x)/R_m(1/x), m = (r-1)/2" : "(1/x) Q_(m-1)(1/x)/S_m(1/x), m = r/2"));
    }
    int agree = central_agreement(img);
    out.push_back(make_report("aerated.central-binomial-agreement", p, {Rational(agree)}, {Rational(r + 1)},
                              "number of leading terms equal to binom(2n,n)"));
    out.push_back(make_report("aerated.central-binomial-agreement.corrected", p, {Rational(agree)}, {Rational(r)},
                              "number of leading terms equal to binom(2n,n)"));
    return out;
}

Reports verify_aerated_examples() {
    Reports out;
    const int w = 40;
    std::vector<RationalGF> gfs;
    for (long r = 1; r <= 11; ++r) {
        FitResult fit = fit_rational_gf(first_terms(aerated_image(r, w), w + 1), 8, 8);
        if (!fit.gf) throw MathError("no rational form found for the aerated image at r = " + std::to_string(r));
        gfs.push_back(*fit.gf);
    }
    auto values_at = [&](long x) {
        std::vector<Rational> v;
        for (const auto& g : gfs) v.push_back(eval_gf(g, Rational(x)));
        return v;
    };
    auto nums = [](const std::vector<Rational>& v) {
        std::vector<Rational> o;
        for (const auto& r : v) o.emplace_back(r.get_num());
        return o;
    };
    auto dens = [](const std::vector<Rational>& v) {
        std::vector<Rational> o;
        for (const auto& r : v) o.emplace_back(r.get_den());
        return o;
    };
    std::vector<Rational> at2 = values_at(2), at4 = values_at(4);
    out.push_back(make_report("aerated.values-at-2", {}, at2,
                              fractions({{1, 1}, {-1, 3}, {1, 5}, {-3, 1}, {-1, 11}, {5, 9}, {-7, 13}, {3, 31},
                                         {17, 5}, {-11, 57}, {32, 67}}),
                              "image GFs for r = 1..11 (found by rational fit) evaluated at x = 2"));
    out.push_back(make_report("aerated.values-at-2.corrected", {}, at2,
                              fractions({{1, 1}, {-1, 3}, {1, 5}, {-3, 1}, {-1, 11}, {5, 9}, {-7, 13}, {3, 31},
                                         {17, 5}, {-11, 57}, {23, 67}}),
                              "eleventh value 23/67, matching the printed numerator list"));
    out.push_back(make_report("aerated.values-at-2.denominators", {}, dens(at2),
                              rationals({1, 3, 5, 1, 11, 9, 13, 31, 5, 57, 67})));
    out.push_back(make_report("aerated.values-at-2.numerators", {}, nums(at2),
                              rationals({1, -1, 1, -3, -1, 5, -7, 3, 17, -11, 23})));
    out.push_back(series_vs_printed("aerated.values-at-2.signed-denominators", {}, gf("(1-4*x)/(1-x+2*x^2)", 12),
                                    rationals({1, -3, -5, 1, 11, 9, -13, -31, -5, 57, 67, -47, -181})));
    out.push_back(series_vs_printed("aerated.values-at-2.numerator-companion", {}, gf("1/(1-x+2*x^2)", 9),
                                    rationals({1, 1, -1, -3, -1, 5, 7, -3, -17, -11})));
    {
        // raw numerator and denominator of the ratio formula at x = 2
        std::vector<Rational> raw_den, raw_num;
        for (long r = 1; r <= 11; ++r) {
            RationalGF f = ratio_formula(r - 1);
            raw_num.push_back(eval_poly(f.numerator(), 2));
            raw_den.push_back(eval_poly(f.denominator(), 2));
        }
        out.push_back(make_report("aerated.values-at-2.raw-denominators", {}, raw_den,
                                  first_terms(gf("(1-4*x)/(1-x+2*x^2)", 10), 11),
                                  "denominator polynomial of the ratio formula at x = 2"));
        out.push_back(make_report("aerated.values-at-2.raw-numerators", {}, raw_num,
                                  first_terms(gf("1/(1-x+2*x^2)", 10), 11),
                                  "numerator polynomial of the ratio formula at x = 2"));
    }
    {
        std::vector<Rational> pairs_c, pairs_e, id_c, id_e;
        const std::vector<std::pair<long, long>> printed = {{1, 1}, {1, 3}, {1, 5}, {3, 1},
                                                            {1, 11}, {5, 9}, {7, 13}, {3, 31}};
        for (std::size_t i = 0; i < printed.size(); ++i) {
            BigInt pn = abs(at2[i].get_num()), qn = at2[i].get_den();
            pairs_c.emplace_back(pn);
            pairs_c.emplace_back(qn);
            pairs_e.emplace_back(printed[i].first);
            pairs_e.emplace_back(printed[i].second);
            id_c.emplace_back(7 * pn * pn + qn * qn);
            id_e.emplace_back(ipow(2, i + 3));
        }
        out.push_back(make_report("aerated.diophantine-2.pairs", {}, pairs_c, pairs_e, "(|numerator|, denominator)"));
        out.push_back(make_report("aerated.diophantine-2.identity", {}, id_c, id_e, "7p^2 + q^2 = 2^(r+2), r = 1..8"));
    }
    out.push_back(make_report("aerated.values-at-4", {}, at4,
                              fractions({{1, 1}, {-1, 7}, {3, 11}, {-7, 17}, {5, 61}, {-33, 7}, {-13, 251}, {119, 223},
                                         {-171, 781}, {305, 1673}, {-989, 1451}}),
                              "image GFs for r = 1..11 evaluated at x = 4"));
    out.push_back(make_report("aerated.values-at-4.denominators", {}, dens(at4),
                              rationals({1, 7, 11, 17, 61, 7, 251, 223, 781, 1673, 1451})));
    out.push_back(series_vs_printed("aerated.values-at-4.signed-denominators", {}, gf("(1-8*x)/(1-x+4*x^2)", 10),
                                    rationals({1, -7, -11, 17, 61, -7, -251, -223, 781, 1673, -1451})));
    out.push_back(make_report("aerated.values-at-4.numerators", {}, nums(at4),
                              rationals({1, -1, 3, -7, 5, -33, -13, 119, -171, 305, -989})));
    out.push_back(series_vs_printed("aerated.values-at-4.numerator-companion", {}, gf("1/(1-x+4*x^2)", 10),
                                    rationals({1, 1, -3, -7, 5, 33, 13, -119, -171, 305, 989})));
    {
        std::vector<Rational> id_c, id_e;
        for (std::size_t i = 0; i < 8; ++i) {
            BigInt pn = at4[i].get_num(), qn = at4[i].get_den();
            id_c.emplace_back(15 * pn * pn + qn * qn);
            id_e.emplace_back(ipow(4, i + 2));
        }
        out.push_back(make_report("aerated.diophantine-4.identity", {}, id_c, id_e, "15p^2 + q^2 = 4^(r+1), r = 1..8"));
    }
    {
        Params p{{"r", 10}};
        PowerSeries img = aerated_image(10, kIdentityOrder);
        std::vector<Rational> printed = rationals({1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620, 184756});
        out.push_back(series_vs_printed("aerated.limit-example.expansion", p, img, printed));
        out.push_back(make_report("aerated.limit-example.agreement", p, {Rational(central_agreement(img))}, {Rational(11)},
                                  "leading terms equal to binom(2n,n)"));
        out.push_back(series_vs_expr("aerated.limit-example.printed-gf", p, img,
                                     "(1-9*x+28*x^2-35*x^3+15*x^4-x^5)/(1-11*x+44*x-77*x+55*x-11*x^5)",
                                     kIdentityTerms, "printed GF taken literally"));
        Params p11{{"r", 11}};
        PowerSeries img11 = aerated_image(11, kIdentityOrder);
        out.push_back(series_vs_expr("aerated.limit-example.printed-gf.corrected", p11, img11,
                                     "(1-9*x+28*x^2-35*x^3+15*x^4-x^5)/(1-11*x+44*x^2-77*x^3+55*x^4-11*x^5)",
                                     kIdentityTerms, "printed GF with exponents restored is the image at r = 11"));
        out.push_back(series_vs_printed("aerated.limit-example.expansion.corrected", p11, img11, printed));
    }
    return out;
}

namespace {

std::string narayana_quartic(long r) {
    return "sqrt(1-2*" + P(r - 1) + "*x+" + P(r * r - 6 * r + 3) + "*x^2-2*" + P(r - 1) + "*x^3+x^4)";
}

}  // namespace

Reports verify_narayana_preimage(long r, int order) {
    if (r < 0) throw MathError("Narayana parameter r must be nonnegative");
    Reports out;
    Params p{{"r", r}};
    NarayanaTriangle tri(order + 2);
    std::vector<Rational> target;
    for (int n = 0; n <= order; ++n) target.emplace_back(tri.polynomial(n, r));
    if (r >= 1)
        out.push_back(make_report("narayana.polynomial-gf", p, target,
                                  first_terms(gf("(1-" + P(r + 1) + "*x-sqrt(1-2*" + P(r + 1) + "*x+" +
                                                     P((r - 1) * (r - 1)) + "*x^2))/(2*" + P(r) + "*x^2)",
                                                 order),
                                              order + 1)));
    PowerSeries pre = gf("(1-" + P(r - 1) + "*x+x^2+" + narayana_quartic(r) + ")/(2*(1-x^2))", order);
    out.push_back(make_report("narayana.preimage-round-trip", p, first_terms(c_transform(pre), order + 1), target,
                              "C(pre-image) against sum_k N(n,k) r^k"));
    if (r == 0) out.push_back(series_vs_expr("narayana.preimage-rational", p, pre, "(1+x+x^2)/(1-x^2)", order + 1));
    if (r == 1) out.push_back(series_vs_expr("narayana.preimage-rational", p, pre, "1/(1-x^2)", order + 1));
    if (r >= 1) {
        PowerSeries pre_u = gf("2*" + P(r) + "*x*(1+x)/((1-x)*(1+" + P(r + 1) + "*x+x^2-" + narayana_quartic(r) + "))",
                               order);
        std::vector<Rational> shifted{Rational(1)};
        shifted.insert(shifted.end(), target.begin(), target.end() - 1);
        PowerSeries img_u = c_transform(pre_u);
        out.push_back(make_report("narayana.unshifted-round-trip", p, first_terms(img_u, order + 1), shifted,
                                  "C(pre-image) against 1, N_0(r), N_1(r), ..."));
        out.push_back(series_vs_expr("narayana.unshifted-gf", p, img_u,
                                     "1+(1-" + P(r + 1) + "*x-sqrt(1-2*" + P(r + 1) + "*x+" + P((r - 1) * (r - 1)) +
                                         "*x^2))/(2*" + P(r) + "*x)",
                                     order + 1));
    }
    return out;
}

Reports verify_little_schroeder_preimage() {
    Reports out;
    Params p{{"r", 2}};
    PowerSeries pre = gf("4*x*(1+x)/((1-x)*(1+3*x+x^2-sqrt(1-2*x-5*x^2-2*x^3+x^4)))", kIdentityOrder);
    out.push_back(series_vs_printed("narayana.little-schroeder-preimage", p, pre,
                                    rationals({1, 1, 0, -1, -4, -11, -30, -83, -236, -689, -2056})));
    out.push_back(series_vs_series("narayana.little-schroeder-general-form", p, pre,
                                   gf("2*2*x*(1+x)/((1-x)*(1+3*x+x^2-" + narayana_quartic(2) + "))", kIdentityOrder)));
    NarayanaTriangle tri(kIdentityTerms);
    std::vector<Rational> little{Rational(1)};
    for (int n = 0; n + 1 < kIdentityTerms; ++n) little.emplace_back(tri.polynomial(n, 2));
    out.push_back(make_report("narayana.little-schroeder-image", p, first_terms(c_transform(pre), kIdentityTerms), little,
                              "1 followed by the Narayana polynomials at r = 2"));
    return out;
}

Reports verify_tree_table(int prefix) {
    Reports out;
    int w = work_order(prefix);
    const int t = kIdentityTerms;
    auto image = [&](const std::string& pre) { return c_transform(gf(pre, w)); };
    const std::string B = "(1/sqrt(1-4*x))";
    const std::string T0 = "((1-sqrt(5-4*c(x)))/(2-c(x)))";
    {
        Params p;
        const std::string pre = "(1-x)/(1+x)^2";
        PowerSeries img = image(pre);
        out.push_back(series_vs_printed("trees.boundary.image-formula", p, img, terms(t, [](long n) -> Rational {
                                            return 2 * ipow(4, static_cast<unsigned long>(n)) - binomial(2 * n + 1, n + 1);
                                        }),
                                        "2*4^n - binom(2n+1,n+1)"));
        out.push_back(series_vs_expr("trees.boundary.image-gf", p, img, "(1/(1-4*x)-1/sqrt(1-4*x))/(2*x)"));
        out.push_back(series_vs_printed("trees.boundary.preimage", p, gf(pre, t - 1),
                                        terms(t, [](long n) -> Rational { return sign_pow(n) * (2 * n + 1); }), "signed odd numbers"));
        out.push_back(make_report("trees.boundary.hankel-formula", p, rationals(hankel_of(img, prefix).terms),
                                  terms(prefix, [](long n) -> Rational { return sign_pow(n) * (2 * n + 1); }), "(-1)^n (2n+1)"));
        check_hankel_gf(out, "trees.boundary", p, img, RationalGF::from_integers({1, -1}, {1, 2, 1}), prefix);
    }
    {
        Params p;
        PowerSeries img = image("1/(1+x)");
        out.push_back(series_vs_printed("trees.odd-central.image-formula", p, img,
                                        terms(t, [](long n) -> Rational { return binomial(2 * n + 1, n + 1); })));
        out.push_back(series_vs_printed("trees.odd-central.preimage", p, gf("1/(1+x)", t - 1),
                                        terms(t, [](long n) -> Rational { return sign_pow(n); })));
    }
    {
        Params p;
        const std::string pre = "1/((1-x)*(1+x)^3)";
        PowerSeries img = image(pre);
        out.push_back(series_vs_expr("trees.catalan-fourth-power.image-gf", p, img, "c(x)^4"));
        out.push_back(series_vs_printed("trees.catalan-fourth-power.image-formula", p, img, terms(t, [](long n) -> Rational {
                                            return frac(4, n + 4) * Rational(binomial(2 * n + 3, n));
                                        }),
                                        "4/(n+4) binom(2n+3,n)"));
        out.push_back(series_vs_printed("trees.catalan-fourth-power.preimage", p, gf(pre, t - 1),
                                        terms(t, [](long n) -> Rational { return sign_pow(n) * ((n + 2) * (n + 2) / 4); }),
                                        "signed quarter squares (-1)^n floor((n+2)^2/4)"));
        out.push_back(make_report("trees.catalan-fourth-power.hankel-formula", p, rationals(hankel_of(img, prefix).terms),
                                  terms(prefix, [](long n) -> Rational { return sign_pow(n) * ((n + 3) / 2); }),
                                  "printed (-1)^n floor((n+3)/2)"));
        out.push_back(make_report("trees.catalan-fourth-power.hankel-formula.corrected", p,
                                  rationals(hankel_of(img, prefix).terms),
                                  terms(prefix, [](long n) -> Rational { return sign_pow(n * (n + 1) / 2) * ((n + 3) / 2); }),
                                  "(-1)^binom(n+1,2) floor((n+3)/2)"));
        check_hankel_gf(out, "trees.catalan-fourth-power", p, img,
                        RationalGF(poly({1, -2, 0, -1}), poly_pow(poly({1, 0, 1}), 2)), prefix);
    }
    {
        Params p;
        const std::string pre = "(1+x*c(-x))/(1+x)";
        PowerSeries pre_s = gf(pre, w);
        PowerSeries img = c_transform(pre_s);
        out.push_back(series_vs_expr("trees.t0.image-gf", p, img, T0, t,
                                     "image of the listed pre-image against T0; computed image starts " +
                                         img.truncate(6).to_text()));
        out.push_back(series_vs_expr("trees.t0.preimage-gf", p, pre_s, "(1+sqrt(1+4*x))/(2*(1+x))"));
        std::vector<Rational> printed = rationals({1, 0, -1, -3, -8, -22, -64, -196, -625, -2055, -6917});
        out.push_back(series_vs_printed("trees.t0.preimage-prefix", p, pre_s, printed));
        std::vector<Rational> absval;
        for (int i = 0; i < 11; ++i) absval.emplace_back(abs(pre_s[i]));
        std::vector<Rational> printed_abs;
        for (const auto& v : printed) printed_abs.emplace_back(abs(v));
        out.push_back(make_report("trees.t0.preimage-prefix.absolute", p, absval, printed_abs,
                                  "absolute values agree; signs alternate from the fourth term"));
        out.push_back(series_vs_printed("trees.t0.catalan-variant", p, gf("1+x*c(-x)", 10),
                                        rationals({1, 1, -1, 2, -5, 14, -42, 132, -429, 1430, -4862})));
        out.push_back(series_vs_series("trees.t0.alternating-sums", p, pre_s,
                                       gf("1/(1+x)", w) * gf("1+x*c(-x)", w)));
        out.push_back(make_report("trees.t0.preimage-hankel-formula", p, rationals(hankel_of(pre_s, prefix).terms),
                                  terms(prefix, [](long n) -> Rational { return std::array<long, 3>{1, -1, 0}[static_cast<std::size_t>(n % 3)]; }),
                                  "period 1, -1, 0"));
        check_hankel_gf(out, "trees.t0.preimage", p, pre_s, RationalGF::from_integers({1}, {1, 1, 1}), prefix);
    }
    {
        Params p;
        const std::string pre = "1-x*c(x)";
        PowerSeries pre_s = gf(pre, w);
        PowerSeries img = c_transform(pre_s);
        out.push_back(series_vs_expr("trees.t0-scaled.image-gf", p, img, B + "/c(x)*" + T0, t,
                                     "image of the listed pre-image against (B/C) T0; computed image starts " +
                                         img.truncate(6).to_text()));
        out.push_back(series_vs_expr("trees.t0-scaled.preimage-gf", p, pre_s, "1/c(x)"));
        out.push_back(make_report("trees.t0-scaled.preimage-hankel-formula", p, rationals(hankel_of(pre_s, prefix).terms),
                                  terms(prefix, [](long n) -> Rational { return sign_pow(n) * (n + 1); }), "(-1)^n (n+1)"));
        check_hankel_gf(out, "trees.t0-scaled.preimage", p, pre_s, RationalGF::from_integers({1}, {1, 2, 1}), prefix);
    }
    {
        Params p;
        const std::string pre = "(1-x-x^2+x^3)/(1-x+2*x^2)";
        PowerSeries pre_s = gf(pre, w);
        PowerSeries img = c_transform(pre_s);
        out.push_back(series_vs_printed("trees.compositions.image-formula", p, img, terms(t, [](long n) -> Rational {
                                            Rational r(zero_pow(n) + (n + 1) * binomial(2 * n, n));
                                            return r / 2;
                                        }),
                                        "(0^n + (n+1) binom(2n,n))/2"));
        out.push_back(series_vs_expr("trees.compositions.image-gf", p, img, "(" + B + "-1)/2+x*" + B + "^3"));
        out.push_back(series_vs_expr("trees.compositions.image-gf.corrected", p, img, "(" + B + "+1)/2+x*" + B + "^3",
                                     t, "constant term 1 restored: (B+1)/2 + x B^3"));
        PowerSeries recip = reciprocal(pre_s);
        out.push_back(series_vs_expr("trees.compositions.preimage-reciprocal-gf", p, recip, "(1-x+2*x^2)/((1-x)*(1-x^2))"));
        out.push_back(series_vs_printed("trees.compositions.preimage-reciprocal", p, recip,
                                        rationals({1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14, 17, 16})));
        out.push_back(series_vs_printed("trees.compositions.preimage-reciprocal-formula", p, recip,
                                        terms(t, [](long n) -> Rational { return n + sign_pow(n); }), "n + (-1)^n"));
        out.push_back(make_report("trees.compositions.hankel-prefix", p, rationals(hankel_of(img, 11).terms),
                                  rationals({1, 5, -14, -26, 43, 63, -88, -116, 149, 185, -226})));
        check_hankel_gf(out, "trees.compositions", p, img,
                        RationalGF(poly({1, 5, -11, -11, 4}), poly_pow(poly({1, 0, 1}), 3)), prefix);
        std::vector<Rational> src;
        for (long n = 0; n <= w; ++n) {
            BigInt s = 0;
            for (long k = 0; k <= n; ++k) s += binomial(n + 1, k + 1) * binomial(k, n - k);
            src.emplace_back(s);
        }
        out.push_back(series_vs_series("trees.compositions.binomial-source", p, binomial_transform(PowerSeries(src)), img,
                                       t, "printed: binomial transform of sum_k binom(n+1,k+1) binom(k,n-k)"));
    }
    {
        Params p;
        const std::string pre = "(1+x)/(1+x+x^2)";
        PowerSeries img = image(pre);
        out.push_back(series_vs_printed("trees.period-three.image-formula", p, img, terms(t, [](long n) -> Rational {
                                            return frac(3 * n + 1, 2 * n + 2) * Rational(binomial(2 * n, 2)) + frac(zero_pow(n), 2);
                                        }),
                                        "printed (3n+1)/(2n+2) binom(2n,2) + 0^n/2"));
        out.push_back(series_vs_printed("trees.period-three.image-formula.corrected", p, img, terms(t, [](long n) -> Rational {
                                            return frac(3 * n + 1, 2 * n + 2) * Rational(binomial(2 * n, n)) + frac(zero_pow(n), 2);
                                        }),
                                        "(3n+1)/(2n+2) binom(2n,n) + 0^n/2"));
        out.push_back(series_vs_printed("trees.period-three.preimage", p, gf(pre, t - 1),
                                        terms(t, [](long n) -> Rational { return std::array<long, 3>{1, 0, -1}[static_cast<std::size_t>(n % 3)]; }),
                                        "period 1, 0, -1"));
    }
    {
        Params p;
        PowerSeries img = image("1-x^2");
        out.push_back(series_vs_expr("trees.truncated.image-gf", p, img, "(sqrt(1-4*x)+1-2*x)/(2*(1-4*x))"));
        out.push_back(series_vs_printed("trees.truncated.preimage", p, gf("1-x^2", 5), rationals({1, 0, -1, 0, 0, 0})));
    }
    {
        Params p;
        PowerSeries pre_s = gf("sqrt(1-4*x)", w);
        PowerSeries img = c_transform(pre_s);
        out.push_back(series_vs_printed("trees.central-convolution.image-formula", p, img, terms(t, [](long n) -> Rational {
                                            BigInt s = 0;
                                            for (long k = 0; k <= n; ++k) s += binomial(2 * n, n - k) * binomial(2 * k, k);
                                            return s;
                                        }),
                                        "sum_k binom(2n,n-k) binom(2k,k)"));
        out.push_back(series_vs_printed("trees.central-convolution.preimage-reciprocal", p, reciprocal(pre_s),
                                        terms(t, [](long n) -> Rational { return binomial(2 * n, n); })));
    }
    {
        Params p;
        const std::string pre = "(1-x)^2/((1+x)*(1+4*x-x^2))";
        PowerSeries img = image(pre);
        out.push_back(series_vs_printed("trees.odd-square-catalan.image-formula", p, img, terms(t, [](long n) -> Rational {
                                            return (2 * n + 1) * (2 * n + 1) * catalan_number(n);
                                        }),
                                        "(2n+1)^2 C_n"));
        out.push_back(series_vs_printed("trees.odd-square-catalan.preimage", p, gf(pre, t - 1), terms(t, [](long n) -> Rational {
                                            Rational v(fibonacci(3 * n + 4) + fibonacci(3 * n + 1) - 2);
                                            return v * sign_pow(n) / 2;
                                        }),
                                        "(-1)^n (F(3n+4) + F(3n+1) - 2)/2"));
    }

    // continued fractions
    auto periodic = [](long first, int depth) {
        JFraction j;
        for (int i = 0; i < depth; ++i) j.linear.emplace_back(i == 0 ? first : (i % 2 ? 4 : 0));
        j.quadratic.assign(static_cast<std::size_t>(depth - 1), Rational(1));
        return j;
    };
    {
        Params p;
        JFraction j = periodic(2, 16);
        PowerSeries jf = jfraction_expand(j, kIdentityOrder);
        PowerSeries img = image("(1-x+2*x^2)/((1-x)*(1-x^2))");
        out.push_back(series_vs_printed("trees.jfraction-pair-reversed.expansion", p, jf,
                                        rationals({1, 2, 3, 0, -26, -150, -641, -2408, -8402, -27948, -90034}),
                                        "linear 2,4,0,4,0,..., quadratic all 1"));
        out.push_back(series_vs_series("trees.jfraction-pair-reversed.matches-image", p, jf, img));
        out.push_back(series_vs_expr("trees.jfraction-pair-reversed.image-gf", p, img,
                                     "sqrt(1-4*x)*(1-2*x-(1-4*x)*sqrt(1-4*x))/(2*x*(2-11*x+16*x^2))"));
        out.push_back(make_report("trees.jfraction-pair-reversed.hankel", p, rationals(hankel_of(img, prefix).terms),
                                  terms(prefix, [](long n) -> Rational { return sign_pow(n * (n + 1) / 2); }), "(-1)^binom(n+1,2)"));
    }
    {
        Params p;
        JFraction j = periodic(1, 16);
        PowerSeries jf = jfraction_expand(j, kIdentityOrder);
        out.push_back(series_vs_printed("trees.jfraction-shifted.expansion", p, jf,
                                        rationals({1, 1, 0, -5, -24, -90, -312, -1053, -3536, -11934}),
                                        "linear 1,4,0,4,0,..., quadratic all 1"));
        out.push_back(series_vs_expr("trees.jfraction-shifted.gf", p, jf,
                                     "sqrt(1-4*x)*(1-2*x-(1-4*x)*sqrt(1-4*x))/(x*(1-2*x)*(3-8*x+sqrt(1-4*x)))"));
        PowerSeries pre = c_inverse(jf);
        out.push_back(series_vs_printed("trees.jfraction-shifted.preimage", p, pre,
                                        rationals({1, 1, 3, 3, 5, 5, 7, 7, 9, 9, 11})));
        out.push_back(series_vs_expr("trees.jfraction-shifted.preimage-gf", p, pre, "(1+x^2)/((1-x)^2*(1+x))"));
        PowerSeries full = image("(1+x^2)/(1-x)");
        std::vector<Rational> tail(full.coeffs().begin() + 1, full.coeffs().begin() + kIdentityTerms + 1);
        out.push_back(make_report("trees.jfraction-shifted.is-shift", p, first_terms(jf, kIdentityTerms), tail,
                                  "expansion equals the once-shifted image of (1+x^2)/(1-x)"));
    }
    {
        Params p;
        PowerSeries img = image("(1+x^2)/(1-x)");
        std::vector<Rational> printed = rationals({1, 1, 1, 0, -5, -24, -90, -312, -1053, -3536, -11934});
        out.push_back(series_vs_printed("trees.signed-central.image", p, img, printed));
        PowerSeries pre = c_inverse(img);
        out.push_back(series_vs_printed("trees.signed-central.preimage", p, pre, rationals({1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2})));
        out.push_back(series_vs_printed("trees.signed-central.binomial-sum", p, img, terms(t, [](long n) -> Rational {
                                            BigInt s = 0;
                                            for (long k = 0; k <= n; ++k) s += binomial(2 * n, n - k) * sign_pow(k * (k + 1) / 2);
                                            return s;
                                        }),
                                        "sum_k binom(2n,n-k) (-1)^binom(k+1,2)"));
        out.push_back(series_vs_printed("trees.signed-central.reciprocal-preimage-gf", p, gf("(1-x)/(1+x^2)", 9),
                                        rationals({1, -1, -1, 1, 1, -1, -1, 1, 1, -1})));
        IntSequence star = reciprocal_preimage_sequence(IntSequence::from_series(img.truncate(t - 1)));
        out.push_back(make_report("trees.signed-central.reciprocal-preimage", p, rationals(star.terms),
                                  terms(t, [](long n) -> Rational { return sign_pow(n * (n + 1) / 2); }), "(-1)^binom(n+1,2)"));
    }
    return out;
}

Reports verify_equal_hankel(int prefix) {
    Reports out;
    int w = work_order(prefix);
    const int t = kIdentityTerms;
    PowerSeries a = gf("((1+x)/(1-x))^2", w);
    PowerSeries a_star = gf("((1-x)/(1+x))^2", w);
    out.push_back(series_vs_printed("equal-hankel.sequence", {}, a, rationals({1, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44})));
    out.push_back(series_vs_printed("equal-hankel.reciprocal", {}, a_star,
                                    rationals({1, -4, 8, -12, 16, -20, 24, -28, 32, -36, 40, -44})));
    {
        std::vector<Rational> alt;
        for (int n = 0; n < t; ++n) alt.push_back(a[n] * sign_pow(n));
        out.push_back(make_report("equal-hankel.reciprocal-alternates", {}, first_terms(a_star, t), alt,
                                  "a*_n = (-1)^n a_n"));
    }
    PowerSeries img = c_transform(a), img_star = c_transform(a_star);
    out.push_back(series_vs_expr("equal-hankel.image", {}, img, "sqrt(1-4*x)"));
    out.push_back(series_vs_printed("equal-hankel.image-prefix", {}, img, rationals({1, -2, -2, -4, -10})));
    out.push_back(series_vs_expr("equal-hankel.reciprocal-image", {}, img_star, "1/(sqrt(1-4*x)^3)"));
    auto odd_powers = [](long n) -> Rational { return (2 * n + 1) * ipow(-2, static_cast<unsigned long>(n)); };
    out.push_back(make_report("equal-hankel.hankel", {}, rationals(hankel_of(img, 8).terms), terms(8, odd_powers),
                              "(2n+1)(-2)^n"));
    out.push_back(make_report("equal-hankel.reciprocal-hankel", {}, rationals(hankel_of(img_star, 8).terms),
                              terms(8, odd_powers), "(2n+1)(-2)^n"));
    RationalGF hgf = RationalGF::from_integers({1, -2}, {1, 4, 4});
    check_hankel_gf(out, "equal-hankel.image", {}, img, hgf, prefix);
    check_hankel_gf(out, "equal-hankel.reciprocal-image", {}, img_star, hgf, prefix);
    PowerSeries inv4 = binomial_transform(img_star, -4);
    out.push_back(series_vs_expr("equal-hankel.inverse-binomial", {}, inv4, "sqrt(1+4*x)",
                                 t, "4th inverse binomial transform of (1-4x)^(-3/2)"));
    out.push_back(make_report("equal-hankel.inverse-binomial-hankel", {}, rationals(hankel_of(inv4, prefix).terms),
                              rationals(hankel_of(img, prefix).terms), "Hankel unchanged by the two transformations"));

    PowerSeries d = gf("((1+x^2)/(1-x^2))^2", w);
    PowerSeries d_star = gf("((1-x^2)/(1+x^2))^2", w);
    PowerSeries dimg = c_transform(d), dimg_star = c_transform(d_star);
    out.push_back(series_vs_expr("equal-hankel.doubled-image", {}, dimg, "(1-4*x)/(1-2*x)^2"));
    out.push_back(series_vs_expr("equal-hankel.doubled-image.corrected", {}, dimg, "sqrt(1-4*x)/(1-2*x)^2"));
    out.push_back(series_vs_expr("equal-hankel.doubled-reciprocal-image", {}, dimg_star, "(1-2*x)^2/(sqrt(1-4*x)^3)"));
    IntSequence h = hankel_of(dimg, 11), h_star = hankel_of(dimg_star, 11);
    out.push_back(make_report("equal-hankel.doubled-hankel-prefix", {}, rationals(h.terms),
                              rationals({1, -2, 12, -24, 80, -160, 448, -896, 2304, -4608, 11264})));
    out.push_back(make_report("equal-hankel.doubled-hankel-formula", {}, rationals(h.terms), terms(11, [](long n) -> Rational {
                                  return ipow(-2, static_cast<unsigned long>(n)) * (2 * (n / 2) + 1);
                              }),
                              "(-2)^n (2 floor(n/2) + 1)"));
    check_hankel_gf(out, "equal-hankel.doubled", {}, dimg,
                    RationalGF(poly({1, 0, 4}), poly_mul(poly({1, -2}), poly_pow(poly({1, 2}), 2))), prefix);
    out.push_back(make_report("equal-hankel.doubled-reciprocal-hankel-prefix", {}, first_terms(h_star, 10),
                              rationals({1, 6, -36, 360, -1200, 5600, -15680, 56448, -145152, 456192})));
    check_hankel_gf(out, "equal-hankel.doubled-reciprocal", {}, dimg_star,
                    RationalGF(poly({1, 8, -36, 192, -144, 128, 64}), poly_mul(poly_pow(poly({1, -2}), 3), poly_pow(poly({1, 2}), 4))),
                    prefix, "", 7);
    IntSequence hw = hankel_of(dimg, kFitTerms), hw_star = hankel_of(dimg_star, kFitTerms);
    std::vector<Rational> ratio;
    for (int n = 0; n < kFitTerms; ++n) ratio.push_back(Rational(hw_star[static_cast<std::size_t>(n)]) / Rational(hw[static_cast<std::size_t>(n)]));
    out.push_back(make_report("equal-hankel.ratio-prefix", {}, std::vector<Rational>(ratio.begin(), ratio.begin() + 11),
                              rationals({1, -3, -3, -15, -15, -35, -35, -63, -63, -99, -99})));
    RationalGF ratio_gf = RationalGF::from_integers({1, -4, -2, -4, 1}, {1, -1, -2, 2, 1, -1});
    out.push_back(make_report("equal-hankel.ratio-gf", {}, ratio, first_terms(ratio_gf.expand(kFitTerms - 1), kFitTerms),
                              "against " + ratio_gf.to_text()));
    RationalGF ratio_factored(poly({1, -4, -2, -4, 1}), poly_mul(poly_pow(poly({1, 1}), 2), poly_pow(poly({1, -1}), 3)));
    out.push_back(make_report("equal-hankel.ratio-gf-factored", {}, {}, {}, "both printed denominators",
                              ratio_factored.to_text(), ratio_gf.to_text()));
    return out;
}

Reports sweep_linear_ratio(long lo, long hi, int prefix, bool parallel) {
    return sweep(pairs(lo, hi), [prefix](const std::pair<long, long>& c) {
        return verify_linear_ratio_family(c.first, c.second, prefix);
    }, parallel);
}

Reports sweep_quadratic_denominator(long lo, long hi, int prefix, bool parallel) {
    return sweep(pairs(lo, hi), [prefix](const std::pair<long, long>& c) {
        return verify_quadratic_denominator_family(c.first, c.second, prefix);
    }, parallel);
}

Reports sweep_lucas(long lo, long hi, int prefix, bool parallel) {
    return sweep(pairs(lo, hi), [prefix](const std::pair<long, long>& c) {
        return verify_lucas_family(c.first, c.second, prefix);
    }, parallel);
}

const std::vector<std::string>& section_ids() {
    static const std::vector<std::string> ids = {"3", "4", "5", "6", "6x2", "7", "8", "9", "10", "trees", "equal-hankel", "all"};
    return ids;
}

Reports run_section(const std::string& id, const SectionOptions& o) {
    auto append = [](Reports& out, Reports more) { out.insert(out.end(), more.begin(), more.end()); };
    auto pair_or_grid = [&](auto single, auto grid, auto examples, const std::optional<long>& x,
                            const std::optional<long>& y) {
        Reports out;
        if (x && y) return single(*x, *y, o.prefix);
        if (x || y) {
            std::vector<std::pair<long, long>> cells;
            for (long v = o.grid_lo; v <= o.grid_hi; ++v) cells.emplace_back(x ? *x : v, y ? *y : v);
            return sweep(cells, [&](const std::pair<long, long>& c) { return single(c.first, c.second, o.prefix); },
                         o.parallel);
        }
        append(out, grid(o.grid_lo, o.grid_hi, o.prefix, o.parallel));
        append(out, examples(o.prefix));
        return out;
    };
    auto single_or_range = [&](auto single, auto examples, const std::optional<long>& x, long lo, long hi) {
        Reports out;
        if (x) return single(*x, o.prefix);
        append(out, sweep(range(lo, hi), [&](long v) { return single(v, o.prefix); }, o.parallel));
        append(out, examples(o.prefix));
        return out;
    };
    if (id == "3") return verify_construction_example();
    if (id == "4") return verify_simple_tables(o.prefix);
    if (id == "5")
        return pair_or_grid(verify_linear_ratio_family, sweep_linear_ratio, verify_linear_ratio_examples, o.a, o.b);
    if (id == "6")
        return pair_or_grid(verify_quadratic_denominator_family, sweep_quadratic_denominator,
                            verify_quadratic_denominator_examples, o.a, o.b);
    if (id == "6x2") return single_or_range(verify_invert_family, verify_invert_examples, o.a, o.grid_lo, o.grid_hi);
    if (id == "7") return single_or_range(verify_cubic_family, verify_cubic_examples, o.a, o.grid_lo, o.grid_hi);
    if (id == "8") return pair_or_grid(verify_lucas_family, sweep_lucas, verify_lucas_examples, o.r, o.s);
    if (id == "9")
        return single_or_range(verify_aerated_family, [](int) { return verify_aerated_examples(); }, o.r, 1, 8);
    if (id == "10") {
        auto single = [](long r, int) { return verify_narayana_preimage(r, 16); };
        return single_or_range(single, [](int) { return verify_little_schroeder_preimage(); }, o.r, 0, 3);
    }
    if (id == "trees") return verify_tree_table(o.prefix);
    if (id == "equal-hankel") return verify_equal_hankel(o.prefix);
    if (id == "all") {
        Reports out;
        for (const auto& s : section_ids())
            if (s != "all") append(out, run_section(s, SectionOptions{{}, {}, {}, {}, o.prefix, o.grid_lo, o.grid_hi, o.parallel}));
        return out;
    }
    throw std::invalid_argument("unknown section '" + id + "'");
}

namespace {

std::string prefix_text(const PowerSeries& s, int count) {
    return s.truncate(std::min(count - 1, s.order())).to_text();
}

std::string fitted_hankel(const PowerSeries& img) {
    FitResult fit = fit_rational_gf(hankel_of(img, kFitTerms), kFitMaxDegree, kFitMaxDegree);
    return fit.gf ? fit.gf->to_text() : "none";
}

}  // namespace

Table simple_transform_table(int prefix) {
    Table t{"C transforms of simple sequences", {"g(x)", "C(g) prefix", "Hankel prefix", "Hankel GF (fitted)"}, {}};
    int w = work_order(prefix);
    for (const char* g : {"1/(1+x)", "1", "1/(1-x)", "1/(1-2*x)", "(1-x)/(1+x)", "(1-2*x)/(1+x)", "(1+x)/(1-x)",
                          "(1+x)/(1-x-x^2)", "1/(1-x^2)"}) {
        PowerSeries img = c_transform(gf(g, w));
        t.rows.push_back({g, prefix_text(img, prefix), hankel_of(img, prefix).to_text(), fitted_hankel(img)});
    }
    return t;
}

Table aerated_table(int max_r, int prefix) {
    Table t{"C transforms of (1+x^r)/(1-x^r)", {"r", "C(g) prefix", "C(g) GF (fitted)", "value at x=2", "value at x=4"}, {}};
    const int w = std::max(40, 4 * max_r);
    for (long r = 1; r <= max_r; ++r) {
        PowerSeries img = aerated_image(r, w);
        FitResult fit = fit_rational_gf(first_terms(img, w + 1), max_r / 2 + 2, max_r / 2 + 2);
        std::string form = fit.gf ? fit.gf->to_text() : "none";
        std::string v2 = fit.gf ? to_string(eval_gf(*fit.gf, 2)) : "";
        std::string v4 = fit.gf ? to_string(eval_gf(*fit.gf, 4)) : "";
        t.rows.push_back({std::to_string(r), prefix_text(img, prefix), form, v2, v4});
    }
    return t;
}

Table tree_table(int prefix) {
    Table t{"Pre-images of tree mutation sequences", {"label", "pre-image GF", "pre-image prefix", "image prefix"}, {}};
    int w = work_order(prefix);
    const std::vector<std::pair<const char*, const char*>> rows = {
        {"A000346", "(1-x)/(1+x)^2"},
        {"A001700", "1/(1+x)"},
        {"A002057", "1/((1-x)*(1+x)^3)"},
        {"A007852", "(1+x*c(-x))/(1+x)"},
        {"A007856", "1-x*c(x)"},
        {"A097070", "(1-x-x^2+x^3)/(1-x+2*x^2)"},
        {"A097613", "(1+x)/(1+x+x^2)"},
        {"A114121", "1-x^2"},
        {"A243585", "sqrt(1-4*x)"},
        {"A257589", "(1-x)^2/((1+x)*(1+4*x-x^2))"},
    };
    for (const auto& [label, pre] : rows) {
        PowerSeries s = gf(pre, w);
        t.rows.push_back({label, pre, prefix_text(s, prefix), prefix_text(c_transform(s), prefix)});
    }
    return t;
}

}  // namespace ctrans
