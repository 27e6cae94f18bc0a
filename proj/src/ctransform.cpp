#include "ctrans/ctransform.hpp"

namespace ctrans {

namespace {

void require_unit_constant(const PowerSeries& s, const char* what) {
    if (s[0] != 1) throw MathError(std::string(what) + " needs constant term 1, got " + to_string(s[0]));
}

PowerSeries sqrt_one_minus_4x(int order) {
    return sqrt(PowerSeries({1, -4}, order));
}

// x / (1 - k x)
PowerSeries geometric_shift(long k, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    BigInt p = 1;
    for (int n = 1; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] = p;
        p *= k;
    }
    return PowerSeries(std::move(c));
}

PowerSeries geometric(long k, int order) {
    std::vector<Rational> c;
    BigInt p = 1;
    for (int n = 0; n <= order; ++n) {
        c.emplace_back(p);
        p *= k;
    }
    return PowerSeries(std::move(c));
}

}  // namespace

PowerSeries c_transform(const PowerSeries& g) {
    require_unit_constant(g, "C transform");
    int n = g.order();
    PowerSeries xc2 = catalan_series(n) - PowerSeries::constant(1, n);
    return reciprocal(sqrt_one_minus_4x(n) * compose(g, xc2));
}

IntSequence c_transform_constructive(const PowerSeries& g) {
    require_unit_constant(g, "C transform");
    int n = g.order();
    // t(2n, n) only reads g up to x^n, so zero padding to order 2n is exact.
    PowerSeries padded = PowerSeries::polynomial(g.coeffs(), 2 * n);
    RiordanArray appell = RiordanArray::appell(padded);
    RiordanArray m = RiordanArray::pascal(2 * n) * inverse(appell);
    std::vector<BigInt> out;
    for (int k = 0; k <= n; ++k) out.push_back(to_bigint(m.element(2 * k, k)));
    return IntSequence(std::move(out));
}

IntSequence c_transform_sequence(const IntSequence& a) {
    if (a.size() == 0) throw InsufficientTerms("empty sequence");
    if (a[0] != 1) throw MathError("C transform needs a_0 = 1, got " + a[0].get_str());
    IntSequence star = reciprocal_sequence(a);
    std::vector<BigInt> b;
    for (long n = 0; n < static_cast<long>(a.size()); ++n) {
        BigInt acc = 0;
        for (long k = 0; k <= n; ++k) acc += binomial(2 * n, n - k) * star[static_cast<std::size_t>(k)];
        b.push_back(acc);
    }
    return IntSequence(std::move(b));
}

PowerSeries c_transform_catalan_squared(const PowerSeries& g) {
    require_unit_constant(g, "C transform");
    int n = g.order();
    PowerSeries input = reciprocal(PowerSeries({1, -1}, n) * g);
    return apply(RiordanArray::catalan_squared(n), input);
}

PowerSeries c_transform_catalan_matrix(const PowerSeries& g) {
    require_unit_constant(g, "C transform");
    int n = g.order();
    PowerSeries input = reciprocal(PowerSeries({1, -2}, n) * compose(g, geometric_shift(1, n)));
    return apply(RiordanArray::catalan(n), input);
}

PowerSeries c_inverse(const PowerSeries& h) {
    require_unit_constant(h, "inverse C transform");
    RiordanArray m = RiordanArray::inverse_central(h.order());
    return reciprocal(apply(m, h));
}

IntSequence reciprocal_preimage_sequence(const IntSequence& b) {
    if (b.size() == 0) throw InsufficientTerms("empty sequence");
    if (b[0] != 1) throw MathError("pre-image needs b_0 = 1, got " + b[0].get_str());
    std::vector<BigInt> out;
    for (long n = 0; n < static_cast<long>(b.size()); ++n) {
        Rational acc = 0;
        for (long k = 0; k <= n; ++k) {
            Rational w(2 * n + zero_pow(n), n + k + zero_pow(n + k));
            w.canonicalize();
            w *= Rational(binomial(n + k, 2 * k));
            if ((n - k) % 2) w = -w;
            acc += w * Rational(b[static_cast<std::size_t>(k)]);
        }
        if (!is_integer(acc))
            throw MathError("pre-image term " + std::to_string(n) + " is not an integer: " + to_string(acc));
        out.push_back(acc.get_num());
    }
    return IntSequence(std::move(out));
}

PowerSeries invert_alpha(const PowerSeries& f, long alpha) {
    PowerSeries den = PowerSeries::constant(1, f.order()) + Rational(alpha) * f.shift_up(1);
    return div(f, den);
}

PowerSeries binomial_transform(const PowerSeries& s) { return binomial_transform(s, 1); }

PowerSeries binomial_transform(const PowerSeries& s, long k) {
    int n = s.order();
    return geometric(k, n) * compose(s, geometric_shift(k, n));
}

PowerSeries catalan_transform(const PowerSeries& s) {
    return compose(s, catalan_series(s.order()).shift_up(1));
}

PowerSeries partial_sums(const PowerSeries& s) {
    std::vector<Rational> c(s.coeffs());
    for (std::size_t i = 1; i < c.size(); ++i) c[i] += c[i - 1];
    return PowerSeries(std::move(c));
}

IntSequence reciprocal_sequence(const IntSequence& a) {
    if (a.size() == 0) throw InsufficientTerms("empty sequence");
    if (a[0] != 1 && a[0] != -1) throw MathError("integer reciprocal needs a_0 = +-1, got " + a[0].get_str());
    return IntSequence::from_series(reciprocal(a.to_series()));
}

}  // namespace ctrans
