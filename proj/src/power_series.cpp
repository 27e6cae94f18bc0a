#include "ctrans/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace ctrans {

PowerSeries::PowerSeries() : c_(1, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw MathError("power series needs at least one coefficient");
}

PowerSeries::PowerSeries(std::initializer_list<long> coeffs, int order)
    : c_(static_cast<std::size_t>(order) + 1, Rational(0)) {
    if (order < 0) throw MathError("negative order");
    std::size_t i = 0;
    for (long v : coeffs) {
        if (i > static_cast<std::size_t>(order)) break;
        c_[i++] = v;
    }
}

PowerSeries PowerSeries::zero(int order) {
    if (order < 0) throw MathError("negative order");
    return PowerSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0)));
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s = zero(order);
    s.c_[0] = c;
    return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, int power, int order) {
    PowerSeries s = zero(order);
    if (power <= order) s.c_[static_cast<std::size_t>(power)] = c;
    return s;
}

PowerSeries PowerSeries::polynomial(const std::vector<Rational>& coeffs, int order) {
    PowerSeries s = zero(order);
    for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(order); ++i)
        s.c_[i] = coeffs[i];
    return s;
}

PowerSeries PowerSeries::from_integers(const std::vector<BigInt>& terms) {
    std::vector<Rational> c;
    c.reserve(terms.size());
    for (const auto& t : terms) c.emplace_back(t);
    return PowerSeries(std::move(c));
}

int PowerSeries::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return order() + 1;
}

bool PowerSeries::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return is_integer(r); });
}

std::vector<BigInt> PowerSeries::integer_coeffs() const {
    std::vector<BigInt> out;
    out.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!is_integer(c_[i]))
            throw MathError("coefficient " + std::to_string(i) + " is not an integer: " +
                            to_string(c_[i]));
        out.push_back(c_[i].get_num());
    }
    return out;
}

PowerSeries PowerSeries::truncate(int n) const {
    if (n > order()) throw MathError("cannot truncate to a higher order");
    if (n < 0) throw MathError("negative order");
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + n + 1));
}

PowerSeries PowerSeries::shift_up(int k) const {
    PowerSeries s = zero(order());
    for (int i = k; i <= order(); ++i) s.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i - k)];
    return s;
}

PowerSeries PowerSeries::shift_down(int k) const {
    if (k > order()) throw MathError("shift exceeds known coefficients");
    for (int i = 0; i < k; ++i)
        if (c_[static_cast<std::size_t>(i)] != 0)
            throw MathError("coefficient of x^" + std::to_string(i) + " is nonzero, cannot divide by x^" +
                            std::to_string(k));
    return PowerSeries(std::vector<Rational>(c_.begin() + k, c_.end()));
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries s = *this;
    for (auto& v : s.c_) v = -v;
    return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    int n = std::min(order(), o.order());
    c_.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c_[static_cast<std::size_t>(i)] += o.c_[static_cast<std::size_t>(i)];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    int n = std::min(order(), o.order());
    c_.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c_[static_cast<std::size_t>(i)] -= o.c_[static_cast<std::size_t>(i)];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& o) {
    *this = *this * o;
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
    int va = a.valuation(), vb = b.valuation();
    for (int i = va; i <= n; ++i) {
        const Rational& ai = a[i];
        if (ai == 0) continue;
        for (int j = vb; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += ai * b[j];
    }
    return PowerSeries(std::move(out));
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }
PowerSeries add(const PowerSeries& a, const PowerSeries& b) { return a + b; }
PowerSeries sub(const PowerSeries& a, const PowerSeries& b) { return a - b; }

PowerSeries reciprocal(const PowerSeries& b) {
    return div(PowerSeries::constant(1, b.order()), b);
}

PowerSeries div(const PowerSeries& a, const PowerSeries& b) {
    if (b[0] == 0) throw MathError("division by a series with zero constant term");
    int n = std::min(a.order(), b.order());
    std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
    Rational inv = 1 / b[0];
    for (int k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (int j = 1; j <= k; ++j) acc -= b[j] * q[static_cast<std::size_t>(k - j)];
        q[static_cast<std::size_t>(k)] = acc * inv;
    }
    return PowerSeries(std::move(q));
}

PowerSeries divide_removable(const PowerSeries& a, const PowerSeries& b) {
    int k = b.valuation();
    if (k == 0) return div(a, b);
    int n = std::min(a.order(), b.order());
    if (k > n) throw MathError("division by a series that vanishes to the known order");
    for (int i = 0; i < k; ++i)
        if (a[i] != 0)
            throw MathError("division by a series with zero constant term: numerator does not vanish to order " +
                            std::to_string(k));
    return div(a.truncate(n).shift_down(k), b.truncate(n).shift_down(k));
}

PowerSeries compose(const PowerSeries& a, const PowerSeries& u) {
    if (u[0] != 0) throw MathError("composition needs an inner series with zero constant term");
    int n = std::min(a.order(), u.order());
    PowerSeries inner = u.truncate(n);
    PowerSeries r = PowerSeries::constant(a[n], n);
    for (int i = n - 1; i >= 0; --i) {
        r = r * inner;
        r += PowerSeries::constant(a[i], n);
    }
    return r;
}

PowerSeries reversion(const PowerSeries& f) {
    int n = f.order();
    if (n < 1) throw MathError("reversion needs at least the linear coefficient");
    if (f[0] != 0) throw MathError("reversion needs f(0) = 0, got " + to_string(f[0]));
    if (f[1] != 1) throw MathError("reversion needs f'(0) = 1, got " + to_string(f[1]));
    // Lagrange inversion: [x^k] g = (1/k) [x^(k-1)] (x/f)^k.
    PowerSeries p = reciprocal(f.shift_down(1));
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
    PowerSeries pk = PowerSeries::constant(1, n - 1);
    for (int k = 1; k <= n; ++k) {
        pk = pk * p;
        out[static_cast<std::size_t>(k)] = pk[k - 1] / k;
    }
    return PowerSeries(std::move(out));
}

static bool rational_sqrt(const Rational& v, Rational& root) {
    if (v < 0) return false;
    BigInt num = v.get_num(), den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    return true;
}

PowerSeries sqrt(const PowerSeries& a) {
    int v = a.valuation();
    if (v > a.order()) return PowerSeries::zero(a.order());
    if (v > 0) {
        if (v % 2) throw MathError("square root of a series with odd valuation");
        PowerSeries inner = sqrt(a.shift_down(v));
        PowerSeries out = PowerSeries::zero(a.order() - v / 2);
        std::vector<Rational> c = out.coeffs();
        for (int i = 0; i <= inner.order() && i + v / 2 < static_cast<int>(c.size()); ++i)
            c[static_cast<std::size_t>(i + v / 2)] = inner[i];
        return PowerSeries(std::move(c));
    }
    Rational s0;
    if (!rational_sqrt(a[0], s0))
        throw MathError("square root needs a constant term that is a rational square, got " + to_string(a[0]));
    int n = a.order();
    std::vector<Rational> s(static_cast<std::size_t>(n) + 1);
    s[0] = s0;
    Rational inv = 1 / (2 * s0);
    for (int k = 1; k <= n; ++k) {
        Rational acc = a[k];
        for (int j = 1; j < k; ++j) acc -= s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
        s[static_cast<std::size_t>(k)] = acc * inv;
    }
    return PowerSeries(std::move(s));
}

PowerSeries pow(const PowerSeries& a, unsigned long e) {
    PowerSeries result = PowerSeries::constant(1, a.order());
    PowerSeries base = a;
    while (e) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

PowerSeries derivative(const PowerSeries& a) {
    if (a.order() < 1) throw MathError("derivative needs order at least 1");
    std::vector<Rational> d(static_cast<std::size_t>(a.order()));
    for (int i = 1; i <= a.order(); ++i) d[static_cast<std::size_t>(i - 1)] = a[i] * i;
    return PowerSeries(std::move(d));
}

bool same_prefix(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

PowerSeries catalan_series(int order) {
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) c.emplace_back(catalan_number(n));
    return PowerSeries(std::move(c));
}

nlohmann::json PowerSeries::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& v : c_) coeffs.push_back(to_string(v));
    return {{"order", order()}, {"coeffs", coeffs}};
}

PowerSeries PowerSeries::from_json(const nlohmann::json& j) {
    std::vector<Rational> c;
    for (const auto& v : j.at("coeffs")) c.push_back(parse_rational(v.is_string() ? v.get<std::string>() : v.dump()));
    PowerSeries s(std::move(c));
    if (j.contains("order") && j.at("order").get<int>() != s.order())
        throw MathError("series JSON order does not match coefficient count");
    return s;
}

std::string PowerSeries::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(c_[i]);
    }
    return os.str();
}

}  // namespace ctrans
