#pragma once

#include "ctrans/rational.hpp"

#include <nlohmann/json.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace ctrans {

// Truncated power series: coefficients of x^0..x^order are known exactly.
class PowerSeries {
public:
    PowerSeries();
    explicit PowerSeries(std::vector<Rational> coeffs);
    PowerSeries(std::initializer_list<long> coeffs, int order);

    static PowerSeries zero(int order);
    static PowerSeries constant(const Rational& c, int order);
    static PowerSeries monomial(const Rational& c, int power, int order);
    static PowerSeries x(int order) { return monomial(1, 1, order); }
    // Polynomial given by its coefficients, zero padded up to order.
    static PowerSeries polynomial(const std::vector<Rational>& coeffs, int order);
    static PowerSeries from_integers(const std::vector<BigInt>& terms);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Index of the first nonzero coefficient, or order()+1 when all are zero.
    int valuation() const;
    bool is_integral() const;
    std::vector<BigInt> integer_coeffs() const;

    PowerSeries truncate(int order) const;
    // Multiply by x^k, keeping the order.
    PowerSeries shift_up(int k) const;
    // Divide by x^k; requires the low k coefficients to vanish. Order drops by k.
    PowerSeries shift_down(int k) const;

    PowerSeries operator-() const;
    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries& operator*=(const PowerSeries& o);
    PowerSeries& operator*=(const Rational& s);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
    friend PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    nlohmann::json to_json() const;
    static PowerSeries from_json(const nlohmann::json& j);
    std::string to_text() const;

private:
    std::vector<Rational> c_;
};

PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries reciprocal(const PowerSeries& b);
PowerSeries div(const PowerSeries& a, const PowerSeries& b);
// a / b where b may start at x^k, provided a's first k coefficients vanish.
PowerSeries divide_removable(const PowerSeries& a, const PowerSeries& b);
PowerSeries compose(const PowerSeries& a, const PowerSeries& u);
PowerSeries reversion(const PowerSeries& f);
PowerSeries sqrt(const PowerSeries& a);
PowerSeries pow(const PowerSeries& a, unsigned long e);
PowerSeries derivative(const PowerSeries& a);
bool same_prefix(const PowerSeries& a, const PowerSeries& b);

// The Catalan generating function c(x) = (1 - sqrt(1-4x)) / (2x).
PowerSeries catalan_series(int order);

}  // namespace ctrans
