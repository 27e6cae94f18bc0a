#include "ctrans/hankel.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace ctrans {

BigInt bareiss_determinant(IntMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw MathError("determinant needs a square matrix");
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

Rational rational_determinant(RatMatrix m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[k], m[p]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational factor = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
        }
    }
    return det;
}

namespace {

void require_terms(std::size_t have, int count) {
    if (count < 0) throw MathError("negative Hankel count");
    std::size_t need = count == 0 ? 0 : static_cast<std::size_t>(2 * count - 1);
    if (have < need)
        throw InsufficientTerms("Hankel transform of " + std::to_string(count) + " terms needs " +
                                std::to_string(need) + " sequence terms, have " + std::to_string(have));
}

template <typename T>
std::vector<std::vector<T>> hankel_matrix(const std::vector<T>& a, int size) {
    std::vector<std::vector<T>> m(static_cast<std::size_t>(size), std::vector<T>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(i + j)];
    return m;
}

}  // namespace

IntSequence hankel_transform(const IntSequence& a, int count) {
    require_terms(a.size(), count);
    std::vector<BigInt> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
    for (int n = count - 1; n >= 0; --n) out[static_cast<std::size_t>(n)] = bareiss_determinant(hankel_matrix(a.terms, n + 1));
    return IntSequence(std::move(out));
}

IntSequence hankel_transform_serial(const IntSequence& a, int count) {
    require_terms(a.size(), count);
    std::vector<BigInt> out;
    for (int n = 0; n < count; ++n) out.push_back(bareiss_determinant(hankel_matrix(a.terms, n + 1)));
    return IntSequence(std::move(out));
}

std::vector<Rational> hankel_transform(const std::vector<Rational>& a, int count) {
    require_terms(a.size(), count);
    bool integral = std::all_of(a.begin(), a.end(), [](const Rational& r) { return is_integer(r); });
    if (integral) {
        std::vector<BigInt> z;
        for (const auto& r : a) z.push_back(r.get_num());
        IntSequence h = hankel_transform(IntSequence(std::move(z)), count);
        return std::vector<Rational>(h.terms.begin(), h.terms.end());
    }
    std::vector<Rational> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
    for (int n = count - 1; n >= 0; --n) out[static_cast<std::size_t>(n)] = rational_determinant(hankel_matrix(a, n + 1));
    return out;
}

Polynomial poly_trim(Polynomial p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(out);
}

static void poly_divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    Polynomial bb = poly_trim(b);
    if (bb.empty()) throw MathError("polynomial division by zero");
    r = poly_trim(a);
    q.assign(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0, Rational(0));
    while (!r.empty() && r.size() >= bb.size()) {
        std::size_t shift = r.size() - bb.size();
        Rational c = r.back() / bb.back();
        q[shift] = c;
        for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= c * bb[i];
        r = poly_trim(r);
    }
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Polynomial q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return {};
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b) {
    Polynomial q, r;
    poly_divmod(a, b, q, r);
    if (!r.empty()) throw MathError("polynomial division leaves a remainder");
    return poly_trim(q);
}

std::string poly_text(const Polynomial& p) {
    Polynomial t = poly_trim(p);
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < t.size(); ++d) {
        if (t[d] == 0) continue;
        Rational mag = abs(t[d]);
        if (first) os << (t[d] < 0 ? "-" : "");
        else os << (t[d] < 0 ? " - " : " + ");
        first = false;
        if (d == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) os << to_string(mag) << "*";
        os << "x";
        if (d > 1) os << "^" << d;
    }
    return os.str();
}

RationalGF::RationalGF(Polynomial num, Polynomial den) {
    num = poly_trim(std::move(num));
    den = poly_trim(std::move(den));
    if (den.empty() || den[0] == 0) throw MathError("rational generating function needs q(0) != 0");
    Polynomial g = poly_gcd(num, den);
    if (!num.empty() && g.size() > 1) {
        num = poly_div_exact(num, g);
        den = poly_div_exact(den, g);
    }
    if (num.empty()) den = {Rational(1)};
    Rational d0 = den[0];
    for (auto& c : num) c /= d0;
    for (auto& c : den) c /= d0;
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalGF RationalGF::from_integers(const std::vector<long>& num, const std::vector<long>& den) {
    Polynomial p(num.begin(), num.end()), q(den.begin(), den.end());
    return RationalGF(p, q);
}

PowerSeries RationalGF::expand(int order) const {
    return div(PowerSeries::polynomial(num_, order), PowerSeries::polynomial(den_, order));
}

std::string RationalGF::to_text() const { return "(" + poly_text(num_) + ") / (" + poly_text(den_) + ")"; }

int fit_holdout(int length) { return std::max(4, length / 4); }

namespace {

// Solves the consistent system A q = rhs over the rationals. Free unknowns are
// set to zero. Returns false when inconsistent.
bool solve_linear(RatMatrix a, std::vector<Rational> rhs, std::vector<Rational>& x, bool& underdetermined) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : x.size();
    x.assign(cols, Rational(0));
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return false;
    underdetermined = r < cols;
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return true;
}

}  // namespace

FitResult fit_rational_gf(const std::vector<Rational>& h, int max_num_deg, int max_den_deg) {
    int length = static_cast<int>(h.size());
    FitResult result;
    result.holdout = fit_holdout(length);
    result.terms = length;
    if (max_num_deg < 0 || max_den_deg < 0) throw MathError("degree bounds must be nonnegative");
    int train = length - result.holdout;
    if (train < max_num_deg + max_den_deg + 1)
        throw InsufficientTerms("fit with degrees (" + std::to_string(max_num_deg) + "," + std::to_string(max_den_deg) +
                                ") needs " + std::to_string(max_num_deg + max_den_deg + 1 + result.holdout) +
                                " terms, have " + std::to_string(length));
    auto at = [&](int i) { return i < 0 ? Rational(0) : h[static_cast<std::size_t>(i)]; };
    for (int d2 = 0; d2 <= max_den_deg; ++d2) {
        for (int d1 = 0; d1 <= max_num_deg; ++d1) {
            // sum_{j=1..d2} q_j h_{n-j} = -h_n for d1 < n < train
            RatMatrix a;
            std::vector<Rational> rhs;
            for (int n = d1 + 1; n < train; ++n) {
                std::vector<Rational> row;
                for (int j = 1; j <= d2; ++j) row.push_back(at(n - j));
                a.push_back(std::move(row));
                rhs.push_back(-at(n));
            }
            std::vector<Rational> q(static_cast<std::size_t>(d2));
            bool under = false;
            if (d2 > 0) {
                if (!solve_linear(a, rhs, q, under)) continue;
            } else {
                bool ok = std::all_of(rhs.begin(), rhs.end(), [](const Rational& r) { return r == 0; });
                if (!ok) continue;
            }
            Polynomial den{Rational(1)};
            den.insert(den.end(), q.begin(), q.end());
            Polynomial num(static_cast<std::size_t>(d1) + 1, Rational(0));
            for (int i = 0; i <= d1; ++i)
                for (int j = 0; j <= std::min(i, d2); ++j) num[static_cast<std::size_t>(i)] += den[static_cast<std::size_t>(j)] * at(i - j);
            PowerSeries e = div(PowerSeries::polynomial(num, length - 1), PowerSeries::polynomial(den, length - 1));
            if (e.coeffs() != h) continue;
            result.gf = RationalGF(num, den);
            result.underdetermined = under;
            return result;
        }
    }
    return result;
}

FitResult fit_rational_gf(const IntSequence& h, int max_num_deg, int max_den_deg) {
    return fit_rational_gf(std::vector<Rational>(h.terms.begin(), h.terms.end()), max_num_deg, max_den_deg);
}

PowerSeries jfraction_expand(const JFraction& j, int order) {
    if (j.depth() < 1) throw MathError("J-fraction needs depth at least 1");
    if (static_cast<int>(j.quadratic.size()) != j.depth() - 1)
        throw MathError("J-fraction needs exactly depth-1 quadratic coefficients");
    auto level = [&](int i) {
        return PowerSeries::constant(1, order) - j.linear[static_cast<std::size_t>(i)] * PowerSeries::x(order);
    };
    PowerSeries t = level(j.depth() - 1);
    for (int i = j.depth() - 2; i >= 0; --i) {
        PowerSeries x2 = PowerSeries::monomial(j.quadratic[static_cast<std::size_t>(i)], 2, order);
        t = level(i) + div(x2, t);
    }
    return reciprocal(t);
}

}  // namespace ctrans
