#pragma once

#include "ctrans/int_sequence.hpp"
#include "ctrans/power_series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ctrans {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Fraction-free elimination with row pivoting; every division is exact.
BigInt bareiss_determinant(IntMatrix m);
// Gaussian elimination over the rationals.
Rational rational_determinant(RatMatrix m);

// h_n = det(a_{i+j}) for 0 <= i,j <= n, n = 0..count-1. Needs 2*count-1 terms.
// Determinants are computed in parallel; the result does not depend on scheduling.
IntSequence hankel_transform(const IntSequence& a, int count);
IntSequence hankel_transform_serial(const IntSequence& a, int count);
// Uses Bareiss when every term is an integer, rational elimination otherwise.
std::vector<Rational> hankel_transform(const std::vector<Rational>& a, int count);

using Polynomial = std::vector<Rational>;

Polynomial poly_trim(Polynomial p);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(Polynomial a, Polynomial b);
// a / b, throwing if the remainder is nonzero.
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);
std::string poly_text(const Polynomial& p);

// p(x)/q(x) in lowest terms with q(0) = 1.
class RationalGF {
public:
    RationalGF(Polynomial num, Polynomial den);
    static RationalGF from_integers(const std::vector<long>& num, const std::vector<long>& den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    int num_degree() const { return static_cast<int>(num_.size()) - 1; }
    int den_degree() const { return static_cast<int>(den_.size()) - 1; }

    PowerSeries expand(int order) const;
    // "p(x) / q(x)" with explicit '*' and '^'; parse_gf reads it back.
    std::string to_text() const;

    friend bool operator==(const RationalGF& a, const RationalGF& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    Polynomial num_, den_;
};

struct FitResult {
    std::optional<RationalGF> gf;
    bool underdetermined = false;
    int holdout = 0;
    int terms = 0;
};

// Holdout size for a prefix of the given length: max(4, 25%).
int fit_holdout(int length);
// Smallest p/q (denominator degree first, then numerator degree) whose
// expansion reproduces every supplied term, holdout included.
FitResult fit_rational_gf(const std::vector<Rational>& h, int max_num_deg, int max_den_deg);
FitResult fit_rational_gf(const IntSequence& h, int max_num_deg, int max_den_deg);

// 1/(1 - b0 x + a1 x^2/(1 - b1 x + a2 x^2/(...))): plus sign before each x^2 block.
struct JFraction {
    std::vector<Rational> linear;     // b0, b1, ...
    std::vector<Rational> quadratic;  // a1, a2, ...; one fewer than linear

    int depth() const { return static_cast<int>(linear.size()); }
    // Coefficients below this index do not depend on deeper levels.
    int determined_terms() const { return 2 * depth(); }
};

PowerSeries jfraction_expand(const JFraction& j, int order);

}  // namespace ctrans
