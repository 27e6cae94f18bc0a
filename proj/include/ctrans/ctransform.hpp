#pragma once

#include "ctrans/int_sequence.hpp"
#include "ctrans/power_series.hpp"
#include "ctrans/riordan.hpp"

namespace ctrans {

// C(g) = 1 / (sqrt(1-4x) g(x c(x)^2)); output order equals input order.
PowerSeries c_transform(const PowerSeries& g);

// Central entries t(2n, n) of (1/(1-x), x/(1-x)) (g, x)^-1.
IntSequence c_transform_constructive(const PowerSeries& g);

// b_n = sum_k binom(2n, n-k) a*_k with a* the reciprocal sequence.
IntSequence c_transform_sequence(const IntSequence& a);

// (c, x c^2) applied to 1/((1-x) g).
PowerSeries c_transform_catalan_squared(const PowerSeries& g);

// (1, x c) applied to 1/((1-2x) g(x/(1-x))).
PowerSeries c_transform_catalan_matrix(const PowerSeries& g);

// g = 1 / (((1-x)/(1+x)) h(x/(1+x)^2)).
PowerSeries c_inverse(const PowerSeries& h);

// a*_n = sum_k (-1)^(n-k) (2n+0^n)/(n+k+0^(n+k)) binom(n+k, 2k) b_k.
IntSequence reciprocal_preimage_sequence(const IntSequence& b);

PowerSeries invert_alpha(const PowerSeries& f, long alpha);
PowerSeries binomial_transform(const PowerSeries& s);
// (1/(1-kx)) s(x/(1-kx)); k = -4 gives the 4th inverse binomial transform.
PowerSeries binomial_transform(const PowerSeries& s, long k);
PowerSeries catalan_transform(const PowerSeries& s);
PowerSeries partial_sums(const PowerSeries& s);
IntSequence reciprocal_sequence(const IntSequence& a);

}  // namespace ctrans
