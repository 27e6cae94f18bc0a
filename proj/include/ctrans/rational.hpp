#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ctrans {

using BigInt = mpz_class;
// GMP keeps mpq_class canonical: positive denominator, reduced, zero as 0/1.
using Rational = mpq_class;

class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientTerms : public MathError {
public:
    using MathError::MathError;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);
Rational parse_rational(const std::string& text);
BigInt parse_bigint(const std::string& text);

bool is_integer(const Rational& r);
BigInt to_bigint(const Rational& r);

// Generalized binomial: n may be negative, zero for k < 0.
BigInt binomial(long n, long k);
BigInt catalan_number(long n);
// 0^0 = 1, 0^n = 0 otherwise.
inline long zero_pow(long n) { return n == 0 ? 1 : 0; }
BigInt ipow(long base, unsigned long e);

}  // namespace ctrans
