#include "ctrans/rational.hpp"

#include <cctype>

namespace ctrans {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

static bool valid_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

BigInt parse_bigint(const std::string& text) {
    std::string t = trim(text);
    if (!valid_integer_text(t)) throw ParseError("not an integer: '" + text + "'", 0);
    if (t[0] == '+') t = t.substr(1);
    return BigInt(t, 10);
}

Rational parse_rational(const std::string& text) {
    std::string t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(t));
    BigInt num = parse_bigint(t.substr(0, slash));
    BigInt den = parse_bigint(t.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + text + "'", 0);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

BigInt to_bigint(const Rational& r) {
    if (!is_integer(r)) throw MathError("non-integral value " + to_string(r));
    return r.get_num();
}

BigInt binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        BigInt out;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return out;
    }
    // binom(n, k) = (-1)^k binom(k - n - 1, k) for n < 0
    BigInt out = binomial(k - n - 1, k);
    return (k % 2) ? BigInt(-out) : out;
}

BigInt catalan_number(long n) { return binomial(2 * n, n) / (n + 1); }

BigInt ipow(long base, unsigned long e) {
    BigInt out;
    BigInt b(base);
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

}  // namespace ctrans
