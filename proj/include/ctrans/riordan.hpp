#pragma once

#include "ctrans/power_series.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace ctrans {

// Lower-triangular matrix, row n holding n+1 entries.
class TriangularMatrix {
public:
    TriangularMatrix() = default;
    explicit TriangularMatrix(std::vector<std::vector<Rational>> rows);
    static TriangularMatrix from_integers(const std::vector<std::vector<long>>& rows);

    int size() const { return static_cast<int>(rows_.size()); }
    const std::vector<Rational>& row(int n) const { return rows_[static_cast<std::size_t>(n)]; }
    const Rational& at(int n, int k) const { return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; }
    TriangularMatrix leading(int rows) const;

    // Throws MathError when an entry is not an integer.
    std::vector<std::vector<BigInt>> integer_rows() const;
    nlohmann::json to_json() const;
    std::string to_text() const;

    friend TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b);
    friend bool operator==(const TriangularMatrix& a, const TriangularMatrix& b) { return a.rows_ == b.rows_; }

private:
    std::vector<std::vector<Rational>> rows_;
};

// Riordan array (g, f) with g(0) = 1, f(0) = 0, f'(0) = 1, known to order N.
class RiordanArray {
public:
    RiordanArray(const PowerSeries& g, const PowerSeries& f);

    const PowerSeries& g() const { return g_; }
    const PowerSeries& f() const { return f_; }
    int order() const { return g_.order(); }

    // g f^k, computed once per k and shared between copies.
    PowerSeries column(int k) const;
    Rational element(int n, int k) const;
    TriangularMatrix matrix() const { return matrix(order() + 1); }
    TriangularMatrix matrix(int rows) const;
    RiordanArray truncate(int order) const;

    static RiordanArray identity(int order);
    static RiordanArray appell(const PowerSeries& g);
    static RiordanArray pascal(int order);
    static RiordanArray catalan(int order);
    static RiordanArray central_binomial(int order);   // (1/sqrt(1-4x), x c(x)^2)
    static RiordanArray catalan_squared(int order);    // (c(x), x c(x)^2)
    static RiordanArray inverse_central(int order);    // ((1-x)/(1+x), x/(1+x)^2)
    static RiordanArray binomial_partial(int order);   // (1/(1-2x), x/(1-x))

    friend bool operator==(const RiordanArray& a, const RiordanArray& b) { return a.g_ == b.g_ && a.f_ == b.f_; }

private:
    struct PowerCache {
        std::mutex mutex;
        std::vector<PowerSeries> columns;
    };

    PowerSeries g_, f_;
    std::shared_ptr<PowerCache> cache_;
};

RiordanArray operator*(const RiordanArray& a, const RiordanArray& b);
RiordanArray multiply(const RiordanArray& a, const RiordanArray& b);
RiordanArray inverse(const RiordanArray& a);
// Fundamental theorem: (g, f) h = g h(f).
PowerSeries apply(const RiordanArray& a, const PowerSeries& h);
// Matrix-vector form of apply, used to cross-check it.
PowerSeries apply_matrix(const RiordanArray& a, const PowerSeries& h);

// Entry (n, k) is t(2n-k, n); exposed to order floor(N/2).
RiordanArray vertical_half(const RiordanArray& a);
// Entry (n, k) is t(2n, n+k); exposed to order floor(N/2).
RiordanArray horizontal_half(const RiordanArray& a);

}  // namespace ctrans
