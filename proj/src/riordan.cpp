#include "ctrans/riordan.hpp"

#include <algorithm>
#include <sstream>

namespace ctrans {

TriangularMatrix::TriangularMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    for (std::size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n + 1) throw MathError("row " + std::to_string(n) + " must have " + std::to_string(n + 1) + " entries");
}

TriangularMatrix TriangularMatrix::from_integers(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        std::vector<Rational> row;
        for (std::size_t k = 0; k <= n && k < rows[n].size(); ++k) row.emplace_back(rows[n][k]);
        r.push_back(std::move(row));
    }
    return TriangularMatrix(std::move(r));
}

TriangularMatrix TriangularMatrix::leading(int rows) const {
    if (rows > size()) throw MathError("matrix has only " + std::to_string(size()) + " rows");
    return TriangularMatrix(std::vector<std::vector<Rational>>(rows_.begin(), rows_.begin() + rows));
}

std::vector<std::vector<BigInt>> TriangularMatrix::integer_rows() const {
    std::vector<std::vector<BigInt>> out;
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        std::vector<BigInt> row;
        for (std::size_t k = 0; k < rows_[n].size(); ++k) {
            if (!is_integer(rows_[n][k]))
                throw MathError("matrix entry (" + std::to_string(n) + "," + std::to_string(k) +
                                ") is not an integer: " + to_string(rows_[n][k]));
            row.push_back(rows_[n][k].get_num());
        }
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::json TriangularMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : integer_rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(r);
    }
    return rows;
}

std::string TriangularMatrix::to_text() const {
    auto rows = integer_rows();
    std::size_t n = rows.size();
    std::vector<std::size_t> width(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t w = k <= i ? rows[i][k].get_str().size() : 1;
            width[k] = std::max(width[k], w);
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            std::string s = k <= i ? rows[i][k].get_str() : "0";
            if (k) os << ' ';
            os << std::string(width[k] - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b) {
    int n = std::min(a.size(), b.size());
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Rational(0));
        for (int k = 0; k <= i; ++k) {
            Rational acc = 0;
            for (int j = k; j <= i; ++j) acc += a.at(i, j) * b.at(j, k);
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = acc;
        }
    }
    return TriangularMatrix(std::move(out));
}

RiordanArray::RiordanArray(const PowerSeries& g, const PowerSeries& f) {
    int n = std::min(g.order(), f.order());
    g_ = g.truncate(n);
    f_ = f.truncate(n);
    if (g_[0] != 1) throw MathError("Riordan array needs g(0) = 1, got " + to_string(g_[0]));
    if (f_[0] != 0) throw MathError("Riordan array needs f(0) = 0, got " + to_string(f_[0]));
    if (n >= 1 && f_[1] != 1) throw MathError("Riordan array needs f'(0) = 1, got " + to_string(f_[1]));
    cache_ = std::make_shared<PowerCache>();
    cache_->columns.push_back(g_);
}

PowerSeries RiordanArray::column(int k) const {
    if (k < 0) throw MathError("negative column index");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& cols = cache_->columns;
    while (static_cast<int>(cols.size()) <= k) cols.push_back(cols.back() * f_);
    return cols[static_cast<std::size_t>(k)];
}

Rational RiordanArray::element(int n, int k) const {
    if (k < 0 || k > n || n > order())
        throw MathError("element (" + std::to_string(n) + "," + std::to_string(k) + ") outside 0 <= k <= n <= " +
                        std::to_string(order()));
    return column(k)[n];
}

TriangularMatrix RiordanArray::matrix(int rows) const {
    if (rows > order() + 1) throw MathError("array of order " + std::to_string(order()) + " has only " +
                                            std::to_string(order() + 1) + " rows");
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(rows));
    for (int n = 0; n < rows; ++n) out[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < rows; ++k) {
        PowerSeries col = column(k);
        for (int n = k; n < rows; ++n) out[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = col[n];
    }
    return TriangularMatrix(std::move(out));
}

RiordanArray RiordanArray::truncate(int n) const { return RiordanArray(g_.truncate(n), f_.truncate(n)); }

RiordanArray RiordanArray::identity(int order) {
    return RiordanArray(PowerSeries::constant(1, order), PowerSeries::x(order));
}

RiordanArray RiordanArray::appell(const PowerSeries& g) { return RiordanArray(g, PowerSeries::x(g.order())); }

RiordanArray RiordanArray::pascal(int order) {
    std::vector<Rational> g(static_cast<std::size_t>(order) + 1, Rational(1));
    std::vector<Rational> f = g;
    f[0] = 0;
    return RiordanArray(PowerSeries(g), PowerSeries(f));
}

RiordanArray RiordanArray::catalan(int order) {
    return RiordanArray(PowerSeries::constant(1, order), catalan_series(order).shift_up(1));
}

// x c(x)^2 = c(x) - 1
static PowerSeries x_c_squared(int order) {
    PowerSeries c = catalan_series(order);
    return c - PowerSeries::constant(1, order);
}

RiordanArray RiordanArray::central_binomial(int order) {
    std::vector<Rational> g;
    for (int n = 0; n <= order; ++n) g.emplace_back(binomial(2 * n, n));
    return RiordanArray(PowerSeries(g), x_c_squared(order));
}

RiordanArray RiordanArray::catalan_squared(int order) {
    return RiordanArray(catalan_series(order), x_c_squared(order));
}

RiordanArray RiordanArray::inverse_central(int order) {
    std::vector<Rational> g, f;
    for (int n = 0; n <= order; ++n) {
        g.emplace_back(n == 0 ? 1 : (n % 2 ? -2 : 2));
        f.emplace_back(n == 0 ? 0 : (n % 2 ? n : -n));
    }
    return RiordanArray(PowerSeries(g), PowerSeries(f));
}

RiordanArray RiordanArray::binomial_partial(int order) {
    std::vector<Rational> g, f;
    for (int n = 0; n <= order; ++n) {
        g.emplace_back(ipow(2, static_cast<unsigned long>(n)));
        f.emplace_back(n == 0 ? 0 : 1);
    }
    return RiordanArray(PowerSeries(g), PowerSeries(f));
}

RiordanArray operator*(const RiordanArray& a, const RiordanArray& b) {
    return RiordanArray(a.g() * compose(b.g(), a.f()), compose(b.f(), a.f()));
}

RiordanArray multiply(const RiordanArray& a, const RiordanArray& b) { return a * b; }

RiordanArray inverse(const RiordanArray& a) {
    if (a.order() == 0) return a;
    PowerSeries fbar = reversion(a.f());
    return RiordanArray(reciprocal(compose(a.g(), fbar)), fbar);
}

PowerSeries apply(const RiordanArray& a, const PowerSeries& h) {
    int n = std::min(a.order(), h.order());
    return a.g().truncate(n) * compose(h.truncate(n), a.f().truncate(n));
}

PowerSeries apply_matrix(const RiordanArray& a, const PowerSeries& h) {
    int n = std::min(a.order(), h.order());
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
        if (h[k] == 0) continue;
        PowerSeries col = a.column(k);
        for (int i = k; i <= n; ++i) out[static_cast<std::size_t>(i)] += col[i] * h[k];
    }
    return PowerSeries(std::move(out));
}

namespace {

struct HalfData {
    PowerSeries phi;      // Rev(x^2 / F)
    PowerSeries multiplier;  // x phi' G(phi) / phi
};

HalfData half_data(const RiordanArray& a) {
    int n = a.order();
    // x^2 / F = x / (F/x), known to order n
    PowerSeries r = reciprocal(a.f().shift_down(1));
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i) + 1] = r[i];
    PowerSeries phi = reversion(PowerSeries(std::move(c)));
    PowerSeries psi = phi.shift_down(1);
    PowerSeries mult = div(derivative(phi) * compose(a.g(), phi), psi);
    return {phi, mult};
}

}  // namespace

RiordanArray vertical_half(const RiordanArray& a) {
    int half = a.order() / 2;
    if (half == 0) return RiordanArray::identity(0);
    HalfData d = half_data(a);
    return RiordanArray(d.multiplier.truncate(half), d.phi.truncate(half));
}

RiordanArray horizontal_half(const RiordanArray& a) {
    int half = a.order() / 2;
    if (half == 0) return RiordanArray::identity(0);
    HalfData d = half_data(a);
    return RiordanArray(d.multiplier.truncate(half), compose(a.f(), d.phi).truncate(half));
}

}  // namespace ctrans
