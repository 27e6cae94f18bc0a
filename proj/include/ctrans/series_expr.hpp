#pragma once

#include "ctrans/power_series.hpp"

#include <memory>
#include <string>

namespace ctrans {

// Parse tree for generating-function expressions.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | atom ('^' unsigned)?
//   atom   := integer | 'x' | '(' expr ')' | 'sqrt' '(' expr ')' | 'c' '(' expr ')'
//
// c(u) is the Catalan generating function evaluated at u, which needs u(0) = 0.
class SeriesExpr {
public:
    enum class Kind { Integer, Var, Add, Sub, Mul, Div, Neg, Pow, Sqrt, Catalan };

    struct Node {
        Kind kind;
        std::size_t pos = 0;
        BigInt value;
        unsigned long exponent = 0;
        std::shared_ptr<const Node> lhs, rhs;
    };
    using NodePtr = std::shared_ptr<const Node>;

    explicit SeriesExpr(NodePtr root) : root_(std::move(root)) {}

    const Node& root() const { return *root_; }
    std::string to_string() const;

private:
    NodePtr root_;
};

SeriesExpr parse_gf(const std::string& text);

// Exact coefficients 0..order. Removable divisions by x^k are resolved by
// evaluating at a higher working order until every coefficient is known.
PowerSeries expand(const SeriesExpr& expr, int order);
PowerSeries expand(const std::string& text, int order);

}  // namespace ctrans
