#include "ctrans/series_expr.hpp"

#include <cctype>

namespace ctrans {

namespace {

using Kind = SeriesExpr::Kind;
using Node = SeriesExpr::Node;
using NodePtr = SeriesExpr::NodePtr;

NodePtr make(Kind k, std::size_t pos, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->pos = pos;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        skip();
        if (i_ == s_.size()) throw ParseError("empty expression", i_);
        NodePtr e = expr();
        skip();
        if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
        return e;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip();
        if (i_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", i_);
        if (s_[i_] != c) throw ParseError(std::string("expected '") + c + "', found '" + s_[i_] + "'", i_);
        ++i_;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            skip();
            std::size_t at = i_;
            if (accept('+')) lhs = make(Kind::Add, at, lhs, term());
            else if (accept('-')) lhs = make(Kind::Sub, at, lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            skip();
            std::size_t at = i_;
            if (accept('*')) lhs = make(Kind::Mul, at, lhs, factor());
            else if (accept('/')) lhs = make(Kind::Div, at, lhs, factor());
            else return lhs;
        }
    }

    NodePtr factor() {
        skip();
        std::size_t at = i_;
        if (accept('-')) return make(Kind::Neg, at, factor());
        NodePtr base = atom();
        skip();
        at = i_;
        if (accept('^')) {
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) throw ParseError("expected an unsigned integer exponent", start);
            auto n = std::make_shared<Node>();
            n->kind = Kind::Pow;
            n->pos = at;
            n->lhs = base;
            try {
                n->exponent = std::stoul(s_.substr(start, i_ - start));
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", start);
            }
            return n;
        }
        return base;
    }

    NodePtr atom() {
        skip();
        std::size_t at = i_;
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        char ch = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            auto n = std::make_shared<Node>();
            n->kind = Kind::Integer;
            n->pos = at;
            n->value = BigInt(s_.substr(at, i_ - at), 10);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string id = s_.substr(at, i_ - at);
            if (id == "x") return make(Kind::Var, at);
            if (id == "sqrt" || id == "c") {
                expect('(');
                NodePtr arg = expr();
                expect(')');
                return make(id == "sqrt" ? Kind::Sqrt : Kind::Catalan, at, arg);
            }
            throw ParseError("unknown identifier '" + id + "'", at);
        }
        if (ch == '(') {
            ++i_;
            NodePtr e = expr();
            expect(')');
            return e;
        }
        throw ParseError(std::string("unexpected '") + ch + "'", at);
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

int precedence(Kind k) {
    switch (k) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
    }
}

std::string print(const Node& n) {
    auto wrap = [](const Node& child, bool paren) {
        std::string s = print(child);
        return paren ? "(" + s + ")" : s;
    };
    int p = precedence(n.kind);
    switch (n.kind) {
    case Kind::Integer: return n.value.get_str();
    case Kind::Var: return "x";
    case Kind::Sqrt: return "sqrt(" + print(*n.lhs) + ")";
    case Kind::Catalan: return "c(" + print(*n.lhs) + ")";
    case Kind::Neg: return "-" + wrap(*n.lhs, precedence(n.lhs->kind) < p);
    case Kind::Pow: return wrap(*n.lhs, precedence(n.lhs->kind) <= p) + "^" + std::to_string(n.exponent);
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
        const char* op = n.kind == Kind::Add ? " + " : n.kind == Kind::Sub ? " - " : n.kind == Kind::Mul ? "*" : "/";
        bool right_paren = precedence(n.rhs->kind) <= p || n.rhs->kind == Kind::Neg;
        return wrap(*n.lhs, precedence(n.lhs->kind) < p) + op + wrap(*n.rhs, right_paren);
    }
    }
    return "";
}

std::string where(const Node& n) { return " (at position " + std::to_string(n.pos) + ")"; }

PowerSeries eval(const Node& n, int w) {
    switch (n.kind) {
    case Kind::Integer: return PowerSeries::constant(Rational(n.value), w);
    case Kind::Var: return PowerSeries::x(w);
    case Kind::Add: return eval(*n.lhs, w) + eval(*n.rhs, w);
    case Kind::Sub: return eval(*n.lhs, w) - eval(*n.rhs, w);
    case Kind::Mul: return eval(*n.lhs, w) * eval(*n.rhs, w);
    case Kind::Neg: return -eval(*n.lhs, w);
    case Kind::Pow: return pow(eval(*n.lhs, w), n.exponent);
    case Kind::Div: {
        PowerSeries num = eval(*n.lhs, w);
        PowerSeries den = eval(*n.rhs, w);
        try {
            return divide_removable(num, den);
        } catch (const MathError& e) {
            throw MathError(e.what() + where(n));
        }
    }
    case Kind::Sqrt: {
        PowerSeries a = eval(*n.lhs, w);
        try {
            return sqrt(a);
        } catch (const MathError& e) {
            throw MathError(e.what() + where(n));
        }
    }
    case Kind::Catalan: {
        PowerSeries u = eval(*n.lhs, w);
        if (u[0] != 0)
            throw MathError("c() needs an argument with zero constant term, got " + to_string(u[0]) + where(n));
        return compose(catalan_series(u.order()), u);
    }
    }
    throw MathError("unknown expression node");
}

}  // namespace

std::string SeriesExpr::to_string() const { return print(*root_); }

SeriesExpr parse_gf(const std::string& text) { return SeriesExpr(Parser(text).parse()); }

PowerSeries expand(const SeriesExpr& expr, int order) {
    if (order < 0) throw MathError("negative order");
    int w = order;
    for (int attempt = 0; attempt < 16; ++attempt) {
        PowerSeries s = eval(expr.root(), w);
        if (s.order() >= order) return s.truncate(order);
        w += order - s.order();
    }
    throw MathError("could not reach the requested order");
}

PowerSeries expand(const std::string& text, int order) { return expand(parse_gf(text), order); }

}  // namespace ctrans
