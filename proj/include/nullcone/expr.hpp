#pragma once

// A small closed-form expression language in the single parameter `t`.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   integer := ['-'] digits | '(' ['-'] digits ')'
//   primary := number | 't' | 'pi' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | sinh | cosh | exp | sqrt
//
// Error offsets are 1-based byte positions into the source text.

#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>

#include "nullcone/error.hpp"
#include "nullcone/format.hpp"
#include "nullcone/jet.hpp"

namespace nullcone {

enum class Op { Const, Param, Add, Sub, Mul, Div, Neg, Pow, Sin, Cos, Sinh, Cosh, Exp, Sqrt };

inline std::string_view op_name(Op op) {
    switch (op) {
    case Op::Const: return "const";
    case Op::Param: return "t";
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Neg: return "neg";
    case Op::Pow: return "^";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Sinh: return "sinh";
    case Op::Cosh: return "cosh";
    case Op::Exp: return "exp";
    case Op::Sqrt: return "sqrt";
    }
    return "?";
}

/// Immutable expression tree; copies share nodes.
class Expr {
public:
    struct Node {
        Op op = Op::Const;
        double value = 0;   // Const
        int exponent = 0;   // Pow
        std::size_t offset = 0;
        std::shared_ptr<const Node> lhs, rhs;
    };

    Expr() = default;

    static Expr constant(double v, std::size_t offset = 0) {
        return Expr(std::make_shared<const Node>(Node{Op::Const, v, 0, offset, nullptr, nullptr}));
    }
    static Expr param(std::size_t offset = 0) {
        return Expr(std::make_shared<const Node>(Node{Op::Param, 0, 0, offset, nullptr, nullptr}));
    }
    static Expr binary(Op op, Expr a, Expr b, std::size_t offset = 0) {
        return Expr(std::make_shared<const Node>(Node{op, 0, 0, offset, a.node_, b.node_}));
    }
    static Expr unary(Op op, Expr a, std::size_t offset = 0) {
        return Expr(std::make_shared<const Node>(Node{op, 0, 0, offset, a.node_, nullptr}));
    }
    static Expr power(Expr base, int exponent, std::size_t offset = 0) {
        return Expr(std::make_shared<const Node>(Node{Op::Pow, 0, exponent, offset, base.node_, nullptr}));
    }

    bool empty() const noexcept { return !node_; }
    Op op() const { return node_->op; }
    double value() const { return node_->value; }
    int exponent() const { return node_->exponent; }
    std::size_t offset() const { return node_->offset; }
    Expr lhs() const { return Expr(node_->lhs); }
    Expr rhs() const { return Expr(node_->rhs); }

    /// Structural equality; source offsets are ignored.
    friend bool operator==(const Expr& a, const Expr& b) { return equal(a.node_.get(), b.node_.get()); }

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static bool equal(const Node* a, const Node* b) {
        if (a == b) return true;
        if (!a || !b) return false;
        if (a->op != b->op) return false;
        if (a->op == Op::Const) return a->value == b->value;
        if (a->op == Op::Pow && a->exponent != b->exponent) return false;
        return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
    }

    std::shared_ptr<const Node> node_;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr parse() {
        skip_ws();
        if (pos_ == src_.size()) throw SyntaxError("empty expression", pos_ + 1);
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError(std::string("unexpected '") + src_[pos_] + "'", pos_ + 1);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= src_.size())
                throw SyntaxError(std::string("expected '") + c + "' before end of input", pos_ + 1);
            throw SyntaxError(std::string("expected '") + c + "'", pos_ + 1);
        }
    }

    Expr parse_expr() {
        Expr lhs = parse_term();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_ + 1;
            if (accept('+')) lhs = Expr::binary(Op::Add, lhs, parse_term(), at);
            else if (accept('-')) lhs = Expr::binary(Op::Sub, lhs, parse_term(), at);
            else return lhs;
        }
    }

    Expr parse_term() {
        Expr lhs = parse_unary();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_ + 1;
            if (accept('*')) lhs = Expr::binary(Op::Mul, lhs, parse_unary(), at);
            else if (accept('/')) lhs = Expr::binary(Op::Div, lhs, parse_unary(), at);
            else return lhs;
        }
    }

    Expr parse_unary() {
        skip_ws();
        const std::size_t at = pos_ + 1;
        if (accept('-')) return Expr::unary(Op::Neg, parse_unary(), at);
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        skip_ws();
        const std::size_t at = pos_ + 1;
        if (accept('^')) return Expr::power(base, parse_integer(), at);
        return base;
    }

    int parse_integer() {
        skip_ws();
        const bool paren = accept('(');
        skip_ws();
        const bool negative = accept('-');
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("exponent must be an integer literal", pos_ + 1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (ec != std::errc{}) throw SyntaxError("exponent out of range", start + 1);
        if (paren) expect(')');
        return negative ? -v : v;
    }

    Expr parse_primary() {
        skip_ws();
        const std::size_t at = pos_ + 1;
        if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_ + 1);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            const std::string_view id = src_.substr(start, pos_ - start);
            if (id == "t") return Expr::param(at);
            if (id == "pi") return Expr::constant(std::numbers::pi, at);
            Op fn;
            if (id == "sin") fn = Op::Sin;
            else if (id == "cos") fn = Op::Cos;
            else if (id == "sinh") fn = Op::Sinh;
            else if (id == "cosh") fn = Op::Cosh;
            else if (id == "exp") fn = Op::Exp;
            else if (id == "sqrt") fn = Op::Sqrt;
            else throw UnknownIdentifier(std::string(id), at);
            expect('(');
            Expr arg = parse_expr();
            expect(')');
            return Expr::unary(fn, arg, at);
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", at);
    }

    Expr parse_number() {
        const std::size_t start = pos_;
        double v = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v);
        if (ec != std::errc{} || ptr == src_.data() + pos_) throw SyntaxError("malformed number", start + 1);
        pos_ = static_cast<std::size_t>(ptr - src_.data());
        return Expr::constant(v, start + 1);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

template <class T>
BasicJet<T> eval_node(const Expr& e, const BasicJet<T>& t) {
    const int k = t.order();
    auto where = [&] { return "'" + std::string(op_name(e.op())) + "' (offset " + std::to_string(e.offset()) + ")"; };
    switch (e.op()) {
    case Op::Const: return BasicJet<T>::constant(e.value(), k);
    case Op::Param: return t;
    case Op::Add: return eval_node(e.lhs(), t) + eval_node(e.rhs(), t);
    case Op::Sub: return eval_node(e.lhs(), t) - eval_node(e.rhs(), t);
    case Op::Mul: return eval_node(e.lhs(), t) * eval_node(e.rhs(), t);
    case Op::Neg: return -eval_node(e.lhs(), t);
    case Op::Div: {
        auto num = eval_node(e.lhs(), t);
        auto den = eval_node(e.rhs(), t);
        if (den.value() == T(0)) throw DomainError("division by zero", where());
        return num / den;
    }
    case Op::Pow: {
        auto b = eval_node(e.lhs(), t);
        if (e.exponent() < 0 && b.value() == T(0)) throw DomainError("negative power of zero", where());
        return pow(b, e.exponent());
    }
    case Op::Sin: return sin(eval_node(e.lhs(), t));
    case Op::Cos: return cos(eval_node(e.lhs(), t));
    case Op::Sinh: return sinh(eval_node(e.lhs(), t));
    case Op::Cosh: return cosh(eval_node(e.lhs(), t));
    case Op::Exp: return exp(eval_node(e.lhs(), t));
    case Op::Sqrt: {
        auto a = eval_node(e.lhs(), t);
        if (a.value() < T(0)) throw DomainError("sqrt of negative value", where());
        if (a.value() == T(0) && k > 0) throw DomainError("sqrt is not differentiable at zero", where());
        return sqrt(a);
    }
    }
    throw DomainError("unknown node");
}

inline int precedence(Op op) {
    switch (op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    default: return 5;
    }
}

inline void print_node(const Expr& e, std::string& out) {
    auto child = [&](const Expr& c, int min_prec) {
        const bool paren = precedence(c.op()) < min_prec || (c.op() == Op::Const && c.value() < 0);
        if (paren) out += '(';
        print_node(c, out);
        if (paren) out += ')';
    };
    switch (e.op()) {
    case Op::Const: out += format_double(e.value()); return;
    case Op::Param: out += 't'; return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
        const int p = precedence(e.op());
        child(e.lhs(), p);
        out += ' ';
        out += op_name(e.op());
        out += ' ';
        // Right operands bind one level tighter so a - (b - c) keeps its shape.
        child(e.rhs(), p + 1);
        return;
    }
    case Op::Neg:
        out += '-';
        child(e.lhs(), precedence(Op::Neg));
        return;
    case Op::Pow:
        child(e.lhs(), precedence(Op::Pow) + 1);
        out += '^';
        if (e.exponent() < 0) out += "(" + std::to_string(e.exponent()) + ")";
        else out += std::to_string(e.exponent());
        return;
    default:
        out += op_name(e.op());
        out += '(';
        print_node(e.lhs(), out);
        out += ')';
        return;
    }
}

} // namespace detail

inline Expr parse(std::string_view src) { return detail::Parser(src).parse(); }

inline std::string to_string(const Expr& e) {
    std::string out;
    detail::print_node(e, out);
    return out;
}

/// Exact derivatives 0..order of `e` at `t` by truncated Taylor arithmetic.
template <class T = double>
BasicJet<T> jet_eval(const Expr& e, T t, int order) {
    if (order < 0 || order > kMaxJetOrder)
        throw InvalidConfig("jet order must lie in [0, " + std::to_string(kMaxJetOrder) + "]");
    if (!std::isfinite(static_cast<double>(t))) throw InvalidInput("non-finite evaluation point");
    auto r = detail::eval_node(e, BasicJet<T>::variable(t, order));
    if (!r.all_finite()) throw DomainError("non-finite result", "t=" + format_double(static_cast<double>(t)));
    return r;
}

/// Composes `e` with an inner jet (e.g. evaluates e(u(t)) as a jet in t).
template <class T>
BasicJet<T> jet_compose(const Expr& e, const BasicJet<T>& inner) {
    return detail::eval_node(e, inner);
}

namespace detail {

template <class T>
T eval_value(const Expr& e, T t) {
    auto where = [&] { return "'" + std::string(op_name(e.op())) + "' (offset " + std::to_string(e.offset()) + ")"; };
    switch (e.op()) {
    case Op::Const: return T(e.value());
    case Op::Param: return t;
    case Op::Add: return eval_value(e.lhs(), t) + eval_value(e.rhs(), t);
    case Op::Sub: return eval_value(e.lhs(), t) - eval_value(e.rhs(), t);
    case Op::Mul: return eval_value(e.lhs(), t) * eval_value(e.rhs(), t);
    case Op::Neg: return -eval_value(e.lhs(), t);
    case Op::Div: {
        const T den = eval_value(e.rhs(), t);
        if (den == 0) throw DomainError("division by zero", where());
        return eval_value(e.lhs(), t) / den;
    }
    case Op::Pow: {
        const T b = eval_value(e.lhs(), t);
        if (e.exponent() < 0 && b == 0) throw DomainError("negative power of zero", where());
        return std::pow(b, T(e.exponent()));
    }
    case Op::Sin: return std::sin(eval_value(e.lhs(), t));
    case Op::Cos: return std::cos(eval_value(e.lhs(), t));
    case Op::Sinh: return std::sinh(eval_value(e.lhs(), t));
    case Op::Cosh: return std::cosh(eval_value(e.lhs(), t));
    case Op::Exp: return std::exp(eval_value(e.lhs(), t));
    case Op::Sqrt: {
        const T a = eval_value(e.lhs(), t);
        if (a < 0) throw DomainError("sqrt of negative value", where());
        return std::sqrt(a);
    }
    }
    throw DomainError("unknown node");
}


} // namespace detail

/// Plain scalar evaluation; shares no code with the jet path.
template <class T = double>
T evaluate(const Expr& e, T t) {
    const T v = detail::eval_value(e, t);
    if (!std::isfinite(v)) throw DomainError("non-finite result", "t=" + format_double(static_cast<double>(t)));
    return v;
}

} // namespace nullcone
