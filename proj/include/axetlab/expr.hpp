#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "axetlab/errors.hpp"
#include "axetlab/field.hpp"

namespace axetlab {

/// Parsed coefficient expression. Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := primary ('^' integer)*
///   primary := integer | symbol | '(' expr ')'
/// so '^' binds tighter than unary minus, which binds tighter than '*' '/'.
struct ExprNode {
    enum class Op { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };

    Op op = Op::Number;
    mpz_class number;
    std::string symbol;
    unsigned exponent = 0;
    std::size_t line = 1;
    std::size_t column = 1;
    std::unique_ptr<ExprNode> lhs;
    std::unique_ptr<ExprNode> rhs;
};

using ExprPtr = std::unique_ptr<ExprNode>;

class ExpressionParser {
public:
    /// `line` and `column` locate the first character of `text` in the
    /// enclosing document, for error messages.
    ExpressionParser(std::string_view text, std::size_t line = 1, std::size_t column = 1)
        : text_(text), line_(line), column0_(column)
    {
    }

    ExprPtr parse()
    {
        skip_space();
        if (at_end()) {
            error("empty expression");
        }
        ExprPtr e = parse_expr();
        skip_space();
        if (!at_end()) {
            error(std::string("unexpected '") + text_[pos_] + "'");
        }
        return e;
    }

private:
    [[noreturn]] void error(const std::string& message) const
    {
        fail(ErrorKind::ParseError, "line " + std::to_string(line_) + ", column " +
                                        std::to_string(column0_ + pos_) + ": " + message);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    ExprPtr node(ExprNode::Op op) const
    {
        auto n = std::make_unique<ExprNode>();
        n->op = op;
        n->line = line_;
        n->column = column0_ + pos_;
        return n;
    }

    ExprPtr binary(ExprNode::Op op, ExprPtr lhs, ExprPtr rhs) const
    {
        auto n = node(op);
        n->line = lhs->line;
        n->column = lhs->column;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    ExprPtr parse_expr()
    {
        ExprPtr lhs = parse_term();
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') {
                return lhs;
            }
            ++pos_;
            ExprPtr rhs = parse_term();
            lhs = binary(c == '+' ? ExprNode::Op::Add : ExprNode::Op::Sub, std::move(lhs), std::move(rhs));
        }
    }

    ExprPtr parse_term()
    {
        ExprPtr lhs = parse_unary();
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '*' && c != '/') {
                return lhs;
            }
            ++pos_;
            ExprPtr rhs = parse_unary();
            lhs = binary(c == '*' ? ExprNode::Op::Mul : ExprNode::Op::Div, std::move(lhs), std::move(rhs));
        }
    }

    ExprPtr parse_unary()
    {
        skip_space();
        if (peek() == '-') {
            auto n = node(ExprNode::Op::Neg);
            ++pos_;
            n->lhs = parse_unary();
            return n;
        }
        if (peek() == '+') {
            ++pos_;
            return parse_unary();
        }
        return parse_power();
    }

    ExprPtr parse_power()
    {
        ExprPtr base = parse_primary();
        for (;;) {
            skip_space();
            if (peek() != '^') {
                return base;
            }
            ++pos_;
            skip_space();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                error("exponent must be a nonnegative integer literal");
            }
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
            }
            if (pos_ - start > 6) {
                error("exponent too large");
            }
            auto n = node(ExprNode::Op::Pow);
            n->line = base->line;
            n->column = base->column;
            n->exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            n->lhs = std::move(base);
            base = std::move(n);
        }
    }

    ExprPtr parse_primary()
    {
        skip_space();
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_expr();
            skip_space();
            if (peek() != ')') {
                error("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = node(ExprNode::Op::Number);
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
            }
            n->number = mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto n = node(ExprNode::Op::Symbol);
            std::size_t start = pos_;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
                ++pos_;
            }
            n->symbol = std::string(text_.substr(start, pos_ - start));
            return n;
        }
        if (at_end()) {
            error("unexpected end of expression");
        }
        error(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t column0_;
    std::size_t pos_ = 0;
};

inline ExprPtr parse_expression(std::string_view text, std::size_t line = 1, std::size_t column = 1)
{
    return ExpressionParser(text, line, column).parse();
}

/// Folds an expression tree through a domain policy providing
/// number/symbol/add/sub/mul/div/neg/pow.
template <class Domain>
auto evaluate_expression(const ExprNode& n, const Domain& domain) -> typename Domain::value_type
{
    switch (n.op) {
    case ExprNode::Op::Number: return domain.number(n.number);
    case ExprNode::Op::Symbol: return domain.symbol(n.symbol, n.line, n.column);
    case ExprNode::Op::Neg: return domain.neg(evaluate_expression(*n.lhs, domain));
    case ExprNode::Op::Add: return domain.add(evaluate_expression(*n.lhs, domain), evaluate_expression(*n.rhs, domain));
    case ExprNode::Op::Sub: return domain.sub(evaluate_expression(*n.lhs, domain), evaluate_expression(*n.rhs, domain));
    case ExprNode::Op::Mul: return domain.mul(evaluate_expression(*n.lhs, domain), evaluate_expression(*n.rhs, domain));
    case ExprNode::Op::Div:
        return domain.div(evaluate_expression(*n.lhs, domain), evaluate_expression(*n.rhs, domain), n.line, n.column);
    case ExprNode::Op::Pow: return domain.pow(evaluate_expression(*n.lhs, domain), n.exponent);
    }
    fail(ErrorKind::ParseError, "corrupt expression tree");
}

/// Scalars of a field; symbols resolve to indeterminates of a function field.
template <FieldDescriptor Field>
class ScalarDomain {
public:
    using value_type = ScalarOf<Field>;

    explicit ScalarDomain(const Field& field) : field_(field) {}

    value_type number(const mpz_class& n) const { return field_.from_rational(Rational(n)); }

    value_type symbol(const std::string& name, std::size_t line, std::size_t column) const
    {
        if constexpr (std::is_same_v<Field, FunctionField>) {
            if (field_.context()->index_of(name)) {
                return field_.variable(name);
            }
        }
        fail(ErrorKind::UnknownSymbol, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                           ": unknown symbol '" + name + "'");
    }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type div(const value_type& a, const value_type& b, std::size_t line, std::size_t column) const
    {
        if (b.is_zero()) {
            fail(ErrorKind::DivisionByZero,
                 "line " + std::to_string(line) + ", column " + std::to_string(column) + ": division by zero");
        }
        return a / b;
    }
    value_type neg(const value_type& a) const { return -a; }
    value_type pow(const value_type& a, unsigned e) const
    {
        value_type r = field_.one();
        for (unsigned i = 0; i < e; ++i) {
            r = r * a;
        }
        return r;
    }

private:
    Field field_;
};

template <FieldDescriptor Field>
ScalarOf<Field> parse_scalar(const Field& field, std::string_view text, std::size_t line = 1, std::size_t column = 1)
{
    ExprPtr e = parse_expression(text, line, column);
    return evaluate_expression(*e, ScalarDomain<Field>(field));
}

} // namespace axetlab
