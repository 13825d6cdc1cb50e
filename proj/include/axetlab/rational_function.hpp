#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "axetlab/errors.hpp"
#include "axetlab/multipoly.hpp"
#include "axetlab/rational.hpp"

namespace axetlab {

/// Quotient num/den of polynomials over Q. Representatives are not reduced
/// by a gcd; equality is decided by cross-multiplication. A cheap cleanup
/// (monomial and integer content, exact division) keeps sizes in check.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(const ContextPtr& ctx) : num_(ctx), den_(ctx, Rational(1)) {}
    RationalFunction(const ContextPtr& ctx, const Rational& constant) : num_(ctx, constant), den_(ctx, Rational(1)) {}
    explicit RationalFunction(MultiPoly num) : num_(std::move(num)), den_(num_.context(), Rational(1)) {}
    RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) {
            fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
        }
        normalize();
    }

    static RationalFunction variable(const ContextPtr& ctx, std::string_view name)
    {
        return RationalFunction(MultiPoly::variable(ctx, name));
    }

    const ContextPtr& context() const { return num_.context() ? num_.context() : den_.context(); }
    const MultiPoly& numerator() const { return num_; }
    const MultiPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return !num_.is_zero() && num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RationalFunction inverse() const
    {
        if (num_.is_zero() || !context()) {
            fail(ErrorKind::DivisionByZero, "inverse of the zero rational function");
        }
        return RationalFunction(den_, num_);
    }

    RationalFunction operator-() const
    {
        RationalFunction out(*this);
        out.num_ = -out.num_;
        return out;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (!a.context()) {
            return b;
        }
        if (!b.context()) {
            return a;
        }
        if (a.den_ == b.den_) {
            return RationalFunction(a.num_ + b.num_, a.den_);
        }
        if (a.den_.is_constant() && b.den_.is_constant()) {
            return RationalFunction(a.num_ * (Rational(1) / a.den_.constant_value()) +
                                    b.num_ * (Rational(1) / b.den_.constant_value()));
        }
        if (auto k = b.den_.divide_exact(a.den_)) {
            return RationalFunction(a.num_ * *k + b.num_, b.den_);
        }
        if (auto k = a.den_.divide_exact(b.den_)) {
            return RationalFunction(a.num_ + b.num_ * *k, a.den_);
        }
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return RationalFunction(a.context() ? a.context() : b.context());
        }
        if (a.den_.is_constant() && b.den_.is_constant()) {
            return RationalFunction(a.num_ * b.num_ *
                                    (Rational(1) / (a.den_.constant_value() * b.den_.constant_value())));
        }
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    /// f == g iff num_f * den_g == num_g * den_f.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        if (!a.context() || !b.context()) {
            return a.is_zero() && b.is_zero();
        }
        if (a.den_ == b.den_) {
            return a.num_ == b.num_;
        }
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    template <class Field>
    typename Field::value_type evaluate(const Field& field, const std::vector<typename Field::value_type>& values) const
    {
        auto d = den_.evaluate(field, values);
        if (d.is_zero()) {
            fail(ErrorKind::DenominatorVanishes, "denominator " + den_.to_string() + " vanishes");
        }
        return num_.evaluate(field, values) / d;
    }

    std::string to_string() const
    {
        if (den_.is_constant() && den_.constant_value().is_one()) {
            return num_.to_string();
        }
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

private:
    void normalize()
    {
        const ContextPtr& ctx = context();
        if (num_.is_zero()) {
            den_ = MultiPoly(ctx, Rational(1));
            return;
        }
        Monomial mn = num_.monomial_content();
        Monomial md = den_.monomial_content();
        bool shared = false;
        for (std::size_t i = 0; i < mn.size(); ++i) {
            mn[i] = std::min(mn[i], md[i]);
            shared = shared || mn[i] > 0;
        }
        if (shared) {
            num_ = num_.divide_monomial(mn);
            den_ = den_.divide_monomial(mn);
        }
        if (den_.is_constant()) {
            num_ *= Rational(1) / den_.constant_value();
            den_ = MultiPoly(ctx, Rational(1));
            return;
        }
        Rational cn = num_.content();
        Rational cd = den_.content();
        num_ *= cn.inverse();
        den_ *= cd.inverse();
        if (auto q = num_.divide_exact(den_)) {
            num_ = std::move(*q);
            num_ *= cn / cd;
            den_ = MultiPoly(ctx, Rational(1));
            return;
        }
        if (auto q = den_.divide_exact(num_)) {
            num_ = MultiPoly(ctx, cn / cd);
            den_ = std::move(*q);
            return;
        }
        num_ *= cn / cd;
    }

    MultiPoly num_;
    MultiPoly den_;
};

inline RationalFunction pow(const RationalFunction& base, unsigned exponent)
{
    RationalFunction result(base.context(), Rational(1));
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

/// Fraction field Q(x_1, ..., x_n) over a fixed symbol context.
class FunctionField {
public:
    using value_type = RationalFunction;

    explicit FunctionField(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    explicit FunctionField(std::vector<std::string> names) : ctx_(SymbolContext::make(std::move(names))) {}

    const ContextPtr& context() const { return ctx_; }
    value_type zero() const { return RationalFunction(ctx_); }
    value_type one() const { return RationalFunction(ctx_, Rational(1)); }
    value_type from_rational(const Rational& q) const { return RationalFunction(ctx_, q); }
    value_type variable(std::string_view name) const { return RationalFunction::variable(ctx_, name); }
    std::uint64_t characteristic() const { return 0; }

    std::string describe() const
    {
        std::string out = "function";
        for (const auto& n : ctx_->names()) {
            out += " " + n;
        }
        return out;
    }

    bool contains(const value_type& x) const { return !x.context() || same_context(x.context(), ctx_); }

    friend bool operator==(const FunctionField& a, const FunctionField& b) { return same_context(a.ctx_, b.ctx_); }

private:
    ContextPtr ctx_;
};

/// Exact evaluation at a rational point. Only variables that occur in f must
/// be bound.
inline Rational evaluate_at(const RationalFunction& f, const std::map<std::string, Rational>& assignment)
{
    const auto& ctx = f.context();
    std::vector<Rational> values(ctx->size(), Rational(0));
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        auto it = assignment.find(ctx->name(i));
        bool used = f.numerator().degree_in(i) > 0 || f.denominator().degree_in(i) > 0;
        if (it == assignment.end()) {
            if (used) {
                fail(ErrorKind::UnboundSymbol, "no value for '" + ctx->name(i) + "'");
            }
            continue;
        }
        values[i] = it->second;
    }
    return f.evaluate(RationalField{}, values);
}

/// Same as evaluate_at but into an arbitrary field (e.g. F_p).
template <class Field>
typename Field::value_type evaluate_in(const Field& field, const RationalFunction& f,
                                       const std::map<std::string, Rational>& assignment)
{
    const auto& ctx = f.context();
    std::vector<typename Field::value_type> values(ctx->size(), field.zero());
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        auto it = assignment.find(ctx->name(i));
        bool used = f.numerator().degree_in(i) > 0 || f.denominator().degree_in(i) > 0;
        if (it == assignment.end()) {
            if (used) {
                fail(ErrorKind::UnboundSymbol, "no value for '" + ctx->name(i) + "'");
            }
            continue;
        }
        values[i] = field.from_rational(it->second);
    }
    return f.evaluate(field, values);
}

/// Replaces the named symbols by rational functions in the same context.
inline RationalFunction substitute(const RationalFunction& f, const std::map<std::string, RationalFunction>& replacements)
{
    FunctionField field(f.context());
    std::vector<RationalFunction> values;
    values.reserve(f.context()->size());
    for (std::size_t i = 0; i < f.context()->size(); ++i) {
        auto it = replacements.find(f.context()->name(i));
        values.push_back(it == replacements.end() ? field.variable(f.context()->name(i)) : it->second);
    }
    return f.evaluate(field, values);
}

/// Solves f = 0 for a symbol occurring to degree one in the numerator.
/// Returns nullopt if the numerator is not linear in it.
inline std::optional<RationalFunction> solve_linear(const RationalFunction& f, std::string_view symbol)
{
    std::size_t var = f.context()->require(symbol);
    const MultiPoly& n = f.numerator();
    if (n.degree_in(var) != 1) {
        return std::nullopt;
    }
    MultiPoly b = n.coefficient_in(var, 1);
    MultiPoly a = n.coefficient_in(var, 0);
    return RationalFunction(-a, b);
}

} // namespace axetlab
