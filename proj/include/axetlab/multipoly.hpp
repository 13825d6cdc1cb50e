#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "axetlab/errors.hpp"
#include "axetlab/rational.hpp"

namespace axetlab {

/// Ordered list of indeterminate names shared by every polynomial of one
/// computation. Two polynomials interoperate only if they share a context.
class SymbolContext {
public:
    explicit SymbolContext(std::vector<std::string> names) : names_(std::move(names))
    {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (names_[i] == names_[j]) {
                    fail(ErrorKind::InvalidArgument, "duplicate symbol '" + names_[i] + "'");
                }
            }
        }
    }

    static std::shared_ptr<const SymbolContext> make(std::vector<std::string> names)
    {
        return std::make_shared<const SymbolContext>(std::move(names));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) {
                return i;
            }
        }
        return std::nullopt;
    }

    std::size_t require(std::string_view name) const
    {
        auto idx = index_of(name);
        if (!idx) {
            fail(ErrorKind::UnboundSymbol, "symbol '" + std::string(name) + "' not in context");
        }
        return *idx;
    }

    friend bool operator==(const SymbolContext& a, const SymbolContext& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const SymbolContext>;
using Monomial = std::vector<std::uint32_t>;

inline bool same_context(const ContextPtr& a, const ContextPtr& b)
{
    return a == b || (a && b && *a == *b);
}

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// in lexicographically descending monomial order; zero coefficients are
/// never stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

    MultiPoly() = default;
    explicit MultiPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    MultiPoly(ContextPtr ctx, const Rational& constant) : ctx_(std::move(ctx))
    {
        if (!constant.is_zero()) {
            terms_.emplace(Monomial(ctx_->size(), 0), constant);
        }
    }

    static MultiPoly variable(const ContextPtr& ctx, std::size_t index)
    {
        MultiPoly p(ctx);
        Monomial m(ctx->size(), 0);
        m.at(index) = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static MultiPoly variable(const ContextPtr& ctx, std::string_view name)
    {
        return variable(ctx, ctx->require(name));
    }

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() ||
               (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                                  [](std::uint32_t e) { return e == 0; }));
    }

    Rational constant_value() const
    {
        if (terms_.empty()) {
            return Rational(0);
        }
        const auto& [m, c] = *terms_.rbegin();
        bool all_zero = std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
        return all_zero ? c : Rational(0);
    }

    const Rational& leading_coefficient() const { return terms_.begin()->second; }
    const Monomial& leading_monomial() const { return terms_.begin()->first; }

    std::uint32_t degree_in(std::size_t var) const
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) {
            d = std::max(d, m[var]);
        }
        return d;
    }

    std::uint32_t total_degree() const
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) {
            std::uint32_t s = 0;
            for (auto e : m) {
                s += e;
            }
            d = std::max(d, s);
        }
        return d;
    }

    /// Coefficient of var^degree, as a polynomial in the remaining variables.
    MultiPoly coefficient_in(std::size_t var, std::uint32_t degree) const
    {
        MultiPoly out(ctx_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == degree) {
                Monomial rest = m;
                rest[var] = 0;
                out.terms_.emplace(std::move(rest), c);
            }
        }
        return out;
    }

    MultiPoly operator-() const
    {
        MultiPoly out(*this);
        for (auto& [m, c] : out.terms_) {
            c = -c;
        }
        return out;
    }

    MultiPoly& operator+=(const MultiPoly& other)
    {
        adopt_context(other);
        for (const auto& [m, c] : other.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& other)
    {
        adopt_context(other);
        for (const auto& [m, c] : other.terms_) {
            add_term(m, -c);
        }
        return *this;
    }

    MultiPoly& operator*=(const Rational& k)
    {
        if (k.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) {
            c *= k;
        }
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& k) { return a *= k; }
    friend MultiPoly operator*(const Rational& k, MultiPoly a) { return a *= k; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        MultiPoly out(a.ctx_ ? a.ctx_ : b.ctx_);
        if (a.ctx_ && b.ctx_ && !same_context(a.ctx_, b.ctx_)) {
            fail(ErrorKind::MixedFields, "polynomials from different symbol contexts");
        }
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) {
                    m[i] = ma[i] + mb[i];
                }
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }

    MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        if (a.ctx_ && b.ctx_ && !same_context(a.ctx_, b.ctx_)) {
            fail(ErrorKind::MixedFields, "polynomials from different symbol contexts");
        }
        return a.terms_ == b.terms_;
    }

    /// Positive rational c such that this/c has coprime integer coefficients
    /// and a positive leading coefficient (sign folded into c).
    Rational content() const
    {
        if (terms_.empty()) {
            return Rational(1);
        }
        mpz_class g = 0;
        mpz_class l = 1;
        for (const auto& [m, c] : terms_) {
            mpz_class num = c.numerator();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            mpz_class den = c.denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        Rational c(g, l);
        return leading_coefficient().sign() < 0 ? -c : c;
    }

    /// Greatest common monomial divisor of all terms.
    Monomial monomial_content() const
    {
        Monomial g(ctx_ ? ctx_->size() : 0, 0);
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (first) {
                g = m;
                first = false;
            } else {
                for (std::size_t i = 0; i < g.size(); ++i) {
                    g[i] = std::min(g[i], m[i]);
                }
            }
        }
        return g;
    }

    MultiPoly divide_monomial(const Monomial& d) const
    {
        MultiPoly out(ctx_);
        for (const auto& [m, c] : terms_) {
            Monomial q = m;
            for (std::size_t i = 0; i < q.size(); ++i) {
                q[i] -= d[i];
            }
            out.terms_.emplace(std::move(q), c);
        }
        return out;
    }

    /// Exact quotient this/divisor when divisor divides this, otherwise none.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const
    {
        if (divisor.is_zero()) {
            fail(ErrorKind::DivisionByZero, "polynomial division by zero");
        }
        MultiPoly remainder = *this;
        MultiPoly quotient(ctx_ ? ctx_ : divisor.ctx_);
        const Monomial& lm = divisor.leading_monomial();
        const Rational& lc = divisor.leading_coefficient();
        while (!remainder.is_zero()) {
            const Monomial& rm = remainder.leading_monomial();
            Monomial q(rm.size());
            for (std::size_t i = 0; i < rm.size(); ++i) {
                if (rm[i] < lm[i]) {
                    return std::nullopt;
                }
                q[i] = rm[i] - lm[i];
            }
            Rational qc = remainder.leading_coefficient() / lc;
            MultiPoly step(quotient.ctx_);
            step.terms_.emplace(q, qc);
            quotient.add_term(q, qc);
            remainder -= step * divisor;
        }
        return quotient;
    }

    /// Evaluates with the i-th variable bound to values[i].
    template <class Field>
    typename Field::value_type evaluate(const Field& field, const std::vector<typename Field::value_type>& values) const
    {
        using S = typename Field::value_type;
        S total = field.zero();
        for (const auto& [m, c] : terms_) {
            S term = field.from_rational(c);
            for (std::size_t i = 0; i < m.size(); ++i) {
                for (std::uint32_t e = 0; e < m[i]; ++e) {
                    term = term * values.at(i);
                }
            }
            total = total + term;
        }
        return total;
    }

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool unit_monomial = std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
            Rational mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) {
                    os << "-";
                }
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            first = false;
            if (unit_monomial) {
                os << mag;
                continue;
            }
            bool need_star = false;
            if (!mag.is_one()) {
                os << mag;
                need_star = true;
            }
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) {
                    continue;
                }
                if (need_star) {
                    os << "*";
                }
                os << ctx_->name(i);
                if (m[i] > 1) {
                    os << "^" << m[i];
                }
                need_star = true;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

private:
    void adopt_context(const MultiPoly& other)
    {
        if (!ctx_) {
            ctx_ = other.ctx_;
        } else if (other.ctx_ && !same_context(ctx_, other.ctx_)) {
            fail(ErrorKind::MixedFields, "polynomials from different symbol contexts");
        }
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    ContextPtr ctx_;
    TermMap terms_;
};

} // namespace axetlab
