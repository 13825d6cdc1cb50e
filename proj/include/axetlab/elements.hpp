#pragma once

#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "axetlab/algebra.hpp"
#include "axetlab/errors.hpp"
#include "axetlab/expr.hpp"

namespace axetlab {

/// Expression domain over an algebra: basis names denote basis vectors,
/// field symbols denote scalars, and '*' between two elements is the
/// algebra product.
template <FieldDescriptor Field>
class ElementDomain {
public:
    using Scalar = ScalarOf<Field>;
    using Element = typename StructureAlgebra<Field>::Element;

    struct Value {
        bool is_scalar = true;
        Scalar scalar;
        Element element;
    };
    using value_type = Value;

    explicit ElementDomain(const StructureAlgebra<Field>& alg) : alg_(alg), scalars_(alg.field()) {}

    Value number(const mpz_class& n) const { return {true, scalars_.number(n), {}}; }

    Value symbol(const std::string& name, std::size_t line, std::size_t column) const
    {
        if (auto i = alg_.index_of(name)) {
            return {false, {}, alg_.basis(*i)};
        }
        return {true, scalars_.symbol(name, line, column), {}};
    }

    Value add(const Value& a, const Value& b) const { return combine(a, b, false); }
    Value sub(const Value& a, const Value& b) const { return combine(a, b, true); }

    Value mul(const Value& a, const Value& b) const
    {
        if (a.is_scalar && b.is_scalar) {
            return {true, a.scalar * b.scalar, {}};
        }
        if (a.is_scalar) {
            return {false, {}, scale(a.scalar, b.element)};
        }
        if (b.is_scalar) {
            return {false, {}, scale(b.scalar, a.element)};
        }
        return {false, {}, alg_.multiply(a.element, b.element)};
    }

    Value div(const Value& a, const Value& b, std::size_t line, std::size_t column) const
    {
        if (!b.is_scalar) {
            fail(ErrorKind::ParseError, where(line, column) + "cannot divide by an algebra element");
        }
        Scalar inv = scalars_.div(alg_.field().one(), b.scalar, line, column);
        return mul(a, {true, inv, {}});
    }

    Value neg(const Value& a) const
    {
        if (a.is_scalar) {
            return {true, -a.scalar, {}};
        }
        return {false, {}, scale(-alg_.field().one(), a.element)};
    }

    Value pow(const Value& a, unsigned e) const
    {
        if (a.is_scalar) {
            return {true, scalars_.pow(a.scalar, e), {}};
        }
        if (e == 0) {
            fail(ErrorKind::ParseError, "zeroth power of an algebra element");
        }
        Value r = a;
        for (unsigned i = 1; i < e; ++i) {
            r = mul(r, a);
        }
        return r;
    }

private:
    static std::string where(std::size_t line, std::size_t column)
    {
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
    }

    Value combine(const Value& a, const Value& b, bool minus) const
    {
        if (a.is_scalar && b.is_scalar) {
            return {true, minus ? a.scalar - b.scalar : a.scalar + b.scalar, {}};
        }
        // A bare zero scalar is accepted as the zero element.
        Element x = a.is_scalar ? as_zero_element(a) : a.element;
        Element y = b.is_scalar ? as_zero_element(b) : b.element;
        return {false, {}, minus ? axetlab::sub(std::move(x), y) : axetlab::add(std::move(x), y)};
    }

    Element as_zero_element(const Value& v) const
    {
        if (!v.scalar.is_zero()) {
            fail(ErrorKind::ParseError, "cannot add a nonzero scalar to an algebra element");
        }
        return alg_.zero_element();
    }

    const StructureAlgebra<Field>& alg_;
    ScalarDomain<Field> scalars_;
};

/// Evaluates an element expression such as "1/3*s1 + 1/6*d1 - 1/6*d2".
template <FieldDescriptor Field>
typename StructureAlgebra<Field>::Element parse_element(const StructureAlgebra<Field>& alg, std::string_view text,
                                                        std::size_t line = 1, std::size_t column = 1)
{
    ExprPtr e = parse_expression(text, line, column);
    auto v = evaluate_expression(*e, ElementDomain<Field>(alg));
    if (v.is_scalar) {
        if (v.scalar.is_zero()) {
            return alg.zero_element();
        }
        fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": expression '" + std::string(text) +
                                        "' is a scalar, expected an algebra element");
    }
    return v.element;
}

/// Deterministic text form: "c1*e1 + c2*e2 - ...", or "0".
template <FieldDescriptor Field>
std::string format_element(const StructureAlgebra<Field>& alg, const typename StructureAlgebra<Field>::Element& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) {
            continue;
        }
        std::string c = v[i].to_string();
        bool negative = false;
        if constexpr (std::is_same_v<Field, FunctionField>) {
            c = "(" + c + ")";
        } else if (!c.empty() && c.front() == '-') {
            negative = true;
            c.erase(0, 1);
        }
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (c != "1") {
            out += c + "*";
        }
        out += alg.basis_name(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace axetlab
