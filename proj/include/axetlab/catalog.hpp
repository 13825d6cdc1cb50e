#pragma once

#include <string>
#include <utility>
#include <vector>

#include "axetlab/algebra.hpp"
#include "axetlab/errors.hpp"
#include "axetlab/fusion.hpp"
#include "axetlab/linalg.hpp"

namespace axetlab {

/// An algebra together with two distinguished generating axes: `p` carries
/// the Monster law with a nontrivial involution, `q` is the Jordan-type axis.
template <FieldDescriptor Field>
struct SkewConstruction {
    using Element = typename StructureAlgebra<Field>::Element;

    std::string label;
    StructureAlgebra<Field> algebra;
    FusionLaw<Field> law;
    Element p;
    Element q;
    std::string p_name;
    std::string q_name;
};

namespace detail {

/// Element from small rational coordinates, e.g. coords(f, {{1,3},{0,1}}).
template <FieldDescriptor Field>
Vector<ScalarOf<Field>> coords(const Field& field, std::initializer_list<std::pair<long, long>> entries)
{
    Vector<ScalarOf<Field>> v;
    for (const auto& [n, d] : entries) {
        v.push_back(field.from_rational(Rational(n, d)));
    }
    return v;
}

template <FieldDescriptor Field>
void set_idempotent_basis(StructureAlgebra<Field>& alg)
{
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        alg.set_product(i, i, alg.basis(i));
    }
}

template <FieldDescriptor Field>
void require_not_two(const Field& field, const std::string& what)
{
    require_characteristic_not(field, {2}, what);
}

} // namespace detail

/// 2B: basis a, b with ab = 0.
template <FieldDescriptor Field>
StructureAlgebra<Field> make_2B(const Field& field)
{
    StructureAlgebra<Field> alg(field, {"a", "b"});
    detail::set_idempotent_basis(alg);
    return alg;
}

/// 3C(alpha): xy = (alpha/2)(x + y - z) and cyclically.
template <FieldDescriptor Field>
StructureAlgebra<Field> make_3C(const Field& field, const ScalarOf<Field>& alpha,
                                std::vector<std::string> names = {"x", "y", "z"})
{
    detail::require_not_two(field, "3C(alpha)");
    if (alpha.is_zero() || alpha == field.one()) {
        fail(ErrorKind::DegenerateParameter, "3C(alpha) needs alpha not in {0, 1}");
    }
    StructureAlgebra<Field> alg(field, std::move(names));
    detail::set_idempotent_basis(alg);
    auto half = alpha / field.from_rational(Rational(2));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            std::size_t k = 3 - i - j;
            auto v = alg.zero_element();
            v[i] = half;
            v[j] = half;
            v[k] = -half;
            alg.set_product(i, j, v);
        }
    }
    return alg;
}

/// 3C(-1)^x: basis y, z with yz = -y - z.
template <FieldDescriptor Field>
StructureAlgebra<Field> make_3Cx_minus1(const Field& field)
{
    StructureAlgebra<Field> alg(field, {"y", "z"});
    detail::set_idempotent_basis(alg);
    alg.set_product(0, 1, detail::coords(field, {{-1, 1}, {-1, 1}}));
    return alg;
}

/// 3C(alpha) on basis x, y, z with w = 1 - x an M(alpha, 1-alpha)-axis and
/// y a J(alpha)-axis.
template <FieldDescriptor Field>
SkewConstruction<Field> make_3C_skew(const Field& field, const ScalarOf<Field>& alpha)
{
    detail::require_not_two(field, "3C(alpha, 1-alpha)");
    auto one = field.one();
    if (alpha.is_zero() || alpha == one || alpha == -one || alpha + alpha == one) {
        fail(ErrorKind::DegenerateParameter, "3C(alpha, 1-alpha) needs alpha not in {0, 1, 1/2, -1}");
    }
    auto alg = make_3C(field, alpha);
    auto unit = scale(one / (alpha + one), add(add(alg.basis(0), alg.basis(1)), alg.basis(2)));
    auto w = sub(unit, alg.basis(0));
    auto law = make_monster(field, alpha, one - alpha);
    std::string label = "3C(" + alpha.to_string() + ", " + (one - alpha).to_string() + ")";
    return {label, alg, law, w, alg.basis(1), "w", "y"};
}

/// 3C(2) on basis u, v, w with w an M(-1, 2)-axis and y = 1 - u a J(-1)-axis.
template <FieldDescriptor Field>
SkewConstruction<Field> make_3C_minus1_2(const Field& field)
{
    require_characteristic_not(field, {2, 3}, "3C(-1, 2)");
    auto two = field.from_rational(Rational(2));
    auto alg = make_3C(field, two, {"u", "v", "w"});
    auto unit = scale(field.from_rational(Rational(1, 3)), add(add(alg.basis(0), alg.basis(1)), alg.basis(2)));
    auto y = sub(unit, alg.basis(0));
    auto law = make_monster(field, -field.one(), two);
    return {"3C(-1, 2)", alg, law, alg.basis(2), y, "w", "y"};
}

/// Q2(1/3) on basis s1, s2, d1, d2.
template <FieldDescriptor Field>
StructureAlgebra<Field> make_Q2_third(const Field& field)
{
    require_characteristic_not(field, {2, 3}, "Q2(1/3)");
    StructureAlgebra<Field> alg(field, {"s1", "s2", "d1", "d2"});
    detail::set_idempotent_basis(alg);
    alg.set_product(0, 2, detail::coords(field, {{1, 3}, {0, 1}, {1, 6}, {-1, 6}}));
    alg.set_product(0, 3, detail::coords(field, {{1, 3}, {0, 1}, {-1, 6}, {1, 6}}));
    alg.set_product(1, 2, detail::coords(field, {{0, 1}, {1, 3}, {1, 6}, {-1, 6}}));
    alg.set_product(1, 3, detail::coords(field, {{0, 1}, {1, 3}, {-1, 6}, {1, 6}}));
    alg.set_product(2, 3, detail::coords(field, {{-1, 3}, {-1, 3}, {1, 3}, {1, 3}}));
    return alg;
}

/// Q2(1/3, 2/3): t1 = 1 - d1 with the M(1/3, 2/3) law, and s1.
template <FieldDescriptor Field>
SkewConstruction<Field> make_Q2_skew(const Field& field)
{
    require_characteristic_not(field, {2, 3, 5}, "Q2(1/3, 2/3)");
    auto alg = make_Q2_third(field);
    auto unit = *alg.find_identity();
    auto t1 = sub(unit, alg.basis(2));
    auto law = make_monster(field, field.from_rational(Rational(1, 3)), field.from_rational(Rational(2, 3)));
    return {"Q2(1/3, 2/3)", alg, law, t1, alg.basis(0), "t1", "s1"};
}

/// Q2(1/3)^x: basis x, y, z (Table without the identity row), characteristic 5.
template <FieldDescriptor Field>
StructureAlgebra<Field> make_Q2x(const Field& field)
{
    if (field.characteristic() != 5) {
        fail(ErrorKind::BadCharacteristic, "Q2(1/3)^x is defined here in characteristic 5 only");
    }
    StructureAlgebra<Field> alg(field, {"x", "y", "z"});
    detail::set_idempotent_basis(alg);
    alg.set_product(0, 2, detail::coords(field, {{3, 1}, {1, 1}, {2, 1}}));
    alg.set_product(1, 2, detail::coords(field, {{1, 1}, {3, 1}, {2, 1}}));
    return alg;
}

/// Q2(1/3)^x + <1> over a field of characteristic 5, with w = 1 - z and x.
template <FieldDescriptor Field>
SkewConstruction<Field> make_Q2x_plus_one(const Field& field)
{
    auto alg = adjoin_identity(make_Q2x(field), "one");
    auto w = sub(alg.basis(3), alg.basis(2));
    auto law = make_monster(field, field.from_rational(Rational(1, 3)), field.from_rational(Rational(2, 3)));
    return {"Q2(1/3)^x + <1>", alg, law, w, alg.basis(0), "w", "x"};
}

/// The P = 0 algebra on basis b, c, a, f.
template <FieldDescriptor Field>
SkewConstruction<Field> make_table6(const Field& field)
{
    require_characteristic_not(field, {2, 3}, "the P = 0 algebra");
    StructureAlgebra<Field> alg(field, {"b", "c", "a", "f"});
    detail::set_idempotent_basis(alg);
    alg.set_product(0, 2, detail::coords(field, {{2, 3}, {0, 1}, {1, 6}, {-1, 6}}));
    alg.set_product(0, 3, detail::coords(field, {{2, 3}, {0, 1}, {-1, 6}, {1, 6}}));
    alg.set_product(1, 2, detail::coords(field, {{0, 1}, {2, 3}, {1, 6}, {-1, 6}}));
    alg.set_product(1, 3, detail::coords(field, {{0, 1}, {2, 3}, {-1, 6}, {1, 6}}));
    alg.set_product(2, 3, detail::coords(field, {{2, 3}, {2, 3}, {-1, 3}, {-1, 3}}));
    auto law = make_monster(field, field.from_rational(Rational(1, 3)), field.from_rational(Rational(2, 3)));
    return {"P=0 algebra", alg, law, alg.basis(2), alg.basis(0), "a", "b"};
}

/// Constants of the generic skew algebra. Symbols may be indeterminates
/// (function field) or concrete values.
template <FieldDescriptor Field>
struct SkewConstants {
    using Scalar = ScalarOf<Field>;

    Field field;
    Scalar alpha, beta, l1, l1f, l2f, zeta, theta, kappa;

    static SkewConstants symbolic(const FunctionField& f)
        requires std::is_same_v<Field, FunctionField>
    {
        return {f,
                f.variable("alpha"),
                f.variable("beta"),
                f.variable("l1"),
                f.variable("l1f"),
                f.variable("l2f"),
                f.variable("zeta"),
                f.variable("theta"),
                f.variable("kappa")};
    }

    Scalar num(long n, long d = 1) const { return field.from_rational(Rational(n, d)); }

    Scalar gamma() const { return beta - l1; }
    Scalar epsilon() const { return (num(1) - alpha) * l1 - beta; }
    Scalar delta() const { return (num(1) - alpha) * l1 + beta * (alpha - beta - num(1)); }
    Scalar gamma_f() const { return beta - l1f; }
    Scalar epsilon_f() const { return (num(1) - alpha) * l1f - beta; }
    Scalar delta_f() const { return (num(1) - alpha) * l1f + beta * (alpha - beta - num(1)); }

    Scalar P() const
    {
        return (num(2) * (alpha - num(1)) * l1 + num(2) * alpha * l1f + alpha * (num(1) - num(2) * alpha)) /
               (alpha - beta);
    }

    Scalar Q() const
    {
        const Scalar& a = alpha;
        const Scalar& b = beta;
        Scalar amb = a - b;
        Scalar bracket = (num(6) * a * a - num(8) * a * b - num(2) * a + num(4) * b) * l1f * l1f +
                         num(2) * a * (a - num(1)) * l1 * l1f +
                         num(2) * a * (-num(2) * a - num(2) * b + num(1)) * amb * l1f -
                         num(4) * b * (a - num(1)) * amb * l1 - a * b * amb * l2f +
                         num(2) * b * (num(2) * a * a + b * b - a) * amb -
                         b * amb * (a - num(2) * b) * (num(1) - num(2) * b);
        return -bracket / (num(2) * b * amb * amb);
    }

    Scalar R() const { return -beta; }
    Scalar S() const { return P() / beta; }
};

/// The generic skew algebra on basis a, b, c, sigma.
template <FieldDescriptor Field>
StructureAlgebra<Field> make_generic_skew(const SkewConstants<Field>& k)
{
    const Field& field = k.field;
    if (k.beta.is_zero() || k.alpha == k.beta) {
        fail(ErrorKind::DegenerateParameter, "generic skew algebra needs beta != 0 and alpha != beta");
    }
    auto z = field.zero();
    auto half = k.num(1, 2);
    auto amb = k.alpha - k.beta;
    StructureAlgebra<Field> alg(field, {"a", "b", "c", "sigma"});
    detail::set_idempotent_basis(alg);
    alg.set_product(0, 1, {k.beta, k.beta, z, field.one()});
    alg.set_product(0, 2, {k.beta, z, k.beta, field.one()});
    alg.set_product(0, 3, {k.delta(), half * k.beta * amb, half * k.beta * amb, amb});
    auto p = k.P();
    alg.set_product(1, 2, {p, z, z, p / k.beta});
    alg.set_product(1, 3, {k.beta * amb, k.delta_f(), z, amb});
    alg.set_product(2, 3, {k.beta * amb, z, k.delta_f(), amb});
    alg.set_product(3, 3, {k.zeta, k.theta, k.theta, k.kappa});
    return alg;
}

/// Possible isomorphism types of <<p, q>> for a J(alpha)-axis p and a
/// J(beta)-axis q. This is a lookup table, not a derivation.
template <FieldDescriptor Field>
std::vector<std::string> rehren_oracle(const Field& field, const ScalarOf<Field>& alpha, const ScalarOf<Field>& beta)
{
    auto one = field.one();
    if (alpha.is_zero() || beta.is_zero() || alpha == one || beta == one || alpha == beta) {
        fail(ErrorKind::DegenerateParameter, "oracle needs distinct alpha, beta outside {0, 1}");
    }
    std::vector<std::string> labels{"2B"};
    if (alpha + beta == one) {
        if (alpha == -one) {
            labels.push_back("3C(-1,2)");
        } else {
            labels.push_back("3C(alpha,1-alpha)");
        }
    }
    return labels;
}

} // namespace axetlab
