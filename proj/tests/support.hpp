#pragma once

#include <random>
#include <string_view>

#include <catch2/catch_amalgamated.hpp>

#include "axetlab/axetlab.hpp"

namespace testing {

using namespace axetlab;

inline Rational q(long n, long d = 1) { return Rational(n, d); }

template <FieldDescriptor Field>
typename StructureAlgebra<Field>::Element el(const StructureAlgebra<Field>& alg, std::string_view text)
{
    return parse_element(alg, text);
}

/// Fixed seed so failures reproduce.
inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240917);
    return gen;
}

inline Rational random_rational(long bound = 12)
{
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng()), den(rng()));
}

template <FieldDescriptor Field>
ScalarOf<Field> random_scalar(const Field& field)
{
    return field.from_rational(Rational(std::uniform_int_distribution<long>(-40, 40)(rng())));
}

inline ScalarOf<RationalField> random_scalar(const RationalField&) { return random_rational(); }

template <FieldDescriptor Field>
typename StructureAlgebra<Field>::Element random_element(const StructureAlgebra<Field>& alg)
{
    typename StructureAlgebra<Field>::Element v;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        v.push_back(random_scalar(alg.field()));
    }
    return v;
}

template <class Fn>
ErrorKind error_kind_of(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an axetlab::Error");
    return ErrorKind::InvalidArgument;
}

template <FieldDescriptor Field>
struct CatalogAxis {
    std::string label;
    StructureAlgebra<Field> algebra;
    typename StructureAlgebra<Field>::Element axis;
    FusionLaw<Field> law;
};

template <FieldDescriptor Field>
void add_construction(std::vector<CatalogAxis<Field>>& out, const SkewConstruction<Field>& s)
{
    auto r = miyamoto(s.algebra, s.p, s.law).map.apply(s.q);
    out.push_back({s.label + " " + s.p_name, s.algebra, s.p, s.law});
    out.push_back({s.label + " " + s.q_name, s.algebra, s.q, s.law});
    out.push_back({s.label + " tau(" + s.q_name + ")", s.algebra, r, s.law});
}

template <FieldDescriptor Field>
void add_basis_axes(std::vector<CatalogAxis<Field>>& out, const std::string& label, const StructureAlgebra<Field>& alg,
                    const std::vector<std::string>& names, const FusionLaw<Field>& law)
{
    for (const auto& n : names) {
        out.push_back({label + " " + n, alg, alg.basis(n), law});
    }
}

/// Every axis of every rational catalog algebra with the law it is certified under.
inline std::vector<CatalogAxis<RationalField>> rational_catalog_axes()
{
    RationalField f;
    std::vector<CatalogAxis<RationalField>> out;
    add_basis_axes(out, "2B", make_2B(f), {"a", "b"}, make_jordan(f, q(1, 2)));
    add_basis_axes(out, "3C(1/4)", make_3C(f, q(1, 4)), {"x", "y", "z"}, make_jordan(f, q(1, 4)));
    add_basis_axes(out, "3C(-1)^x", make_3Cx_minus1(f), {"y", "z"}, make_jordan(f, q(-1)));
    add_basis_axes(out, "Q2(1/3)", make_Q2_third(f), {"s1", "s2"}, make_jordan(f, q(1, 3)));
    add_basis_axes(out, "Q2(1/3)", make_Q2_third(f), {"d1", "d2"}, make_monster(f, q(2, 3), q(1, 3)));
    for (auto alpha : {q(1, 4), q(3), q(-1, 3)}) {
        add_construction(out, make_3C_skew(f, alpha));
    }
    add_construction(out, make_3C_minus1_2(f));
    add_construction(out, make_Q2_skew(f));
    add_construction(out, make_table6(f));
    return out;
}

inline std::vector<CatalogAxis<PrimeField>> f5_catalog_axes()
{
    PrimeField f(5);
    std::vector<CatalogAxis<PrimeField>> out;
    auto third = f.from_rational(q(1, 3));
    auto two_thirds = f.from_rational(q(2, 3));
    add_basis_axes(out, "Q2(1/3) F5", make_Q2_third(f), {"s1", "s2"}, make_jordan(f, third));
    add_basis_axes(out, "Q2(1/3)^x", make_Q2x(f), {"x", "y"}, make_jordan(f, third));
    add_basis_axes(out, "Q2(1/3)^x", make_Q2x(f), {"z"}, make_monster(f, two_thirds, third));
    add_construction(out, make_Q2x_plus_one(f));
    add_construction(out, make_table6(f));
    return out;
}

} // namespace testing
