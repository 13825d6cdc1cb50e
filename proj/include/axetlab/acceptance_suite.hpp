#pragma once

#include <functional>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axetlab/algebra.hpp"
#include "axetlab/axes.hpp"
#include "axetlab/axets.hpp"
#include "axetlab/catalog.hpp"
#include "axetlab/elements.hpp"
#include "axetlab/io.hpp"
#include "axetlab/report.hpp"
#include "axetlab/skewverify.hpp"

namespace axetlab {

/// Perturbs one structure constant of a catalog table before comparison.
struct TableMutation {
    std::string table;  // "Q2(1/3)", "Q2x+1" or "P=0"
    std::string x, y;   // basis names of the product
    std::string coordinate;  // basis name of the perturbed coefficient
    Rational delta{1};
};

struct SuiteOptions {
    std::optional<unsigned> characteristic;  // unset runs both 0 and 5
    std::optional<TableMutation> mutation;
    unsigned jobs = 1;
};

struct CriterionResult {
    int number = 0;
    std::string title;
    CheckList checks;
    std::string notice;  // set when the criterion was skipped
    bool skipped() const { return !notice.empty(); }
    bool ok() const { return skipped() || checks.ok(); }
};

struct SuiteReport {
    std::vector<CriterionResult> criteria;
    bool ok() const
    {
        for (const auto& c : criteria) {
            if (!c.ok()) {
                return false;
            }
        }
        return true;
    }
};

namespace suite {

inline bool wants(const SuiteOptions& o, unsigned characteristic)
{
    return !o.characteristic || *o.characteristic == characteristic;
}

// Tables transcribed independently of the catalog constructors.
inline const char* q2_third_text()
{
    return "basis = s1 s2 d1 d2\n"
           "[products]\n"
           "s1*s1 = s1\n"
           "s1*d1 = 1/3*s1 + 1/6*d1 - 1/6*d2\n"
           "s1*d2 = 1/3*s1 - 1/6*d1 + 1/6*d2\n"
           "s2*s2 = s2\n"
           "s2*d1 = 1/3*s2 + 1/6*d1 - 1/6*d2\n"
           "s2*d2 = 1/3*s2 - 1/6*d1 + 1/6*d2\n"
           "d1*d1 = d1\n"
           "d1*d2 = -1/3*s1 - 1/3*s2 + 1/3*d1 + 1/3*d2\n"
           "d2*d2 = d2\n";
}

inline const char* q2x_plus_one_text()
{
    return "basis = x y z one\n"
           "[products]\n"
           "x*x = x\n"
           "x*z = 3*x + y + 2*z\n"
           "x*one = x\n"
           "y*y = y\n"
           "y*z = x + 3*y + 2*z\n"
           "y*one = y\n"
           "z*z = z\n"
           "z*one = z\n"
           "one*one = one\n";
}

inline const char* p0_table_text()
{
    return "basis = b c a f\n"
           "[products]\n"
           "b*b = b\n"
           "b*a = 2/3*b + 1/6*a - 1/6*f\n"
           "b*f = 2/3*b - 1/6*a + 1/6*f\n"
           "c*c = c\n"
           "c*a = 2/3*c + 1/6*a - 1/6*f\n"
           "c*f = 2/3*c - 1/6*a + 1/6*f\n"
           "a*a = a\n"
           "a*f = 2/3*b + 2/3*c - 1/3*a - 1/3*f\n"
           "f*f = f\n";
}

template <FieldDescriptor Field>
StructureAlgebra<Field> parse_table(const Field& field, const char* body)
{
    auto any = parse_algebra_file("field = " + field.describe() + "\n" + body);
    return std::get<AlgebraFile<Field>>(std::move(any)).algebra;
}

template <FieldDescriptor Field>
StructureAlgebra<Field> mutate(StructureAlgebra<Field> alg, const std::string& table, const SuiteOptions& o)
{
    if (!o.mutation || o.mutation->table != table) {
        return alg;
    }
    const auto& m = *o.mutation;
    auto i = alg.index_of(m.x);
    auto j = alg.index_of(m.y);
    auto k = alg.index_of(m.coordinate);
    if (!i || !j || !k) {
        fail(ErrorKind::InvalidArgument, "mutation names an unknown entry of " + table);
    }
    auto v = alg.product(*i, *j);
    v[*k] = v[*k] + alg.field().from_rational(m.delta);
    alg.set_product(*i, *j, v);
    return alg;
}

/// Entrywise comparison; the detail lists every differing product.
template <FieldDescriptor Field>
std::string table_differences(const StructureAlgebra<Field>& got, const StructureAlgebra<Field>& want)
{
    if (got.basis_names() != want.basis_names()) {
        return "basis differs";
    }
    std::string diff;
    for (std::size_t i = 0; i < got.dim(); ++i) {
        for (std::size_t j = i; j < got.dim(); ++j) {
            if (got.product(i, j) != want.product(i, j)) {
                diff += (diff.empty() ? "" : "; ") + got.basis_name(i) + "*" + got.basis_name(j) + " = " +
                        format_element(got, got.product(i, j)) + ", expected " + format_element(want, want.product(i, j));
            }
        }
    }
    return diff;
}

template <FieldDescriptor Field>
void compare_table(CheckList& list, const std::string& anchor, const StructureAlgebra<Field>& got,
                   const StructureAlgebra<Field>& want)
{
    auto diff = table_differences(got, want);
    list.add(anchor, diff.empty(), diff);
}

/// Every single-coefficient perturbation of `alg` must be caught by the
/// comparison against `want`.
template <FieldDescriptor Field>
void check_mutations_detected(CheckList& list, const std::string& anchor, const StructureAlgebra<Field>& alg,
                              const StructureAlgebra<Field>& want)
{
    std::size_t tried = 0, missed = 0;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        for (std::size_t j = i; j < alg.dim(); ++j) {
            for (std::size_t k = 0; k < alg.dim(); ++k) {
                auto m = alg;
                auto v = m.product(i, j);
                v[k] = v[k] + alg.field().one();
                m.set_product(i, j, v);
                ++tried;
                missed += table_differences(m, want).empty() ? 1 : 0;
            }
        }
    }
    list.add(anchor, missed == 0 && tried > 0,
             std::to_string(tried - missed) + " of " + std::to_string(tried) + " perturbations detected");
}

template <FieldDescriptor Field>
void expect_element(CheckList& list, const std::string& anchor, const StructureAlgebra<Field>& alg,
                    const typename StructureAlgebra<Field>::Element& got, const std::string& want_text)
{
    auto want = parse_element(alg, want_text);
    list.add(anchor, got == want, got == want ? "" : format_element(alg, got) + " != " + want_text);
}

template <FieldDescriptor Field>
void expect_eigenvector(CheckList& list, const std::string& anchor, const StructureAlgebra<Field>& alg,
                        const typename StructureAlgebra<Field>::Element& axis, const std::string& v_text,
                        const ScalarOf<Field>& lambda)
{
    auto v = parse_element(alg, v_text);
    bool ok = !is_zero_vector(v) && alg.multiply(axis, v) == scale(lambda, v);
    list.add(anchor, ok, ok ? "" : "a*v - lambda v = " + format_element(alg, sub(alg.multiply(axis, v), scale(lambda, v))));
}

template <FieldDescriptor Field>
void expect_axis(CheckList& list, const std::string& anchor, const StructureAlgebra<Field>& alg,
                 const typename StructureAlgebra<Field>::Element& a, const FusionLaw<Field>& law)
{
    auto r = verify_axis(alg, a, law);
    list.add(anchor + " is a " + law.name() + "-axis", r.passes(), describe_report(alg, r, law));
}

/// Same structure constants under new basis names.
template <FieldDescriptor Field>
StructureAlgebra<Field> rename(const StructureAlgebra<Field>& alg, std::vector<std::string> names)
{
    std::vector<typename StructureAlgebra<Field>::Element> basis;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        basis.push_back(alg.basis(i));
    }
    return restrict_to(alg, basis, std::move(names));
}

inline std::vector<Rational> three_c_samples() { return {Rational(1, 4), Rational(3), Rational(-1, 3)}; }

// 1. Multiplication-table fidelity.
inline CheckList table_fidelity(const SuiteOptions& o)
{
    CheckList list{"tables", {}};
    if (wants(o, 0)) {
        RationalField q;
        auto q2 = mutate(make_Q2_third(q), "Q2(1/3)", o);
        auto q2_want = parse_table(q, q2_third_text());
        compare_table(list, "Q2(1/3) table over Q", q2, q2_want);
        check_mutations_detected(list, "Q2(1/3) table mutations", make_Q2_third(q), q2_want);
        auto p0 = mutate(make_table6(q).algebra, "P=0", o);
        auto p0_want = parse_table(q, p0_table_text());
        compare_table(list, "P = 0 table over Q", p0, p0_want);
        check_mutations_detected(list, "P = 0 table mutations", make_table6(q).algebra, p0_want);
    }
    if (wants(o, 5)) {
        PrimeField f5(5);
        auto qx = mutate(make_Q2x_plus_one(f5).algebra, "Q2x+1", o);
        auto qx_want = parse_table(f5, q2x_plus_one_text());
        compare_table(list, "Q2(1/3)^x + <1> table over F5", qx, qx_want);
        check_mutations_detected(list, "Q2(1/3)^x + <1> table mutations", make_Q2x_plus_one(f5).algebra, qx_want);
        auto q2 = mutate(make_Q2_third(f5), "Q2(1/3)", o);
        compare_table(list, "Q2(1/3) table over F5", q2, parse_table(f5, q2_third_text()));
        auto p0 = mutate(make_table6(f5).algebra, "P=0", o);
        compare_table(list, "P = 0 table over F5", p0, parse_table(f5, p0_table_text()));
    }
    return list;
}

// 2. Displayed products of the constructions.
inline CheckList construction_products(const SuiteOptions& o)
{
    CheckList list{"products", {}};
    if (wants(o, 0)) {
        RationalField q;
        for (const auto& alpha : three_c_samples()) {
            auto s = make_3C_skew(q, alpha);
            auto half = Rational(1, 2);
            auto want = add(scale((alpha + Rational(1)) * half, s.p),
                            scale((Rational(1) - alpha) * half, sub(s.algebra.basis("y"), s.algebra.basis("z"))));
            auto got = s.algebra.multiply(s.p, s.q);
            list.add("wy in 3C(" + alpha.to_string() + ")", got == want, format_element(s.algebra, got));
        }
        auto c = make_3C_minus1_2(q);
        const auto& ca = c.algebra;
        expect_element(list, "wy = v - u in 3C(-1,2)", ca, ca.multiply(c.p, c.q), "v - u");
        expect_element(list, "y(u - v) = u - w in 3C(-1,2)", ca, ca.multiply(c.q, parse_element(ca, "u - v")), "u - w");
        auto one = *ca.find_identity();
        auto z = sub(one, ca.basis("v"));
        auto yz = ca.multiply(c.q, z);
        list.add("yz = -y - z in 3C(-1,2)", yz == scale(Rational(-1), add(c.q, z)), format_element(ca, yz));

        auto q2 = make_Q2_skew(q);
        const auto& qa = q2.algebra;
        auto unit = *qa.find_identity();
        auto t1 = q2.p;
        auto t2 = sub(unit, qa.basis("d2"));
        auto s1 = qa.basis("s1");
        auto s2 = qa.basis("s2");
        auto st = qa.multiply(s1, t1);
        auto st_want = add(add(scale(Rational(2, 3), s1), scale(Rational(1, 6), t1)), scale(Rational(-1, 6), t2));
        list.add("s1 t1 = 2/3 s1 + 1/6 t1 - 1/6 t2", st == st_want, format_element(qa, st));
        auto tt = qa.multiply(t1, t2);
        auto tt_want = add(add(scale(Rational(2, 3), add(s1, s2)), scale(Rational(-1, 3), t1)), scale(Rational(-1, 3), t2));
        list.add("t1 t2 = 2/3 s1 + 2/3 s2 - 1/3 t1 - 1/3 t2", tt == tt_want, format_element(qa, tt));
    }
    if (wants(o, 5)) {
        PrimeField f5(5);
        auto s = make_Q2x_plus_one(f5);
        const auto& a = s.algebra;
        expect_element(list, "wx = -2x - y - 2z over F5", a, a.multiply(s.p, a.basis("x")), "-2*x - y - 2*z");
        expect_element(list, "wy = -x - 2y - 2z over F5", a, a.multiply(s.p, a.basis("y")), "-x - 2*y - 2*z");
        expect_element(list, "w(y + 2z) = wy over F5", a, a.multiply(s.p, parse_element(a, "y + 2*z")),
                       "-x - 2*y - 2*z");
    }
    return list;
}

template <FieldDescriptor Field>
void certify_pair(CheckList& list, const SkewConstruction<Field>& s)
{
    const Field& field = s.algebra.field();
    expect_axis(list, s.label + ": " + s.p_name, s.algebra, s.p, s.law);
    expect_axis(list, s.label + ": " + s.q_name, s.algebra, s.q, s.law);
    expect_axis(list, s.label + ": " + s.q_name, s.algebra, s.q, make_jordan(field, s.law.eigenvalue(2)));
}

// 3. Axis certification and listed eigenvectors.
inline CheckList axis_certification(const SuiteOptions& o)
{
    CheckList list{"axes", {}};
    if (wants(o, 0)) {
        RationalField q;
        for (const auto& alpha : three_c_samples()) {
            auto s = make_3C_skew(q, alpha);
            certify_pair(list, s);
            auto tag = "3C(" + alpha.to_string() + "): ";
            auto beta = Rational(1) - alpha;
            const auto& a = s.algebra;
            auto w = format_element(a, s.p);
            expect_eigenvector(list, tag + "w in A_1(w)", a, s.p, w, Rational(1));
            expect_eigenvector(list, tag + "x in A_0(w)", a, s.p, "x", Rational(0));
            expect_eigenvector(list, tag + "y - z in A_{1-alpha}(w)", a, s.p, "y - z", beta);
            auto decomposition = add(add(scale(alpha / Rational(2), a.basis("x")), scale((alpha + Rational(1)) / Rational(2), s.p)),
                                     scale(Rational(1, 2), parse_element(a, "y - z")));
            list.add(tag + "y = alpha/2 x + (alpha+1)/2 w + (y - z)/2", decomposition == s.q);
        }
        auto c = make_3C_minus1_2(q);
        certify_pair(list, c);
        const auto& ca = c.algebra;
        auto z = format_element(ca, sub(*ca.find_identity(), ca.basis("v")));
        auto y = format_element(ca, c.q);
        expect_eigenvector(list, "3C(-1,2): w in A_1(w)", ca, c.p, "w", Rational(1));
        expect_eigenvector(list, "3C(-1,2): -(y + z) in A_0(w)", ca, c.p, "-(" + y + ") - (" + z + ")", Rational(0));
        expect_eigenvector(list, "3C(-1,2): y - z in A_2(w)", ca, c.p, "(" + y + ") - (" + z + ")", Rational(2));

        auto q2 = make_Q2_skew(q);
        certify_pair(list, q2);
        const auto& qa = q2.algebra;
        expect_element(list, "Q2: t1 = 1/5(3s1 + 3s2 - 2d1 + 3d2)", qa, q2.p, "1/5*(3*s1 + 3*s2 - 2*d1 + 3*d2)");
        expect_eigenvector(list, "Q2: t1 in A_1(t1)", qa, q2.p, "1/5*(3*s1 + 3*s2 - 2*d1 + 3*d2)", Rational(1));
        expect_eigenvector(list, "Q2: d1 in A_0(t1)", qa, q2.p, "d1", Rational(0));
        expect_eigenvector(list, "Q2: s1 + s2 - d2 in A_{1/3}(t1)", qa, q2.p, "s1 + s2 - d2", Rational(1, 3));
        expect_eigenvector(list, "Q2: s1 - s2 in A_{2/3}(t1)", qa, q2.p, "s1 - s2", Rational(2, 3));
        auto s1 = add(add(add(scale(Rational(5, 12), q2.p), scale(Rational(1, 6), qa.basis("d1"))),
                          scale(Rational(1, 4), parse_element(qa, "s1 + s2 - d2"))),
                      scale(Rational(1, 2), parse_element(qa, "s1 - s2")));
        list.add("Q2: s1 = 5/12 t1 + 1/6 d1 + 1/4(s1 + s2 - d2) + 1/2(s1 - s2)", s1 == qa.basis("s1"));
        expect_axis(list, "Q2(1/3): s1", qa, qa.basis("s1"), make_jordan(q, Rational(1, 3)));
        expect_axis(list, "Q2(1/3): d1", qa, qa.basis("d1"), make_monster(q, Rational(2, 3), Rational(1, 3)));

        GenericSkew g;
        list.append(check_eigenvectors_generic(g));
    }
    if (wants(o, 5)) {
        PrimeField f5(5);
        auto s = make_Q2x_plus_one(f5);
        certify_pair(list, s);
        const auto& a = s.algebra;
        auto third = f5.from_rational(Rational(1, 3));
        auto two_thirds = f5.from_rational(Rational(2, 3));
        expect_eigenvector(list, "F5: w in A_1(w)", a, s.p, "one - z", f5.one());
        expect_eigenvector(list, "F5: z in A_0(w)", a, s.p, "z", f5.zero());
        expect_eigenvector(list, "F5: x + y + 3z in A_{1/3}(w)", a, s.p, "x + y + 3*z", third);
        expect_eigenvector(list, "F5: x - y in A_{2/3}(w)", a, s.p, "x - y", two_thirds);
        auto half = f5.from_rational(Rational(1, 2));
        auto x = add(add(a.basis("z"), scale(half, parse_element(a, "x + y + 3*z"))), scale(half, parse_element(a, "x - y")));
        list.add("F5: x = z + 1/2(x + y + 3z) + 1/2(x - y)", x == a.basis("x"));
        auto qx = make_Q2x(f5);
        expect_axis(list, "Q2(1/3)^x: x", qx, qx.basis("x"), make_jordan(f5, third));
        expect_axis(list, "Q2(1/3)^x: z", qx, qx.basis("z"), make_monster(f5, two_thirds, third));
    }
    return list;
}

template <FieldDescriptor Field>
void check_involutions(CheckList& list, const SkewConstruction<Field>& s, const typename StructureAlgebra<Field>::Element& image,
                       const std::string& image_name)
{
    const Field& field = s.algebra.field();
    auto tp = miyamoto(s.algebra, s.p, s.law);
    auto got = tp.map.apply(s.q);
    list.add(s.label + ": tau_" + s.p_name + "(" + s.q_name + ") = " + image_name, got == image,
             format_element(s.algebra, got));
    list.add(s.label + ": tau_" + s.p_name + " is an automorphism", is_automorphism(s.algebra, tp.map));
    auto square = tp.map * tp.map;
    list.add(s.label + ": tau_" + s.p_name + " is an involution",
             square == Matrix<ScalarOf<Field>>::identity(field, s.algebra.dim()) && !tp.is_identity(field));
    // The Jordan axis is read under the Monster grading, where alpha is even.
    auto tq = miyamoto(s.algebra, s.q, s.law);
    list.add(s.label + ": tau_" + s.q_name + " is the identity", tq.is_identity(field));
}

// 4. Involution actions.
inline CheckList involution_actions(const SuiteOptions& o)
{
    CheckList list{"involutions", {}};
    if (wants(o, 0)) {
        RationalField q;
        for (const auto& alpha : three_c_samples()) {
            auto s = make_3C_skew(q, alpha);
            check_involutions(list, s, s.algebra.basis("z"), "z");
        }
        auto c = make_3C_minus1_2(q);
        check_involutions(list, c, sub(*c.algebra.find_identity(), c.algebra.basis("v")), "z");
        auto q2 = make_Q2_skew(q);
        check_involutions(list, q2, q2.algebra.basis("s2"), "s2");
    }
    if (wants(o, 5)) {
        auto s = make_Q2x_plus_one(PrimeField(5));
        check_involutions(list, s, s.algebra.basis("y"), "y");
    }
    return list;
}

template <FieldDescriptor Field>
void check_skew_axet(CheckList& list, const SkewConstruction<Field>& s)
{
    auto ax = realize_axet(s.algebra, {s.p, s.q}, {s.law, s.law}, 24, {s.p_name, s.q_name});
    auto shape = classify_shape(ax.action);
    list.add(s.label + ": axet has 3 points", ax.points.size() == 3, std::to_string(ax.points.size()) + " points");
    list.add(s.label + ": axet is X'(1+2)", shape == Shape{Shape::Kind::Skew, 1} && isomorphic(ax.action, make_xskew(1)),
             shape.to_string());
}

// 5. Axet shapes.
inline CheckList axet_shapes(const SuiteOptions& o)
{
    CheckList list{"axets", {}};
    if (wants(o, 0)) {
        RationalField q;
        check_skew_axet(list, make_3C_skew(q, Rational(1, 4)));
        check_skew_axet(list, make_3C_minus1_2(q));
        check_skew_axet(list, make_Q2_skew(q));
    }
    if (wants(o, 5)) {
        PrimeField f5(5);
        check_skew_axet(list, make_Q2x_plus_one(f5));
        auto qx = make_Q2x(f5);
        auto third = f5.from_rational(Rational(1, 3));
        auto ax = realize_axet(qx, {qx.basis("x"), qx.basis("z")},
                               {make_jordan(f5, third), make_monster(f5, f5.from_rational(Rational(2, 3)), third)}, 24,
                               {"x", "z"});
        auto shape = classify_shape(ax.action);
        list.add("Q2(1/3)^x from {x, z} has axet X(4)", shape == Shape{Shape::Kind::X, 4}, shape.to_string());
    }
    for (std::size_t k = 1; k <= 8; ++k) {
        SkewModel m(k);
        auto cl = closure(m.action(), {m.index_of(0), m.index_of(1)});
        list.add("closure of {0, 1} in X'(" + std::to_string(k) + "+" + std::to_string(2 * k) + ") has " +
                     std::to_string(3 * k) + " points",
                 cl.size() == 3 * k, std::to_string(cl.size()));
    }
    for (std::size_t k : {3u, 5u, 7u}) {
        auto sub_axet = restrict_action(make_xskew(k), odd_subaxet(k));
        auto shape = classify_shape(sub_axet);
        list.add("odd subaxet of X'(" + std::to_string(k) + "+" + std::to_string(2 * k) + ") is Xskew(1)",
                 shape == Shape{Shape::Kind::Skew, 1}, shape.to_string());
    }
    return list;
}

// 6. Symbolic relation suite.
inline CheckList symbolic_relations(const SuiteOptions& o)
{
    CheckList list{"symbolic", {}};
    if (!wants(o, 0)) {
        return list;
    }
    GenericSkew g;
    list.append(check_constant_chains(g));
    list.append(check_bracket_table(g));
    list.append(check_projection_relation(g));
    list.append(check_u_relation(g));
    list.append(check_v_relation(g));
    list.append(check_qr_consistency(g).checks);
    RationalField q;
    list.append(check_concrete_constants(make_3C_skew(q, Rational(1, 4))));
    list.append(check_concrete_constants(make_3C_minus1_2(q)));
    list.append(check_concrete_constants(make_Q2_skew(q)));
    list.append(check_concrete_constants(make_table6(q)));
    return list;
}

// 7. Classification replay.
inline CheckList classification_replay(const SuiteOptions& o)
{
    CheckList list{"classification", {}};
    if (wants(o, 0)) {
        auto p0 = replay_branch_P0(0);
        list.append(p0.constraints);
        list.add("P = 0 outcome over Q is Q2(1/3, 2/3)", p0.outcome == "Q2(1/3, 2/3)", p0.outcome);
        std::size_t contradictions = 0, three_c = 0;
        for (const auto& b : replay_branch_Pnonzero()) {
            CheckList tagged{b.label, b.constraints.items};
            list.append(tagged);
            contradictions += b.outcome.rfind("contradiction", 0) == 0 ? 1 : 0;
            three_c += b.outcome == "3C(-1,2)" ? 1 : 0;
        }
        list.add("P != 0 yields three contradictions and one 3C(-1,2)", contradictions == 3 && three_c == 1,
                 std::to_string(contradictions) + " contradictions, " + std::to_string(three_c) + " 3C(-1,2)");
    }
    if (wants(o, 5)) {
        auto p5 = replay_branch_P0(5);
        CheckList tagged{"P=0 (char 5)", p5.constraints.items};
        list.append(tagged);
        list.add("P = 0 outcome over F5 is Q2(1/3)^x + <1>", p5.outcome == "Q2(1/3)^x + <1>", p5.outcome);
    }
    return list;
}

// 8. Identity and radical.
inline CheckList identity_radical(const SuiteOptions& o)
{
    CheckList list{"identity", {}};
    if (wants(o, 0)) {
        RationalField q;
        auto a = make_Q2_third(q);
        auto unit = a.find_identity();
        auto want = parse_element(a, "3/5*(s1 + s2 + d1 + d2)");
        list.add("identity of Q2(1/3) over Q is 3/5(s1 + s2 + d1 + d2)", unit && *unit == want,
                 unit ? format_element(a, *unit) : "no identity");
    }
    if (wants(o, 5)) {
        PrimeField f5(5);
        auto a = make_Q2_third(f5);
        list.add("Q2(1/3) over F5 has no identity", !a.find_identity().has_value());
        auto r = parse_element(a, "s1 + s2 + d1 + d2");
        bool annihilates = true;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            annihilates = annihilates && is_zero_vector(a.multiply(r, a.basis(i)));
        }
        list.add("s1 + s2 + d1 + d2 annihilates Q2(1/3) over F5", annihilates);
        auto ideal = a.ideal_closure({r});
        list.add("the radical is one-dimensional", ideal.size() == 1, std::to_string(ideal.size()));
        auto quotient_alg = quotient(a, {r});
        auto glued = rename(adjoin_identity(quotient_alg, "one"), {"x", "y", "z", "one"});
        compare_table(list, "quotient plus identity reproduces the Q2(1/3)^x + <1> table", glued,
                      parse_table(f5, q2x_plus_one_text()));
    }
    return list;
}

// 9. alpha + beta = 1 for every classified skew algebra.
inline CheckList parameter_sum(const SuiteOptions& o)
{
    CheckList list{"alpha + beta", {}};
    auto check = [&](const auto& s) {
        auto sum = s.law.eigenvalue(2) + s.law.eigenvalue(3);
        list.add(s.label + ": alpha + beta = 1", sum == s.algebra.field().one(), "alpha + beta = " + sum.to_string());
    };
    if (wants(o, 0)) {
        RationalField q;
        for (const auto& alpha : three_c_samples()) {
            check(make_3C_skew(q, alpha));
        }
        check(make_3C_minus1_2(q));
        check(make_Q2_skew(q));
        check(make_table6(q));
    }
    if (wants(o, 5)) {
        check(make_Q2x_plus_one(PrimeField(5)));
    }
    return list;
}

template <FieldDescriptor Field>
void seress_all(CheckList& list, const std::string& name, const StructureAlgebra<Field>& alg,
                const std::vector<std::pair<std::string, typename StructureAlgebra<Field>::Element>>& axes)
{
    for (const auto& [label, a] : axes) {
        auto failures = seress_failures(alg, a);
        list.add(name + ": " + label + " associates with A_{0,1}", failures == 0,
                 failures == 0 ? "" : std::to_string(failures) + " failing pairs");
    }
}

template <FieldDescriptor Field>
std::vector<std::pair<std::string, typename StructureAlgebra<Field>::Element>> basis_axes(const StructureAlgebra<Field>& a)
{
    std::vector<std::pair<std::string, typename StructureAlgebra<Field>::Element>> out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out.emplace_back(a.basis_name(i), a.basis(i));
    }
    return out;
}

template <FieldDescriptor Field>
void seress_construction(CheckList& list, const SkewConstruction<Field>& s)
{
    auto c = miyamoto(s.algebra, s.p, s.law).map.apply(s.q);
    seress_all(list, s.label, s.algebra, {{s.p_name, s.p}, {s.q_name, s.q}, {"tau(" + s.q_name + ")", c}});
}

// 10. Seress property on every catalog algebra and axis.
inline CheckList seress_property(const SuiteOptions& o)
{
    CheckList list{"seress", {}};
    if (wants(o, 0)) {
        RationalField q;
        auto two_b = make_2B(q);
        seress_all(list, "2B", two_b, basis_axes(two_b));
        for (const auto& alpha : three_c_samples()) {
            auto c3 = make_3C(q, alpha);
            seress_all(list, "3C(" + alpha.to_string() + ")", c3, basis_axes(c3));
            seress_construction(list, make_3C_skew(q, alpha));
        }
        auto c3x = make_3Cx_minus1(q);
        seress_all(list, "3C(-1)^x", c3x, basis_axes(c3x));
        auto c2 = make_3C(q, Rational(2), {"u", "v", "w"});
        seress_all(list, "3C(2)", c2, basis_axes(c2));
        seress_construction(list, make_3C_minus1_2(q));
        auto q2 = make_Q2_third(q);
        seress_all(list, "Q2(1/3)", q2, basis_axes(q2));
        seress_construction(list, make_Q2_skew(q));
        auto t6 = make_table6(q);
        seress_all(list, "P = 0 algebra", t6.algebra, basis_axes(t6.algebra));
    }
    if (wants(o, 5)) {
        PrimeField f5(5);
        auto q2 = make_Q2_third(f5);
        seress_all(list, "Q2(1/3) over F5", q2, basis_axes(q2));
        auto qx = make_Q2x(f5);
        seress_all(list, "Q2(1/3)^x", qx, basis_axes(qx));
        seress_construction(list, make_Q2x_plus_one(f5));
    }
    return list;
}

} // namespace suite

inline const std::vector<std::pair<std::string, std::function<CheckList(const SuiteOptions&)>>>& suite_criteria()
{
    static const std::vector<std::pair<std::string, std::function<CheckList(const SuiteOptions&)>>> list{
        {"Multiplication-table fidelity", suite::table_fidelity},
        {"Construction replays", suite::construction_products},
        {"Axis certification", suite::axis_certification},
        {"Involution actions", suite::involution_actions},
        {"Axet shapes", suite::axet_shapes},
        {"Symbolic relation suite", suite::symbolic_relations},
        {"Classification replay", suite::classification_replay},
        {"Identity and radical facts", suite::identity_radical},
        {"alpha + beta = 1 for classified skew algebras", suite::parameter_sum},
        {"Seress property", suite::seress_property},
    };
    return list;
}

/// Runs one criterion (1-based); exceptions become a failing item.
inline CriterionResult run_criterion(int number, const SuiteOptions& options)
{
    const auto& entry = suite_criteria().at(static_cast<std::size_t>(number - 1));
    CriterionResult r{number, entry.first, {entry.first, {}}, {}};
    try {
        r.checks = entry.second(options);
        r.checks.title = entry.first;
    } catch (const std::exception& e) {
        r.checks.add("completed without error", false, e.what());
    }
    if (r.checks.items.empty()) {
        r.notice = "skipped: no items for characteristic " + std::to_string(options.characteristic.value_or(0));
    }
    return r;
}

/// All criteria in order. With jobs > 1 they run concurrently; the report
/// order does not depend on scheduling.
inline SuiteReport run_acceptance_suite(const SuiteOptions& options = {})
{
    SuiteReport report;
    int n = static_cast<int>(suite_criteria().size());
    if (options.jobs <= 1) {
        for (int i = 1; i <= n; ++i) {
            report.criteria.push_back(run_criterion(i, options));
        }
        return report;
    }
    for (int start = 1; start <= n; start += static_cast<int>(options.jobs)) {
        std::vector<std::future<CriterionResult>> batch;
        for (int i = start; i <= n && i < start + static_cast<int>(options.jobs); ++i) {
            batch.push_back(std::async(std::launch::async, run_criterion, i, options));
        }
        for (auto& f : batch) {
            report.criteria.push_back(f.get());
        }
    }
    return report;
}

} // namespace axetlab
