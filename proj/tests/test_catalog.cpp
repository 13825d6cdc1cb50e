#include "support.hpp"

using namespace axetlab;
using testing::el;
using testing::q;

namespace {

const RationalField QQ{};

template <FieldDescriptor Field>
void check_construction(const SkewConstruction<Field>& s)
{
    INFO(s.label);
    CHECK(verify_axis(s.algebra, s.p, s.law).passes());
    CHECK(verify_axis(s.algebra, s.q, s.law).passes());
    CHECK(s.law.eigenvalue(2) + s.law.eigenvalue(3) == s.algebra.field().one());
    CHECK(s.algebra.subalgebra_closure({s.p, s.q}).size() == s.algebra.dim());
}

} // namespace

TEST_CASE("basic algebras", "[catalog]")
{
    auto c3 = make_3C(QQ, q(2), {"u", "v", "w"});
    CHECK(c3.multiply(c3.basis("u"), c3.basis("w")) == el(c3, "u + w - v"));
    auto b2 = make_2B(QQ);
    CHECK(b2.multiply(b2.basis("a"), b2.basis("b")) == b2.zero_element());
    auto cx = make_3Cx_minus1(QQ);
    CHECK(cx.multiply(cx.basis("y"), cx.basis("z")) == el(cx, "-y - z"));
    CHECK(testing::error_kind_of([] { (void)make_3C(QQ, q(0)); }) == ErrorKind::DegenerateParameter);
}

TEST_CASE("3C(alpha, 1 - alpha)", "[catalog]")
{
    for (auto alpha : {q(1, 4), q(3), q(-1, 3)}) {
        auto s = make_3C_skew(QQ, alpha);
        auto expected = add(scale((alpha + q(1)) / q(2), s.p),
                            scale((q(1) - alpha) / q(2), sub(s.q, s.algebra.basis("z"))));
        CHECK(s.algebra.multiply(s.p, s.q) == expected);
    }
    auto s = make_3C_skew(QQ, q(1, 4));
    CHECK(classify_shape(realize_axet(s.algebra, {s.p, s.q}, {s.law, s.law}).action) ==
          Shape{Shape::Kind::Skew, 1});
    for (auto bad : {q(1, 2), q(-1), q(0), q(1)}) {
        CHECK(testing::error_kind_of([&] { (void)make_3C_skew(QQ, bad); }) == ErrorKind::DegenerateParameter);
    }
}

TEST_CASE("3C(-1, 2)", "[catalog]")
{
    auto s = make_3C_minus1_2(QQ);
    const auto& a = s.algebra;
    CHECK(a.multiply(s.p, s.q) == el(a, "v - u"));
    auto one = *a.find_identity();
    auto z = sub(one, a.basis("v"));
    auto complement = sub(one, s.p);
    CHECK(complement == scale(q(-1), add(s.q, z)));
    CHECK(a.multiply(s.p, complement) == a.zero_element());
    CHECK(miyamoto(a, s.p, s.law).map.apply(s.q) == z);
}

TEST_CASE("Q2(1/3, 2/3)", "[catalog]")
{
    auto s = make_Q2_skew(QQ);
    const auto& a = s.algebra;
    auto one = *a.find_identity();
    auto t1 = s.p;
    auto t2 = sub(one, a.basis("d2"));
    auto s1 = a.basis("s1");
    auto s2 = a.basis("s2");
    CHECK(a.multiply(s1, t1) == add(add(scale(q(2, 3), s1), scale(q(1, 6), t1)), scale(q(-1, 6), t2)));
    CHECK(a.multiply(t1, t2) ==
          add(add(scale(q(2, 3), add(s1, s2)), scale(q(-1, 3), t1)), scale(q(-1, 3), t2)));
    CHECK(testing::error_kind_of([] { (void)make_Q2_skew(PrimeField(5)); }) == ErrorKind::BadCharacteristic);
}

TEST_CASE("Q2(1/3)^x + <1> over F5", "[catalog]")
{
    PrimeField f5(5);
    auto s = make_Q2x_plus_one(f5);
    const auto& a = s.algebra;
    CHECK(a.multiply(s.p, s.q) == el(a, "-2*x - y - 2*z"));
    auto report = verify_axis(a, s.p, s.law);
    REQUIRE(report.passes());
    CHECK(a.multiply(s.p, el(a, "x - y")) == scale(f5.from_rational(q(2, 3)), el(a, "x - y")));
    CHECK(miyamoto(a, s.p, s.law).map.apply(s.q) == a.basis("y"));
    CHECK(testing::error_kind_of([] { (void)make_Q2x(RationalField{}); }) == ErrorKind::BadCharacteristic);
}

TEST_CASE("the P = 0 algebra and the two-axis oracle", "[catalog]")
{
    auto s = make_table6(QQ);
    const auto& a = s.algebra;
    CHECK(a.multiply(a.basis("a"), a.basis("f")) == el(a, "2/3*b + 2/3*c - 1/3*a - 1/3*f"));
    CHECK(a.multiply(a.basis("b"), a.basis("f")) == el(a, "-1/6*a + 1/6*f + 2/3*b"));

    CHECK(rehren_oracle(QQ, q(-1), q(2)) == std::vector<std::string>{"2B", "3C(-1,2)"});
    CHECK(rehren_oracle(QQ, q(1, 4), q(3, 4)) == std::vector<std::string>{"2B", "3C(alpha,1-alpha)"});
    CHECK(rehren_oracle(QQ, q(1, 3), q(1, 4)) == std::vector<std::string>{"2B"});
}

TEST_CASE("generic skew algebra", "[catalog]")
{
    FunctionField f(skew_symbols());
    auto k = SkewConstants<FunctionField>::symbolic(f);
    auto g = make_generic_skew(k);
    auto amb = k.alpha - k.beta;
    auto half = f.from_rational(q(1, 2));
    auto a = g.basis("a");
    auto b = g.basis("b");
    auto c = g.basis("c");
    auto sigma = g.basis("sigma");
    auto expected = add(add(scale(k.delta(), a), scale(half * k.beta * amb, add(b, c))), scale(amb, sigma));
    CHECK(g.multiply(a, sigma) == expected);
    CHECK(g.multiply(b, c) == scale(k.P(), add(a, scale(f.one() / k.beta, sigma))));

    // At the P = 0 point sigma = -a/2 - f/6 rebuilds the P = 0 table.
    SkewConstants<RationalField> p0{QQ, q(1, 3), q(2, 3), q(5, 12), q(2, 3), q(0), q(0), q(0), q(0)};
    REQUIRE(p0.P() == q(0));
    auto t6 = make_table6(QQ).algebra;
    auto sig = el(t6, "-1/2*a - 1/6*f");
    auto rebuilt = [&](const std::string& x, const std::string& y) { return t6.multiply(t6.basis(x), t6.basis(y)); };
    // a*b = beta(a + b) + sigma
    CHECK(rebuilt("a", "b") == add(scale(p0.beta, add(t6.basis("a"), t6.basis("b"))), sig));
    // b*c = P(a + sigma/beta) = 0
    CHECK(rebuilt("b", "c") == t6.zero_element());
}

TEST_CASE("constructions certify their axes", "[catalog][property]")
{
    for (auto alpha : {q(1, 4), q(3), q(-1, 3)}) {
        check_construction(make_3C_skew(QQ, alpha));
    }
    check_construction(make_3C_minus1_2(QQ));
    check_construction(make_Q2_skew(QQ));
    check_construction(make_table6(QQ));
    PrimeField f5(5);
    check_construction(make_Q2x_plus_one(f5));
    check_construction(make_table6(f5));
}

TEST_CASE("Q2(1/3) over F5 has an annihilator", "[catalog]")
{
    PrimeField f5(5);
    auto a = make_Q2_third(f5);
    CHECK_FALSE(a.find_identity());
    auto n = el(a, "s1 + s2 + d1 + d2");
    for (const auto& name : a.basis_names()) {
        CHECK(a.multiply(n, a.basis(name)) == a.zero_element());
    }
    CHECK(a.ideal_closure({n}).size() == 1);
}
