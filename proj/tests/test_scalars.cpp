#include "support.hpp"

using namespace axetlab;
using testing::q;

TEST_CASE("rational arithmetic is exact and canonical", "[scalars]")
{
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK((q(1, 3) + q(1, 6)).to_string() == "1/2");
    CHECK(q(2, 4).to_string() == q(1, 2).to_string());
    CHECK(q(-3, -6) == q(1, 2));
    CHECK(Rational::parse("-10/4") == q(-5, 2));
    CHECK(testing::error_kind_of([] { (void)(q(1) / q(0)); }) == ErrorKind::DivisionByZero);
    CHECK(testing::error_kind_of([] { (void)Rational::parse("1/x"); }) == ErrorKind::ParseError);
}

TEST_CASE("prime field arithmetic", "[scalars]")
{
    PrimeField f5(5);
    CHECK(f5.element(3) * f5.element(2) == f5.one());
    CHECK(f5.from_rational(q(1, 3)) == f5.element(2));
    CHECK(f5.from_rational(q(-2, 3)) == f5.element(1));
    CHECK(testing::error_kind_of([&] { (void)f5.from_rational(q(1, 5)); }) == ErrorKind::DivisionByZero);
    CHECK(testing::error_kind_of([&] { (void)f5.zero().inverse(); }) == ErrorKind::DivisionByZero);
    CHECK(testing::error_kind_of([] { PrimeField f(2); }) == ErrorKind::BadField);
    CHECK(testing::error_kind_of([] { PrimeField f(9); }) == ErrorKind::BadField);
    PrimeField f7(7);
    CHECK(testing::error_kind_of([&] { (void)(f5.one() + f7.one()); }) == ErrorKind::MixedFields);
}

TEST_CASE("rational functions: inverse, evaluation and equality", "[scalars]")
{
    FunctionField f(skew_symbols());
    auto alpha = f.variable("alpha");
    auto beta = f.variable("beta");
    auto l1 = f.variable("l1");
    auto one = f.one();

    CHECK((alpha - beta) * (one / (alpha - beta)) == one);
    CHECK(((alpha - beta) * (one / (alpha - beta))).is_one());

    SkewConstants<FunctionField> k = SkewConstants<FunctionField>::symbolic(f);
    std::map<std::string, Rational> p0{{"alpha", q(1, 3)}, {"beta", q(2, 3)}, {"l1", q(5, 12)}, {"l1f", q(2, 3)}};
    CHECK(evaluate_at(k.P(), p0) == q(0));
    CHECK(evaluate_at(k.gamma(), {{"beta", q(2, 3)}, {"l1", q(5, 12)}}) == q(1, 4));
    CHECK(evaluate_at(f.from_rational(q(7)), {}) == q(7));

    // (alpha - 1) gamma agrees with both the epsilon and the delta forms.
    auto lhs = (alpha - one) * (beta - l1);
    CHECK(lhs == (one - alpha) * l1 - beta + alpha * beta);
    CHECK(lhs == (one - alpha) * l1 + beta * (alpha - beta - one) + beta * beta);
    CHECK_FALSE(alpha == beta);

    CHECK(testing::error_kind_of([&] { (void)evaluate_at(alpha, {{"beta", q(1)}}); }) == ErrorKind::UnboundSymbol);
    CHECK(testing::error_kind_of([&] { (void)evaluate_at(one / (alpha - beta), {{"alpha", q(2)}, {"beta", q(2)}}); }) ==
          ErrorKind::DenominatorVanishes);
    CHECK(testing::error_kind_of([&] { (void)f.variable("nu"); }) == ErrorKind::UnboundSymbol);

    FunctionField other(std::vector<std::string>{"alpha"});
    CHECK(testing::error_kind_of([&] { (void)(alpha + other.variable("alpha")); }) == ErrorKind::MixedFields);
}

TEST_CASE("substitution and linear solving", "[scalars]")
{
    FunctionField f(skew_symbols());
    auto alpha = f.variable("alpha");
    auto beta = f.variable("beta");
    auto two = f.from_rational(q(2));
    auto g = alpha * beta + two * beta - f.one();
    auto solved = solve_linear(g, "beta");
    REQUIRE(solved);
    CHECK(*solved == f.one() / (alpha + two));
    CHECK(substitute(g, {{"beta", *solved}}).is_zero());
    CHECK_FALSE(solve_linear(beta * beta - alpha, "beta"));
}

namespace {

template <FieldDescriptor Field, class Gen>
void check_field_axioms(const Field& field, Gen gen)
{
    for (int round = 0; round < 50; ++round) {
        auto a = gen();
        auto b = gen();
        auto c = gen();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + field.zero() == a);
        CHECK(a * field.one() == a);
        CHECK(a - a == field.zero());
        if (!a.is_zero()) {
            CHECK(a * (field.one() / a) == field.one());
        }
    }
}

} // namespace

TEST_CASE("field axioms hold on random inputs", "[scalars][property]")
{
    check_field_axioms(RationalField{}, [] { return testing::random_rational(50); });

    PrimeField f101(101);
    check_field_axioms(f101, [&] { return f101.element(std::uniform_int_distribution<long>(0, 100)(testing::rng())); });

    FunctionField ff(std::vector<std::string>{"x", "y"});
    auto x = ff.variable("x");
    auto y = ff.variable("y");
    check_field_axioms(ff, [&] {
        auto r = [] { return testing::random_rational(5); };
        auto num = ff.from_rational(r()) * x + ff.from_rational(r()) * y * y + ff.from_rational(r());
        auto den = ff.from_rational(r()) * x * y + ff.one();
        return num / den;
    });
}

TEST_CASE("equality of rational functions agrees with evaluation", "[scalars][property]")
{
    FunctionField ff(std::vector<std::string>{"x", "y"});
    auto x = ff.variable("x");
    auto y = ff.variable("y");
    auto one = ff.one();
    // Same function written two ways, and a nearby different one.
    auto f = (x * x - y * y) / (x + y + one);
    auto g = (x - y) * (x + y) / (one + y + x);
    auto h = (x * x - y * y + one) / (x + y + one);
    REQUIRE(f == g);
    REQUIRE(g == f);
    REQUIRE_FALSE(f == h);
    int points = 0;
    while (points < 20) {
        std::map<std::string, Rational> at{{"x", testing::random_rational()}, {"y", testing::random_rational()}};
        if ((at["x"] + at["y"] + q(1)).is_zero()) {
            continue;
        }
        ++points;
        CHECK(evaluate_at(f, at) == evaluate_at(g, at));
        CHECK(evaluate_at(f, at) != evaluate_at(h, at));
    }
}
