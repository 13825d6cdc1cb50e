#include "support.hpp"

using namespace axetlab;
using testing::q;

namespace {

const RationalField QQ{};
const Shape skew1{Shape::Kind::Skew, 1};

template <FieldDescriptor Field>
void check_skew_pattern(const SkewConstruction<Field>& s)
{
    INFO(s.label);
    auto ax = realize_axet(s.algebra, {s.p, s.q}, {s.law, s.law}, 24, {s.p_name, s.q_name});
    REQUIRE(ax.points.size() == 3);
    CHECK(has_skew_1_2_pattern(ax.action));
    CHECK(classify_shape(ax.action) == skew1);
    CHECK(s.algebra.subalgebra_closure({s.p, s.q}).size() == s.algebra.dim());
}

} // namespace

TEST_CASE("abstract models", "[axets]")
{
    for (std::size_t k = 1; k <= 8; ++k) {
        CHECK(make_xskew(k).size() == 3 * k);
    }
    auto x5 = make_x(5);
    CHECK(x5.size() == 5);
    // a_1 under tau_0 is a_{-1} = a_4.
    CHECK(x5.tau[0][1] == 4);

    for (std::size_t k : {1U, 3U, 5U, 7U}) {
        SkewModel m(k);
        auto a = m.action();
        auto kk = static_cast<long long>(k);
        CHECK(a.tau[m.index_of(kk)][m.index_of(0)] == m.index_of(0));
    }
    SkewModel m2(2);
    CHECK(m2.index_of(0) == m2.index_of(4));
    CHECK(m2.index_of(1) != m2.index_of(5));
}

TEST_CASE("closure in abstract axets", "[axets]")
{
    SkewModel m2(2);
    auto x2 = m2.action();
    CHECK(closure(x2, {m2.index_of(0), m2.index_of(1)}).size() == 6);

    SkewModel m3(3);
    auto x3 = m3.action();
    PointSet expected{m3.index_of(0), m3.index_of(3), m3.index_of(-3)};
    CHECK(closure(x3, {m3.index_of(0), m3.index_of(3)}) == expected);
    CHECK(closure(x3, {m3.index_of(0)}) == PointSet{m3.index_of(0)});
}

TEST_CASE("closure is extensive, monotone and idempotent", "[axets][property]")
{
    for (std::size_t k = 1; k <= 4; ++k) {
        auto x = make_xskew(k);
        std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
        for (int round = 0; round < 20; ++round) {
            PointSet small{pick(testing::rng())};
            PointSet big = small;
            big.insert(pick(testing::rng()));
            auto cs = closure(x, small);
            auto cb = closure(x, big);
            CHECK(std::includes(cs.begin(), cs.end(), small.begin(), small.end()));
            CHECK(std::includes(cb.begin(), cb.end(), cs.begin(), cs.end()));
            CHECK(closure(x, cb) == cb);
        }
    }
}

TEST_CASE("shape classification", "[axets]")
{
    CHECK(classify_shape(make_x(4)) == Shape{Shape::Kind::X, 4});
    CHECK(classify_shape(make_xskew(2)) == Shape{Shape::Kind::Skew, 2});
    CHECK(classify_shape(make_x(1)) == Shape{Shape::Kind::X, 1});
    CHECK(skew1.display() == "X'(1+2)");
    CHECK(testing::error_kind_of([] { (void)classify_shape(make_x(30)); }) == ErrorKind::TooLarge);
}

TEST_CASE("odd subaxets", "[axets]")
{
    for (std::size_t k : {3U, 5U, 7U}) {
        SkewModel m(k);
        auto kk = static_cast<long long>(k);
        auto y = odd_subaxet(k);
        CHECK(y == PointSet{m.index_of(0), m.index_of(kk), m.index_of(-kk)});
        CHECK(closure(m.action(), y) == y);
        CHECK(classify_shape(restrict_action(m.action(), y)) == skew1);
    }
    CHECK(testing::error_kind_of([] { (void)odd_subaxet(2); }) == ErrorKind::EvenK);
}

TEST_CASE("realized axets", "[axets]")
{
    auto s = make_Q2_skew(QQ);
    auto q2 = realize_axet(s.algebra, {s.p, s.q}, {s.law, s.law});
    CHECK(classify_shape(q2.action) == skew1);
    REQUIRE(q2.points.size() == 3);
    CHECK(q2.points[2] == s.algebra.basis("s2"));

    PrimeField f5(5);
    auto qx = make_Q2x(f5);
    auto third = f5.from_rational(q(1, 3));
    auto x4 = realize_axet(qx, {qx.basis("x"), qx.basis("z")},
                           {make_jordan(f5, third), make_monster(f5, f5.from_rational(q(2, 3)), third)});
    CHECK(classify_shape(x4.action) == Shape{Shape::Kind::X, 4});

    auto c = make_3C_skew(QQ, q(1, 4));
    CHECK(classify_shape(realize_axet(c.algebra, {c.p, c.q}, {c.law, c.law}).action) == skew1);

    auto m = make_3C_minus1_2(QQ);
    auto r = realize_axet(m.algebra, {m.p, m.q}, {m.law, m.law});
    REQUIRE(r.points.size() == 3);
    auto z = sub(*m.algebra.find_identity(), m.algebra.basis("v"));
    CHECK(r.points[2] == z);
    CHECK(r.action.tau[0][1] == 2);
    CHECK(r.action.is_trivial(1));

    auto w = make_Q2x_plus_one(f5);
    CHECK(realize_axet(w.algebra, {w.p, w.q}, {w.law, w.law}).points.size() == 3);

    auto q3 = make_Q2_third(QQ);
    auto one = realize_axet(q3, {q3.basis("s1")}, {make_jordan(QQ, q(1, 3))});
    CHECK(one.points.size() == 1);
    CHECK(classify_shape(one.action) == Shape{Shape::Kind::X, 1});
}

TEST_CASE("realization errors", "[axets]")
{
    auto s = make_Q2_skew(QQ);
    CHECK(testing::error_kind_of([&] { (void)realize_axet(s.algebra, {s.p, s.q}, {s.law, s.law}, 2); }) ==
          ErrorKind::NotClosedWithinBound);
    auto not_axis = testing::el(s.algebra, "s1 + d1");
    CHECK(testing::error_kind_of([&] { (void)realize_axet(s.algebra, {not_axis}, {s.law}); }) == ErrorKind::NotAnAxis);
    CHECK(testing::error_kind_of([&] { (void)realize_axet(s.algebra, {s.p}, {}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("every skew construction realizes X'(1+2)", "[axets][property]")
{
    for (auto alpha : {q(1, 4), q(3), q(-1, 3), q(2, 5)}) {
        check_skew_pattern(make_3C_skew(QQ, alpha));
    }
    check_skew_pattern(make_3C_minus1_2(QQ));
    check_skew_pattern(make_Q2_skew(QQ));
    check_skew_pattern(make_table6(QQ));
    PrimeField f5(5);
    check_skew_pattern(make_Q2x_plus_one(f5));
    check_skew_pattern(make_table6(f5));
    PrimeField f7(7);
    check_skew_pattern(make_3C_skew(f7, f7.element(3)));
    check_skew_pattern(make_Q2_skew(f7));
}
