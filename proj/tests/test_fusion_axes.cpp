#include "support.hpp"

using namespace axetlab;
using testing::el;
using testing::q;

namespace {

const RationalField QQ{};

// Indices shared by make_jordan and make_monster.
constexpr std::size_t ONE = 0;
constexpr std::size_t ZERO = 1;
constexpr std::size_t ALPHA = 2;
constexpr std::size_t BETA = 3;

template <FieldDescriptor Field>
void check_axis_properties(const testing::CatalogAxis<Field>& c)
{
    INFO(c.label << " under " << c.law.name());
    const auto& alg = c.algebra;
    const Field& field = alg.field();
    auto report = verify_axis(alg, c.axis, c.law);
    REQUIRE(report.passes());

    std::size_t total = 0;
    for (std::size_t i = 0; i < c.law.size(); ++i) {
        total += report.eigenspace_dim(i);
    }
    CHECK(total == alg.dim());

    auto grading = find_c2_grading(c.law);
    REQUIRE(grading);
    auto tau = miyamoto(alg, c.axis, c.law);
    CHECK(tau.map * tau.map == Matrix<ScalarOf<Field>>::identity(field, alg.dim()));
    CHECK(is_automorphism(alg, tau.map));
    CHECK(tau.map.apply(c.axis) == c.axis);
    for (std::size_t i = 0; i < c.law.size(); ++i) {
        for (const auto& v : report.eigenspace_bases[i]) {
            auto expected = grading->is_odd(i) ? scale(-field.one(), v) : v;
            CHECK(tau.map.apply(v) == expected);
        }
    }

    EigenDecomposition<Field> dec(alg, c.axis, c.law);
    CHECK(dec.projection(c.axis) == field.one());
    for (const auto& v : report.eigenspace_bases[ZERO]) {
        CHECK(dec.projection(v).is_zero());
    }
    for (int round = 0; round < 5; ++round) {
        auto u = testing::random_element(alg);
        auto v = testing::random_element(alg);
        auto x = testing::random_scalar(field);
        auto y = testing::random_scalar(field);
        CHECK(dec.projection(add(scale(x, u), scale(y, v))) == x * dec.projection(u) + y * dec.projection(v));
    }

    CHECK(seress_failures(alg, c.axis) == 0);
}

} // namespace

TEST_CASE("Jordan fusion law", "[fusion]")
{
    auto j = make_jordan(QQ, q(1, 3));
    CHECK(j.name() == "J(1/3)");
    CHECK(j.eigenvalues() == std::vector<Rational>{q(1), q(0), q(1, 3)});
    CHECK(j.star(ALPHA, ALPHA) == (bit(ONE) | bit(ZERO)));
    CHECK(j.star(ONE, ZERO) == 0);
    CHECK(j.star(ZERO, ALPHA) == bit(ALPHA));
    CHECK(j.star(ONE, ALPHA) == bit(ALPHA));
    CHECK(j.star(ZERO, ZERO) == bit(ZERO));
    CHECK(j.star(ONE, ONE) == bit(ONE));
    CHECK(is_seress(make_jordan(QQ, q(2))));
    CHECK(testing::error_kind_of([] { (void)make_jordan(QQ, q(0)); }) == ErrorKind::DegenerateParameter);
    CHECK(testing::error_kind_of([] { (void)make_jordan(QQ, q(1)); }) == ErrorKind::DegenerateParameter);
}

TEST_CASE("Monster fusion law", "[fusion]")
{
    auto m = make_monster(QQ, q(1, 3), q(2, 3));
    CHECK(m.name() == "M(1/3, 2/3)");
    CHECK(m.star(BETA, BETA) == (bit(ONE) | bit(ZERO) | bit(ALPHA)));
    CHECK(m.star(ALPHA, ALPHA) == (bit(ONE) | bit(ZERO)));
    CHECK(m.star(ALPHA, BETA) == bit(BETA));
    CHECK(m.star(ZERO, BETA) == bit(BETA));
    CHECK(m.star(ONE, BETA) == bit(BETA));
    CHECK(m.star(ONE, ZERO) == 0);
    CHECK(is_seress(m));
    CHECK_NOTHROW(make_monster(QQ, q(-1), q(2)));
    CHECK(testing::error_kind_of([] { (void)make_monster(QQ, q(1, 3), q(1, 3)); }) == ErrorKind::DegenerateParameter);
    CHECK(testing::error_kind_of([] { (void)make_monster(QQ, q(0), q(1, 3)); }) == ErrorKind::DegenerateParameter);
}

TEST_CASE("Monster law contains the Jordan pattern", "[fusion][property]")
{
    for (auto [a, b] : {std::pair{q(1, 3), q(2, 3)}, std::pair{q(-1), q(2)}, std::pair{q(1, 4), q(3, 4)}}) {
        auto m = make_monster(QQ, a, b);
        auto j = make_jordan(QQ, a);
        for (std::size_t x = 0; x < 3; ++x) {
            for (std::size_t y = 0; y < 3; ++y) {
                CHECK(m.star(x, y) == j.star(x, y));
            }
        }
    }
}

TEST_CASE("Seress property of hand-made laws", "[fusion]")
{
    FusionLaw<RationalField> broken(QQ, {q(1), q(0)});
    broken.set_star(0, 0, bit(0));
    broken.set_star(1, 1, bit(1));
    broken.set_star(0, 1, bit(1));
    CHECK_FALSE(is_seress(broken));

    FusionLaw<RationalField> no_zero(QQ, {q(1), q(1, 2)});
    no_zero.set_star(0, 0, bit(0));
    no_zero.set_star(0, 1, bit(1));
    no_zero.set_star(1, 1, bit(0));
    CHECK_FALSE(is_seress(no_zero));
}

TEST_CASE("C2-gradings", "[fusion]")
{
    auto m = find_c2_grading(make_monster(QQ, q(1, 4), q(3, 4)));
    REQUIRE(m);
    CHECK(m->odd == std::vector<bool>{false, false, false, true});
    auto j = find_c2_grading(make_jordan(QQ, q(1, 4)));
    REQUIRE(j);
    CHECK(j->odd == std::vector<bool>{false, false, true});

    // b * b contains b, so b cannot be odd, and nothing else can be either.
    FusionLaw<RationalField> f(QQ, {q(1), q(0), q(5)});
    f.set_star(0, 0, bit(0));
    f.set_star(1, 1, bit(1));
    f.set_star(0, 2, bit(2));
    f.set_star(1, 2, bit(2));
    f.set_star(2, 2, bit(0) | bit(1) | bit(2));
    CHECK_FALSE(find_c2_grading(f));

    for (const auto& law : {make_monster(QQ, q(1, 3), q(2, 3)), make_jordan(QQ, q(-1)), make_monster(QQ, q(-1), q(2))}) {
        auto g = find_c2_grading(law);
        REQUIRE(g);
        CHECK(is_grading(law, *g));
        CHECK(g->any_odd());
    }
}

TEST_CASE("axis verification", "[axes]")
{
    auto s = make_Q2_skew(QQ);
    auto t1 = verify_axis(s.algebra, s.p, s.law);
    CHECK(t1.passes());
    auto s1 = verify_axis(s.algebra, s.q, s.law);
    CHECK(s1.passes());
    CHECK(s1.eigenspace_dim(BETA) == 0);
    CHECK(verify_axis(s.algebra, s.q, make_jordan(QQ, q(1, 3))).passes());

    auto bad = verify_axis(s.algebra, el(s.algebra, "s1 + d1"), s.law);
    CHECK_FALSE(bad.is_idempotent);
    CHECK(bad.first_failure().rfind("A1", 0) == 0);

    // d = b + c in the P = 0 algebra: A_1(d) = <b, c>.
    auto t6 = make_table6(QQ);
    auto d = verify_axis(t6.algebra, el(t6.algebra, "b + c"), make_jordan(QQ, q(2, 3)));
    CHECK(d.is_idempotent);
    CHECK(d.spectrum_ok);
    CHECK(d.eigenspace_dim(ONE) == 2);
    CHECK_FALSE(d.is_primitive);
}

TEST_CASE("projections", "[axes]")
{
    auto t6 = make_table6(QQ);
    CHECK(projection(t6.algebra, t6.q, t6.law, t6.p) == q(2, 3));
    CHECK(projection(t6.algebra, t6.p, t6.law, t6.p) == q(1));
    auto s = make_Q2_skew(QQ);
    CHECK(projection(s.algebra, s.p, s.law, s.algebra.basis("d1")) == q(0));
}

TEST_CASE("Miyamoto involutions", "[axes]")
{
    auto s = make_Q2_skew(QQ);
    CHECK(miyamoto(s.algebra, s.p, s.law).map.apply(s.algebra.basis("s1")) == s.algebra.basis("s2"));
    CHECK(miyamoto(s.algebra, s.q, s.law).is_identity(QQ));

    for (auto alpha : {q(1, 4), q(3), q(-1, 3)}) {
        auto c = make_3C_skew(QQ, alpha);
        CHECK(miyamoto(c.algebra, c.p, c.law).map.apply(c.q) == c.algebra.basis("z"));
    }

    auto m = make_3C_minus1_2(QQ);
    CHECK(is_automorphism(m.algebra, miyamoto(m.algebra, m.p, m.law).map));

    auto b2 = make_2B(QQ);
    auto flip = map_from_images(QQ, {b2.basis("a"), b2.basis("b")}, {b2.basis("b"), b2.basis("a")});
    CHECK(is_automorphism(b2, flip));

    auto table = make_Q2_third(QQ);
    FusionLaw<RationalField> no_grading(QQ, {q(1), q(0), q(5)});
    no_grading.set_star(0, 0, bit(0));
    no_grading.set_star(1, 1, bit(1));
    no_grading.set_star(2, 2, bit(2));
    CHECK(testing::error_kind_of([&] { (void)miyamoto(table, table.basis("s1"), no_grading); }) == ErrorKind::NoGrading);
}

TEST_CASE("every catalog axis satisfies the axis invariants", "[axes][property]")
{
    for (const auto& c : testing::rational_catalog_axes()) {
        check_axis_properties(c);
    }
    for (const auto& c : testing::f5_catalog_axes()) {
        check_axis_properties(c);
    }
}

TEST_CASE("Seress lemma on the catalog", "[axes][property]")
{
    PrimeField f5(5);
    auto q2 = make_Q2_third(f5);
    for (const auto& n : q2.basis_names()) {
        CHECK(seress_failures(q2, q2.basis(n)) == 0);
    }
}
