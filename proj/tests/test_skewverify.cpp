#include "support.hpp"

using namespace axetlab;
using testing::q;

namespace {

const RationalField QQ{};

std::string failures(const CheckList& list)
{
    std::string out;
    for (const auto& c : list.items) {
        if (!c.ok) {
            out += c.anchor + " [" + c.detail + "]\n";
        }
    }
    return out;
}

#define CHECK_REPORT(list)                    \
    do {                                      \
        const auto& l_ = (list);              \
        INFO(failures(l_));                   \
        CHECK(l_.ok());                       \
    } while (false)

/// True when the mutated algebra is caught by axis certification or by the
/// constant relations.
template <FieldDescriptor Field>
bool mutation_detected(const SkewConstruction<Field>& s)
{
    try {
        if (!verify_axis(s.algebra, s.p, s.law).passes() || !verify_axis(s.algebra, s.q, s.law).passes()) {
            return true;
        }
        return !check_concrete_constants(s).ok();
    } catch (const Error&) {
        return true;
    }
}

} // namespace

TEST_CASE("generic identities hold symbolically", "[skewverify]")
{
    GenericSkew g;
    CHECK_REPORT(check_constant_chains(g));
    CHECK_REPORT(check_eigenvectors_generic(g));
    CHECK_REPORT(check_bracket_table(g));
    CHECK_REPORT(check_projection_relation(g));
    CHECK_REPORT(check_u_relation(g));
    CHECK_REPORT(check_v_relation(g));
}

TEST_CASE("beta components", "[skewverify]")
{
    GenericSkew g;
    const auto& k = g.k();
    CHECK(beta_component(g.mul(g.a(), g.b())) == k.beta);
    CHECK(beta_component(g.mul(g.b(), g.sigma())) == k.delta_f());
    CHECK(beta_component(g.mul(g.sigma(), g.sigma())).is_zero());
    CHECK(beta_component(g.vec(g.num(0), g.num(1), g.num(-1), g.num(0))) == g.num(2));
}

TEST_CASE("Q = R consistency is reported, not assumed", "[skewverify]")
{
    GenericSkew g;
    auto r = check_qr_consistency(g);
    CHECK_REPORT(r.checks);
    CHECK_FALSE(r.identically_zero);
    std::map<std::string, Rational> p0{
        {"alpha", q(1, 3)}, {"beta", q(2, 3)}, {"l1", q(5, 12)}, {"l1f", q(2, 3)}};
    CHECK(evaluate_at(r.difference, p0) == q(0));
    std::map<std::string, Rational> off{{"alpha", q(1, 5)}, {"beta", q(1, 7)}, {"l1", q(1, 2)}, {"l1f", q(1, 3)}};
    CHECK(evaluate_at(r.difference, off) != q(0));

    // The l2f coefficient of Q, read off by differentiating along l2f.
    const auto& k = g.k();
    auto shifted = k;
    shifted.l2f = k.l2f + g.num(1);
    auto coefficient = shifted.Q() - k.Q();
    CHECK(coefficient == k.alpha / (g.num(2) * (k.alpha - k.beta)));
}

TEST_CASE("constant relations at concrete algebras", "[skewverify]")
{
    CHECK_REPORT(check_concrete_constants(make_3C_skew(QQ, q(1, 4))));
    CHECK_REPORT(check_concrete_constants(make_3C_skew(QQ, q(3))));
    CHECK_REPORT(check_concrete_constants(make_3C_minus1_2(QQ)));
    CHECK_REPORT(check_concrete_constants(make_Q2_skew(QQ)));
    CHECK_REPORT(check_concrete_constants(make_table6(QQ)));
    PrimeField f5(5);
    CHECK_REPORT(check_concrete_constants(make_Q2x_plus_one(f5)));

    auto c = read_constants(make_table6(QQ));
    CHECK(c.alpha == q(1, 3));
    CHECK(c.beta == q(2, 3));
    CHECK(c.l1f == q(2, 3));
}

TEST_CASE("P = 0 branch", "[skewverify]")
{
    auto r0 = replay_branch_P0(0);
    CHECK_REPORT(r0.constraints);
    CHECK(r0.outcome == "Q2(1/3, 2/3)");
    auto r5 = replay_branch_P0(5);
    CHECK_REPORT(r5.constraints);
    CHECK(r5.outcome == "Q2(1/3)^x + <1>");
}

TEST_CASE("P != 0 branches", "[skewverify]")
{
    auto reports = replay_branch_Pnonzero();
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) {
        INFO(r.label);
        CHECK_REPORT(r.constraints);
    }
    CHECK(reports[0].label == "U=2B");
    CHECK(reports[1].label == "U=S(2)");
    CHECK(reports[2].label == "U=3C(-1)^x");
    CHECK(reports[2].outcome == "3C(-1,2)");
    CHECK(reports[3].label == "U 3-dim");
}

TEST_CASE("dichotomy", "[skewverify]")
{
    auto q2 = make_Q2_skew(QQ);
    auto r = corollary_check(q2.algebra, q2.p, q2.q, q2.law);
    CHECK(r.kind == CorollaryOutcome::Kind::Skew);
    CHECK(r.entry == "2(i)");

    auto c3 = make_3C_skew(QQ, q(1, 4));
    auto rc = corollary_check(c3.algebra, c3.p, c3.q, c3.law);
    CHECK(rc.kind == CorollaryOutcome::Kind::Skew);
    CHECK(rc.entry == "1");

    auto m = make_3C_minus1_2(QQ);
    CHECK(corollary_check(m.algebra, m.p, m.q, m.law).entry == "1");

    PrimeField f5(5);
    auto x5 = make_Q2x_plus_one(f5);
    CHECK(corollary_check(x5.algebra, x5.p, x5.q, x5.law).entry == "2(ii)");

    auto b2 = make_2B(QQ);
    auto rj = corollary_check(b2, b2.basis("a"), b2.basis("b"), make_monster(QQ, q(1, 3), q(2, 3)));
    CHECK(rj.kind == CorollaryOutcome::Kind::JordanType);
}

TEST_CASE("perturbed structure constants are detected", "[skewverify][mutation]")
{
    auto base = make_table6(QQ);
    std::size_t n = base.algebra.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t coord = 0; coord < n; ++coord) {
                auto s = base;
                auto v = s.algebra.product(i, j);
                v[coord] += q(1, 7);
                s.algebra.set_product(i, j, v);
                INFO(base.algebra.basis_name(i) << "*" << base.algebra.basis_name(j) << " coordinate " << coord);
                CHECK(mutation_detected(s));
            }
        }
    }
}
