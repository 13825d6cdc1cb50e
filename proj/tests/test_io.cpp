#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace axetlab;
using testing::el;
using testing::q;

namespace {

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string emit_any(const AnyAlgebraFile& file)
{
    return std::visit([](const auto& f) { return emit_algebra_file(f.algebra, f.axes); }, file);
}

} // namespace

TEST_CASE("data files round-trip", "[io]")
{
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(AXETLAB_DATA_DIR)) {
        if (entry.path().extension() != ".alg") {
            continue;
        }
        INFO(entry.path().filename().string());
        auto first = parse_algebra_file(read_file(entry.path()));
        auto text = emit_any(first);
        auto second = parse_algebra_file(text);
        CHECK(emit_any(second) == text);
        std::visit(
            [&](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                const auto& b = std::get<T>(second);
                CHECK(a.algebra == b.algebra);
                REQUIRE(a.axes.size() == b.axes.size());
                for (std::size_t i = 0; i < a.axes.size(); ++i) {
                    CHECK(a.axes[i].label == b.axes[i].label);
                    CHECK(a.axes[i].element == b.axes[i].element);
                    CHECK(a.axes[i].law.params == b.axes[i].law.params);
                }
            },
            first);
        ++seen;
    }
    CHECK(seen >= 10);
}

TEST_CASE("catalog algebras round-trip through text", "[io]")
{
    RationalField QQ;
    PrimeField f5(5);
    auto check = [](const auto& alg) {
        auto text = emit_algebra_file(alg);
        auto parsed = parse_algebra_file(text);
        using Field = std::decay_t<decltype(alg.field())>;
        REQUIRE(std::holds_alternative<AlgebraFile<Field>>(parsed));
        CHECK(std::get<AlgebraFile<Field>>(parsed).algebra == alg);
    };
    check(make_2B(QQ));
    check(make_3C(QQ, q(-1, 3)));
    check(make_Q2_third(QQ));
    check(make_Q2_third(f5));
    check(make_Q2x_plus_one(f5).algebra);
    check(make_table6(QQ).algebra);
}

TEST_CASE("a product row written as an expression", "[io]")
{
    auto parsed = parse_algebra_file(R"(
field = rational
basis = s1 s2 d1 d2
[products]
s1*s1 = s1
s1*d1 = 1/3*s1 + 1/6*d1 - 1/6*d2
)");
    const auto& f = std::get<AlgebraFile<RationalField>>(parsed);
    CHECK(f.algebra.product(0, 2) == make_Q2_third(RationalField{}).product(0, 2));
    CHECK(f.algebra.product(2, 0) == f.algebra.product(0, 2));
    CHECK(f.algebra.product(1, 3) == f.algebra.zero_element());
}

TEST_CASE("symbolic files", "[io]")
{
    auto parsed = parse_algebra_file(R"(
field = function alpha
basis = x y z
[products]
x*x = x
y*y = y
x*y = alpha/2*(x + y - z)
[axes]
x = x ; jordan alpha
)");
    const auto& f = std::get<AlgebraFile<FunctionField>>(parsed);
    auto alpha = f.algebra.field().variable("alpha");
    CHECK(f.algebra.product(0, 1)[2] == -alpha / f.algebra.field().from_rational(q(2)));
    CHECK(f.axes.at(0).law.params.at(0) == alpha);
}

TEST_CASE("file errors", "[io]")
{
    auto kind = [](const std::string& text) { return testing::error_kind_of([&] { (void)parse_algebra_file(text); }); };
    CHECK(kind("field = prime 2\nbasis = a\n") == ErrorKind::BadField);
    CHECK(kind("field = prime 15\nbasis = a\n") == ErrorKind::BadField);
    CHECK(kind("field = quaternion\nbasis = a\n") == ErrorKind::BadField);
    CHECK(kind("field = rational\nbasis = a b\n[products]\na*c = a\n") == ErrorKind::UnknownSymbol);
    CHECK(kind("field = rational\nbasis = a\n[products]\na*a = a\na*a = a\n") == ErrorKind::ParseError);
    CHECK(kind("field = rational\ndim = 3\nbasis = a b\n") == ErrorKind::ParseError);
    CHECK(kind("basis = a b\n") == ErrorKind::ParseError);
    CHECK(kind("field = rational\nbasis = a\n[axes]\na = a ; octonion 2\n") == ErrorKind::ParseError);

    try {
        (void)parse_algebra_file("field = rational\nbasis = a b\n[products]\n  a*b = a + * b\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        std::string msg = e.what();
        INFO(msg);
        CHECK(msg.find("line 4") != std::string::npos);
        CHECK(msg.find("column") != std::string::npos);
    }
}

TEST_CASE("element formatting", "[io]")
{
    auto alg = make_Q2_third(RationalField{});
    CHECK(format_element(alg, el(alg, "3/5*(s1 + s2 + d1 + d2)")) == "3/5*s1 + 3/5*s2 + 3/5*d1 + 3/5*d2");
    CHECK(format_element(alg, alg.zero_element()) == "0");
    CHECK(format_element(alg, el(alg, "-d2")) == "-d2");
}
