#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "axetlab/algebra.hpp"
#include "axetlab/elements.hpp"
#include "axetlab/errors.hpp"
#include "axetlab/expr.hpp"
#include "axetlab/field.hpp"
#include "axetlab/fusion.hpp"

// Algebra file format, one statement per line, '#' starts a comment:
//
//   field = rational | prime <p> | function <name>...
//   dim = <n>
//   basis = <name>...
//   [products]
//   <x>*<y> = <element expression>      (omitted pairs are zero)
//   [axes]
//   <label> = <element expression> ; monster <alpha> <beta>
//   <label> = <element expression> ; jordan <eta>

namespace axetlab {

/// Fusion-law parameters as written in a file.
template <FieldDescriptor Field>
struct LawSpec {
    enum class Kind { Monster, Jordan };
    Kind kind = Kind::Monster;
    std::vector<ScalarOf<Field>> params;

    FusionLaw<Field> build(const Field& field) const
    {
        return kind == Kind::Monster ? make_monster(field, params.at(0), params.at(1)) : make_jordan(field, params.at(0));
    }
};

template <FieldDescriptor Field>
struct DeclaredAxis {
    std::string label;
    typename StructureAlgebra<Field>::Element element;
    LawSpec<Field> law;
};

template <FieldDescriptor Field>
struct AlgebraFile {
    StructureAlgebra<Field> algebra;
    std::vector<DeclaredAxis<Field>> axes;
};

using AnyAlgebraFile = std::variant<AlgebraFile<RationalField>, AlgebraFile<PrimeField>, AlgebraFile<FunctionField>>;

namespace detail {

inline std::string_view trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_words(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) {
        out.push_back(w);
    }
    return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, std::size_t col, const std::string& msg)
{
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct SourceLine {
    std::size_t number;
    std::string text;  // comment stripped, untrimmed
};

/// Column (1-based) of `part` inside `whole`; both views share storage.
inline std::size_t column_of(std::string_view whole, std::string_view part)
{
    return static_cast<std::size_t>(part.data() - whole.data()) + 1;
}

struct Header {
    std::string field_kind;
    std::vector<std::string> field_args;
    std::optional<std::size_t> dim;
    std::vector<std::string> basis;
    std::vector<SourceLine> products;
    std::vector<SourceLine> axes;
};

inline Header read_header(std::string_view text)
{
    Header h;
    enum class Section { Header, Products, Axes } section = Section::Header;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    bool saw_field = false;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::string_view line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line == "[products]") {
                section = Section::Products;
            } else if (line == "[axes]") {
                section = Section::Axes;
            } else {
                parse_fail(number, column_of(raw, line), "unknown section " + std::string(line));
            }
            continue;
        }
        if (section == Section::Products) {
            h.products.push_back({number, raw});
            continue;
        }
        if (section == Section::Axes) {
            h.axes.push_back({number, raw});
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            parse_fail(number, column_of(raw, line), "expected 'key = value'");
        }
        std::string key(trim(line.substr(0, eq)));
        auto words = split_words(line.substr(eq + 1));
        if (key == "field") {
            if (words.empty()) {
                parse_fail(number, column_of(raw, line), "missing field descriptor");
            }
            h.field_kind = words.front();
            h.field_args.assign(words.begin() + 1, words.end());
            saw_field = true;
        } else if (key == "dim") {
            if (words.size() != 1 || words[0].find_first_not_of("0123456789") != std::string::npos) {
                parse_fail(number, column_of(raw, line), "dim must be a non-negative integer");
            }
            h.dim = std::stoul(words[0]);
        } else if (key == "basis") {
            h.basis = words;
        } else {
            parse_fail(number, column_of(raw, line), "unknown key '" + key + "'");
        }
    }
    if (!saw_field) {
        fail(ErrorKind::ParseError, "missing 'field' line");
    }
    if (h.basis.empty()) {
        fail(ErrorKind::ParseError, "missing 'basis' line");
    }
    if (h.dim && *h.dim != h.basis.size()) {
        fail(ErrorKind::ParseError, "dim = " + std::to_string(*h.dim) + " but " + std::to_string(h.basis.size()) +
                                        " basis names given");
    }
    return h;
}

template <FieldDescriptor Field>
AlgebraFile<Field> build_file(const Field& field, const Header& h)
{
    AlgebraFile<Field> out{StructureAlgebra<Field>(field, h.basis), {}};
    auto& alg = out.algebra;
    std::vector<std::vector<bool>> seen(alg.dim(), std::vector<bool>(alg.dim(), false));
    for (const auto& src : h.products) {
        std::string_view line = trim(src.text);
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            parse_fail(src.number, column_of(src.text, line), "expected 'x*y = expression'");
        }
        auto lhs = trim(line.substr(0, eq));
        auto star = lhs.find('*');
        if (star == std::string_view::npos) {
            parse_fail(src.number, column_of(src.text, lhs), "expected a product 'x*y'");
        }
        auto x = trim(lhs.substr(0, star));
        auto y = trim(lhs.substr(star + 1));
        auto i = alg.index_of(x);
        auto j = alg.index_of(y);
        if (!i || !j) {
            auto bad = i ? y : x;
            fail(ErrorKind::UnknownSymbol, "line " + std::to_string(src.number) + ", column " +
                                               std::to_string(column_of(src.text, bad)) + ": unknown basis element '" +
                                               std::string(bad) + "'");
        }
        if (seen[*i][*j]) {
            parse_fail(src.number, column_of(src.text, lhs), "product " + std::string(lhs) + " given twice");
        }
        seen[*i][*j] = seen[*j][*i] = true;
        auto rhs = trim(line.substr(eq + 1));
        alg.set_product(*i, *j, parse_element(alg, rhs, src.number, column_of(src.text, rhs)));
    }
    for (const auto& src : h.axes) {
        std::string_view line = trim(src.text);
        auto eq = line.find('=');
        auto semi = line.find(';');
        if (eq == std::string_view::npos || semi == std::string_view::npos || semi < eq) {
            parse_fail(src.number, column_of(src.text, line), "expected 'label = element ; monster a b | jordan e'");
        }
        DeclaredAxis<Field> axis;
        axis.label = std::string(trim(line.substr(0, eq)));
        auto expr = trim(line.substr(eq + 1, semi - eq - 1));
        axis.element = parse_element(alg, expr, src.number, column_of(src.text, expr));
        auto law_text = line.substr(semi + 1);
        auto words = split_words(law_text);
        std::size_t want = 0;
        if (!words.empty() && words[0] == "monster") {
            axis.law.kind = LawSpec<Field>::Kind::Monster;
            want = 2;
        } else if (!words.empty() && words[0] == "jordan") {
            axis.law.kind = LawSpec<Field>::Kind::Jordan;
            want = 1;
        } else {
            parse_fail(src.number, column_of(src.text, trim(law_text)), "law must be 'monster a b' or 'jordan e'");
        }
        if (words.size() != want + 1) {
            parse_fail(src.number, column_of(src.text, trim(law_text)),
                       words[0] + " takes " + std::to_string(want) + " parameter(s)");
        }
        for (std::size_t k = 1; k < words.size(); ++k) {
            axis.law.params.push_back(parse_scalar(field, words[k], src.number));
        }
        out.axes.push_back(std::move(axis));
    }
    return out;
}

} // namespace detail

inline AnyAlgebraFile parse_algebra_file(std::string_view text)
{
    auto h = detail::read_header(text);
    if (h.field_kind == "rational") {
        if (!h.field_args.empty()) {
            fail(ErrorKind::ParseError, "'field = rational' takes no arguments");
        }
        return detail::build_file(RationalField{}, h);
    }
    if (h.field_kind == "prime") {
        if (h.field_args.size() != 1 || h.field_args[0].find_first_not_of("0123456789") != std::string::npos ||
            h.field_args[0].size() > 18) {
            fail(ErrorKind::BadField, "'field = prime' needs one positive integer");
        }
        return detail::build_file(PrimeField(std::stoull(h.field_args[0])), h);
    }
    if (h.field_kind == "function") {
        if (h.field_args.empty()) {
            fail(ErrorKind::BadField, "'field = function' needs at least one variable name");
        }
        return detail::build_file(FunctionField(h.field_args), h);
    }
    fail(ErrorKind::BadField, "unknown field kind '" + h.field_kind + "'");
}

template <FieldDescriptor Field>
std::string emit_algebra_file(const StructureAlgebra<Field>& alg, const std::vector<DeclaredAxis<Field>>& axes = {})
{
    std::ostringstream os;
    os << "field = " << alg.field().describe() << "\n";
    os << "dim = " << alg.dim() << "\n";
    os << "basis =";
    for (const auto& n : alg.basis_names()) {
        os << " " << n;
    }
    os << "\n[products]\n";
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        for (std::size_t j = i; j < alg.dim(); ++j) {
            const auto& v = alg.product(i, j);
            if (!is_zero_vector(v)) {
                os << alg.basis_name(i) << "*" << alg.basis_name(j) << " = " << format_element(alg, v) << "\n";
            }
        }
    }
    if (!axes.empty()) {
        os << "[axes]\n";
        for (const auto& a : axes) {
            os << a.label << " = " << format_element(alg, a.element) << " ; "
               << (a.law.kind == LawSpec<Field>::Kind::Monster ? "monster" : "jordan");
            for (const auto& p : a.law.params) {
                std::string s = p.to_string();
                // Law parameters are single words in the file.
                s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
                os << " " << s;
            }
            os << "\n";
        }
    }
    return os.str();
}

} // namespace axetlab
