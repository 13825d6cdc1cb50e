// axetlab command-line tool: verify, axet, paper-suite, catalog.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "axetlab/axetlab.hpp"

namespace {

using json = nlohmann::json;
using namespace axetlab;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    }
    out << text;
}

void write_report(const std::string& path, const json& report)
{
    if (!path.empty()) {
        write_text(path, report.dump(2) + "\n");
    }
}

/// Verification failures exit 1; malformed input and bad parameters exit 2.
int exit_code_for(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::NotAnAxis:
    case ErrorKind::NotClosedWithinBound:
    case ErrorKind::TooLarge:
    case ErrorKind::NoMatch:
    case ErrorKind::IdentityFails:
    case ErrorKind::ContradictionNotFound:
        return kFail;
    default:
        return kUsage;
    }
}

struct LawOverride {
    std::vector<std::string> monster;  // alpha beta
    std::string jordan;                // eta
};

template <FieldDescriptor Field>
FusionLaw<Field> law_for(const Field& field, const DeclaredAxis<Field>& axis, const LawOverride& o)
{
    if (!o.monster.empty()) {
        return make_monster(field, parse_scalar(field, o.monster.at(0)), parse_scalar(field, o.monster.at(1)));
    }
    if (!o.jordan.empty()) {
        return make_jordan(field, parse_scalar(field, o.jordan));
    }
    return axis.law.build(field);
}

template <FieldDescriptor Field>
int verify_file(const AlgebraFile<Field>& file, const LawOverride& o, json& report)
{
    const auto& alg = file.algebra;
    if (file.axes.empty()) {
        fail(ErrorKind::NoAxesDeclared, "the file declares no axes");
    }
    bool all = true;
    report["field"] = alg.field().describe();
    report["dim"] = alg.dim();
    report["axes"] = json::array();
    for (const auto& axis : file.axes) {
        auto law = law_for(alg.field(), axis, o);
        auto r = verify_axis(alg, axis.element, law);
        all = all && r.passes();
        json dims = json::object();
        for (std::size_t i = 0; i < law.size(); ++i) {
            dims[law.eigenvalue(i).to_string()] = r.eigenspace_dim(i);
        }
        report["axes"].push_back({{"label", axis.label},
                                  {"element", format_element(alg, axis.element)},
                                  {"law", law.name()},
                                  {"A1", r.is_idempotent},
                                  {"A2", r.spectrum_ok},
                                  {"A3", r.spectrum_ok && r.fusion_ok},
                                  {"A4", r.is_primitive},
                                  {"eigenspace_dims", dims},
                                  {"pass", r.passes()}});
        std::cout << (r.passes() ? "PASS " : "FAIL ") << axis.label << " under " << law.name() << ": "
                  << describe_report(alg, r, law);
        if (!r.passes()) {
            std::cout << "; first failure " << r.first_failure();
        }
        std::cout << "\n";
    }
    report["pass"] = all;
    return all ? kPass : kFail;
}

template <FieldDescriptor Field>
int axet_file(const AlgebraFile<Field>& file, std::size_t max_points, json& report)
{
    const auto& alg = file.algebra;
    if (file.axes.empty()) {
        fail(ErrorKind::NoAxesDeclared, "the file declares no axes");
    }
    std::vector<typename StructureAlgebra<Field>::Element> axes;
    std::vector<FusionLaw<Field>> laws;
    std::vector<std::string> names;
    for (const auto& a : file.axes) {
        axes.push_back(a.element);
        laws.push_back(a.law.build(alg.field()));
        names.push_back(a.label);
    }
    auto realized = realize_axet(alg, axes, laws, max_points, names);
    auto shape = classify_shape(realized.action, max_points);
    report["points"] = json::array();
    for (std::size_t i = 0; i < realized.points.size(); ++i) {
        report["points"].push_back({{"label", realized.action.labels[i]},
                                    {"element", format_element(alg, realized.points[i])},
                                    {"trivial_involution", realized.action.is_trivial(i)}});
    }
    report["shape"] = shape.to_string();
    report["display"] = shape.display();
    std::cout << shape.to_string();
    if (realized.points.size() == 1) {
        std::cout << " (degenerate: a single axis point)";
    }
    std::cout << "\n";
    for (std::size_t i = 0; i < realized.points.size(); ++i) {
        std::cout << "  " << realized.action.labels[i] << " = " << format_element(alg, realized.points[i])
                  << (realized.action.is_trivial(i) ? "  (trivial involution)" : "") << "\n";
    }
    return kPass;
}

json suite_json(const SuiteReport& r)
{
    json out;
    out["pass"] = r.ok();
    out["criteria"] = json::array();
    for (const auto& c : r.criteria) {
        json items = json::array();
        for (const auto& i : c.checks.items) {
            items.push_back({{"anchor", i.anchor}, {"ok", i.ok}, {"detail", i.detail}});
        }
        out["criteria"].push_back({{"number", c.number},
                                   {"title", c.title},
                                   {"status", c.skipped() ? "skipped" : (c.ok() ? "pass" : "fail")},
                                   {"notice", c.notice},
                                   {"items", items}});
    }
    return out;
}

TableMutation parse_mutation(const std::string& spec)
{
    // TABLE:x*y:coordinate[:delta]
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() < 3 || parts.size() > 4 || parts[1].find('*') == std::string::npos) {
        fail(ErrorKind::InvalidArgument, "mutation must look like TABLE:x*y:coordinate[:delta]");
    }
    TableMutation m;
    m.table = parts[0];
    m.x = parts[1].substr(0, parts[1].find('*'));
    m.y = parts[1].substr(parts[1].find('*') + 1);
    m.coordinate = parts[2];
    if (parts.size() == 4) {
        m.delta = parse_scalar(RationalField{}, parts[3]);
    }
    return m;
}

template <FieldDescriptor Field>
std::vector<DeclaredAxis<Field>> construction_axes(const SkewConstruction<Field>& s)
{
    auto alpha = s.law.eigenvalue(2);
    auto beta = s.law.eigenvalue(3);
    using Kind = typename LawSpec<Field>::Kind;
    auto c = miyamoto(s.algebra, s.p, s.law).map.apply(s.q);
    // All three share the Monster grading; under J(alpha) the alpha part would be odd.
    return {{s.p_name, s.p, {Kind::Monster, {alpha, beta}}},
            {s.q_name, s.q, {Kind::Monster, {alpha, beta}}},
            {"tau_" + s.p_name + "(" + s.q_name + ")", c, {Kind::Monster, {alpha, beta}}}};
}

template <FieldDescriptor Field>
std::vector<DeclaredAxis<Field>> basis_jordan_axes(const StructureAlgebra<Field>& a, const ScalarOf<Field>& eta,
                                                   const std::vector<std::string>& which)
{
    std::vector<DeclaredAxis<Field>> out;
    for (const auto& n : which) {
        out.push_back({n, a.basis(n), {LawSpec<Field>::Kind::Jordan, {eta}}});
    }
    return out;
}

template <FieldDescriptor Field>
std::string emit_catalog(const Field& field, const std::string& name, const std::string& alpha_text)
{
    auto alpha = [&](const char* fallback) {
        return parse_scalar(field, alpha_text.empty() ? std::string(fallback) : alpha_text);
    };
    auto third = field.from_rational(Rational(1, 3));
    auto two_thirds = field.from_rational(Rational(2, 3));
    using Kind = typename LawSpec<Field>::Kind;
    if (name == "2B") {
        auto a = make_2B(field);
        return emit_algebra_file(a, basis_jordan_axes(a, alpha("1/2"), {"a", "b"}));
    }
    if (name == "3C") {
        auto a = make_3C(field, alpha("1/4"));
        return emit_algebra_file(a, basis_jordan_axes(a, alpha("1/4"), {"x", "y", "z"}));
    }
    if (name == "3Cx-1") {
        auto a = make_3Cx_minus1(field);
        return emit_algebra_file(a, basis_jordan_axes(a, -field.one(), {"y", "z"}));
    }
    if (name == "3C-skew") {
        auto s = make_3C_skew(field, alpha("1/4"));
        return emit_algebra_file(s.algebra, construction_axes(s));
    }
    if (name == "3C-1-2") {
        auto s = make_3C_minus1_2(field);
        return emit_algebra_file(s.algebra, construction_axes(s));
    }
    if (name == "Q2") {
        auto a = make_Q2_third(field);
        auto axes = basis_jordan_axes(a, third, {"s1", "s2"});
        if (field.characteristic() != 5) {
            axes.push_back({"d1", a.basis("d1"), {Kind::Monster, {two_thirds, third}}});
            axes.push_back({"d2", a.basis("d2"), {Kind::Monster, {two_thirds, third}}});
        }
        return emit_algebra_file(a, axes);
    }
    if (name == "Q2-skew") {
        auto s = make_Q2_skew(field);
        return emit_algebra_file(s.algebra, construction_axes(s));
    }
    if (name == "Q2x5-quotient") {
        auto a = make_Q2x(field);
        auto axes = basis_jordan_axes(a, third, {"x", "y"});
        axes.push_back({"z", a.basis("z"), {Kind::Monster, {two_thirds, third}}});
        return emit_algebra_file(a, axes);
    }
    if (name == "Q2x5") {
        auto s = make_Q2x_plus_one(field);
        return emit_algebra_file(s.algebra, construction_axes(s));
    }
    if (name == "P0") {
        auto s = make_table6(field);
        return emit_algebra_file(s.algebra, construction_axes(s));
    }
    fail(ErrorKind::InvalidArgument, "unknown catalog name '" + name + "'");
}

const char* catalog_names()
{
    return "2B, 3C, 3Cx-1, 3C-skew, 3C-1-2, Q2, Q2-skew, Q2x5-quotient, Q2x5, P0";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of skew axial algebras of Monster type"};
    app.require_subcommand(1);

    std::string report_path;
    app.add_option("--report", report_path, "Write a JSON report to this path");

    auto* verify = app.add_subcommand("verify", "Check axioms A1-A4 for the axes declared in an algebra file");
    std::string verify_path;
    LawOverride law_override;
    verify->add_option("file", verify_path, "Algebra file")->required();
    auto* law_opt = verify->add_option("--law", law_override.monster, "Monster law parameters alpha beta")->expected(2);
    verify->add_option("--jordan", law_override.jordan, "Jordan law parameter eta")->excludes(law_opt);

    auto* axet = app.add_subcommand("axet", "Realize and classify the axet of the declared axes");
    std::string axet_path;
    std::size_t max_points = 24;
    axet->add_option("file", axet_path, "Algebra file")->required();
    axet->add_option("--max-points", max_points, "Bound on the number of axis points")->check(CLI::PositiveNumber);

    auto* suite_cmd = app.add_subcommand("paper-suite", "Run every acceptance check");
    unsigned characteristic = 0;
    unsigned jobs = 1;
    std::string mutation;
    bool quiet = false;
    auto* char_opt = suite_cmd->add_option("--char", characteristic, "Only run items in this characteristic")
                         ->check(CLI::IsMember({0u, 5u}));
    suite_cmd->add_option("--jobs", jobs, "Criteria evaluated concurrently")->check(CLI::PositiveNumber);
    suite_cmd->add_option("--mutate", mutation, "Perturb one table coefficient: TABLE:x*y:coordinate[:delta]");
    suite_cmd->add_flag("--quiet", quiet, "Print only one line per criterion");

    auto* catalog = app.add_subcommand("catalog", std::string("Emit a catalog algebra file (") + catalog_names() + ")");
    std::string catalog_name;
    std::string alpha_text;
    std::uint64_t catalog_char = 0;
    std::string out_path;
    catalog->add_option("name", catalog_name, "Catalog entry")->required();
    catalog->add_option("--alpha", alpha_text, "Parameter for 2B, 3C and 3C-skew");
    catalog->add_option("--char", catalog_char, "Field characteristic (0 for the rationals; Q2x5 entries default to 5)");
    catalog->add_option("-o,--output", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kUsage;
    }

    json report;
    try {
        int code = kPass;
        if (*verify) {
            report["command"] = "verify";
            report["file"] = verify_path;
            auto file = parse_algebra_file(read_file(verify_path));
            code = std::visit([&](const auto& f) { return verify_file(f, law_override, report); }, file);
        } else if (*axet) {
            report["command"] = "axet";
            report["file"] = axet_path;
            auto file = parse_algebra_file(read_file(axet_path));
            code = std::visit([&](const auto& f) { return axet_file(f, max_points, report); }, file);
        } else if (*suite_cmd) {
            SuiteOptions options;
            if (char_opt->count() > 0) {
                options.characteristic = characteristic;
            }
            options.jobs = jobs;
            if (!mutation.empty()) {
                options.mutation = parse_mutation(mutation);
            }
            auto result = run_acceptance_suite(options);
            for (const auto& c : result.criteria) {
                std::cout << (c.skipped() ? "[SKIP] " : (c.ok() ? "[PASS] " : "[FAIL] ")) << c.number << ". " << c.title;
                if (c.skipped()) {
                    std::cout << " (" << c.notice << ")";
                }
                std::cout << "\n";
                for (const auto& i : c.checks.items) {
                    if (quiet && i.ok) {
                        continue;
                    }
                    std::cout << (i.ok ? "    ok    " : "    FAIL  ") << i.anchor;
                    if (!i.ok && !i.detail.empty()) {
                        std::cout << ": " << i.detail;
                    }
                    std::cout << "\n";
                }
            }
            std::cout << (result.ok() ? "all criteria pass" : "some criteria fail") << "\n";
            report = suite_json(result);
            report["command"] = "paper-suite";
            code = result.ok() ? kPass : kFail;
        } else if (*catalog) {
            std::string text;
            if (catalog_char == 0 && catalog_name.rfind("Q2x5", 0) == 0) {
                catalog_char = 5;
            }
            if (catalog_char == 0) {
                text = emit_catalog(RationalField{}, catalog_name, alpha_text);
            } else {
                text = emit_catalog(PrimeField(catalog_char), catalog_name, alpha_text);
            }
            if (out_path.empty()) {
                std::cout << text;
            } else {
                write_text(out_path, text);
            }
            report["command"] = "catalog";
            report["name"] = catalog_name;
        }
        write_report(report_path, report);
        return code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        report["error"] = e.what();
        try {
            write_report(report_path, report);
        } catch (const Error&) {
        }
        return exit_code_for(e);
    }
}
