// bidegree_lab: suite runner and ad-hoc front end for the verification kit.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bidegree/birat.hpp"
#include "bidegree/classify.hpp"
#include "bidegree/errors.hpp"
#include "bidegree/families.hpp"
#include "bidegree/polyfile.hpp"
#include "bidegree/suite.hpp"

using namespace bidegree;

namespace {

struct CommonLimits {
    long timeout_secs = -1;
    long max_pairs = -1;

    void apply(Limits& limits) const {
        if (timeout_secs >= 0) limits.timeout = std::chrono::seconds(timeout_secs);
        if (max_pairs >= 0) limits.max_pairs = static_cast<std::size_t>(max_pairs);
    }
};

void add_limit_flags(CLI::App* cmd, CommonLimits& l) {
    cmd->add_option("--timeout-secs", l.timeout_secs, "wall-clock budget per basis computation");
    cmd->add_option("--max-pairs", l.max_pairs, "S-pair budget per basis computation");
}

void write_report(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out.good()) throw ConfigError("cannot write report to " + path);
    out << text;
}

int cmd_verify(const std::string& suite_path, const CommonLimits& lim,
               const std::string& json_path, bool want_json) {
    SuiteConfig cfg = load_suite(suite_path);
    lim.apply(cfg.limits);
    SuiteReport report = run_suite(cfg);
    if (want_json)
        write_report(report_json(report), json_path);
    else
        std::cout << report_text(report);
    return report.all_met() ? 0 : 1;
}

int cmd_check_identity(const std::string& id_path) {
    ChartIdentity id = load_chart_identity(id_path);
    Certificate cert = verify_chart_identity(id);
    std::cout << cert.report();
    return cert.passed() ? 0 : 1;
}

int cmd_groebner(bool radical, const std::string& ideal_path,
                 const std::string& ideal_name, const std::string& elem,
                 const CommonLimits& lim) {
    PolyFile file = load_poly_file(ideal_path);
    std::string name = ideal_name;
    if (name.empty()) {
        if (file.ideals.size() != 1)
            throw ConfigError("file declares " + std::to_string(file.ideals.size()) +
                              " ideals; pick one with --name");
        name = file.ideals.begin()->first;
    }
    Ideal ideal(file.ideal_gens(name));
    Poly f = parse_poly(elem, file.table, file.polys);
    Limits limits;
    lim.apply(limits);
    if (radical) {
        Tribool r = radical_member(f, ideal, limits);
        const char* word = r == Tribool::True    ? "yes"
                           : r == Tribool::False ? "no"
                                                 : "unknown";
        std::cout << "radical membership in '" << name << "': " << word << "\n";
        return r == Tribool::True ? 0 : 1;
    }
    MembershipResult r = ideal_member(f, ideal, limits);
    std::cout << "membership in '" << name << "': " << (r.member ? "yes" : "no") << "\n";
    if (!r.member) std::cout << "normal form: " << r.normal_form.str() << "\n";
    return r.member ? 0 : 1;
}

FamilyVariant parse_variant(const std::string& word) {
    if (word == "double-cone") return FamilyVariant::DoubleCone;
    if (word == "degree-raise") return FamilyVariant::DegreeRaise;
    if (word == "kuechle") return FamilyVariant::Kuechle;
    if (word == "three-two") return FamilyVariant::ThreeTwo;
    if (word == "cubic-reduction") return FamilyVariant::CubicReduction;
    throw ConfigError("unknown family variant '" + word + "'");
}

// seeds come from bindings in the polynomial file: G (main seed),
// H (degree-raise target), cubic / M / L (single-block reduction data)
int cmd_families_build(const std::string& variant_word, const std::string& seed_path,
                       const std::vector<std::string>& extra_boundary) {
    PolyFile file = load_poly_file(seed_path);
    FamilyVariant variant = parse_variant(variant_word);
    FamilySeeds seeds;
    seeds.G = file.polys.count("G") ? file.poly("G") : Poly::zero(file.table);
    if (file.polys.count("H")) seeds.H = file.poly("H");
    if (file.polys.count("cubic")) seeds.cubic = file.poly("cubic");
    if (file.polys.count("M")) seeds.M = file.poly("M");
    if (file.polys.count("L")) seeds.L = file.poly("L");
    std::set<std::string> extra(extra_boundary.begin(), extra_boundary.end());
    DegenerationFamily fam = build_family(variant, {}, seeds, extra);
    std::cout << "variant: " << variant_word << "\nregime: " << fam.regime << "\n";
    for (std::size_t i = 0; i < fam.eqs.size(); ++i) {
        std::cout << "eq" << i << " " << fam.eqs[i].bidegree().str() << " = "
                  << fam.eqs[i].str() << "\n";
    }
    std::cout << "component0 = " << fam.component0.str() << "\n";
    std::cout << "component1 = " << fam.component1.str() << "\n";
    if (!fam.intersection.is_zero())
        std::cout << "intersection = " << fam.intersection.str() << "\n";
    std::cout << "boundary:";
    for (const auto& v : fam.boundary.boundary) std::cout << " " << v;
    std::cout << "\n";
    return 0;
}

int cmd_classify(const std::string& facts_path, const std::string& emit,
                 const std::string& format, bool cubic_hypothesis) {
    FactBase facts = facts_path.empty() ? default_fact_base() : [&] {
        std::ifstream in(facts_path);
        if (!in.good()) throw ConfigError("cannot read file: " + facts_path);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_facts(buf.str());
    }();
    TableFormat fmt;
    if (format == "md")
        fmt = TableFormat::Markdown;
    else if (format == "csv")
        fmt = TableFormat::Csv;
    else
        throw ConfigError("unknown format '" + format + "' (use md or csv)");
    ClassifyOptions options;
    options.cubic_hypothesis = cubic_hypothesis;
    Classification all = closure_classify(facts, {}, options);
    std::istringstream names(emit);
    std::string name;
    bool first = true;
    while (std::getline(names, name, ',')) {
        TableLayout layout;
        if (name == "table1")
            layout = table1_layout();
        else if (name == "table2")
            layout = table2_layout();
        else
            throw ConfigError("unknown table '" + name + "' (use table1, table2)");
        if (!first) std::cout << "\n";
        first = false;
        std::cout << emit_tables(all, layout, fmt);
    }
    return 0;
}

int cmd_parse(const std::string& expr, const std::string& vars_path) {
    PolyFile file = load_poly_file(vars_path);
    Poly p = parse_poly(expr, file.table, file.polys);
    std::cout << p.str() << "\n";
    if (!p.is_zero() && p.is_bihomogeneous())
        std::cout << "bidegree: " << p.bidegree().str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for low-bidegree hypersurface computations"};
    app.require_subcommand(1);

    CommonLimits lim;
    std::string suite_path, json_path, id_path, ideal_path, ideal_name, elem;
    std::string variant_word, seed_path, facts_path, emit = "table1,table2";
    std::string format = "md", expr, vars_path;
    std::vector<std::string> extra_boundary;
    bool want_json = false, cubic_hypothesis = false;

    auto* verify = app.add_subcommand("verify", "run a suite of named checks");
    verify->add_option("suite", suite_path, "suite file")->required();
    verify->add_flag("--json-report", want_json, "emit the report as JSON");
    add_limit_flags(verify, lim);

    auto* identity = app.add_subcommand("check-identity", "verify a chart identity file");
    identity->add_option("--id", id_path, "chart identity file")->required();

    auto* groebner = app.add_subcommand("groebner", "ideal membership queries");
    bool is_radical = false;
    auto* member = groebner->add_subcommand("member", "exact ideal membership");
    auto* radical = groebner->add_subcommand("radical", "radical membership");
    groebner->require_subcommand(1);
    for (CLI::App* sub : {member, radical}) {
        sub->add_option("--ideal", ideal_path, "polynomial file declaring the ideal")->required();
        sub->add_option("--name", ideal_name, "ideal name inside the file");
        sub->add_option("--elem", elem, "element to test")->required();
        add_limit_flags(sub, lim);
    }

    auto* families = app.add_subcommand("families", "degeneration families");
    auto* build = families->add_subcommand("build", "construct a family from seeds");
    families->require_subcommand(1);
    build->add_option("--variant", variant_word,
                      "double-cone | degree-raise | kuechle | three-two | cubic-reduction")
        ->required();
    build->add_option("--seed", seed_path, "polynomial file with G/H/cubic/M/L bindings")
        ->required();
    build->add_option("--extra-boundary", extra_boundary, "extra boundary variables");

    auto* classify = app.add_subcommand("classify", "emit rationality tables");
    classify->add_option("--facts", facts_path, "facts file (defaults to the built-in base)");
    classify->add_option("--emit", emit, "comma-separated: table1,table2");
    classify->add_option("--format", format, "md | csv");
    classify->add_flag("--cubic-hypothesis", cubic_hypothesis,
                       "also apply the conjectural cubic reduction rule");

    auto* parse = app.add_subcommand("parse", "parse and canonicalize an expression");
    parse->add_option("--expr", expr, "expression")->required();
    parse->add_option("--vars", vars_path, "polynomial file declaring the variables")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(suite_path, lim, json_path, want_json || !json_path.empty());
        if (identity->parsed()) return cmd_check_identity(id_path);
        if (groebner->parsed()) {
            is_radical = radical->parsed();
            return cmd_groebner(is_radical, ideal_path, ideal_name, elem, lim);
        }
        if (families->parsed())
            return cmd_families_build(variant_word, seed_path, extra_boundary);
        if (classify->parsed())
            return cmd_classify(facts_path, emit, format, cubic_hypothesis);
        if (parse->parsed()) return cmd_parse(expr, vars_path);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
