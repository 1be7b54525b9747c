#include "bidegree/polyfile.hpp"

#include <fstream>
#include <sstream>

#include "bidegree/errors.hpp"

namespace bidegree {

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// drops '#' comments and surrounding whitespace
std::string clean(const std::string& line) {
    auto hash = line.find('#');
    return strip(hash == std::string::npos ? line : line.substr(0, hash));
}

Grade parse_grade(const std::string& token, const std::string& line) {
    if (token == "Y" || token == "y") return Grade::Y;
    if (token == "X" || token == "x") return Grade::X;
    if (token == "P" || token == "p" || token == "Param") return Grade::Param;
    throw ConfigError("unknown grade '" + token + "' in: " + line);
}

VarTablePtr parse_vars(const std::string& spec, const std::string& line) {
    std::vector<std::pair<std::string, Grade>> vars;
    std::istringstream in(spec);
    std::string token;
    while (in >> token) {
        auto colon = token.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
            throw ConfigError("variable entries look like name:grade, got '" +
                              token + "' in: " + line);
        vars.emplace_back(token.substr(0, colon),
                          parse_grade(token.substr(colon + 1), line));
    }
    if (vars.empty()) throw ConfigError("empty variable list: " + line);
    return VarTable::make(std::move(vars));
}

std::set<std::string> parse_name_set(const std::string& spec) {
    std::set<std::string> out;
    std::istringstream in(spec);
    std::string token;
    while (in >> token) out.insert(token);
    return out;
}

// "expr" or "expr | denominator"
RatFunc parse_ratfunc(const std::string& spec, const VarTablePtr& table,
                      const ParseEnv& env) {
    auto bar = spec.find('|');
    if (bar == std::string::npos) return RatFunc(parse_poly(spec, table, env));
    return RatFunc(parse_poly(strip(spec.substr(0, bar)), table, env),
                   parse_poly(strip(spec.substr(bar + 1)), table, env));
}

} // namespace

const Poly& PolyFile::poly(const std::string& name) const {
    auto it = polys.find(name);
    if (it == polys.end()) throw ConfigError("no polynomial named '" + name + "'");
    return it->second;
}

const std::vector<Poly>& PolyFile::ideal_gens(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw ConfigError("no ideal named '" + name + "'");
    return it->second;
}

PolyFile parse_poly_file(const std::string& text) {
    PolyFile file;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = clean(raw);
        if (line.empty()) continue;
        if (line.rfind("vars:", 0) == 0) {
            if (file.table) throw ConfigError("duplicate vars: line");
            file.table = parse_vars(line.substr(5), line);
            continue;
        }
        if (!file.table) throw ConfigError("vars: must come first, got: " + line);
        if (line.rfind("ideal ", 0) == 0) {
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw ConfigError("ideal lines look like 'ideal name: g1, g2': " + line);
            std::string name = strip(line.substr(6, colon - 6));
            if (name.empty() || file.ideals.count(name))
                throw ConfigError("bad or duplicate ideal name in: " + line);
            std::vector<Poly> gens;
            std::string rest = line.substr(colon + 1);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                auto comma = rest.find(',', pos);
                std::string entry = strip(comma == std::string::npos
                                              ? rest.substr(pos)
                                              : rest.substr(pos, comma - pos));
                if (entry.empty()) throw ConfigError("empty ideal entry in: " + line);
                gens.push_back(parse_poly(entry, file.table, file.polys));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            file.ideals.emplace(name, std::move(gens));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'name = expr': " + line);
        std::string name = strip(line.substr(0, eq));
        if (name.empty() || name.find(' ') != std::string::npos)
            throw ConfigError("bad binding name in: " + line);
        if (file.polys.count(name) || file.table->has(name))
            throw ConfigError("name '" + name + "' already taken in: " + line);
        file.polys.emplace(name, parse_poly(strip(line.substr(eq + 1)),
                                            file.table, file.polys));
        file.names.push_back(name);
    }
    if (!file.table) throw ConfigError("polynomial file without a vars: line");
    return file;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ConfigError("cannot read file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

PolyFile load_poly_file(const std::string& path) {
    return parse_poly_file(read_file(path));
}

ChartIdentity parse_chart_identity(const std::string& text) {
    VarTablePtr source_table, target_table;
    ParseEnv source_env, target_env;
    std::string source_spec, target_spec, cofactor_spec;
    std::set<std::string> source_dehom, target_dehom;
    ChartSpec source_chart, target_chart;
    std::vector<std::pair<std::string, std::string>> map_specs;

    auto directive = [&](const std::string& line, const char* key,
                         std::string* out) {
        std::string prefix = std::string(key);
        if (line.rfind(prefix, 0) != 0) return false;
        *out = strip(line.substr(prefix.size()));
        return true;
    };

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = clean(raw);
        if (line.empty()) continue;
        std::string rest;
        if (directive(line, "source-vars:", &rest)) {
            source_table = parse_vars(rest, line);
        } else if (directive(line, "target-vars:", &rest)) {
            target_table = parse_vars(rest, line);
        } else if (directive(line, "target-let ", &rest)) {
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw ConfigError("bad let: " + line);
            if (!target_table && !source_table)
                throw ConfigError("target-let before any vars: line");
            const VarTablePtr& t = target_table ? target_table : source_table;
            target_env.emplace(strip(rest.substr(0, eq)),
                               parse_poly(strip(rest.substr(eq + 1)), t, target_env));
        } else if (directive(line, "let ", &rest)) {
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw ConfigError("bad let: " + line);
            if (!source_table) throw ConfigError("let before source-vars:");
            source_env.emplace(
                strip(rest.substr(0, eq)),
                parse_poly(strip(rest.substr(eq + 1)), source_table, source_env));
        } else if (directive(line, "source-dehom:", &rest)) {
            source_dehom = parse_name_set(rest);
        } else if (directive(line, "target-dehom:", &rest)) {
            target_dehom = parse_name_set(rest);
        } else if (directive(line, "source-ones:", &rest)) {
            source_chart.ones = parse_name_set(rest);
        } else if (directive(line, "source-boundary:", &rest)) {
            source_chart.boundary = parse_name_set(rest);
        } else if (directive(line, "target-ones:", &rest)) {
            target_chart.ones = parse_name_set(rest);
        } else if (directive(line, "target-boundary:", &rest)) {
            target_chart.boundary = parse_name_set(rest);
        } else if (directive(line, "source =", &rest) ||
                   directive(line, "source=", &rest)) {
            source_spec = rest;
        } else if (directive(line, "target =", &rest) ||
                   directive(line, "target=", &rest)) {
            target_spec = rest;
        } else if (directive(line, "cofactor", &rest)) {
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw ConfigError("bad cofactor: " + line);
            cofactor_spec = strip(rest.substr(eq + 1));
        } else if (directive(line, "map ", &rest)) {
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw ConfigError("bad map: " + line);
            map_specs.emplace_back(strip(rest.substr(0, eq)),
                                   strip(rest.substr(eq + 1)));
        } else {
            throw ConfigError("unknown chart-identity directive: " + line);
        }
    }

    if (!source_table) throw ConfigError("chart identity needs source-vars:");
    if (source_spec.empty() || target_spec.empty())
        throw ConfigError("chart identity needs source = and target =");
    if (!target_table) target_table = source_table;

    ChartIdentity id;
    id.source = parse_poly(source_spec, source_table, source_env)
                    .dehomogenize(source_dehom);
    id.target = parse_poly(target_spec, target_table, target_env)
                    .dehomogenize(target_dehom);
    for (const auto& [var, spec] : map_specs) {
        if (!target_table->has(var))
            throw ConfigError("map names unknown target variable " + var);
        id.map[var] = parse_ratfunc(spec, source_table, source_env);
    }
    for (const auto& v : id.target.support_vars())
        if (!id.map.count(v) && source_table->has(v))
            id.map[v] = RatFunc(Poly::variable(source_table, v));
    id.cofactor = cofactor_spec.empty()
                      ? RatFunc::constant(source_table, GaussRat(1))
                      : parse_ratfunc(cofactor_spec, source_table, source_env);
    id.source_chart = ChartSpec::make(source_chart.ones, source_chart.boundary);
    id.target_chart = ChartSpec::make(target_chart.ones, target_chart.boundary);
    return id;
}

ChartIdentity load_chart_identity(const std::string& path) {
    return parse_chart_identity(read_file(path));
}

} // namespace bidegree
