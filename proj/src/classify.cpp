#include "bidegree/classify.hpp"

#include <sstream>

namespace bidegree {

std::string status_symbol(CellStatus s) {
    switch (s) {
        case CellStatus::Rational: return "R";
        case CellStatus::RationalByLang: return "R*";
        case CellStatus::TorGreaterOne: return "Tor>1";
        default: return "?";
    }
}

namespace {

bool coord_ok(int value, int min, bool open) {
    return open ? value >= min : value == min;
}

std::string cell_str(int l, int m, int d, int f) {
    std::ostringstream os;
    os << "(" << l << "," << m << "," << d << "," << f << ")";
    return os.str();
}

bool rational_type(CellStatus s) {
    return s == CellStatus::Rational || s == CellStatus::RationalByLang;
}

// lattice merge: Unknown below everything, Rational above RationalByLang,
// TorGreaterOne incomparable with the rational side
bool merge(ClassCell& cell, CellStatus s, const std::string& prov) {
    if (s == CellStatus::Unknown || s == cell.status) return false;
    if (cell.status != CellStatus::Unknown) {
        if (rational_type(cell.status) != rational_type(s))
            throw InconsistentFactBase(
                "cell " + cell_str(cell.l, cell.m, cell.d, cell.f) + " is " +
                status_symbol(cell.status) + " (" + cell.provenance +
                ") but also derives " + status_symbol(s) + " (" + prov + ")");
        if (!(cell.status == CellStatus::RationalByLang && s == CellStatus::Rational))
            return false;
    }
    cell.status = s;
    cell.provenance = prov;
    return true;
}

} // namespace

bool FactPattern::matches(int l_, int m_, int d_, int f_) const {
    return coord_ok(l_, l, l_open) && coord_ok(m_, m, m_open) &&
           coord_ok(d_, d, d_open) && coord_ok(f_, f, f_open);
}

Classification closure_classify(const FactBase& base, const GridBounds& grid,
                                const ClassifyOptions& options) {
    if (grid.lmax < 1 || grid.mmax < 1 || grid.dmax < 1 || grid.fmax < 1)
        throw GridTooSmall("all bounds must be at least 1");
    for (const auto& fact : base.facts)
        if (fact.tag.empty()) throw ConfigError("fact without a citation tag");

    Classification cells;
    for (int l = 1; l <= grid.lmax; ++l)
        for (int m = 1; m <= grid.mmax; ++m)
            for (int d = 1; d <= grid.dmax; ++d)
                for (int f = 1; f <= grid.fmax; ++f)
                    cells[{l, m, d, f}] = {l, m, d, f, CellStatus::Unknown, ""};

    // cell-local rules and facts seed the closure
    for (auto& [key, cell] : cells) {
        if (cell.d == 1 || cell.f == 1)
            merge(cell, CellStatus::Rational, "linear-factor");
        // quadric bundle over P^l with fiber dimension m-1: Tsen-Lang gives a
        // section as soon as m+1 > 2^l, and Springer's theorem then descends
        // rationality to the very general member
        if (cell.f == 2 && cell.l < 31 && cell.m + 1 > (1 << cell.l))
            merge(cell, CellStatus::RationalByLang, "tsen-lang");
        // conditional: assumes very general cubics in P^m, m-1 >= 3 odd or
        // m-1 = 4, have no decomposition of the diagonal
        if (options.cubic_hypothesis && cell.f == 3 && cell.d >= cell.l + 1 &&
            ((cell.m >= 4 && cell.m % 2 == 0) || cell.m == 5))
            merge(cell, CellStatus::TorGreaterOne, "cubic-hypothesis");
        for (const auto& fact : base.facts)
            if (fact.matches(cell.l, cell.m, cell.d, cell.f))
                merge(cell, fact.status, "fact:" + fact.tag);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [key, cell] : cells) {
            if (cell.status == CellStatus::Unknown) continue;
            CellStatus s = cell.status;
            // a bidegree (d,f) hypersurface in P^l x P^m is the same variety
            // as a (f,d) hypersurface in P^m x P^l
            auto sw = cells.find({cell.m, cell.l, cell.f, cell.d});
            if (sw != cells.end())
                changed |= merge(sw->second, s,
                                 "swap of " + cell_str(cell.l, cell.m, cell.d, cell.f));
            if (s != CellStatus::TorGreaterOne) continue;
            // degeneration: raise the first factor and the first degree
            // together, and the second degree freely
            std::string prov = "raise-degree-dimension from " +
                               cell_str(cell.l, cell.m, cell.d, cell.f);
            for (int l2 = cell.l; l2 <= grid.lmax; ++l2)
                for (int d2 = cell.d + (l2 - cell.l); d2 <= grid.dmax; ++d2)
                    for (int f2 = cell.f; f2 <= grid.fmax; ++f2) {
                        auto it = cells.find({l2, cell.m, d2, f2});
                        if (it != cells.end()) changed |= merge(it->second, s, prov);
                    }
        }
    }
    return cells;
}

namespace {

CellStatus parse_status(const std::string& token) {
    if (token == "rational") return CellStatus::Rational;
    if (token == "rational-lang") return CellStatus::RationalByLang;
    if (token == "tor") return CellStatus::TorGreaterOne;
    throw ConfigError("unknown status token: " + token);
}

void parse_coord(const std::string& token, int& value, bool& open) {
    std::string digits = token;
    open = false;
    if (!digits.empty() && digits.back() == '+') {
        open = true;
        digits.pop_back();
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("bad coordinate token: " + token);
    value = std::stoi(digits);
    if (value < 1) throw ConfigError("coordinates start at 1: " + token);
}

} // namespace

FactBase parse_facts(const std::string& text) {
    FactBase base;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tl, tm, td, tf, ts;
        if (!(ls >> tl)) continue;  // blank line
        if (!(ls >> tm >> td >> tf >> ts))
            throw ConfigError("facts line needs: l m d f status tag");
        FactPattern fact;
        parse_coord(tl, fact.l, fact.l_open);
        parse_coord(tm, fact.m, fact.m_open);
        parse_coord(td, fact.d, fact.d_open);
        parse_coord(tf, fact.f, fact.f_open);
        fact.status = parse_status(ts);
        std::string word;
        while (ls >> word) {
            if (!fact.tag.empty()) fact.tag += " ";
            fact.tag += word;
        }
        if (fact.tag.empty()) throw ConfigError("facts line needs a citation tag");
        base.facts.push_back(fact);
    }
    return base;
}

FactBase default_fact_base() {
    return parse_facts(R"(
# quadric surface bundle results in dimension 4
2 3 2 2 tor hpt-quadric-surface-bundle
2 2 2 2 tor hassett-tschinkel
# conic bundle threefolds over P^2
1 3 2+ 3+ tor okada-krylov
# multidegree hypersurfaces with high second degree
1 5 2+ 4+ tor lange-zhang
# results established in this toolkit's source material
4 3 3 2 tor 3-2-in-P4xP3
1 4 2 3 tor 2-3-in-P1xP4
1 6 2 4 tor 2-4-in-P1xP6
# transcribed table row, not derivable from the facts above by the rules
3 4 4+ 2 tor table:P3xP4-f2-row
)");
}

TableLayout table1_layout() {
    TableLayout t;
    t.title = "Dimensions 3 and 4";
    t.columns = {{1, 3}, {2, 2}, {2, 3}, {1, 4}};
    t.rows = {{"(1,f)", 1, 1, false, true},
              {"(d,1)", 1, 1, true, false},
              {"(2,2)", 2, 2, false, false},
              {"(2,f>=3)", 2, 3, false, true},
              {"(d>=3,2)", 3, 2, true, false},
              {"(d>=3,f>=3)", 3, 3, true, true}};
    return t;
}

TableLayout table2_layout() {
    TableLayout t;
    t.title = "Dimensions 5 and 6";
    t.columns = {{1, 5}, {2, 4}, {3, 3}, {1, 6}, {2, 5}, {3, 4}};
    t.rows = {{"(1,f)", 1, 1, false, true},
              {"(d,1)", 1, 1, true, false},
              {"(2,2)", 2, 2, false, false},
              {"(3,2)", 3, 2, false, false},
              {"(2,3)", 2, 3, false, false},
              {"(3,3)", 3, 3, false, false},
              {"(d>=2,f>=4)", 2, 4, true, true},
              {"(d>=4,f=2)", 4, 2, true, false},
              {"(d>=4,f=3)", 4, 3, true, false}};
    return t;
}

namespace {

struct Slot {
    std::string symbol;
    std::string provenance;  // of the first covered cell, when uniform
};

Slot render_slot(const Classification& result, int l, int m, const RowSpec& row,
                 const GridBounds& grid) {
    Slot slot;
    bool first = true;
    CellStatus status = CellStatus::Unknown;
    for (int d = row.d_min; d <= (row.d_open ? grid.dmax : row.d_min); ++d)
        for (int f = row.f_min; f <= (row.f_open ? grid.fmax : row.f_min); ++f) {
            auto it = result.find({l, m, d, f});
            if (it == result.end())
                throw GridTooSmall("row " + row.label + " needs cell " +
                                   cell_str(l, m, d, f));
            if (first) {
                status = it->second.status;
                slot.provenance = it->second.provenance;
                first = false;
            } else if (it->second.status != status) {
                slot.symbol = "mixed";
                return slot;
            }
        }
    slot.symbol = status_symbol(status);
    return slot;
}

// the grid actually present in a computed classification
GridBounds observed_bounds(const Classification& result) {
    GridBounds g{0, 0, 0, 0};
    for (const auto& [key, cell] : result) {
        g.lmax = std::max(g.lmax, cell.l);
        g.mmax = std::max(g.mmax, cell.m);
        g.dmax = std::max(g.dmax, cell.d);
        g.fmax = std::max(g.fmax, cell.f);
    }
    return g;
}

} // namespace

std::string emit_tables(const Classification& result, const TableLayout& layout,
                        TableFormat format) {
    GridBounds grid = observed_bounds(result);
    for (const auto& [l, m] : layout.columns)
        if (l > grid.lmax || m > grid.mmax)
            throw GridTooSmall("column P" + std::to_string(l) + "xP" +
                               std::to_string(m) + " outside the computed grid");
    for (const auto& row : layout.rows)
        if (row.d_min > grid.dmax || row.f_min > grid.fmax)
            throw GridTooSmall("row " + row.label + " outside the computed grid");

    std::ostringstream os;
    if (format == TableFormat::Csv) {
        os << "row,column,status,provenance\n";
        for (const auto& row : layout.rows)
            for (const auto& [l, m] : layout.columns) {
                Slot slot = render_slot(result, l, m, row, grid);
                // row labels and provenance contain commas, so quote them
                os << '"' << row.label << "\",P" << l << "xP" << m << ","
                   << slot.symbol << ",\"" << slot.provenance << "\"\n";
            }
        return os.str();
    }

    os << "# " << layout.title << "\n\n";
    os << "| bidegree |";
    for (const auto& [l, m] : layout.columns) os << " P" << l << "xP" << m << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < layout.columns.size(); ++i) os << "---|";
    os << "\n";
    std::vector<std::string> notes;
    for (const auto& row : layout.rows) {
        os << "| " << row.label << " |";
        for (const auto& [l, m] : layout.columns) {
            Slot slot = render_slot(result, l, m, row, grid);
            os << " " << slot.symbol << " |";
            if (!slot.provenance.empty())
                notes.push_back(row.label + " / P" + std::to_string(l) + "xP" +
                                std::to_string(m) + ": " + slot.provenance);
        }
        os << "\n";
    }
    if (!notes.empty()) {
        os << "\nDerivations:\n";
        for (const auto& n : notes) os << "- " << n << "\n";
    }
    return os.str();
}

} // namespace bidegree
