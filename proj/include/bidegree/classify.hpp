#ifndef BIDEGREE_CLASSIFY_HPP
#define BIDEGREE_CLASSIFY_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "bidegree/errors.hpp"

namespace bidegree {

/// Rationality status of the very general hypersurface of bidegree (d, f)
/// in P^l x P^m. The two rational statuses and TorGreaterOne are mutually
/// exclusive; deriving both is an inconsistency.
enum class CellStatus { Unknown, Rational, RationalByLang, TorGreaterOne };

std::string status_symbol(CellStatus s);  // "?", "R", "R*", "Tor>1"

struct ClassCell {
    int l = 0, m = 0, d = 0, f = 0;
    CellStatus status = CellStatus::Unknown;
    std::string provenance;  // derivation chain: fact tags and rule names
};

/// One recorded fact: a status on all cells with coordinates equal to the
/// stated value, or at least it where the matching open flag is set.
struct FactPattern {
    int l = 1, m = 1, d = 1, f = 1;
    bool l_open = false, m_open = false, d_open = false, f_open = false;
    CellStatus status = CellStatus::Unknown;
    std::string tag;  // citation tag, required

    bool matches(int l_, int m_, int d_, int f_) const;
};

struct FactBase {
    std::vector<FactPattern> facts;
};

/// Facts file: one fact per line, "l m d f status tag" with "k+" marking an
/// open lower bound and status one of rational | rational-lang | tor.
/// '#' starts a comment.
FactBase parse_facts(const std::string& text);

/// The fact base shipped with the toolkit (see data/literature.facts).
FactBase default_fact_base();

struct GridBounds {
    int lmax = 7, mmax = 7, dmax = 8, fmax = 8;
};

struct ClassifyOptions {
    // conditional rule: assuming very general cubics in P^(m) for m-1 >= 3
    // odd or m-1 = 4 have no decomposition of the diagonal, bidegree (d, 3)
    // with d >= l+1 inherits TorGreaterOne
    bool cubic_hypothesis = false;
};

using CellKey = std::tuple<int, int, int, int>;  // (l, m, d, f)
using Classification = std::map<CellKey, ClassCell>;

/// Least fixed point of the inference rules over every cell of the grid:
///   - facts seed their matching cells;
///   - factor swap: status at (l,m,d,f) transfers to (m,l,f,d);
///   - d = 1 or f = 1 gives Rational;
///   - f = 2 and m+1 > 2^l gives RationalByLang (Tsen-Lang section bound
///     for quadric bundles, plus Springer's theorem);
///   - TorGreaterOne at (l,m,d,f) propagates to (l',m,d',f') whenever
///     l' >= l, f' >= f, d' >= d + (l'-l).
/// Conflicting derivations abort with InconsistentFactBase.
Classification closure_classify(const FactBase& base, const GridBounds& grid = {},
                                const ClassifyOptions& options = {});

/// One table row: d and f either fixed or open upward from the stated value.
struct RowSpec {
    std::string label;
    int d_min = 1, f_min = 1;
    bool d_open = false, f_open = false;
};

struct TableLayout {
    std::string title;
    std::vector<std::pair<int, int>> columns;  // (l, m) per column
    std::vector<RowSpec> rows;
};

TableLayout table1_layout();  // threefolds and fourfolds, 6 rows x 4 columns
TableLayout table2_layout();  // fivefolds and sixfolds, 9 rows x 6 columns

enum class TableFormat { Markdown, Csv };

/// Renders the layout against a computed classification. Every concrete cell
/// a row/column slot covers must be inside the grid (else GridTooSmall);
/// a slot whose covered cells disagree renders as "mixed".
std::string emit_tables(const Classification& result, const TableLayout& layout,
                        TableFormat format = TableFormat::Markdown);

} // namespace bidegree

#endif
