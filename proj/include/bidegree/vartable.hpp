#ifndef BIDEGREE_VARTABLE_HPP
#define BIDEGREE_VARTABLE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bidegree/errors.hpp"

namespace bidegree {

/// Per-variable bidegree tag: Y contributes (1,0), X contributes (0,1),
/// PARAM contributes (0,0) (the DVR parameters t, s).
enum class Grade : std::uint8_t { Y, X, Param };

enum class MonomialOrder : std::uint8_t { GrevLex, Lex };

struct Bidegree {
    int dy = 0;
    int dx = 0;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
    Bidegree operator+(const Bidegree& o) const { return {dy + o.dy, dx + o.dx}; }
    std::string str() const { return "(" + std::to_string(dy) + "," + std::to_string(dx) + ")"; }
};

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

class VarTable {
public:
    static VarTablePtr make(std::vector<std::pair<std::string, Grade>> vars,
                            MonomialOrder order = MonomialOrder::GrevLex);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    Grade grade(std::size_t i) const { return grades_[i]; }
    MonomialOrder order() const { return order_; }

    std::size_t index(const std::string& name) const;
    bool has(const std::string& name) const { return by_name_.count(name) != 0; }

    /// Same table with one fresh variable appended (Rabinowitsch extension).
    VarTablePtr extended(const std::string& fresh, Grade g) const;

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.names_ == b.names_ && a.grades_ == b.grades_ && a.order_ == b.order_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Grade> grades_;
    MonomialOrder order_ = MonomialOrder::GrevLex;
    std::map<std::string, std::size_t> by_name_;
};

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Exponent vector indexed by a VarTable.
struct Monomial {
    std::vector<unsigned> exps;

    explicit Monomial(std::size_t nvars = 0) : exps(nvars, 0) {}

    unsigned total_degree() const {
        unsigned d = 0;
        for (unsigned e : exps) d += e;
        return d;
    }
    bool is_constant() const { return total_degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] + o.exps[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }
    Monomial quotient(const Monomial& o) const {
        Monomial r(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] - o.exps[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.exps.size());
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            r.exps[i] = a.exps[i] > b.exps[i] ? a.exps[i] : b.exps[i];
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] != 0 && o.exps[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// true iff a < b in the given order (both over the same table).
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order);

/// std::map comparator; descending so the leading term comes first.
struct MonomialCmp {
    MonomialOrder order = MonomialOrder::GrevLex;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(b, a, order);
    }
};

} // namespace bidegree

#endif
