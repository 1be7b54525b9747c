#include "bidegree/vartable.hpp"

namespace bidegree {

VarTablePtr VarTable::make(std::vector<std::pair<std::string, Grade>> vars,
                           MonomialOrder order) {
    auto t = std::make_shared<VarTable>();
    t->order_ = order;
    for (auto& [name, grade] : vars) {
        if (t->by_name_.count(name))
            throw Error("duplicate variable name: " + name);
        t->by_name_[name] = t->names_.size();
        t->names_.push_back(name);
        t->grades_.push_back(grade);
    }
    return t;
}

std::size_t VarTable::index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw UnknownVariable(name);
    return it->second;
}

VarTablePtr VarTable::extended(const std::string& fresh, Grade g) const {
    std::vector<std::pair<std::string, Grade>> vars;
    for (std::size_t i = 0; i < names_.size(); ++i) vars.emplace_back(names_[i], grades_[i]);
    vars.emplace_back(fresh, g);
    return make(std::move(vars), order_);
}

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
        return false;
    }
    // graded reverse lex
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = a.exps.size(); i-- > 0;)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return false;
}

} // namespace bidegree
