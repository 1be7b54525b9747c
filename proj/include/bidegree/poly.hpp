#ifndef BIDEGREE_POLY_HPP
#define BIDEGREE_POLY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bidegree/gauss.hpp"
#include "bidegree/vartable.hpp"

namespace bidegree {

/// Sparse multivariate polynomial over Q(i). Terms are kept in a map sorted
/// descending by the table's monomial order, so begin() is the leading term
/// and serialization is canonical. Zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Monomial, GaussRat, MonomialCmp>;

    Poly() = default;
    explicit Poly(VarTablePtr table)
        : table_(std::move(table)), terms_(MonomialCmp{table_->order()}) {}

    static Poly zero(VarTablePtr table) { return Poly(std::move(table)); }
    static Poly constant(VarTablePtr table, GaussRat c);
    static Poly variable(VarTablePtr table, const std::string& name, unsigned power = 1);
    static Poly monomial(VarTablePtr table, Monomial m, GaussRat c);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    const Monomial& leading_monomial() const;
    const GaussRat& leading_coeff() const;

    GaussRat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const GaussRat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussRat& c, const Poly& p);
    Poly pow(unsigned e) const;
    friend bool operator==(const Poly& a, const Poly& b) {
        return same_table(a.table_, b.table_) && a.terms_ == b.terms_;
    }

    /// Formal partial derivative.
    Poly derivative(const std::string& var) const;

    unsigned degree_in(const std::string& var) const;
    /// Coefficient of var^k, as a polynomial with the var-exponent removed.
    Poly coeff_of_power(const std::string& var, unsigned k) const;

    /// Bidegree of one term under the table's grading.
    Bidegree term_bidegree(const Monomial& m) const;
    /// Bidegree of the whole polynomial; throws NotBihomogeneous / ZeroPolynomial.
    Bidegree bidegree() const;
    bool is_bihomogeneous() const;

    /// Set each chart variable to 1. Grading metadata of the remaining
    /// variables is untouched (same VarTable).
    Poly dehomogenize(const std::set<std::string>& chart) const;
    /// Inverse direction: pad every term with powers of y_var/x_var to reach
    /// `target`; throws if some term already exceeds it.
    Poly rehomogenize(const std::string& y_var, const std::string& x_var,
                      Bidegree target) const;
    /// Substitute 0 for a variable (restriction to a coordinate hyperplane).
    Poly set_zero(const std::string& var) const;
    /// Polynomial substitution map (every image a Poly over `target`).
    /// Variables absent from `map` must not occur in *this.
    Poly subst(const std::map<std::string, Poly>& map, const VarTablePtr& target) const;

    /// Quotient q with *this == q*g; throws NotDivisible.
    Poly exact_divide(const Poly& g) const;

    /// Same polynomial viewed over a table containing all our variables
    /// (matched by name; used for ring extensions).
    Poly embed(const VarTablePtr& bigger) const;

    std::set<std::string> support_vars() const;

    /// Canonical serialization: terms descending in the monomial order,
    /// coefficients as reduced a+bi fractions.
    std::string str() const;

private:
    void check_table(const Poly& o) const;

    VarTablePtr table_;
    TermMap terms_;
};

} // namespace bidegree

#endif
