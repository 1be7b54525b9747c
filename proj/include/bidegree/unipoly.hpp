#ifndef BIDEGREE_UNIPOLY_HPP
#define BIDEGREE_UNIPOLY_HPP

#include <optional>
#include <vector>

#include "bidegree/ratfunc.hpp"

namespace bidegree {

/// Univariate polynomial in an abstract variable with fraction-field
/// coefficients. coeffs[k] is the coefficient of v^k; no trailing zeros.
struct UniPoly {
    std::vector<RatFunc> coeffs;
    VarTablePtr table;  // table of the coefficient ring

    static UniPoly zero(const VarTablePtr& t) { return UniPoly{{}, t}; }
    static UniPoly constant(const RatFunc& c);

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const RatFunc& lead() const;
    RatFunc coeff(std::size_t k) const;
    void trim();

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const RatFunc& c) const;
    UniPoly monic() const;
    UniPoly derivative() const;
    UniPoly pow(unsigned e) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    std::string str(const std::string& var) const;
};

/// Reads p as a polynomial in `var`; the remaining variables go into the
/// coefficients untouched.
UniPoly unipoly_from(const Poly& p, const std::string& var);

/// Quotient and remainder over the coefficient field.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd by the Euclidean algorithm.
UniPoly gcd(UniPoly a, UniPoly b);

/// Squarefree decomposition (characteristic zero): returns monic a_1,...,a_k
/// with p = lc * prod a_i^i and the a_i squarefree and pairwise coprime.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

/// Exact polynomial square root when one exists.
std::optional<Poly> poly_sqrt(const Poly& p);
std::optional<RatFunc> ratfunc_sqrt(const RatFunc& q);

} // namespace bidegree

#endif
