#ifndef BIDEGREE_GROEBNER_HPP
#define BIDEGREE_GROEBNER_HPP

#include <chrono>
#include <vector>

#include "bidegree/poly.hpp"

namespace bidegree {

struct Ideal {
    std::vector<Poly> gens;

    explicit Ideal(std::vector<Poly> gens_);
    const VarTablePtr& table() const { return gens.front().table(); }
};

struct Limits {
    std::size_t max_pairs = 50000;
    std::size_t max_terms = 500000;
    std::chrono::milliseconds timeout{120000};
};

struct GroebnerStats {
    std::size_t pairs_processed = 0;
    std::size_t max_intermediate_terms = 0;
};

struct GroebnerBasis {
    std::vector<Poly> basis;  // interreduced, monic, deterministic order
    MonomialOrder order = MonomialOrder::GrevLex;
    GroebnerStats stats;

    bool is_unit_ideal() const;
};

/// S-polynomial of two nonzero polynomials over one table.
Poly s_polynomial(const Poly& a, const Poly& b);

/// Full normal form of f modulo the given (not necessarily Groebner) set.
Poly normal_form(const Poly& f, const std::vector<Poly>& gens);

/// Buchberger with normal (smallest-lcm) pair selection and the coprime
/// leading term criterion; result interreduced. Throws ResourceExceeded with
/// partial stats when limits are hit.
GroebnerBasis buchberger(const Ideal& i, const Limits& limits = {});

struct MembershipResult {
    bool member;
    Poly normal_form;  // zero iff member
};

MembershipResult ideal_member(const Poly& f, const GroebnerBasis& gb);
MembershipResult ideal_member(const Poly& f, const Ideal& i, const Limits& limits = {});

enum class Tribool { True, False, Unknown };

/// f in the radical of i, decided by adjoining z and testing whether
/// 1 lies in i + (1 - z*f). Resource exhaustion yields Unknown.
Tribool radical_member(const Poly& f, const Ideal& i, const Limits& limits = {});

/// The same ideal rebuilt over a table that differs only in monomial order.
Ideal with_order(const Ideal& i, MonomialOrder order);

} // namespace bidegree

#endif
