#ifndef BIDEGREE_FORMS_HPP
#define BIDEGREE_FORMS_HPP

#include <map>
#include <vector>

#include "bidegree/certificate.hpp"
#include "bidegree/ratfunc.hpp"

namespace bidegree {

/// Diagonal quadratic form over the fraction field.
struct QuadForm {
    std::vector<RatFunc> diag;

    std::size_t rank() const { return diag.size(); }
};

/// n-fold Pfister form <<a1,...,an>>. `table` is only consulted when the
/// slot list is empty (the 0-fold form still needs a ring for its <1>).
struct PfisterForm {
    std::vector<RatFunc> slots;
    VarTablePtr table;

    static PfisterForm of(std::vector<RatFunc> slots_) {
        PfisterForm p;
        p.slots = std::move(slots_);
        if (!p.slots.empty()) p.table = p.slots.front().table();
        return p;
    }
};

/// Witness data showing `sub` sits inside the expansion of a Pfister form.
/// Each sub entry is either matched to a distinct expanded entry up to sign
/// and a square factor, or realized by a two-term representation
/// a^2*c1 + b^2*c2 = target inside the unmatched part.
struct SubformCertificate {
    struct Match {
        std::size_t pfister_index;
        RatFunc witness;  // square factor: sub = sign * witness^2 * entry
        int sign;         // +1 or -1
    };
    struct Representation {
        std::size_t sub_index;
        RatFunc a, b, c1, c2;
        RatFunc target;
    };
    std::map<std::size_t, Match> entry_matching;  // keyed by sub-form index
    std::vector<Representation> representations;
};

/// Expand <<a1,...,an>> to its 2^n diagonal entries: products of -a_j over
/// subsets, in tensor order (empty slot list gives <1>).
QuadForm pfister_expand(const PfisterForm& p);

/// Checks a^2*c1 + b^2*c2 = target exactly. (a,b) must not both be zero.
Certificate verify_representation(const RatFunc& a, const RatFunc& b,
                                  const RatFunc& c1, const RatFunc& c2,
                                  const RatFunc& target);

/// Replays a subform certificate entry by entry. Matched entries must hit
/// distinct Pfister entries; representation targets must equal their sub
/// entry and draw c1, c2 from still-unused Pfister entries up to sign.
/// Throws IncompleteCertificate / IdentityFails(index) when the data is
/// missing or an identity does not hold.
Certificate verify_subform_certificate(const QuadForm& sub, const PfisterForm& p,
                                       const SubformCertificate& cert);

} // namespace bidegree

#endif
