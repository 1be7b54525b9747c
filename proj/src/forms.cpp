#include "bidegree/forms.hpp"

#include <set>

namespace bidegree {

QuadForm pfister_expand(const PfisterForm& p) {
    for (const auto& s : p.slots)
        if (s.is_zero()) throw ZeroSlot();
    VarTablePtr table = p.slots.empty() ? p.table : p.slots.front().table();
    if (!table) throw ConfigError("Pfister form with empty slots needs a table");
    QuadForm q;
    q.diag.push_back(RatFunc::constant(table, GaussRat(1)));
    for (const auto& a : p.slots) {
        std::size_t n = q.diag.size();
        for (std::size_t i = 0; i < n; ++i) q.diag.push_back(q.diag[i] * (-a));
    }
    return q;
}

Certificate verify_representation(const RatFunc& a, const RatFunc& b,
                                  const RatFunc& c1, const RatFunc& c2,
                                  const RatFunc& target) {
    if (a.is_zero() && b.is_zero()) throw ZeroWitness();
    Certificate cert;
    cert.kind = "representation";
    RatFunc lhs = a.pow(2) * c1 + b.pow(2) * c2;
    if (lhs == target) {
        cert.verdict = Verdict::Pass;
        cert.trace.push_back("(" + a.str() + ")^2*(" + c1.str() + ") + (" + b.str() +
                             ")^2*(" + c2.str() + ") = " + target.str());
    } else {
        cert.verdict = Verdict::Fail;
        cert.failure = "witness identity does not hold; lhs = " + lhs.str();
    }
    return cert;
}

namespace {

bool match_up_to_sign(const RatFunc& c, const RatFunc& entry) {
    return c == entry || c == -entry;
}

} // namespace

Certificate verify_subform_certificate(const QuadForm& sub, const PfisterForm& p,
                                       const SubformCertificate& cert) {
    QuadForm expanded = pfister_expand(p);
    Certificate out;
    out.kind = "subform";

    std::set<std::size_t> covered;
    for (const auto& [i, m] : cert.entry_matching) covered.insert(i);
    for (const auto& r : cert.representations) covered.insert(r.sub_index);
    for (std::size_t i = 0; i < sub.rank(); ++i)
        if (!covered.count(i))
            throw IncompleteCertificate("sub entry " + std::to_string(i) + " not covered");

    std::set<std::size_t> used;
    for (const auto& [i, m] : cert.entry_matching) {
        if (i >= sub.rank())
            throw IncompleteCertificate("matching references sub entry " + std::to_string(i));
        if (m.pfister_index >= expanded.rank())
            throw IncompleteCertificate("matching references Pfister entry " +
                                        std::to_string(m.pfister_index));
        if (!used.insert(m.pfister_index).second)
            throw IncompleteCertificate("Pfister entry " + std::to_string(m.pfister_index) +
                                        " matched twice");
        if (m.witness.is_zero()) throw ZeroWitness();
        RatFunc rhs = m.witness.pow(2) * expanded.diag[m.pfister_index];
        if (m.sign < 0) rhs = -rhs;
        if (!(sub.diag[i] == rhs)) throw IdentityFails(i);
        out.trace.push_back("entry " + std::to_string(i) + " = " +
                            (m.sign < 0 ? std::string("-") : std::string("")) + "(" +
                            m.witness.str() + ")^2 * expansion[" +
                            std::to_string(m.pfister_index) + "]");
    }

    for (const auto& r : cert.representations) {
        if (r.sub_index >= sub.rank())
            throw IncompleteCertificate("representation references sub entry " +
                                        std::to_string(r.sub_index));
        if (!(r.target == sub.diag[r.sub_index])) throw IdentityFails(r.sub_index);
        if (r.a.is_zero() && r.b.is_zero()) throw ZeroWitness();

        auto claim = [&](const RatFunc& c) -> bool {
            for (std::size_t j = 0; j < expanded.rank(); ++j) {
                if (used.count(j)) continue;
                if (match_up_to_sign(c, expanded.diag[j])) {
                    used.insert(j);
                    return true;
                }
            }
            return false;
        };
        if (!claim(r.c1) || !claim(r.c2))
            throw IncompleteCertificate("representation coefficients for sub entry " +
                                        std::to_string(r.sub_index) +
                                        " are not unused Pfister entries");
        RatFunc lhs = r.a.pow(2) * r.c1 + r.b.pow(2) * r.c2;
        if (!(lhs == r.target)) throw IdentityFails(r.sub_index);
        out.trace.push_back("entry " + std::to_string(r.sub_index) + " = (" + r.a.str() +
                            ")^2*(" + r.c1.str() + ") + (" + r.b.str() + ")^2*(" +
                            r.c2.str() + ")");
    }

    out.verdict = Verdict::Pass;
    out.trace.push_back("axiom:subform-implies-vanishing");
    return out;
}

} // namespace bidegree
