#ifndef BIDEGREE_ERRORS_HPP
#define BIDEGREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bidegree {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : Error {
    std::size_t pos;
    SyntaxError(const std::string& what, std::size_t pos_)
        : Error(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable: " + name) {}
};

struct VarTableMismatch : Error {
    VarTableMismatch() : Error("operands use different variable tables") {}
};

struct NotBihomogeneous : Error {
    std::string term_a, term_b;
    NotBihomogeneous(const std::string& a, const std::string& b)
        : Error("not bihomogeneous: terms " + a + " and " + b + " differ in bidegree"),
          term_a(a), term_b(b) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial has no bidegree") {}
};

struct DivideByZero : Error {
    DivideByZero() : Error("division by zero") {}
};

struct NotDivisible : Error {
    NotDivisible() : Error("exact division failed: remainder is nonzero") {}
};

struct UnmappedVariable : Error {
    explicit UnmappedVariable(const std::string& name)
        : Error("substitution map does not cover variable: " + name) {}
};

struct ZeroDenominatorImage : Error {
    ZeroDenominatorImage() : Error("substitution image has zero denominator") {}
};

struct ZeroSlot : Error {
    ZeroSlot() : Error("Pfister slot entries must be nonzero") {}
};

struct ZeroWitness : Error {
    ZeroWitness() : Error("representation witness (a,b) must be nonzero") {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct IdentityFails : Error {
    std::size_t index;
    explicit IdentityFails(std::size_t index_)
        : Error("certificate identity fails at entry " + std::to_string(index_)),
          index(index_) {}
};

struct ResourceExceeded : Error {
    std::size_t pairs_processed;
    std::size_t max_terms_seen;
    ResourceExceeded(std::size_t pairs, std::size_t terms)
        : Error("resource limit exceeded (S-pairs processed: " + std::to_string(pairs) +
                ", max intermediate terms: " + std::to_string(terms) + ")"),
          pairs_processed(pairs), max_terms_seen(terms) {}
};

struct BadParams : Error {
    explicit BadParams(const std::string& what) : Error("bad family parameters: " + what) {}
};

struct SeedDegreeMismatch : Error {
    explicit SeedDegreeMismatch(const std::string& what)
        : Error("seed degree mismatch: " + what) {}
};

struct FactorizationFails : Error {
    explicit FactorizationFails(const std::string& what)
        : Error("special fiber does not factor: " + what) {}
};

struct NotLinearInVariable : Error {
    explicit NotLinearInVariable(const std::string& name)
        : Error("equation is not linear in variable " + name) {}
};

struct NotMonicQuadratic : Error {
    explicit NotMonicQuadratic(const std::string& what)
        : Error("not a (unit-scaled) monic quadratic: " + what) {}
};

struct NotUnivariate : Error {
    explicit NotUnivariate(const std::string& what)
        : Error("polynomial is not univariate: " + what) {}
};

struct IncompleteCertificate : Error {
    explicit IncompleteCertificate(const std::string& what)
        : Error("incomplete certificate: " + what) {}
};

struct ComponentMismatch : Error {
    explicit ComponentMismatch(const std::string& what)
        : Error("component mismatch: " + what) {}
};

struct InconsistentFactBase : Error {
    explicit InconsistentFactBase(const std::string& what)
        : Error("inconsistent fact base: " + what) {}
};

struct GridTooSmall : Error {
    explicit GridTooSmall(const std::string& what)
        : Error("classification grid too small: " + what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

} // namespace bidegree

#endif
