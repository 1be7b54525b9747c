#ifndef BIDEGREE_PAPERCHECKS_HPP
#define BIDEGREE_PAPERCHECKS_HPP

#include <string>
#include <vector>

#include "bidegree/certificate.hpp"
#include "bidegree/groebner.hpp"

namespace bidegree {

/// Shared knobs for the named built-in checks.
struct CheckContext {
    Limits limits;
    unsigned rng_seed = 2026;
};

/// Names of every built-in check, sorted.
std::vector<std::string> builtin_check_names();

/// Runs one named built-in check; throws ConfigError for unknown names.
/// Each check is self-contained (fixed equations and witnesses) and returns
/// a replayable certificate.
Certificate run_builtin_check(const std::string& name, const CheckContext& ctx = {});

} // namespace bidegree

#endif
