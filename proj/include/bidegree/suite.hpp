#ifndef BIDEGREE_SUITE_HPP
#define BIDEGREE_SUITE_HPP

#include <string>
#include <vector>

#include "bidegree/paperchecks.hpp"

namespace bidegree {

/// What a suite entry expects of its check. PassOrUnknown accepts either
/// verdict, for time-boxed heavy checks that may hit a resource limit.
enum class Expectation { Pass, Fail, Unknown, PassOrUnknown };

const char* to_string(Expectation e);

struct CheckDescriptor {
    std::string name;    // built-in check name
    std::string anchor;  // human-readable reference, required nonempty
    Expectation expected = Expectation::Pass;
};

/// Suite file contents. Format, one directive per line, '#' comments:
///   seed: 2026
///   timeout-secs: 120        max-pairs: 50000       max-terms: 500000
///   check <name> expect <Pass|Fail|Unknown|PassOrUnknown> anchor <text...>
struct SuiteConfig {
    std::vector<CheckDescriptor> checks;
    unsigned rng_seed = 2026;
    Limits limits;
};

SuiteConfig parse_suite(const std::string& text);
SuiteConfig load_suite(const std::string& path);

struct CheckOutcome {
    CheckDescriptor desc;
    Certificate cert;
    bool met = false;
    double seconds = 0.0;
    std::string error;  // nonempty when the check threw instead of returning
};

struct SuiteReport {
    std::vector<CheckOutcome> outcomes;

    bool all_met() const;
};

/// Runs every check in file order; results keep that order regardless of
/// scheduling. Checks run concurrently up to the BIDEGREE_LAB_THREADS cap
/// (default: hardware concurrency). Per-check exceptions are recorded in the
/// outcome and never abort the suite.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Structured-text report, one block per check. Timing lines start with
/// "  time:" so byte-comparisons can strip them.
std::string report_text(const SuiteReport& report);

/// Machine-readable report.
std::string report_json(const SuiteReport& report);

} // namespace bidegree

#endif
