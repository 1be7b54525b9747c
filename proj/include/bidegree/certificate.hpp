#ifndef BIDEGREE_CERTIFICATE_HPP
#define BIDEGREE_CERTIFICATE_HPP

#include <string>
#include <vector>

namespace bidegree {

enum class Verdict { Pass, Fail, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "Pass";
        case Verdict::Fail: return "Fail";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

/// Structured verification record. Pass certificates list every verified
/// sub-identity in `trace` so a reviewer can replay them.
struct Certificate {
    std::string kind;
    std::string inputs_digest;
    Verdict verdict = Verdict::Unknown;
    std::vector<std::string> trace;
    std::string anchor;
    std::string failure;  // set when verdict != Pass

    bool passed() const { return verdict == Verdict::Pass; }

    std::string report() const {
        std::string out = "[" + std::string(to_string(verdict)) + "] " + kind;
        if (!anchor.empty()) out += "  (" + anchor + ")";
        out += "\n";
        if (!inputs_digest.empty()) out += "  inputs: " + inputs_digest + "\n";
        for (const auto& t : trace) out += "  - " + t + "\n";
        if (!failure.empty()) out += "  ! " + failure + "\n";
        return out;
    }
};

} // namespace bidegree

#endif
