#include "bidegree/suite.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "bidegree/errors.hpp"
#include "json.hpp"

namespace bidegree {

const char* to_string(Expectation e) {
    switch (e) {
        case Expectation::Pass: return "Pass";
        case Expectation::Fail: return "Fail";
        case Expectation::Unknown: return "Unknown";
        case Expectation::PassOrUnknown: return "PassOrUnknown";
    }
    return "?";
}

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Expectation parse_expectation(const std::string& word, const std::string& line) {
    if (word == "Pass") return Expectation::Pass;
    if (word == "Fail") return Expectation::Fail;
    if (word == "Unknown") return Expectation::Unknown;
    if (word == "PassOrUnknown") return Expectation::PassOrUnknown;
    throw ConfigError("unknown expectation '" + word + "' in: " + line);
}

std::size_t parse_count(const std::string& value, const std::string& line) {
    try {
        return static_cast<std::size_t>(std::stoull(strip(value)));
    } catch (const std::exception&) {
        throw ConfigError("expected a number in: " + line);
    }
}

bool expectation_met(Expectation e, Verdict v) {
    switch (e) {
        case Expectation::Pass: return v == Verdict::Pass;
        case Expectation::Fail: return v == Verdict::Fail;
        case Expectation::Unknown: return v == Verdict::Unknown;
        case Expectation::PassOrUnknown:
            return v == Verdict::Pass || v == Verdict::Unknown;
    }
    return false;
}

// FNV-1a over the trace lines; a stable fingerprint for report comparison
std::string trace_digest(const Certificate& cert) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= '\n';
        h *= 1099511628211ull;
    };
    mix(cert.kind);
    mix(std::string(to_string(cert.verdict)));
    for (const auto& line : cert.trace) mix(line);
    mix(cert.failure);
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

unsigned thread_cap(std::size_t jobs) {
    unsigned cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("BIDEGREE_LAB_THREADS")) {
        try {
            unsigned v = static_cast<unsigned>(std::stoul(env));
            if (v >= 1) cap = v;
        } catch (const std::exception&) {
            // unreadable value: keep the default
        }
    }
    if (cap > jobs) cap = static_cast<unsigned>(jobs == 0 ? 1 : jobs);
    return cap;
}

} // namespace

SuiteConfig parse_suite(const std::string& text) {
    SuiteConfig cfg;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        std::string line = strip(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.rfind("seed:", 0) == 0) {
            cfg.rng_seed = static_cast<unsigned>(parse_count(line.substr(5), line));
        } else if (line.rfind("timeout-secs:", 0) == 0) {
            cfg.limits.timeout =
                std::chrono::seconds(parse_count(line.substr(13), line));
        } else if (line.rfind("max-pairs:", 0) == 0) {
            cfg.limits.max_pairs = parse_count(line.substr(10), line);
        } else if (line.rfind("max-terms:", 0) == 0) {
            cfg.limits.max_terms = parse_count(line.substr(10), line);
        } else if (line.rfind("check ", 0) == 0) {
            std::istringstream fields(line.substr(6));
            std::string name, kw_expect, expect_word, kw_anchor;
            fields >> name >> kw_expect >> expect_word >> kw_anchor;
            if (name.empty() || kw_expect != "expect" || kw_anchor != "anchor")
                throw ConfigError(
                    "check lines look like 'check <name> expect <verdict> "
                    "anchor <text>': " + line);
            std::string anchor;
            std::getline(fields, anchor);
            anchor = strip(anchor);
            if (anchor.empty()) throw ConfigError("empty anchor in: " + line);
            cfg.checks.push_back(
                {name, anchor, parse_expectation(expect_word, line)});
        } else {
            throw ConfigError("unknown suite directive: " + line);
        }
    }
    return cfg;
}

SuiteConfig load_suite(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ConfigError("cannot read file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_suite(buf.str());
}

bool SuiteReport::all_met() const {
    for (const auto& o : outcomes)
        if (!o.met) return false;
    return true;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
    SuiteReport report;
    report.outcomes.resize(cfg.checks.size());

    CheckContext ctx;
    ctx.limits = cfg.limits;
    ctx.rng_seed = cfg.rng_seed;

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cfg.checks.size()) return;
            CheckOutcome& out = report.outcomes[i];
            out.desc = cfg.checks[i];
            auto t0 = std::chrono::steady_clock::now();
            try {
                out.cert = run_builtin_check(out.desc.name, ctx);
                out.met = expectation_met(out.desc.expected, out.cert.verdict);
            } catch (const std::exception& e) {
                out.error = e.what();
                out.met = false;
            }
            out.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
        }
    };

    unsigned cap = thread_cap(cfg.checks.size());
    if (cap <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < cap; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return report;
}

std::string report_text(const SuiteReport& report) {
    std::ostringstream os;
    std::size_t met = 0;
    for (const auto& o : report.outcomes) {
        if (o.met) ++met;
        os << (o.met ? "ok   " : "FAIL ") << o.desc.name << "\n";
        os << "  anchor: " << o.desc.anchor << "\n";
        os << "  expected: " << to_string(o.desc.expected);
        if (!o.error.empty()) {
            os << "  got: error\n  error: " << o.error << "\n";
        } else {
            os << "  got: " << to_string(o.cert.verdict) << "\n";
            os << "  digest: " << trace_digest(o.cert) << "\n";
            if (!o.cert.failure.empty()) os << "  note: " << o.cert.failure << "\n";
        }
        os << "  time: " << o.seconds << "s\n";
    }
    os << met << "/" << report.outcomes.size() << " expectations met\n";
    return os.str();
}

std::string report_json(const SuiteReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& o : report.outcomes) {
        nlohmann::json entry = {
            {"name", o.desc.name},
            {"anchor", o.desc.anchor},
            {"expected", to_string(o.desc.expected)},
            {"met", o.met},
            {"seconds", o.seconds},
        };
        if (o.error.empty()) {
            entry["verdict"] = to_string(o.cert.verdict);
            entry["digest"] = trace_digest(o.cert);
            entry["trace"] = o.cert.trace;
            if (!o.cert.failure.empty()) entry["failure"] = o.cert.failure;
        } else {
            entry["error"] = o.error;
        }
        checks.push_back(std::move(entry));
    }
    nlohmann::json doc = {{"checks", std::move(checks)},
                          {"all_met", report.all_met()}};
    return doc.dump(2) + "\n";
}

} // namespace bidegree
