#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lorentz {

/** Outcome of one named numeric check: pass iff deviation <= tolerance. */
struct CheckResult {
    std::string name;
    std::string anchor;  // the formula or identity the check pins down
    double deviation = 0.0;
    double tolerance = 0.0;
    std::string note;  // optional; flags documented convention choices
    bool pass = false;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    int passed() const;
    int failed() const;
    bool all_passed() const { return failed() == 0; }
};

/** Format a double with 17 significant digits, the library-wide convention
    for machine-readable output (round-trips exactly; negative zero is
    normalized to zero). */
std::string format_number(double x);

/** Minimal JSON string escaping for the quote and backslash characters. */
std::string json_escape(const std::string& s);

/** Deterministic JSON rendering:
    {"suite": ..., "seed": ..., "checks": [{"name", "status", "deviation",
    "tolerance", "paper_anchor"[, "note"]}...], "summary": {"passed",
    "failed"}}. */
std::string to_json(const Report& r);

/** Human-readable fixed-width table with a trailing summary line. */
std::string to_text(const Report& r);

}  // namespace lorentz
