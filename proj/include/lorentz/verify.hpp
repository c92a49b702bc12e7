#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lorentz/report.hpp"

namespace lorentz {

struct VerifyOptions {
    std::uint64_t seed = 12345;
    /** When >= 0, replaces the built-in tolerance of every check. */
    double tol_override = -1.0;
};

/** Names accepted by run_suite: algebra, littlegroup, contraction, spinors,
    and the concatenation of all four, all. */
std::vector<std::string> suite_names();

/** Run one named check suite and return its report.  Throws DomainError for
    an unknown suite name.  Runs are deterministic for a fixed seed. */
Report run_suite(const std::string& suite, const VerifyOptions& options = {});

}  // namespace lorentz
