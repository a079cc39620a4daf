#pragma once

#include "sl2cx/reduced.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sl2cx {

struct CheckResult {
    std::string name;
    bool passed{false};
    double max_residual{0.0};
    long samples{0};
    std::string note{};
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed{42};
    std::vector<CheckResult> checks;
    std::vector<WitnessPair> witnesses;

    [[nodiscard]] bool all_passed() const;
};

/// Known suites: functions, algebra, geodesics, polar, quotients, reduced,
/// all. Unknown names throw std::invalid_argument.
[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs a suite. m_filter (when finite) restricts the m-dependent checks to
/// that single value; tol_scale multiplies every tolerance.
[[nodiscard]] SuiteReport run_suite(const std::string& suite, std::uint64_t seed,
                                    double m_filter, double tol_scale);

void write_report_json(const SuiteReport& report, std::ostream& os);

} // namespace sl2cx
