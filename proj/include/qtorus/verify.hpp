#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtorus/lattice.hpp"
#include "qtorus/siegel.hpp"

namespace qtorus {

struct CheckResult {
    std::string name;
    nlohmann::json parameters;
    double residual = 0.0;
    double tolerance = 0.0;
    bool exceeds = false; // when set, the check passes iff residual > tolerance
    bool pass = false;
};

struct VerifyConfig {
    int n = 1;
    std::optional<SiegelPoint> T;           // fiber for the fiber-specific checks
    TruncationParams trunc{8.0, 1e-12};
    int quad_order = 0;                      // 0 -> 40 for n = 1, 20 for n = 2
    std::optional<double> tol_override;      // replaces every per-check tolerance
    std::uint64_t seed = 1;
};

/// Runs one of the named suites ("classical", "quantum", "crossed", "all")
/// and reports every check. `emit`, when given, is called after each check
/// so long runs stream progress.
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyConfig& config,
                                      const std::function<void(const CheckResult&)>& emit = {});

} // namespace qtorus
