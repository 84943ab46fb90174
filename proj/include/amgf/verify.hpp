// The self-verification suite behind `amgf verify-all`.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace amgf {

struct VerifyOptions {
    /// Halved orders and ranges.
    bool quick = false;
    /// Id of a check to sabotage; that check must then report FAIL.
    std::optional<std::string> inject_fault;
    /// Run just this check.
    std::optional<std::string> only;
    /// Run independent checks on separate threads.
    bool parallel = true;
};

struct CheckResult {
    std::string id;
    std::string module;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Ids of all checks, in report order.
std::vector<std::string> verify_check_ids();

/// Runs every check; results come back in the order of verify_check_ids().
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

/// "PASS|FAIL <module>/<id> (<seconds>s)[: detail]"
std::string render(const CheckResult& r);

}  // namespace amgf
