#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace permwqo {

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    std::set<std::string> only;  // check names to run; empty runs all
};

struct CheckOutcome {
    bool passed = false;
    std::string detail;
};

struct SuiteCheck {
    std::string name;  // "module.property"
    std::string description;
    std::function<CheckOutcome(const SuiteConfig&)> run;
};

struct CheckResult {
    std::size_t id = 0;  // 1-based position in suite_checks()
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// The property battery, in fixed check-id order.
const std::vector<SuiteCheck>& suite_checks();

/// Runs the selected checks, possibly concurrently. `report` is called in
/// check-id order regardless of completion order. A check that throws fails
/// with the exception text as its detail.
std::vector<CheckResult> run_suite(const SuiteConfig& config,
                                   const std::function<void(const CheckResult&)>& report = {});

}  // namespace permwqo
