#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace abwalk {

/// One checked claim. `pass` already includes the runtime limit.
struct CriterionResult {
    std::string id;
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    std::string relation;  // how measured is compared with threshold, e.g. "<="
    bool value_ok = false;
    double runtime_seconds = 0.0;
    double runtime_limit_seconds = 0.0;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CriterionResult> results;

    bool passed() const noexcept;
};

/// "acceptance", "oracles", "smoke".
const std::vector<std::string>& suite_names();

using ResultCallback = std::function<void(const CriterionResult&)>;

/// Runs every criterion of the suite in order; `on_result` sees each result as
/// it completes. Unknown names throw invalid_argument.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t threads = 0,
                      const ResultCallback& on_result = {});

/// "<id> <PASS|FAIL> measured=<v> <relation> threshold=<t> runtime=<s>s/<limit>s <detail>"
std::string format_result_line(const CriterionResult& result);

}  // namespace abwalk
