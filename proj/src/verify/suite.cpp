#include "abwalk/verify/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>

#include "abwalk/core/error.hpp"
#include "abwalk/io/format.hpp"
#include "criteria.hpp"

namespace abwalk {

bool SuiteReport::passed() const noexcept {
    return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"acceptance", "oracles", "smoke"};
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t threads,
                      const ResultCallback& on_result) {
    using namespace verify_detail;
    std::vector<Criterion> criteria;
    if (name == "acceptance") {
        criteria = acceptance_criteria();
    } else if (name == "oracles") {
        criteria = oracle_criteria();
    } else if (name == "smoke") {
        criteria = smoke_criteria();
    } else {
        fail(Errc::invalid_argument, "unknown suite '" + name + "' (expected acceptance, oracles or smoke)");
    }

    SuiteReport report{name, seed, {}};
    const Context context{seed, threads};
    for (const auto& c : criteria) {
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        r.runtime_limit_seconds = c.runtime_limit_seconds;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = c.run(context);
            r.measured = o.measured;
            r.threshold = o.threshold;
            r.relation = o.relation;
            r.value_ok = o.value_ok;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.relation = "error";
            r.value_ok = false;
            r.detail = e.what();
        }
        r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.pass = r.value_ok && r.runtime_seconds < r.runtime_limit_seconds;
        if (on_result) on_result(r);
        report.results.push_back(std::move(r));
    }
    return report;
}

std::string format_result_line(const CriterionResult& r) {
    std::string line = r.id + (r.pass ? " PASS" : " FAIL") + " measured=" + format_double(r.measured) + " " +
                       r.relation + " threshold=" + format_double(r.threshold);
    char runtime[64];
    std::snprintf(runtime, sizeof runtime, " runtime=%.3fs/%gs", r.runtime_seconds, r.runtime_limit_seconds);
    line += runtime;
    if (!r.value_ok) line += " value-check-failed";
    if (r.runtime_seconds >= r.runtime_limit_seconds) line += " over-time";
    line += " | " + r.name;
    if (!r.detail.empty()) line += " | " + r.detail;
    return line;
}

}  // namespace abwalk
