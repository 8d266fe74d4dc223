// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "abwalk/verify/suite.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    std::size_t threads = 0;
    CLI::App app{"acceptance criteria"};
    app.add_option("--seed", seed, "suite seed");
    app.add_option("--threads", threads, "worker threads, 0 = all cores");
    CLI11_PARSE(app, argc, argv);

    const auto report = abwalk::run_suite("acceptance", seed, threads, [](const abwalk::CriterionResult& r) {
        std::cout << abwalk::format_result_line(r) << std::endl;
    });
    std::size_t passed = 0;
    for (const auto& r : report.results) passed += r.pass ? 1 : 0;
    std::cout << passed << "/" << report.results.size() << " criteria passed" << std::endl;
    return report.passed() ? 0 : 1;
}
