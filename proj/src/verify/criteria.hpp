#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace abwalk::verify_detail {

struct Context {
    std::uint64_t seed;
    std::size_t threads;
};

struct Outcome {
    double measured;
    double threshold;
    std::string relation;
    bool value_ok;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string name;
    double runtime_limit_seconds;
    std::function<Outcome(const Context&)> run;
};

std::vector<Criterion> acceptance_criteria();
std::vector<Criterion> oracle_criteria();
std::vector<Criterion> smoke_criteria();

}  // namespace abwalk::verify_detail
