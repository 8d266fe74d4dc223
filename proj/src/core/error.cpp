#include "abwalk/core/error.hpp"

namespace abwalk {

const char* to_string(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_alphabet: return "invalid-alphabet";
    case Errc::invalid_word: return "invalid-word";
    case Errc::invalid_frequency: return "invalid-frequency";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::range: return "range";
    case Errc::domain: return "domain";
    case Errc::precondition: return "precondition";
    case Errc::infeasible_avoidance: return "infeasible-avoidance";
    case Errc::budget_exceeded: return "budget-exceeded";
    }
    return "unknown";
}

void fail(Errc code, const std::string& message) {
    throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace abwalk
