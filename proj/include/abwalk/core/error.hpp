#pragma once

#include <stdexcept>
#include <string>

namespace abwalk {

enum class Errc {
    invalid_alphabet,
    invalid_word,
    invalid_frequency,
    invalid_argument,
    range,
    domain,
    precondition,
    infeasible_avoidance,
    budget_exceeded,
};

// Coarse grouping used by the CLI to pick an exit status.
enum class ErrorCategory { validation, infeasible, budget };

constexpr ErrorCategory category_of(Errc code) noexcept {
    switch (code) {
    case Errc::infeasible_avoidance:
        return ErrorCategory::infeasible;
    case Errc::budget_exceeded:
        return ErrorCategory::budget;
    default:
        return ErrorCategory::validation;
    }
}

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return category_of(code_); }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

inline void require(bool condition, Errc code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace abwalk
