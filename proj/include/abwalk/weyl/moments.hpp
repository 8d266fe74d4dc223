#pragma once

#include <cstdint>

#include "abwalk/core/step_set.hpp"
#include "abwalk/weyl/weyl_sum.hpp"

namespace abwalk {

enum class ThetaCase {
    contracting,  // |theta| < 1: correlations decay geometrically
    unimodular,   // |theta| = 1: every e(h alpha_k) coincides
};

struct Theta {
    Complex value;
    ThetaCase kind;
};

/// One-step character average (1/l) sum_k e(h alpha_k).
Theta theta(const StepSet& steps, std::int64_t h);

/// E|W_{N,h}|^2 = N + 2 Re sum_{k=1}^{N-1} (N - k) theta^k under the uniform
/// product measure. Uses the geometric closed form when |1 - theta| is at least
/// kGeometricGuard, the direct O(N) sum otherwise.
double expected_sq_modulus(const StepSet& steps, std::int64_t h, std::uint64_t n);

inline constexpr double kGeometricGuard = 1e-3;

/// Mean of |W_{n,h}|^2 over all l^n words by depth-first enumeration with
/// prefix reuse. Throws budget_exceeded when l^n > 2^22.
double exhaustive_sq_moment(const StepSet& steps, std::int64_t h, unsigned n);

inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 22;

}  // namespace abwalk
