#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "abwalk/core/interval.hpp"
#include "abwalk/core/orbit.hpp"
#include "abwalk/core/step_set.hpp"
#include "abwalk/core/word.hpp"

namespace abwalk {

/// Boundary slack: the forbidden zone is the closed target widened by this
/// much on each side (mod 1), so avoided points clear the target by > 1e-12.
inline constexpr double kBoundaryTolerance = 1e-12;

/// Greedy avoidance of `target`; among admissible symbols the lowest wins.
struct AvoidancePolicy {
    Interval target;
};

struct GapCondition {
    double target_length;
    double min_pair_distance;  // min circle distance between step values; +inf for one step
    double min_edge_distance;  // min_k min(alpha_k, 1 - alpha_k)
    bool satisfied;
};

/// Requires |I| + 2 tol < min pairwise circle distance and |I| < edge distance.
/// A single-step set has no pair to fall back on and never satisfies it.
GapCondition gap_condition(const StepSet& steps, const Interval& target);

/// Throws precondition naming the violated bound.
void require_gap_condition(const StepSet& steps, const Interval& target);

bool in_forbidden_zone(double point, const Interval& target) noexcept;

/// m greedy symbols from `current` that keep every new point out of the
/// forbidden zone. Checks the gap condition first.
Word avoid_extension(double current, const StepSet& steps, const AvoidancePolicy& policy, std::size_t m);

/// Same walk without the gap check; throws infeasible_avoidance when every
/// symbol lands in the zone.
Word avoid_extension_unchecked(double current, const StepSet& steps, const AvoidancePolicy& policy, std::size_t m);

/// Appends m avoiding symbols to `word`, moving `walker` along; the visited
/// points go to `visited` when given.
void extend_avoiding(Word& word, TorusWalker& walker, const StepSet& steps, const Interval& target, std::size_t m,
                     std::vector<double>* visited = nullptr);

/// [(i-1)/q, i/q) for 1 <= i <= q.
Interval cell_interval(std::size_t i, std::size_t q);

/// The i with p in cell_interval(i, q), consistent with Interval::contains.
std::size_t cell_index(double p, std::size_t q);

/// Lowest-index cell with the fewest of the points; its count is <= N/q.
std::size_t least_hit_interval(std::span<const double> positions, std::size_t q);

/// Over S_1..S_n. Throws range if n exceeds the orbit, invalid_argument if q < 2.
std::size_t least_hit_interval(const Orbit& orbit, std::size_t q, std::size_t n);

}  // namespace abwalk
