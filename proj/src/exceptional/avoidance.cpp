#include "abwalk/exceptional/avoidance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "abwalk/core/error.hpp"

namespace abwalk {

GapCondition gap_condition(const StepSet& steps, const Interval& target) {
    const auto values = steps.values();
    GapCondition gap{target.length(), std::numeric_limits<double>::infinity(), 1.0, false};
    for (std::size_t j = 0; j < values.size(); ++j) {
        gap.min_edge_distance = std::min({gap.min_edge_distance, values[j], 1.0 - values[j]});
        for (std::size_t k = j + 1; k < values.size(); ++k) {
            gap.min_pair_distance = std::min(gap.min_pair_distance, circle_distance(values[j], values[k]));
        }
    }
    gap.satisfied = values.size() >= 2 && gap.target_length + 2 * kBoundaryTolerance < gap.min_pair_distance &&
                    gap.target_length < gap.min_edge_distance;
    return gap;
}

void require_gap_condition(const StepSet& steps, const Interval& target) {
    const auto gap = gap_condition(steps, target);
    if (gap.satisfied) return;
    if (steps.size() < 2) fail(Errc::precondition, "gap condition needs at least two steps");
    if (!(gap.target_length + 2 * kBoundaryTolerance < gap.min_pair_distance)) {
        fail(Errc::precondition, "gap condition violated: target length " + std::to_string(gap.target_length) +
                                     " is not below the minimum circle distance between steps " +
                                     std::to_string(gap.min_pair_distance));
    }
    fail(Errc::precondition, "gap condition violated: target length " + std::to_string(gap.target_length) +
                                 " is not below min_k min(alpha_k, 1 - alpha_k) = " +
                                 std::to_string(gap.min_edge_distance));
}

bool in_forbidden_zone(double point, const Interval& target) noexcept {
    const double lo = target.a() - kBoundaryTolerance;
    const double hi = target.b() + kBoundaryTolerance;
    if (lo <= point && point <= hi) return true;
    // Wrapped pieces of the widened zone.
    if (lo < 0.0 && point >= lo + 1.0) return true;
    if (hi > 1.0 && point <= hi - 1.0) return true;
    return false;
}

void extend_avoiding(Word& word, TorusWalker& walker, const StepSet& steps, const Interval& target, std::size_t m,
                     std::vector<double>* visited) {
    word.reserve(word.size() + m);
    for (std::size_t i = 0; i < m; ++i) {
        Word::Symbol chosen = 0;
        for (Word::Symbol s = 1; s <= steps.size(); ++s) {
            if (!in_forbidden_zone(walker.peek(s), target)) {
                chosen = s;
                break;
            }
        }
        if (chosen == 0) {
            fail(Errc::infeasible_avoidance, "every step from " + std::to_string(walker.position()) + " lands in " +
                                                 target.to_string());
        }
        const double p = walker.advance(chosen);
        word.push_back(chosen);
        if (visited) visited->push_back(p);
    }
}

Word avoid_extension_unchecked(double current, const StepSet& steps, const AvoidancePolicy& policy, std::size_t m) {
    require(current >= 0.0 && current < 1.0, Errc::domain, "current point must lie in [0, 1)");
    Word word(steps.size());
    TorusWalker walker(steps, current);
    extend_avoiding(word, walker, steps, policy.target, m);
    return word;
}

Word avoid_extension(double current, const StepSet& steps, const AvoidancePolicy& policy, std::size_t m) {
    require_gap_condition(steps, policy.target);
    return avoid_extension_unchecked(current, steps, policy, m);
}

Interval cell_interval(std::size_t i, std::size_t q) {
    require(q >= 1 && i >= 1 && i <= q, Errc::range, "cell index outside 1..q");
    const double qd = static_cast<double>(q);
    return Interval::half_open(static_cast<double>(i - 1) / qd, i == q ? 1.0 : static_cast<double>(i) / qd);
}

std::size_t cell_index(double p, std::size_t q) {
    require(p >= 0.0 && p < 1.0, Errc::domain, "point must lie in [0, 1)");
    require(q >= 1, Errc::range, "q must be positive");
    const double qd = static_cast<double>(q);
    auto i = static_cast<std::size_t>(std::floor(p * qd)) + 1;
    i = std::min(i, q);
    while (i > 1 && p < static_cast<double>(i - 1) / qd) --i;
    while (i < q && p >= static_cast<double>(i) / qd) ++i;
    return i;
}

std::size_t least_hit_interval(std::span<const double> positions, std::size_t q) {
    require(q >= 2, Errc::invalid_argument, "need q >= 2 cells");
    std::vector<std::uint64_t> counts(q, 0);
    for (double p : positions) ++counts[cell_index(p, q) - 1];
    return static_cast<std::size_t>(std::min_element(counts.begin(), counts.end()) - counts.begin()) + 1;
}

std::size_t least_hit_interval(const Orbit& orbit, std::size_t q, std::size_t n) {
    require(n <= orbit.size(), Errc::range, "n exceeds the orbit length");
    return least_hit_interval(orbit.positions().first(n), q);
}

}  // namespace abwalk
