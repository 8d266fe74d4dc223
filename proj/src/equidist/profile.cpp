#include <algorithm>
#include <cmath>

#include "abwalk/core/error.hpp"
#include "abwalk/equidist/discrepancy.hpp"

namespace abwalk {
namespace {

void check_checkpoints(std::span<const std::uint64_t> checkpoints, std::size_t limit) {
    require(!checkpoints.empty(), Errc::range, "need at least one checkpoint");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        require(checkpoints[i] > 0 && (i == 0 || checkpoints[i] > checkpoints[i - 1]), Errc::range,
                "checkpoints must be positive and strictly increasing");
    }
    require(checkpoints.back() <= limit, Errc::range, "checkpoint beyond the orbit length");
}

// Least-squares slope of log(value) against log(N); zero values are clamped.
double log_log_slope(std::span<const std::uint64_t> checkpoints, std::span<const double> values) {
    const std::size_t m = checkpoints.size();
    if (m < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = std::log(static_cast<double>(checkpoints[i]));
        const double y = std::log(std::max(values[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = static_cast<double>(m) * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (static_cast<double>(m) * sxy - sx * sy) / denom;
}

}  // namespace

const char* to_string(Verdict verdict) noexcept {
    switch (verdict) {
    case Verdict::consistent_with_ud: return "consistent-with-ud";
    case Verdict::inconsistent: return "inconsistent";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict judge(std::span<const std::uint64_t> checkpoints, std::span<const double> values, const VerdictConfig& config) {
    bool any_large = false;
    bool all_above_floor = true;
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < config.large_n) continue;
        any_large = true;
        all_above_floor = all_above_floor && values[i] >= config.inconsistent_floor;
    }
    if (!any_large) return Verdict::inconclusive;
    if (all_above_floor) return Verdict::inconsistent;
    if (values.back() <= config.consistent_threshold && log_log_slope(checkpoints, values) <= 0.0)
        return Verdict::consistent_with_ud;
    return Verdict::inconclusive;
}

DiscrepancyProfile ud_profile(const Orbit& orbit, std::span<const std::uint64_t> checkpoints,
                              const VerdictConfig& config) {
    check_checkpoints(checkpoints, orbit.size());
    DiscrepancyProfile profile;
    profile.checkpoints.assign(checkpoints.begin(), checkpoints.end());
    for (std::uint64_t n : checkpoints) profile.dstar.push_back(star_discrepancy(orbit.positions().first(n)));
    profile.verdict = judge(profile.checkpoints, profile.dstar, config);
    return profile;
}

FrequencyProfile frequency_profile(const Orbit& orbit, const Interval& interval,
                                   std::span<const std::uint64_t> checkpoints, const VerdictConfig& config) {
    check_checkpoints(checkpoints, orbit.size());
    FrequencyProfile profile{interval, {checkpoints.begin(), checkpoints.end()}, {}, {}, {}, Verdict::inconclusive};
    std::uint64_t hits = 0;
    std::size_t next = 0;
    for (std::size_t n = 1; next < checkpoints.size(); ++n) {
        if (interval.contains(orbit.positions()[n - 1])) ++hits;
        if (n == checkpoints[next]) {
            const double f = static_cast<double>(hits) / static_cast<double>(n);
            profile.hits.push_back(hits);
            profile.frequency.push_back(f);
            profile.deviation.push_back(std::fabs(f - interval.length()));
            ++next;
        }
    }
    profile.verdict = judge(profile.checkpoints, profile.deviation, config);
    return profile;
}

}  // namespace abwalk
