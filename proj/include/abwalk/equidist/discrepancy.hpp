#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "abwalk/core/interval.hpp"
#include "abwalk/core/orbit.hpp"
#include "abwalk/weyl/weyl_sum.hpp"

namespace abwalk {

/// Exact star discrepancy sup_t |#{x_n < t}/N - t| via the sorted-sample
/// formula max_i max(i/N - x_(i), x_(i) - (i-1)/N). O(N log N).
/// Throws range on empty input and domain for points outside [0, 1).
///
/// Anchored intervals only; the extreme discrepancy over all intervals is at
/// most twice this value.
double star_discrepancy(std::span<const double> points);

/// Finite-sample evidence about uniform distribution. Never a proof.
enum class Verdict { consistent_with_ud, inconsistent, inconclusive };

const char* to_string(Verdict verdict) noexcept;

struct VerdictConfig {
    double consistent_threshold = 0.02;
    double inconsistent_floor = 0.10;
    std::uint64_t large_n = 100000;  // checkpoints below this are not judged
};

/// Verdict rules, applied to a per-checkpoint deviation series:
///  - inconclusive when no checkpoint reaches large_n;
///  - inconsistent when every large checkpoint stays at or above the floor;
///  - consistent when the last value is at most the threshold and the
///    least-squares slope of log(value) against log(N) is not positive;
///  - inconclusive otherwise.
Verdict judge(std::span<const std::uint64_t> checkpoints, std::span<const double> values, const VerdictConfig& config);

struct DiscrepancyProfile {
    std::vector<std::uint64_t> checkpoints;
    std::vector<double> dstar;
    Verdict verdict = Verdict::inconclusive;
};

DiscrepancyProfile ud_profile(const Orbit& orbit, std::span<const std::uint64_t> checkpoints,
                              const VerdictConfig& config = {});

/// Empirical frequency of one interval along the orbit.
struct FrequencyProfile {
    Interval interval;
    std::vector<std::uint64_t> checkpoints;
    std::vector<std::uint64_t> hits;
    std::vector<double> frequency;
    std::vector<double> deviation;  // |frequency - |I||
    Verdict verdict = Verdict::inconclusive;
};

FrequencyProfile frequency_profile(const Orbit& orbit, const Interval& interval,
                                   std::span<const std::uint64_t> checkpoints, const VerdictConfig& config = {});

/// Erdos-Turan constant used by erdos_turan_bound.
inline constexpr double kErdosTuranConstant = 3.0;

/// C (1/K + sum_{h=1}^{K} |W_{N,h}| / (h N)) with C = 3 and K = series count.
/// The series must cover exactly h = 1..K (any order) and contain checkpoint N;
/// otherwise throws invalid_argument. A cross-check against star_discrepancy.
double erdos_turan_bound(std::span<const WeylSeries> series, std::uint64_t n);

}  // namespace abwalk
