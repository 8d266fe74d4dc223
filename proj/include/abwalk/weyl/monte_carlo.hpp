#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "abwalk/core/step_set.hpp"
#include "abwalk/weyl/weyl_sum.hpp"

namespace abwalk {

// Trial i samples its word from WordSampler(subseed(seed, i), l); per-trial
// values are reduced in trial order, so results do not depend on `threads`
// (0 = all hardware threads).

struct MomentReport {
    std::uint64_t n = 0;
    std::int64_t h = 1;
    std::uint64_t trials = 0;
    double sample_mean = 0.0;  // mean of |W_{N,h}|^2
    double closed_form = 0.0;  // exact expectation
    double standard_error = 0.0;
    Complex theta;
};

MomentReport mc_second_moment(const StepSet& steps, std::int64_t h, std::uint64_t n, std::uint64_t trials,
                              std::uint64_t seed, std::size_t threads = 0);

struct TailReport {
    std::uint64_t n = 0;
    std::int64_t h = 1;
    std::uint64_t trials = 0;
    double epsilon = 0.0;    // NaN when the threshold was given explicitly
    double threshold = 0.0;  // sqrt(N) (ln N)^{3/2 + epsilon}
    std::uint64_t exceedances = 0;
    double probability = 0.0;
    double ci_low = 0.0;  // Wilson score interval, 95%
    double ci_high = 0.0;
};

/// Fraction of sampled words with U_{N,h} >= sqrt(N) (ln N)^{3/2+epsilon}.
TailReport mc_tail_probability(const StepSet& steps, std::int64_t h, std::uint64_t n, double epsilon,
                               std::uint64_t trials, std::uint64_t seed, std::size_t threads = 0);

TailReport mc_tail_probability_at(const StepSet& steps, std::int64_t h, std::uint64_t n, double threshold,
                                  std::uint64_t trials, std::uint64_t seed, std::size_t threads = 0);

double tail_threshold(std::uint64_t n, double epsilon);

struct CompletionMomentReport {
    std::uint64_t n = 0;
    std::int64_t h = 1;
    std::uint64_t trials = 0;
    double mean_sq = 0.0;  // mean of U_{N,h}^2
    double standard_error = 0.0;
    double normalized = 0.0;  // mean_sq / (N (ln N)^2)
};

CompletionMomentReport mc_completion_moment(const StepSet& steps, std::int64_t h, std::uint64_t n,
                                            std::uint64_t trials, std::uint64_t seed, std::size_t threads = 0);

/// One WeylSeries per sampled word, evaluated while streaming the walk.
std::vector<WeylSeries> sampled_weyl_series(const StepSet& steps, std::int64_t h,
                                            std::span<const std::uint64_t> checkpoints, std::uint64_t trials,
                                            std::uint64_t seed, std::size_t threads = 0);

struct Proportion {
    double estimate;
    double low;
    double high;
};

Proportion wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

}  // namespace abwalk
