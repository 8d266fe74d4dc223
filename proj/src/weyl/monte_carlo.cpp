#include "abwalk/weyl/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abwalk/core/error.hpp"
#include "abwalk/core/orbit.hpp"
#include "abwalk/core/parallel.hpp"
#include "abwalk/core/rng.hpp"
#include "abwalk/core/word.hpp"
#include "abwalk/weyl/completion.hpp"
#include "abwalk/weyl/moments.hpp"

namespace abwalk {
namespace {

std::vector<Complex> sampled_phases(const StepSet& steps, std::int64_t h, std::uint64_t n, std::uint64_t seed) {
    WordSampler sampler(seed, steps.size());
    TorusWalker walker(steps);
    std::vector<Complex> a(n);
    for (auto& z : a) z = unit_phase(h, walker.advance(sampler.next()));
    return a;
}

struct MeanAndError {
    double mean;
    double standard_error;
};

// Shifted two-pass in index order; identical values give exactly zero error.
MeanAndError summarize(const std::vector<double>& values) {
    const auto count = static_cast<double>(values.size());
    const double shift = values.front();
    double sum = 0.0;
    for (double v : values) sum += v - shift;
    const double offset = sum / count;
    double ss = 0.0;
    for (double v : values) ss += (v - shift - offset) * (v - shift - offset);
    const double variance = values.size() > 1 ? ss / (count - 1.0) : 0.0;
    return {shift + offset, std::sqrt(variance / count)};
}

std::vector<double> completion_values(const StepSet& steps, std::int64_t h, std::uint64_t n, std::uint64_t trials,
                                      std::uint64_t seed, std::size_t threads) {
    std::vector<double> u(trials);
    parallel_for(trials, threads, [&](std::size_t i) {
        const auto a = sampled_phases(steps, h, n, subseed(seed, i));
        u[i] = completion_from_twisted(twisted_sums(a));
    });
    return u;
}

}  // namespace

Proportion wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    const auto n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
    const double low = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    const double high = successes == trials ? 1.0 : std::min(1.0, centre + half);
    return {p, low, high};
}

MomentReport mc_second_moment(const StepSet& steps, std::int64_t h, std::uint64_t n, std::uint64_t trials,
                              std::uint64_t seed, std::size_t threads) {
    require_frequency(h);
    require(n >= 1, Errc::range, "N must be positive");
    require(trials >= 2, Errc::invalid_argument, "the second-moment estimator needs at least two trials");

    std::vector<double> sq(trials);
    parallel_for(trials, threads, [&](std::size_t i) {
        WordSampler sampler(subseed(seed, i), steps.size());
        TorusWalker walker(steps);
        CompensatedSum w;
        for (std::uint64_t k = 0; k < n; ++k) w.add(unit_phase(h, walker.advance(sampler.next())));
        sq[i] = std::norm(w.value());
    });

    const auto stats = summarize(sq);
    MomentReport report;
    report.n = n;
    report.h = h;
    report.trials = trials;
    report.sample_mean = stats.mean;
    report.standard_error = stats.standard_error;
    report.closed_form = expected_sq_modulus(steps, h, n);
    report.theta = theta(steps, h).value;
    return report;
}

double tail_threshold(std::uint64_t n, double epsilon) {
    const double big_n = static_cast<double>(n);
    return std::sqrt(big_n) * std::pow(std::log(big_n), 1.5 + epsilon);
}

TailReport mc_tail_probability_at(const StepSet& steps, std::int64_t h, std::uint64_t n, double threshold,
                                  std::uint64_t trials, std::uint64_t seed, std::size_t threads) {
    require_frequency(h);
    require(n >= 1, Errc::range, "N must be positive");
    require(trials >= 1, Errc::invalid_argument, "need at least one trial");
    const auto u = completion_values(steps, h, n, trials, seed, threads);

    TailReport report;
    report.n = n;
    report.h = h;
    report.trials = trials;
    report.epsilon = std::numeric_limits<double>::quiet_NaN();
    report.threshold = threshold;
    for (double value : u) report.exceedances += value >= threshold ? 1 : 0;
    const auto ci = wilson_interval(report.exceedances, trials);
    report.probability = ci.estimate;
    report.ci_low = ci.low;
    report.ci_high = ci.high;
    return report;
}

TailReport mc_tail_probability(const StepSet& steps, std::int64_t h, std::uint64_t n, double epsilon,
                               std::uint64_t trials, std::uint64_t seed, std::size_t threads) {
    require(n >= 3, Errc::range, "the tail threshold needs N >= 3 so that ln N > 1");
    require(epsilon > 0.0 && std::isfinite(epsilon), Errc::invalid_argument, "epsilon must be positive");
    auto report = mc_tail_probability_at(steps, h, n, tail_threshold(n, epsilon), trials, seed, threads);
    report.epsilon = epsilon;
    return report;
}

CompletionMomentReport mc_completion_moment(const StepSet& steps, std::int64_t h, std::uint64_t n,
                                            std::uint64_t trials, std::uint64_t seed, std::size_t threads) {
    require_frequency(h);
    require(n >= 2, Errc::range, "N must be at least 2 so that ln N > 0");
    require(trials >= 2, Errc::invalid_argument, "need at least two trials");
    auto u = completion_values(steps, h, n, trials, seed, threads);
    for (double& v : u) v *= v;
    const auto stats = summarize(u);
    const double log_n = std::log(static_cast<double>(n));

    CompletionMomentReport report;
    report.n = n;
    report.h = h;
    report.trials = trials;
    report.mean_sq = stats.mean;
    report.standard_error = stats.standard_error;
    report.normalized = stats.mean / (static_cast<double>(n) * log_n * log_n);
    return report;
}

std::vector<WeylSeries> sampled_weyl_series(const StepSet& steps, std::int64_t h,
                                            std::span<const std::uint64_t> checkpoints, std::uint64_t trials,
                                            std::uint64_t seed, std::size_t threads) {
    require_frequency(h);
    require(!checkpoints.empty(), Errc::range, "need at least one checkpoint");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        require(checkpoints[i] > 0 && (i == 0 || checkpoints[i] > checkpoints[i - 1]), Errc::range,
                "checkpoints must be positive and strictly increasing");
    }
    std::vector<WeylSeries> out(trials);
    parallel_for(trials, threads, [&](std::size_t i) {
        WordSampler sampler(subseed(seed, i), steps.size());
        TorusWalker walker(steps);
        CompensatedSum acc;
        WeylSeries& series = out[i];
        series.h = h;
        series.checkpoints.assign(checkpoints.begin(), checkpoints.end());
        std::size_t next = 0;
        for (std::uint64_t n = 1; next < checkpoints.size(); ++n) {
            acc.add(unit_phase(h, walker.advance(sampler.next())));
            if (n == checkpoints[next]) {
                series.sums.push_back(acc.value());
                series.normalized.push_back(std::abs(acc.value()) / static_cast<double>(n));
                ++next;
            }
        }
    });
    return out;
}

}  // namespace abwalk
