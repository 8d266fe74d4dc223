#include "criteria.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "abwalk/core/error.hpp"
#include "abwalk/core/fixed_point.hpp"
#include "abwalk/core/orbit.hpp"
#include "abwalk/core/parallel.hpp"
#include "abwalk/core/rng.hpp"
#include "abwalk/core/step_set.hpp"
#include "abwalk/core/word.hpp"
#include "abwalk/equidist/discrepancy.hpp"
#include "abwalk/exceptional/avoidance.hpp"
#include "abwalk/exceptional/constructions.hpp"
#include "abwalk/exceptional/schedule.hpp"
#include "abwalk/io/format.hpp"
#include "abwalk/weyl/completion.hpp"
#include "abwalk/weyl/moments.hpp"
#include "abwalk/weyl/monte_carlo.hpp"
#include "abwalk/weyl/weyl_sum.hpp"

namespace abwalk::verify_detail {
namespace {

StepSet irrational_pair() { return StepSet::from_values({constants::sqrt2m1, constants::sqrt3m1}); }

Orbit sampled_orbit(const StepSet& steps, std::size_t n, std::uint64_t seed) {
    return make_orbit(sample_word(seed, n, steps.size()), steps);
}

// Distinct streams per criterion, all derived from the suite seed.
std::uint64_t stream(const Context& c, std::uint64_t tag) { return subseed(c.seed, tag); }

Outcome at_most(double measured, double threshold, std::string detail = {}) {
    return {measured, threshold, "<=", measured <= threshold, std::move(detail)};
}

Outcome at_least(double measured, double threshold, std::string detail = {}) {
    return {measured, threshold, ">=", measured >= threshold, std::move(detail)};
}

std::string fmt(double v) { return format_double(v); }

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// max_k |#{x < k/G}/N - k/G| from a bucket histogram; never sorts.
double grid_discrepancy(std::span<const double> points, std::size_t grid) {
    std::vector<std::uint64_t> buckets(grid, 0);
    for (double x : points) ++buckets[std::min(grid - 1, static_cast<std::size_t>(x * static_cast<double>(grid)))];
    const double n = static_cast<double>(points.size());
    double worst = 0.0;
    std::uint64_t below = 0;
    for (std::size_t k = 1; k <= grid; ++k) {
        below += buckets[k - 1];
        worst = std::max(worst, std::fabs(static_cast<double>(below) / n - static_cast<double>(k) / grid));
    }
    return worst;
}

// ---- Criterion bodies, parameterised so smoke can run them small ----------

Outcome moment_oracle(const std::vector<unsigned>& lengths) {
    const std::vector<StepSet> sets{irrational_pair(), StepSet::from_values({0.25, 0.75}),
                                    StepSet::from_values({0.3, 0.7})};
    double worst = 0.0;
    std::string where;
    for (const auto& steps : sets) {
        for (std::int64_t h = 1; h <= 3; ++h) {
            for (unsigned n : lengths) {
                const double diff = std::fabs(exhaustive_sq_moment(steps, h, n) - expected_sq_modulus(steps, h, n));
                if (diff >= worst) {
                    worst = diff;
                    where = "worst at steps " + steps.to_string() + " h=" + std::to_string(h) + " n=" +
                            std::to_string(n);
                }
            }
        }
    }
    return at_most(worst, 1e-9, where);
}

Outcome case_two_collapse(std::uint64_t max_n) {
    const StepSet steps = StepSet::from_values({0.25, 0.75});
    const double alpha = 0.25;
    const Complex e2a = unit_phase(2, alpha);
    const double bound = 4.0 / std::norm(e2a - 1.0) + 1.0;
    double worst = 0.0, largest = 0.0;
    CompensatedSum direct;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        direct.add(unit_phase(2, std::fmod(alpha * static_cast<double>(n), 1.0)));
        const double closed = expected_sq_modulus(steps, 2, n);
        worst = std::max(worst, std::fabs(closed - std::norm(direct.value())));
        largest = std::max(largest, closed);
    }
    auto o = at_most(worst, 1e-9,
                     "max E|W|^2 = " + fmt(largest) + " against bound 4/|e(2a)-1|^2 + 1 = " + fmt(bound));
    o.value_ok = o.value_ok && largest <= bound && theta(steps, 2).kind == ThetaCase::unimodular;
    return o;
}

Outcome monte_carlo_moment(const Context& c, std::uint64_t n, std::uint64_t trials) {
    const auto r = mc_second_moment(irrational_pair(), 1, n, trials, stream(c, 3), c.threads);
    const double z = std::fabs(r.sample_mean - r.closed_form) / r.standard_error;
    return at_most(z, 4.0,
                   "sample mean " + fmt(r.sample_mean) + ", closed form " + fmt(r.closed_form) + ", SE " +
                       fmt(r.standard_error) + " (measured in standard errors)");
}

Outcome sqrt_cancellation(const Context& c, std::uint64_t words, unsigned max_level) {
    std::vector<std::uint64_t> checkpoints;
    for (unsigned l = 1; l <= max_level; ++l) checkpoints.push_back(std::uint64_t{1} << l);
    const auto series = sampled_weyl_series(irrational_pair(), 1, checkpoints, words, stream(c, 4), c.threads);
    std::vector<double> level, per_level_max;
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        const double n = static_cast<double>(checkpoints[i]);
        const double scale = std::sqrt(n) * std::pow(std::log(n), 2.0);
        double m = 0.0;
        for (const auto& s : series) m = std::max(m, std::abs(s.sums[i]) / scale);
        level.push_back(static_cast<double>(i + 1));
        per_level_max.push_back(m);
    }
    const double constant = *std::max_element(per_level_max.begin(), per_level_max.end());
    const double trend = slope(level, per_level_max);
    auto o = at_most(constant, 5.0, "least-squares slope of per-level max = " + fmt(trend) + " (limit 0.01)");
    o.value_ok = o.value_ok && trend <= 0.01;
    return o;
}

Outcome completion_identity(const Context& c, std::uint64_t orbits, const std::vector<std::uint64_t>& sizes,
                            const std::vector<std::uint64_t>& transform_sizes) {
    const StepSet steps = irrational_pair();
    const std::uint64_t longest = std::max(sizes.back(), transform_sizes.back());
    double worst_identity = 0.0, worst_transform = 0.0;
    for (std::uint64_t i = 0; i < orbits; ++i) {
        const Orbit orbit = sampled_orbit(steps, longest, subseed(stream(c, 5), i));
        for (std::uint64_t n : sizes) {
            const auto errors = completion_identity_profile(orbit, 1, n);
            for (double e : errors) worst_identity = std::max(worst_identity, e / static_cast<double>(n));
        }
        for (std::uint64_t n : transform_sizes) {
            const double fft = completion_sum(orbit, 1, n, TransformMethod::fft);
            const double direct = completion_sum(orbit, 1, n, TransformMethod::direct);
            worst_transform = std::max(worst_transform, std::fabs(fft - direct) / direct);
        }
    }
    auto o = at_most(worst_identity, 1e-8,
                     "identity error / N; DFT vs direct relative gap " + fmt(worst_transform) + " (limit 1e-8)");
    o.value_ok = o.value_ok && worst_transform <= 1e-8;
    return o;
}

Outcome completion_trend(const Context& c, std::uint64_t trials, const std::vector<std::uint64_t>& sizes) {
    std::vector<double> normalized;
    std::string detail = "mean U^2/(N ln^2 N):";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const auto r = mc_completion_moment(irrational_pair(), 1, sizes[i], trials, subseed(stream(c, 6), i),
                                            c.threads);
        normalized.push_back(r.normalized);
        detail += " N=" + std::to_string(sizes[i]) + ":" + fmt(r.normalized);
    }
    double worst = 0.0;
    for (std::size_t i = 1; i < normalized.size(); ++i) worst = std::max(worst, normalized[i] / normalized[i - 1]);
    return at_most(worst, 1.2, detail + " (measured: largest successive ratio)");
}

Outcome ud_evidence(const Context& c, std::uint64_t words, std::uint64_t n) {
    const StepSet steps = irrational_pair();
    std::vector<double> dstar(words);
    parallel_for(words, c.threads, [&](std::size_t i) {
        WordSampler sampler(subseed(stream(c, 7), i), steps.size());
        TorusWalker walker(steps);
        std::vector<double> points(n);
        for (auto& p : points) p = walker.advance(sampler.next());
        dstar[i] = star_discrepancy(points);
    });
    const double worst = *std::max_element(dstar.begin(), dstar.end());
    const double med = median(dstar);

    // Exact thirds: every position is 0, 1/3 or 2/3.
    const StepSet thirds = StepSet::from_rationals({{1, 3}, {2, 3}});
    const Orbit control = sampled_orbit(thirds, 2000, stream(c, 70));
    double control_min = 1.0;
    for (std::size_t m = 3; m <= control.size(); ++m) {
        control_min = std::min(control_min, star_discrepancy(control.positions().first(m)));
    }
    auto o = at_most(worst, 1e-2,
                     "median " + fmt(med) + " (limit 0.003); thirds control min D* over N=3..2000 " +
                         fmt(control_min) + " (limit >= 1/6)");
    o.value_ok = o.value_ok && med <= 3e-3 && control_min >= 1.0 / 6.0;
    return o;
}

Outcome cantor_construction(const Context& c, const std::vector<std::uint64_t>& schedule_terms) {
    const StepSet steps = irrational_pair();
    const auto schedule = CantorSchedule::from_list(1.0, schedule_terms);
    const std::size_t q = 10;
    const auto built = cantor_word(steps, schedule, q, stream(c, 8), schedule.size());
    const auto check = verify_certificate(built.word, steps, built.certificate);
    double worst_frequency = 0.0;
    for (const auto& r : built.certificate.records) worst_frequency = std::max(worst_frequency, r.frequency);
    const Orbit orbit = make_orbit(built.word, steps);
    const double dstar = star_discrepancy(orbit.positions());
    const double floor = (1.0 / q) * 0.5 / 1.5;
    auto o = at_least(dstar, 0.03,
                      "final-prefix D* (N=" + std::to_string(orbit.size()) + "); max certified frequency " +
                          fmt(worst_frequency) + " (limit 1/15); certificate " +
                          (check.ok ? std::string("verified") : "rejected: " + check.failure) +
                          "; derived floor tau*(eps/2)/(1+eps/2) = " + fmt(floor));
    o.value_ok = o.value_ok && check.ok && worst_frequency <= 1.0 / 15.0;
    return o;
}

Outcome gdelta_construction(const Context& c, std::size_t stages) {
    const StepSet steps = irrational_pair();
    const auto built = gdelta_word(steps, 0.1, 4, stages, stream(c, 9));
    const auto check = verify_certificate(built.word, steps, built.certificate);
    const std::vector<double> expected{4.0 / 20.0, 20.0 / 420.0, 420.0 / 176820.0};
    double worst = 0.0;
    std::string detail = "frequencies:";
    bool bounds_match = built.certificate.records.size() == stages;
    for (std::size_t i = 0; i < built.certificate.records.size(); ++i) {
        const auto& r = built.certificate.records[i];
        worst = std::max(worst, r.frequency / r.bound);
        detail += " N=" + std::to_string(r.n) + ":" + fmt(r.frequency);
        bounds_match = bounds_match && i < expected.size() && r.bound == expected[i];
    }
    auto o = at_most(worst, 1.0,
                     detail + " (measured: max frequency/bound); certificate " +
                         (check.ok ? std::string("verified") : "rejected: " + check.failure));
    o.value_ok = o.value_ok && check.ok && bounds_match;
    return o;
}

Outcome dimension_formula(std::size_t depth) {
    double worst = 0.0;
    bool decreasing = true;
    std::string detail;
    for (double eps : {1.0, 0.5, 0.25}) {
        const auto s = CantorSchedule::squaring(eps, 8, depth);
        const double estimate = dimension_estimate(s, depth);
        worst = std::max(worst, std::fabs(estimate - 1.0 / (1.0 + eps)));
        const auto ratios = corollary_check(s);
        for (std::size_t i = 1; i < ratios.size(); ++i) decreasing = decreasing && ratios[i] < ratios[i - 1];
        detail += "eps=" + fmt(eps) + ":" + fmt(estimate) + " ";
    }
    const auto geometric = CantorSchedule::geometric(1.0, 4, 10);
    const double negative = dimension_estimate(geometric, 10);
    const double negative_gap = std::fabs(negative - 1.0 / 3.0);
    auto o = at_most(worst, 1e-3,
                     detail + "; corollary ratios " + (decreasing ? "strictly decreasing" : "NOT decreasing") +
                         "; geometric 4^k control " + fmt(negative) + " (within 1e-3 of 1/3)");
    o.value_ok = o.value_ok && decreasing && negative_gap <= 1e-3;
    return o;
}

Outcome erdos_turan_soundness(const Context& c, std::uint64_t orbits, std::uint64_t n, std::int64_t k) {
    const StepSet steps = irrational_pair();
    std::vector<double> margin(orbits);
    parallel_for(orbits, c.threads, [&](std::size_t i) {
        const Orbit orbit = sampled_orbit(steps, n, subseed(stream(c, 11), i));
        const std::vector<std::uint64_t> at{n};
        std::vector<WeylSeries> series;
        for (std::int64_t h = 1; h <= k; ++h) series.push_back(weyl_sum(orbit, h, at));
        margin[i] = erdos_turan_bound(series, n) - star_discrepancy(orbit.positions());
    });
    return at_least(*std::min_element(margin.begin(), margin.end()), 0.0, "min of bound - D*");
}

// ---- Extra oracle pairs --------------------------------------------------

Outcome fixed_point_orbit(const Context& c) {
    const StepSet steps = irrational_pair();
    const Word word = sample_word(stream(c, 20), 1'000'000, 2);
    const Orbit orbit = make_orbit(word, steps);
    const auto exact = fixed_point_positions(word, steps);
    double worst = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        worst = std::max(worst, circle_distance(orbit.positions()[i], exact[i]));
    }
    return at_most(worst, 1e-9, "double walk against 128-bit fixed point, 10^6 steps");
}

Outcome grid_oracle(const Context& c) {
    Xoshiro256ss rng(stream(c, 21));
    std::vector<double> points(10'000);
    for (auto& p : points) p = rng.uniform01();
    const double exact = star_discrepancy(points);
    const double grid = grid_discrepancy(points, 100'000);
    const double gap = exact - grid;
    auto o = at_most(gap, 1e-5, "D* = " + fmt(exact) + ", grid = " + fmt(grid) + " (needs 0 <= gap, D* <= 0.03)");
    o.value_ok = o.value_ok && gap >= 0.0 && exact <= 0.03;
    return o;
}

Outcome telescoping(const Context&) {
    std::size_t mismatches = 0;
    for (double eps : {1.0, 0.5, 0.25, 0.3, 0.7}) {
        for (const auto& s : {CantorSchedule::squaring(eps, 8, 7), CantorSchedule::geometric(eps, 3, 30),
                              CantorSchedule::from_list(eps, std::vector<std::uint64_t>{16, 64, 256, 1024})}) {
            for (std::size_t k = 1; k <= s.size(); ++k) {
                mismatches += s.log2_q_partial_sum(k) != s.telescoped_sum(k) ? 1 : 0;
            }
        }
    }
    return at_most(static_cast<double>(mismatches), 0.0, "schedule sums: term-by-term against telescoped");
}

Outcome greedy_feasibility(const Context& c, std::uint64_t configurations) {
    Xoshiro256ss rng(stream(c, 22));
    std::uint64_t failures = 0, tried = 0;
    while (tried < configurations) {
        const double a = rng.uniform01(), b = rng.uniform01();
        if (a <= 0.0 || b <= 0.0) continue;
        const StepSet steps = StepSet::from_values({a, b});
        const double limit = std::min(circle_distance(a, b) - 2 * kBoundaryTolerance,
                                      std::min({a, 1 - a, b, 1 - b}));
        if (limit <= 1e-9) continue;
        const double start = rng.uniform01() * (1.0 - limit);
        const double length = rng.uniform01() * limit * (1.0 - 1e-9);
        if (length <= 0.0) continue;
        const AvoidancePolicy policy{Interval::open(start, start + length)};
        if (!gap_condition(steps, policy.target).satisfied) continue;
        ++tried;
        try {
            avoid_extension(rng.uniform01(), steps, policy, 1);
        } catch (const Error&) {
            ++failures;
        }
    }
    return at_most(static_cast<double>(failures), 0.0,
                   std::to_string(configurations) + " random configurations under the gap condition");
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
    return {
        {"A1", "second moment: exhaustive enumeration equals closed form", 5.0,
         [](const Context&) { return moment_oracle({8, 10, 12}); }},
        {"A2", "unimodular theta: closed form equals the direct sum and stays bounded", 1.0,
         [](const Context&) { return case_two_collapse(1024); }},
        {"A3", "Monte Carlo second moment within 4 SE of the closed form", 10.0,
         [](const Context& c) { return monte_carlo_moment(c, 1 << 14, 2000); }},
        {"A4", "square-root cancellation: max |W|/(sqrt(N) ln^2 N) over 100 words, N <= 2^20", 60.0,
         [](const Context& c) { return sqrt_cancellation(c, 100, 20); }},
        {"A5", "completion identity and DFT vs direct", 10.0,
         [](const Context& c) { return completion_identity(c, 20, {16, 64, 256}, {16, 64, 256, 1000, 1024}); }},
        {"A6", "completion sum second moment trend", 60.0,
         [](const Context& c) { return completion_trend(c, 500, {1 << 10, 1 << 12, 1 << 14}); }},
        {"A7", "star discrepancy of 30 random words at N = 10^6", 60.0,
         [](const Context& c) { return ud_evidence(c, 30, 1'000'000); }},
        {"A8", "Cantor construction: certificate and discrepancy floor", 5.0,
         [](const Context& c) { return cantor_construction(c, {16, 64, 256, 1024}); }},
        {"A9", "G-delta construction: certified frequencies", 30.0,
         [](const Context& c) { return gdelta_construction(c, 3); }},
        {"A10", "dimension estimates against 1/(1+eps)", 1.0, [](const Context&) { return dimension_formula(6); }},
        {"A11", "Erdos-Turan bound dominates star discrepancy", 30.0,
         [](const Context& c) { return erdos_turan_soundness(c, 50, 1 << 16, 32); }},
    };
}

std::vector<Criterion> oracle_criteria() {
    return {
        {"O1", "exhaustive vs closed-form second moment at n = 12", 5.0,
         [](const Context&) { return moment_oracle({12}); }},
        {"O2", "DFT vs direct twisted sums at N <= 1024", 10.0,
         [](const Context& c) { return completion_identity(c, 5, {16}, {1024}); }},
        {"O3", "orbit against 128-bit fixed point", 10.0, [](const Context& c) { return fixed_point_orbit(c); }},
        {"O4", "star discrepancy against grid brute force", 5.0, [](const Context& c) { return grid_oracle(c); }},
        {"O5", "schedule telescoping identity", 1.0, [](const Context& c) { return telescoping(c); }},
        {"O6", "greedy avoidance never stuck under the gap condition", 30.0,
         [](const Context& c) { return greedy_feasibility(c, 1'000'000); }},
        {"O7", "Cantor certificate recount", 5.0,
         [](const Context& c) { return cantor_construction(c, {16, 64, 256, 1024}); }},
    };
}

std::vector<Criterion> smoke_criteria() {
    return {
        {"S1", "second moment oracle, n = 8", 1.0, [](const Context&) { return moment_oracle({8}); }},
        {"S2", "unimodular theta collapse, N <= 256", 1.0, [](const Context&) { return case_two_collapse(256); }},
        {"S3", "Monte Carlo second moment, N = 1024", 2.0,
         [](const Context& c) { return monte_carlo_moment(c, 1024, 400); }},
        {"S4", "completion identity, N = 64", 1.0,
         [](const Context& c) { return completion_identity(c, 3, {64}, {64}); }},
        {"S5", "G-delta construction, 2 stages", 1.0, [](const Context& c) { return gdelta_construction(c, 2); }},
        {"S6", "dimension estimates", 1.0, [](const Context&) { return dimension_formula(6); }},
        {"S7", "Erdos-Turan bound, N = 4096", 2.0,
         [](const Context& c) { return erdos_turan_soundness(c, 4, 4096, 16); }},
    };
}

}  // namespace abwalk::verify_detail
