#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "abwalk/core/error.hpp"
#include "abwalk/core/orbit.hpp"
#include "abwalk/core/rng.hpp"
#include "abwalk/equidist/discrepancy.hpp"
#include "abwalk/weyl/weyl_sum.hpp"

using namespace abwalk;

namespace {

const StepSet kIrrational = StepSet::from_values({constants::sqrt2m1, constants::sqrt3m1});

Errc error_code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an abwalk::Error");
    return Errc::invalid_argument;
}

// max over t = k/G of |#{x < t}/N - t|, counting by a full scan per threshold.
double grid_brute_force(const std::vector<double>& points, std::size_t grid) {
    const double n = static_cast<double>(points.size());
    double worst = 0.0;
    for (std::size_t k = 0; k <= grid; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(grid);
        std::size_t below = 0;
        for (double x : points) below += x < t ? 1 : 0;
        worst = std::max(worst, std::fabs(static_cast<double>(below) / n - t));
    }
    return worst;
}

Orbit random_orbit(const StepSet& steps, std::size_t n, std::uint64_t seed) {
    return make_orbit(sample_word(seed, n, steps.size()), steps);
}

std::vector<WeylSeries> series_up_to(const Orbit& orbit, std::int64_t k, std::uint64_t n) {
    const std::vector<std::uint64_t> at{n};
    std::vector<WeylSeries> out;
    for (std::int64_t h = 1; h <= k; ++h) out.push_back(weyl_sum(orbit, h, at));
    return out;
}

}  // namespace

TEST_CASE("star_discrepancy examples") {
    const std::vector<double> single{0.5};
    CHECK(star_discrepancy(single) == 0.5);
    const std::vector<double> grid{0.1, 0.3, 0.5, 0.7, 0.9};
    CHECK(star_discrepancy(grid) == doctest::Approx(0.1).epsilon(1e-12));

    Xoshiro256ss rng(1);
    std::vector<double> points(10'000);
    for (auto& p : points) p = rng.uniform01();
    const double exact = star_discrepancy(points);
    const double brute = grid_brute_force(points, 100'000);
    CHECK(exact <= 0.03);
    CHECK(exact >= brute);
    CHECK(exact - brute <= 1e-5);
}

TEST_CASE("star_discrepancy errors") {
    CHECK(error_code_of([] { star_discrepancy(std::vector<double>{}); }) == Errc::range);
    CHECK(error_code_of([] { star_discrepancy(std::vector<double>{0.2, 1.0}); }) == Errc::domain);
    CHECK(error_code_of([] { star_discrepancy(std::vector<double>{-0.1}); }) == Errc::domain);
}

TEST_CASE("star_discrepancy: bounds and permutation invariance") {
    Xoshiro256ss rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.below(400);
        std::vector<double> points(n);
        // Mix continuous values with a coarse lattice so ties occur.
        for (auto& p : points) p = rng.below(2) ? rng.uniform01() : static_cast<double>(rng.below(8)) / 8.0;
        const double d = star_discrepancy(points);
        CHECK(d >= 1.0 / (2.0 * static_cast<double>(n)) - 1e-15);
        CHECK(d <= 1.0);
        std::vector<double> shuffled = points;
        for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        CHECK(star_discrepancy(shuffled) == d);
        // Brute force over the sample points and just above them.
        double brute = 0.0;
        for (double t : points) {
            for (double u : {t, std::nextafter(t, 2.0)}) {
                std::size_t below = 0;
                for (double x : points) below += x < u ? 1 : 0;
                brute = std::max(brute, std::fabs(static_cast<double>(below) / static_cast<double>(n) - u));
            }
        }
        brute = std::max(brute, 1.0 - *std::max_element(points.begin(), points.end()));
        CHECK(d == doctest::Approx(brute).epsilon(1e-12));
    }
}

TEST_CASE("hit frequency of [0, t) is within D* of t") {
    Xoshiro256ss rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Orbit orbit = random_orbit(kIrrational, 1 + rng.below(5000), rng());
        const std::size_t n = orbit.size();
        const double d = star_discrepancy(orbit.positions());
        for (int k = 1; k <= 200; ++k) {
            const double t = k / 200.0;
            const double freq = static_cast<double>(hit_count(orbit, Interval::half_open(0.0, t), n)) / n;
            CHECK(std::fabs(freq - t) <= d + 1e-12);
        }
    }
}

TEST_CASE("rational thirds never come close to uniform") {
    const StepSet thirds = StepSet::from_rationals({{1, 3}, {2, 3}});
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Orbit orbit = random_orbit(thirds, 3000, seed);
        for (std::size_t n = 3; n <= orbit.size(); n += 7) {
            for (double p : orbit.positions().first(n)) CHECK((p == 0.0 || p == 1.0 / 3.0 || p == 2.0 / 3.0));
            CHECK(star_discrepancy(orbit.positions().first(n)) >= 1.0 / 6.0);
        }
    }
}

TEST_CASE("ud_profile examples") {
    const Orbit period_two = make_orbit(sample_word(1, 200'000, 1), StepSet::from_values({0.5}));
    const std::vector<std::uint64_t> even{2, 1000, 100'000, 200'000};
    const auto flat = ud_profile(period_two, even);
    for (double d : flat.dstar) CHECK(d == 0.5);
    CHECK(flat.verdict == Verdict::inconsistent);

    const Orbit rotation = make_orbit(sample_word(1, 100'000, 1), StepSet::from_values({constants::sqrt2m1}));
    const std::vector<std::uint64_t> end{100'000};
    CHECK(ud_profile(rotation, end).dstar.back() <= 1e-3);

    const Orbit walk = random_orbit(kIrrational, 1'000'000, 7);
    auto cps = dyadic_checkpoints(1'000'000);
    cps.push_back(1'000'000);
    const auto profile = ud_profile(walk, cps);
    CHECK(profile.dstar.back() <= 1e-2);
    CHECK(profile.verdict == Verdict::consistent_with_ud);
    for (std::size_t i = 0; i < cps.size(); ++i) {
        CHECK(profile.dstar[i] >= 1.0 / (2.0 * static_cast<double>(cps[i])));
        CHECK(profile.dstar[i] <= 1.0);
    }

    const std::vector<std::uint64_t> small{10, 100};
    CHECK(ud_profile(walk, small).verdict == Verdict::inconclusive);
    const std::vector<std::uint64_t> too_far{2'000'000};
    CHECK(error_code_of([&] { ud_profile(walk, too_far); }) == Errc::range);
}

TEST_CASE("verdict rules") {
    const std::vector<std::uint64_t> cps{1'000, 100'000, 1'000'000};
    const VerdictConfig config;
    CHECK(judge(cps, std::vector<double>{0.3, 0.05, 0.01}, config) == Verdict::consistent_with_ud);
    CHECK(judge(cps, std::vector<double>{0.01, 0.2, 0.15}, config) == Verdict::inconsistent);
    CHECK(judge(cps, std::vector<double>{0.01, 0.05, 0.03}, config) == Verdict::inconclusive);
    // Low final value but rising trend.
    CHECK(judge(cps, std::vector<double>{0.001, 0.005, 0.015}, config) == Verdict::inconclusive);
    const std::vector<std::uint64_t> early{10, 100};
    CHECK(judge(early, std::vector<double>{0.5, 0.5}, config) == Verdict::inconclusive);
    CHECK(std::string(to_string(Verdict::consistent_with_ud)) == "consistent-with-ud");
}

TEST_CASE("frequency_profile") {
    const Orbit walk = random_orbit(kIrrational, 5000, 8);
    const Interval interval = Interval::half_open(0.2, 0.5);
    const std::vector<std::uint64_t> cps{1, 10, 5000};
    const auto profile = frequency_profile(walk, interval, cps);
    for (std::size_t i = 0; i < cps.size(); ++i) {
        CHECK(profile.hits[i] == hit_count(walk, interval, cps[i]));
        CHECK(profile.frequency[i] == static_cast<double>(profile.hits[i]) / static_cast<double>(cps[i]));
        CHECK(profile.deviation[i] == doctest::Approx(std::fabs(profile.frequency[i] - 0.3)));
    }
}

TEST_CASE("erdos_turan_bound examples") {
    WeylSeries zero;
    zero.checkpoints = {50};
    zero.sums = {Complex{}};
    zero.normalized = {0.0};
    std::vector<WeylSeries> zeros;
    for (std::int64_t h = 1; h <= 100; ++h) {
        zero.h = h;
        zeros.push_back(zero);
    }
    CHECK(erdos_turan_bound(zeros, 50) == doctest::Approx(0.03).epsilon(1e-12));

    const Orbit alt = make_orbit(sample_word(1, 1000, 1), StepSet::from_values({0.5}));
    const auto alt_series = series_up_to(alt, 2, 1000);
    CHECK(std::abs(alt_series[0].at(1000)) < 1e-9);
    CHECK(std::abs(alt_series[1].at(1000)) == doctest::Approx(1000.0));
    const double bound = erdos_turan_bound(alt_series, 1000);
    CHECK(bound >= 1.5 - 1e-9);
    CHECK(bound >= star_discrepancy(alt.positions()));

    const Orbit walk = random_orbit(kIrrational, 1 << 16, 9);
    CHECK(erdos_turan_bound(series_up_to(walk, 32, 1 << 16), 1 << 16) >= star_discrepancy(walk.positions()));
}

TEST_CASE("erdos_turan_bound errors") {
    const Orbit walk = random_orbit(kIrrational, 64, 10);
    auto series = series_up_to(walk, 3, 64);
    CHECK(error_code_of([&] { erdos_turan_bound({}, 64); }) == Errc::invalid_argument);
    auto missing = series;
    missing.erase(missing.begin() + 1);
    CHECK(error_code_of([&] { erdos_turan_bound(missing, 64); }) == Errc::invalid_argument);
    auto duplicate = series;
    duplicate[2] = duplicate[0];
    CHECK(error_code_of([&] { erdos_turan_bound(duplicate, 64); }) == Errc::invalid_argument);
    CHECK(error_code_of([&] { erdos_turan_bound(series, 32); }) == Errc::range);
    std::reverse(series.begin(), series.end());
    CHECK_NOTHROW(erdos_turan_bound(series, 64));
}

TEST_CASE("Erdos-Turan bound dominates D* across a randomized corpus") {
    Xoshiro256ss rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<double> values;
        const std::size_t l = 1 + rng.below(4);
        for (std::size_t i = 0; i < l; ++i) values.push_back(0.001 + 0.998 * rng.uniform01());
        const StepSet steps = StepSet::from_values(values);
        const std::uint64_t n = 1 + rng.below(4000);
        const Orbit orbit = random_orbit(steps, n, rng());
        const auto k = static_cast<std::int64_t>(1 + rng.below(40));
        CHECK(erdos_turan_bound(series_up_to(orbit, k, n), n) >= star_discrepancy(orbit.positions()));
    }
}
