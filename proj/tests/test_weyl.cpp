#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "abwalk/core/error.hpp"
#include "abwalk/core/fixed_point.hpp"
#include "abwalk/core/orbit.hpp"
#include "abwalk/core/rng.hpp"
#include "abwalk/weyl/completion.hpp"
#include "abwalk/weyl/moments.hpp"
#include "abwalk/weyl/monte_carlo.hpp"
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

// Naive long-double evaluation of sum exp(2 pi i h S_n) from fixed-point positions.
std::complex<long double> direct_weyl(const Word& word, const StepSet& steps, std::int64_t h) {
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    std::complex<long double> total = 0;
    Fixed128 acc = 0;
    std::vector<Fixed128> fixed_steps;
    for (double v : steps.values()) fixed_steps.push_back(to_fixed128(v));
    for (auto s : word) {
        acc += fixed_steps[s - 1];
        const Fixed128 scaled = acc * static_cast<Fixed128>(h);  // wraps mod 1
        const long double angle = two_pi * from_fixed128(scaled);
        total += std::complex<long double>(std::cos(angle), std::sin(angle));
    }
    return total;
}

// Direct evaluation of the closed-form sum N + 2 Re sum (N-k) theta^k.
double direct_moment(Complex th, std::uint64_t n) {
    long double re = static_cast<long double>(n);
    std::complex<long double> p = 1;
    const std::complex<long double> t(th.real(), th.imag());
    for (std::uint64_t k = 1; k < n; ++k) {
        p *= t;
        re += 2.0L * static_cast<long double>(n - k) * p.real();
    }
    return static_cast<double>(re);
}

StepSet random_steps(Xoshiro256ss& rng, std::size_t l) {
    std::vector<double> v;
    for (std::size_t i = 0; i < l; ++i) v.push_back(0.001 + 0.998 * rng.uniform01());
    return StepSet::from_values(v);
}

}  // namespace

TEST_CASE("weyl_sum examples") {
    const StepSet half = StepSet::from_values({0.5});
    const Orbit alt = make_orbit(Word::parse("1111", 1), half);
    const std::vector<std::uint64_t> cps{3, 4};
    const auto w = weyl_sum(alt, 1, cps);
    CHECK(std::abs(w.at(3) - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(w.at(4)) < 1e-15);

    const Orbit one = make_orbit(Word::parse("2", 2), kIrrational);
    const std::vector<std::uint64_t> first{1};
    CHECK(std::abs(std::abs(weyl_sum(one, 7, first).at(1)) - 1.0) < 1e-15);

    const Word word = sample_word(3, 1 << 16, 2);
    const Orbit orbit = make_orbit(word, kIrrational);
    const std::vector<std::uint64_t> end{1 << 16};
    for (std::int64_t h : {1, -2, 5}) {
        const auto oracle = direct_weyl(word, kIrrational, h);
        const Complex got = weyl_sum(orbit, h, end).at(1 << 16);
        CHECK(std::abs(static_cast<long double>(got.real()) - oracle.real()) < 1e-6L);
        CHECK(std::abs(static_cast<long double>(got.imag()) - oracle.imag()) < 1e-6L);
    }
}

TEST_CASE("weyl_sum errors") {
    const Orbit orbit = make_orbit(Word::parse("1212", 2), kIrrational);
    const std::vector<std::uint64_t> ok{1, 4};
    const std::vector<std::uint64_t> beyond{5};
    const std::vector<std::uint64_t> unordered{3, 2};
    CHECK(error_code_of([&] { weyl_sum(orbit, 0, ok); }) == Errc::invalid_frequency);
    CHECK(error_code_of([&] { weyl_sum(orbit, 1, beyond); }) == Errc::range);
    CHECK(error_code_of([&] { weyl_sum(orbit, 1, unordered); }) == Errc::range);
    CHECK_NOTHROW(weyl_sum(orbit, 1, ok));
    CHECK(dyadic_checkpoints(10) == std::vector<std::uint64_t>{1, 2, 4, 8});
}

TEST_CASE("weyl sums: modulus bound and concatenation phase law") {
    Xoshiro256ss rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const StepSet steps = random_steps(rng, 2 + rng.below(3));
        const std::int64_t h = static_cast<std::int64_t>(rng.below(9)) + 1;
        const Word u = sample_word(rng(), 1 + rng.below(300), steps.size());
        const Word v = sample_word(rng(), 1 + rng.below(300), steps.size());
        const Orbit ou = make_orbit(u, steps), ov = make_orbit(v, steps), ouv = make_orbit(u.concat(v), steps);

        const auto cps = dyadic_checkpoints(ouv.size());
        const auto series = weyl_sum(ouv, h, cps);
        for (std::size_t i = 0; i < cps.size(); ++i) {
            CHECK(std::abs(series.sums[i]) <= static_cast<double>(cps[i]) + 1e-9);
        }

        const std::vector<std::uint64_t> nu{u.size()}, nv{v.size()}, nuv{u.size() + v.size()};
        const Complex wu = weyl_sum(ou, h, nu).at(u.size());
        const Complex wv = weyl_sum(ov, h, nv).at(v.size());
        const Complex wuv = weyl_sum(ouv, h, nuv).at(u.size() + v.size());
        CHECK(std::abs(wuv - (wu + unit_phase(h, ou.at(u.size())) * wv)) < 1e-8);
    }
}

TEST_CASE("theta examples") {
    const auto t1 = theta(StepSet::from_values({0.25, 0.75}), 1);
    CHECK(std::abs(t1.value) < 1e-15);
    CHECK(t1.kind == ThetaCase::contracting);

    const auto t2 = theta(StepSet::from_values({0.25, 0.75}), 2);
    CHECK(std::abs(t2.value - Complex(-1, 0)) < 1e-15);
    CHECK(t2.kind == ThetaCase::unimodular);

    for (std::int64_t h : {1, 3, -7}) {
        const auto t = theta(StepSet::from_values({constants::golden}), h);
        CHECK(t.kind == ThetaCase::unimodular);
        CHECK(std::abs(t.value - unit_phase(h, constants::golden)) < 1e-15);
    }
    CHECK(theta(kIrrational, 1).kind == ThetaCase::contracting);
    CHECK(error_code_of([] { theta(kIrrational, 0); }) == Errc::invalid_frequency);
}

TEST_CASE("expected_sq_modulus examples") {
    const StepSet antipodal = StepSet::from_values({0.25, 0.75});
    for (std::uint64_t n : {1, 2, 10, 1000}) CHECK(expected_sq_modulus(antipodal, 1, n) == doctest::Approx(n).epsilon(1e-13));
    CHECK(std::abs(expected_sq_modulus(StepSet::from_values({0.5}), 1, 4)) < 1e-12);
    CHECK(std::abs(expected_sq_modulus(kIrrational, 1, 12) - exhaustive_sq_moment(kIrrational, 1, 12)) < 1e-9);
    CHECK(error_code_of([&] { expected_sq_modulus(kIrrational, 1, 0); }) == Errc::range);
}

TEST_CASE("expected_sq_modulus matches a direct long-double sum on both sides of the guard") {
    Xoshiro256ss rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const StepSet steps = random_steps(rng, 2 + rng.below(3));
        const std::int64_t h = static_cast<std::int64_t>(rng.below(5)) + 1;
        const std::uint64_t n = 1 + rng.below(3000);
        const double oracle = direct_moment(theta(steps, h).value, n);
        CHECK(std::abs(expected_sq_modulus(steps, h, n) - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
    }
    // theta within 1e-3 of 1: the direct path.
    const StepSet close = StepSet::from_values({1e-5, 2e-5});
    const Complex th = theta(close, 1).value;
    CHECK(std::abs(1.0 - th) < kGeometricGuard);
    CHECK(expected_sq_modulus(close, 1, 2000) == doctest::Approx(direct_moment(th, 2000)).epsilon(1e-12));
}

TEST_CASE("exhaustive_sq_moment examples and budget") {
    Xoshiro256ss rng(13);
    for (int i = 0; i < 20; ++i) {
        const StepSet steps = random_steps(rng, 2);
        CHECK(exhaustive_sq_moment(steps, 1 + static_cast<std::int64_t>(rng.below(4)), 1) == doctest::Approx(1.0));
    }
    const StepSet single = StepSet::from_values({constants::golden});
    for (unsigned k : {1u, 5u, 17u}) {
        Complex s{};
        for (unsigned j = 1; j <= k; ++j) s += unit_phase(3, std::fmod(j * constants::golden, 1.0));
        CHECK(exhaustive_sq_moment(single, 3, k) == doctest::Approx(std::norm(s)).epsilon(1e-12));
    }
    const StepSet pair = StepSet::from_values({0.3, 0.7});
    CHECK(std::abs(exhaustive_sq_moment(pair, 1, 10) - expected_sq_modulus(pair, 1, 10)) < 1e-9);
    CHECK(error_code_of([&] { exhaustive_sq_moment(pair, 1, 23); }) == Errc::budget_exceeded);
    CHECK_NOTHROW(exhaustive_sq_moment(pair, 1, 22));
}

TEST_CASE("closed-form second moment equals enumeration for l^n <= 2^16") {
    Xoshiro256ss rng(14);
    int configurations = 0;
    for (std::size_t l = 2; l <= 4; ++l) {
        for (unsigned n = 1; std::pow(static_cast<double>(l), n) <= 65536.0; ++n) {
            for (int rep = 0; rep < 3; ++rep) {
                const StepSet steps = random_steps(rng, l);
                const std::int64_t h = static_cast<std::int64_t>(rng.below(6)) + 1;
                CHECK(std::abs(exhaustive_sq_moment(steps, h, n) - expected_sq_modulus(steps, h, n)) < 1e-9);
                ++configurations;
            }
        }
    }
    // Unimodular configurations: e(h alpha_k) all equal.
    for (unsigned n = 1; n <= 16; ++n) {
        const StepSet steps = StepSet::from_values({0.125, 0.625});
        CHECK(std::abs(exhaustive_sq_moment(steps, 2, n) - expected_sq_modulus(steps, 2, n)) < 1e-9);
        ++configurations;
    }
    CHECK(configurations > 60);
}

TEST_CASE("unimodular theta: closed form collapses to the deterministic sum") {
    const StepSet steps = StepSet::from_values({0.25, 0.75});
    CompensatedSum direct;
    for (std::uint64_t n = 1; n <= 1024; ++n) {
        direct.add(unit_phase(2, std::fmod(0.25 * static_cast<double>(n), 1.0)));
        CHECK(std::abs(expected_sq_modulus(steps, 2, n) - std::norm(direct.value())) < 1e-9);
        CHECK(expected_sq_modulus(steps, 2, n) <= 4.0 / std::norm(unit_phase(2, 0.25) - 1.0) + 1.0);
    }
}

TEST_CASE("completion_sum examples") {
    Xoshiro256ss rng(15);
    for (int i = 0; i < 10; ++i) {
        const Orbit orbit = make_orbit(sample_word(rng(), 5, 2), kIrrational);
        CHECK(completion_sum(orbit, 1 + static_cast<std::int64_t>(rng.below(5)), 1) == doctest::Approx(2.0));
        CHECK(completion_sum(orbit, 1, 1, TransformMethod::direct) == doctest::Approx(2.0));
    }

    // Thirds with h = 3: every a_n = 1, so T_0 = T_{+-N} = N and the rest vanish.
    const StepSet thirds = StepSet::from_rationals({{1, 3}, {2, 3}});
    for (std::uint64_t n : {1, 2, 7, 64, 100}) {
        const Orbit orbit = make_orbit(sample_word(n, n, 2), thirds);
        const double expected = static_cast<double>(n) + 2.0 * static_cast<double>(n) / static_cast<double>(n + 1);
        CHECK(completion_sum(orbit, 3, n) == doctest::Approx(expected).epsilon(1e-9));
        CHECK(completion_sum(orbit, 3, n, TransformMethod::direct) == doctest::Approx(expected).epsilon(1e-9));
    }

    const Orbit orbit = make_orbit(sample_word(16, 64, 2), kIrrational);
    const double fft = completion_sum(orbit, 1, 64);
    const double direct = completion_sum(orbit, 1, 64, TransformMethod::direct);
    CHECK(std::abs(fft - direct) <= 1e-8 * direct);
    CHECK(error_code_of([&] { completion_sum(orbit, 1, 0); }) == Errc::range);
    CHECK(error_code_of([&] { completion_sum(orbit, 1, 65); }) == Errc::range);
}

TEST_CASE("completion: DFT and direct agree for N <= 1024, U within its sup bound") {
    Xoshiro256ss rng(16);
    for (int i = 0; i < 25; ++i) {
        const std::uint64_t n = 1 + rng.below(1024);
        const StepSet steps = random_steps(rng, 2 + rng.below(2));
        const Orbit orbit = make_orbit(sample_word(rng(), n, steps.size()), steps);
        const std::int64_t h = static_cast<std::int64_t>(rng.below(7)) + 1;
        const double fft = completion_sum(orbit, h, n);
        const double direct = completion_sum(orbit, h, n, TransformMethod::direct);
        CHECK(std::abs(fft - direct) <= 1e-8 * direct);
        CHECK(fft >= 0.0);
        CHECK(fft <= completion_upper_bound(n));
    }
}

TEST_CASE("completion identity") {
    const Orbit orbit = make_orbit(sample_word(21, 256, 2), kIrrational);
    CHECK(completion_identity_check(orbit, 1, 64, 64) <= 1e-9);
    CHECK(completion_identity_check(orbit, 1, 1, 4) <= 1e-12);
    const Orbit det = make_orbit(Word::parse("11111111", 1), StepSet::from_values({constants::golden}));
    CHECK(completion_identity_check(det, 2, 3, 8) <= 1e-12);
    CHECK(error_code_of([&] { completion_identity_check(orbit, 1, 5, 4); }) == Errc::range);

    Xoshiro256ss rng(22);
    for (int i = 0; i < 10; ++i) {
        const std::uint64_t n = 1 + rng.below(256);
        const auto profile = completion_identity_profile(orbit, 1 + static_cast<std::int64_t>(rng.below(3)), n);
        REQUIRE(profile.size() == n);
        for (double e : profile) CHECK(e <= 1e-8 * static_cast<double>(n));
        const std::uint64_t m = 1 + rng.below(n);
        CHECK(completion_identity_check(orbit, 1, m, n) <= 1e-8 * static_cast<double>(n));
    }
}

TEST_CASE("mc_second_moment") {
    const auto zero_theta = mc_second_moment(StepSet::from_values({0.25, 0.75}), 1, 1024, 4000, 5);
    CHECK(zero_theta.closed_form == doctest::Approx(1024.0));
    CHECK(std::abs(zero_theta.sample_mean - 1024.0) <= 4 * zero_theta.standard_error);

    const auto det = mc_second_moment(StepSet::from_values({constants::golden}), 1, 500, 50, 5);
    CHECK(det.standard_error == 0.0);
    CHECK(det.sample_mean == doctest::Approx(det.closed_form).epsilon(1e-9));

    const auto irr = mc_second_moment(kIrrational, 1, 1 << 14, 2000, 9);
    CHECK(irr.sample_mean / (1 << 14) <= irr.closed_form / (1 << 14) + 4 * irr.standard_error / (1 << 14));
    CHECK(std::abs(irr.sample_mean - irr.closed_form) <= 4 * irr.standard_error);
    CHECK(irr.sample_mean >= 0.0);
    CHECK(std::abs(irr.theta) <= 1.0);

    CHECK(error_code_of([] { mc_second_moment(kIrrational, 1, 10, 1, 1); }) == Errc::invalid_argument);
}

TEST_CASE("Monte Carlo results do not depend on the thread count") {
    const auto a = mc_second_moment(kIrrational, 2, 700, 64, 42, 1);
    const auto b = mc_second_moment(kIrrational, 2, 700, 64, 42, 4);
    CHECK(a.sample_mean == b.sample_mean);
    CHECK(a.standard_error == b.standard_error);

    const auto t1 = mc_tail_probability(kIrrational, 1, 512, 0.1, 100, 42, 1);
    const auto t3 = mc_tail_probability(kIrrational, 1, 512, 0.1, 100, 42, 3);
    CHECK(t1.exceedances == t3.exceedances);

    const auto c1 = mc_completion_moment(kIrrational, 1, 256, 40, 42, 1);
    const auto c2 = mc_completion_moment(kIrrational, 1, 256, 40, 42, 2);
    CHECK(c1.mean_sq == c2.mean_sq);

    const std::vector<std::uint64_t> cps{10, 100};
    const auto s1 = sampled_weyl_series(kIrrational, 1, cps, 8, 42, 1);
    const auto s2 = sampled_weyl_series(kIrrational, 1, cps, 8, 42, 5);
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i].sums == s2[i].sums);
}

TEST_CASE("sampled_weyl_series matches weyl_sum over the same sampled word") {
    const std::vector<std::uint64_t> cps{1, 5, 77};
    const auto series = sampled_weyl_series(kIrrational, 3, cps, 4, 99);
    for (std::size_t i = 0; i < series.size(); ++i) {
        const Orbit orbit = make_orbit(sample_word(subseed(99, i), 77, 2), kIrrational);
        const auto ref = weyl_sum(orbit, 3, cps);
        for (std::size_t j = 0; j < cps.size(); ++j) CHECK(std::abs(series[i].sums[j] - ref.sums[j]) < 1e-12);
    }
}

TEST_CASE("mc_tail_probability examples") {
    const auto all = mc_tail_probability_at(kIrrational, 1, 64, 0.0, 200, 3);
    CHECK(all.probability == 1.0);
    CHECK(all.exceedances == 200);

    const auto none = mc_tail_probability_at(kIrrational, 1, 64, std::nextafter(completion_upper_bound(64), 1e300), 200, 3);
    CHECK(none.probability == 0.0);
    CHECK(none.ci_low == 0.0);
    CHECK(none.ci_high > 0.0);

    CHECK(tail_threshold(4096, 0.1) == doctest::Approx(64.0 * std::pow(std::log(4096.0), 1.6)));
    CHECK(error_code_of([] { mc_tail_probability(kIrrational, 1, 2, 0.1, 10, 1); }) == Errc::range);
    CHECK(error_code_of([] { mc_tail_probability(kIrrational, 1, 16, 0.0, 10, 1); }) == Errc::invalid_argument);

    // Report-only trend across scales; the estimate should not grow.
    std::vector<double> p;
    for (std::uint64_t n : {1u << 10, 1u << 12, 1u << 14}) {
        const auto r = mc_tail_probability(kIrrational, 1, n, 0.1, 1000, 17);
        CHECK(r.ci_low <= r.probability);
        CHECK(r.probability <= r.ci_high);
        p.push_back(r.probability);
        MESSAGE("tail N=" << n << " p=" << r.probability << " CI [" << r.ci_low << ", " << r.ci_high << "]");
    }
    CHECK(p[1] <= p[0]);
    CHECK(p[2] <= p[1]);
}

TEST_CASE("Wilson interval") {
    const auto half = wilson_interval(50, 100);
    CHECK(half.estimate == 0.5);
    CHECK(half.low == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(half.high == doctest::Approx(0.5962).epsilon(1e-3));
    const auto zero = wilson_interval(0, 10);
    CHECK(zero.low == 0.0);
    CHECK(zero.high == doctest::Approx(0.2775).epsilon(1e-3));
}
