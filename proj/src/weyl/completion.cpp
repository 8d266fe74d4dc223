#include "abwalk/weyl/completion.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "abwalk/core/error.hpp"

namespace abwalk {
namespace {

// FFTW planning is not thread-safe; executing a finished plan on new arrays is.
fftw_plan backward_plan(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, fftw_plan> plans;
    std::lock_guard lock(mutex);
    if (auto it = plans.find(n); it != plans.end()) return it->second;
    std::vector<Complex> in(n), out(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    require(plan != nullptr, Errc::invalid_argument, "FFTW could not plan a transform of this length");
    plans.emplace(n, plan);
    return plan;
}

// e(r / N) for r = 0..N-1; exponents are reduced modulo N in integers first.
std::vector<Complex> root_table(std::size_t n) {
    std::vector<Complex> roots(n);
    for (std::size_t r = 0; r < n; ++r)
        roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
    return roots;
}

void require_horizon(const Orbit& orbit, std::uint64_t n) {
    require(n >= 1, Errc::range, "completion length N must be positive");
    require(n <= orbit.size(), Errc::range, "completion length N exceeds the orbit length");
}

}  // namespace

std::vector<Complex> phase_sequence(const Orbit& orbit, std::int64_t h, std::uint64_t n_terms) {
    require_frequency(h);
    require(n_terms <= orbit.size(), Errc::range, "phase sequence longer than the orbit");
    std::vector<Complex> a(n_terms);
    for (std::size_t i = 0; i < n_terms; ++i) a[i] = unit_phase(h, orbit.positions()[i]);
    return a;
}

std::vector<Complex> twisted_sums(std::span<const Complex> phases, TransformMethod method) {
    const std::size_t n = phases.size();
    require(n >= 1, Errc::range, "twisted sums need at least one term");
    std::vector<Complex> t(n);

    if (method == TransformMethod::direct) {
        const auto roots = root_table(n);
        for (std::size_t j = 0; j < n; ++j) {
            CompensatedSum acc;
            for (std::size_t k = 1; k <= n; ++k) acc.add(phases[k - 1] * roots[(j * k) % n]);
            t[j] = acc.value();
        }
        return t;
    }

    // Index m = n mod N: a_N moves to slot 0, where e(jN/N) = 1.
    std::vector<Complex> in(n);
    in[0] = phases[n - 1];
    for (std::size_t m = 1; m < n; ++m) in[m] = phases[m - 1];
    fftw_execute_dft(backward_plan(n), reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(t.data()));
    return t;
}

double completion_from_twisted(std::span<const Complex> twisted) {
    const auto n = static_cast<std::int64_t>(twisted.size());
    double u = std::abs(twisted[0]);
    for (std::int64_t j = 1; j <= n; ++j) {
        const double weight = 1.0 / static_cast<double>(j + 1);
        u += weight * (std::abs(twisted[static_cast<std::size_t>(j % n)]) +
                       std::abs(twisted[static_cast<std::size_t>((n - j % n) % n)]));
    }
    return u;
}

double completion_sum(const Orbit& orbit, std::int64_t h, std::uint64_t n, TransformMethod method) {
    require_horizon(orbit, n);
    const auto a = phase_sequence(orbit, h, n);
    return completion_from_twisted(twisted_sums(a, method));
}

double completion_identity_check(const Orbit& orbit, std::int64_t h, std::uint64_t m, std::uint64_t n) {
    require_horizon(orbit, n);
    require(m >= 1 && m <= n, Errc::range, "need 1 <= M <= N");
    const auto a = phase_sequence(orbit, h, n);
    const auto t = twisted_sums(a);
    const auto roots = root_table(n);

    CompensatedSum direct;
    for (std::size_t k = 0; k < m; ++k) direct.add(a[k]);

    CompensatedSum rebuilt;
    for (std::uint64_t j = 1; j <= n; ++j) {
        CompensatedSum kernel;
        for (std::uint64_t k = 1; k <= m; ++k) kernel.add(roots[(n - (j * k) % n) % n]);
        rebuilt.add(kernel.value() * t[j % n]);
    }
    return std::abs(direct.value() - rebuilt.value() / static_cast<double>(n));
}

std::vector<double> completion_identity_profile(const Orbit& orbit, std::int64_t h, std::uint64_t n) {
    require_horizon(orbit, n);
    const auto a = phase_sequence(orbit, h, n);
    const auto t = twisted_sums(a);
    const auto roots = root_table(n);

    std::vector<Complex> kernel(n + 1);  // kernel[j] = sum_{k<=M} e(-jk/N), grown with M
    std::vector<double> errors;
    errors.reserve(n);
    CompensatedSum direct;
    for (std::uint64_t m = 1; m <= n; ++m) {
        direct.add(a[m - 1]);
        CompensatedSum rebuilt;
        for (std::uint64_t j = 1; j <= n; ++j) {
            kernel[j] += roots[(n - (j * m) % n) % n];
            rebuilt.add(kernel[j] * t[j % n]);
        }
        errors.push_back(std::abs(direct.value() - rebuilt.value() / static_cast<double>(n)));
    }
    return errors;
}

double completion_upper_bound(std::uint64_t n) {
    double harmonic = 0.0;
    for (std::uint64_t j = 0; j <= n; ++j) harmonic += 1.0 / static_cast<double>(j + 1);
    return 2.0 * static_cast<double>(n) * harmonic;
}

}  // namespace abwalk
