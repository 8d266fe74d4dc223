#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "abwalk/core/orbit.hpp"
#include "abwalk/core/step_set.hpp"

namespace abwalk {

using Complex = std::complex<double>;

/// e(h * p) = exp(2 pi i h p) for a reduced torus position p. The product
/// h * p is reduced again before the trigonometric call, so large h does not
/// amplify the drift of accumulated orbit totals.
Complex unit_phase(std::int64_t h, double position) noexcept;

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
public:
    void add(Complex z) noexcept {
        add_part(re_, re_c_, z.real());
        add_part(im_, im_c_, z.imag());
    }
    Complex value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add_part(double& sum, double& carry, double x) noexcept {
        const double t = sum + x;
        carry += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }

    double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

/// Partial Weyl sums W_{N,h} = sum_{n<=N} e(h S_n) at increasing checkpoints.
struct WeylSeries {
    std::int64_t h = 1;
    std::vector<std::uint64_t> checkpoints;
    std::vector<Complex> sums;
    std::vector<double> normalized;  // |W| / N

    /// Sum at checkpoint n; throws range when n is not a checkpoint.
    Complex at(std::uint64_t n) const;
};

/// 1, 2, 4, ... up to max_n.
std::vector<std::uint64_t> dyadic_checkpoints(std::uint64_t max_n);

/// Single compensated pass. Throws invalid_frequency for h == 0 and range for
/// checkpoints that are not strictly increasing, zero, or past the orbit end.
WeylSeries weyl_sum(const Orbit& orbit, std::int64_t h, std::span<const std::uint64_t> checkpoints);
WeylSeries weyl_sum(std::span<const double> positions, std::int64_t h, std::span<const std::uint64_t> checkpoints);

void require_frequency(std::int64_t h);

}  // namespace abwalk
