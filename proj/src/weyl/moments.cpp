#include "abwalk/weyl/moments.hpp"

#include <cmath>
#include <vector>

#include "abwalk/core/error.hpp"
#include "abwalk/core/orbit.hpp"

namespace abwalk {
namespace {

// Two phases count as equal within this circle distance.
constexpr double kPhaseTolerance = 1e-12;

Complex power(Complex z, std::uint64_t n) {
    return std::polar(std::pow(std::abs(z), static_cast<double>(n)), static_cast<double>(n) * std::arg(z));
}

struct Enumeration {
    std::span<const double> steps;
    std::int64_t h;
    unsigned depth;
    double total = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = total + x;
        carry += (std::abs(total) >= std::abs(x)) ? (total - t) + x : (x - t) + total;
        total = t;
    }

    void visit(unsigned level, double position, Complex partial) {
        if (level == depth) {
            add(std::norm(partial));
            return;
        }
        for (double step : steps) {
            const double next = torus_add(position, step);
            visit(level + 1, next, partial + unit_phase(h, next));
        }
    }
};

}  // namespace

Theta theta(const StepSet& steps, std::int64_t h) {
    require_frequency(h);
    const auto values = steps.values();
    const double first = [&] {
        const double t = static_cast<double>(h) * values[0];
        return t - std::floor(t);
    }();
    bool all_equal = true;
    Complex sum{};
    for (double v : values) {
        const double t = static_cast<double>(h) * v;
        all_equal = all_equal && circle_distance(t - std::floor(t), first) <= kPhaseTolerance;
        sum += unit_phase(h, v);
    }
    if (all_equal) return {unit_phase(h, values[0]), ThetaCase::unimodular};
    return {sum / static_cast<double>(values.size()), ThetaCase::contracting};
}

double expected_sq_modulus(const StepSet& steps, std::int64_t h, std::uint64_t n) {
    require(n >= 1, Errc::range, "N must be positive");
    const Complex th = theta(steps, h).value;
    const double big_n = static_cast<double>(n);
    const Complex one_minus = 1.0 - th;

    Complex cross;
    if (std::abs(one_minus) >= kGeometricGuard) {
        // sum_{k=1}^{N-1} (N-k) theta^k = theta (N (1 - theta) - (1 - theta^N)) / (1 - theta)^2
        cross = th * (big_n * one_minus - (1.0 - power(th, n))) / (one_minus * one_minus);
    } else {
        CompensatedSum acc;
        Complex p = 1.0;
        for (std::uint64_t k = 1; k < n; ++k) {
            p *= th;
            acc.add(static_cast<double>(n - k) * p);
        }
        cross = acc.value();
    }
    return big_n + 2.0 * cross.real();
}

double exhaustive_sq_moment(const StepSet& steps, std::int64_t h, unsigned n) {
    require_frequency(h);
    require(n >= 1, Errc::range, "word length must be positive");
    const std::size_t l = steps.size();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) {
        count *= l;
        require(count <= kMaxEnumeration, Errc::budget_exceeded,
                "enumeration of " + std::to_string(l) + "^" + std::to_string(n) + " words exceeds 2^22");
    }
    Enumeration e{steps.values(), h, n};
    e.visit(0, 0.0, Complex{});
    return (e.total + e.carry) / static_cast<double>(count);
}

}  // namespace abwalk
