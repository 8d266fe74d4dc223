#include "abwalk/weyl/weyl_sum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abwalk/core/error.hpp"

namespace abwalk {

Complex unit_phase(std::int64_t h, double position) noexcept {
    const double t = static_cast<double>(h) * position;
    const double r = t - std::floor(t);
    const double angle = 2.0 * std::numbers::pi * r;
    return {std::cos(angle), std::sin(angle)};
}

void require_frequency(std::int64_t h) {
    require(h != 0, Errc::invalid_frequency, "frequency h must be a non-zero integer");
}

Complex WeylSeries::at(std::uint64_t n) const {
    const auto it = std::lower_bound(checkpoints.begin(), checkpoints.end(), n);
    require(it != checkpoints.end() && *it == n, Errc::range, "N = " + std::to_string(n) + " is not a checkpoint");
    return sums[static_cast<std::size_t>(it - checkpoints.begin())];
}

std::vector<std::uint64_t> dyadic_checkpoints(std::uint64_t max_n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n != 0 && n <= max_n; n <<= 1) out.push_back(n);
    return out;
}

WeylSeries weyl_sum(std::span<const double> positions, std::int64_t h, std::span<const std::uint64_t> checkpoints) {
    require_frequency(h);
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        require(checkpoints[i] > 0 && (i == 0 || checkpoints[i] > checkpoints[i - 1]), Errc::range,
                "checkpoints must be positive and strictly increasing");
    }
    require(checkpoints.empty() || checkpoints.back() <= positions.size(), Errc::range,
            "checkpoint beyond the orbit length");

    WeylSeries series;
    series.h = h;
    series.checkpoints.assign(checkpoints.begin(), checkpoints.end());
    CompensatedSum acc;
    std::size_t next = 0;
    for (std::size_t n = 1; next < checkpoints.size(); ++n) {
        acc.add(unit_phase(h, positions[n - 1]));
        if (n == checkpoints[next]) {
            const Complex w = acc.value();
            series.sums.push_back(w);
            series.normalized.push_back(std::abs(w) / static_cast<double>(n));
            ++next;
        }
    }
    return series;
}

WeylSeries weyl_sum(const Orbit& orbit, std::int64_t h, std::span<const std::uint64_t> checkpoints) {
    return weyl_sum(orbit.positions(), h, checkpoints);
}

}  // namespace abwalk
