#include "abwalk/equidist/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "abwalk/core/error.hpp"

namespace abwalk {

double star_discrepancy(std::span<const double> points) {
    require(!points.empty(), Errc::range, "star discrepancy of an empty point set");
    std::vector<double> sorted(points.begin(), points.end());
    for (double p : sorted) require(p >= 0.0 && p < 1.0, Errc::domain, "points must lie in [0, 1)");
    std::sort(sorted.begin(), sorted.end());

    const auto n = static_cast<double>(sorted.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double x = sorted[i];
        const double above = static_cast<double>(i + 1) / n - x;
        const double below = x - static_cast<double>(i) / n;
        worst = std::max({worst, above, below});
    }
    return worst;
}

}  // namespace abwalk
