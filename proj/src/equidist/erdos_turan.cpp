#include <cmath>
#include <vector>

#include "abwalk/core/error.hpp"
#include "abwalk/equidist/discrepancy.hpp"

namespace abwalk {

double erdos_turan_bound(std::span<const WeylSeries> series, std::uint64_t n) {
    const std::size_t k = series.size();
    require(k >= 1, Errc::invalid_argument, "need Weyl series for h = 1..K with K >= 1");
    require(n >= 1, Errc::range, "N must be positive");

    std::vector<const WeylSeries*> by_h(k + 1, nullptr);
    for (const auto& s : series) {
        require(s.h >= 1 && static_cast<std::size_t>(s.h) <= k && by_h[s.h] == nullptr, Errc::invalid_argument,
                "Weyl series must cover each h = 1..K exactly once");
        by_h[s.h] = &s;
    }

    double total = 1.0 / static_cast<double>(k);
    for (std::size_t h = 1; h <= k; ++h) {
        total += std::abs(by_h[h]->at(n)) / (static_cast<double>(h) * static_cast<double>(n));
    }
    return kErdosTuranConstant * total;
}

}  // namespace abwalk
