#include "abwalk/exceptional/schedule.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "abwalk/core/error.hpp"

namespace abwalk {

BigInt floor_scaled(double epsilon, const BigInt& n) {
    require(std::isfinite(epsilon) && epsilon >= 0.0, Errc::invalid_argument, "epsilon must be finite and non-negative");
    require(n >= 0, Errc::invalid_argument, "n must be non-negative");
    if (epsilon == 0.0) return 0;
    int exponent = 0;
    const double mantissa = std::frexp(epsilon, &exponent);
    // epsilon = m * 2^(exponent - 53) with m a 53-bit integer.
    const auto m = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    const BigInt product = BigInt(m) * n;
    const int shift = exponent - 53;
    if (shift >= 0) return product << shift;
    return product >> -shift;
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
    require(den > 0, Errc::domain, "ratio with non-positive denominator");
    return boost::multiprecision::cpp_rational(num, den).convert_to<double>();
}

CantorSchedule::CantorSchedule(double epsilon, std::vector<BigInt> n) : epsilon_(epsilon), n_(std::move(n)) {
    require(std::isfinite(epsilon) && epsilon > 0.0 && epsilon <= 1.0, Errc::invalid_argument,
            "epsilon must lie in (0, 1]");
    require(!n_.empty(), Errc::invalid_argument, "schedule needs at least one term");
    require(n_.front() >= 1, Errc::invalid_argument, "n_1 must be positive");
    for (std::size_t k = 1; k < n_.size(); ++k) {
        require(n_[k] > 2 * n_[k - 1], Errc::invalid_argument,
                "schedule must satisfy n_{k+1} > 2 n_k (fails at k = " + std::to_string(k) + ")");
    }
    floor_eps_.reserve(n_.size());
    for (const auto& v : n_) floor_eps_.push_back(floor_scaled(epsilon_, v));
}

CantorSchedule CantorSchedule::from_list(double epsilon, std::vector<BigInt> n) {
    return CantorSchedule(epsilon, std::move(n));
}

CantorSchedule CantorSchedule::from_list(double epsilon, const std::vector<std::uint64_t>& n) {
    return CantorSchedule(epsilon, std::vector<BigInt>(n.begin(), n.end()));
}

CantorSchedule CantorSchedule::squaring(double epsilon, const BigInt& n1, std::size_t length) {
    require(length >= 1, Errc::invalid_argument, "schedule length must be positive");
    require(n1 >= 3, Errc::invalid_argument, "squaring schedule needs n_1 >= 3");
    std::vector<BigInt> n{n1};
    while (n.size() < length) n.push_back(n.back() * n.back());
    return CantorSchedule(epsilon, std::move(n));
}

CantorSchedule CantorSchedule::geometric(double epsilon, const BigInt& base, std::size_t length) {
    require(length >= 1, Errc::invalid_argument, "schedule length must be positive");
    require(base >= 3, Errc::invalid_argument, "geometric schedule needs base >= 3");
    std::vector<BigInt> n{base};
    while (n.size() < length) n.push_back(n.back() * base);
    return CantorSchedule(epsilon, std::move(n));
}

void CantorSchedule::check_index(std::size_t k) const {
    require(k >= 1 && k <= n_.size(), Errc::range,
            "stage " + std::to_string(k) + " outside 1.." + std::to_string(n_.size()));
}

const BigInt& CantorSchedule::n(std::size_t k) const {
    check_index(k);
    return n_[k - 1];
}

const BigInt& CantorSchedule::constrained(std::size_t k) const {
    check_index(k);
    return floor_eps_[k - 1];
}

BigInt CantorSchedule::n_tilde(std::size_t k) const {
    check_index(k);
    return n_[k - 1] + floor_eps_[k - 1];
}

BigInt CantorSchedule::log2_q(std::size_t k) const {
    check_index(k);
    if (k == 1) return n_[0];
    return n_[k - 1] - n_tilde(k - 1);
}

BigInt CantorSchedule::log2_q_partial_sum(std::size_t k) const {
    check_index(k);
    BigInt total = 0;
    for (std::size_t j = 1; j <= k; ++j) total += log2_q(j);
    return total;
}

BigInt CantorSchedule::telescoped_sum(std::size_t k) const {
    check_index(k);
    BigInt total = n_[k - 1];
    for (std::size_t j = 1; j < k; ++j) total -= floor_eps_[j - 1];
    return total;
}

double dimension_estimate(const CantorSchedule& schedule, std::size_t k) {
    return ratio_to_double(schedule.telescoped_sum(k), schedule.n_tilde(k));
}

std::vector<double> corollary_check(const CantorSchedule& schedule) {
    require(schedule.size() >= 2, Errc::invalid_argument, "corollary check needs at least two schedule terms");
    std::vector<double> ratios;
    ratios.reserve(schedule.size() - 1);
    for (std::size_t k = 1; k < schedule.size(); ++k) {
        ratios.push_back(ratio_to_double(schedule.telescoped_sum(k), schedule.log2_q(k + 1)));
    }
    return ratios;
}

}  // namespace abwalk
