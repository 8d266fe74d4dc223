#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace abwalk {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

namespace constants {
// sqrt(2) - 1, sqrt(3) - 1 and (sqrt(5) - 1) / 2, correctly rounded.
inline constexpr double sqrt2m1 = 0.41421356237309504880;
inline constexpr double sqrt3m1 = 0.73205080756887729353;
inline constexpr double golden = 0.61803398874989484820;
}  // namespace constants

/// Step values alpha_1..alpha_l of an orbit, each strictly inside (0, 1).
///
/// Irrationality cannot be read off a binary float, so the set only knows it
/// is rational when the caller built it from exact fractions. Such sets walk
/// in exact residue arithmetic modulo the common denominator.
class StepSet {
public:
    static StepSet from_values(std::vector<double> values);
    static StepSet from_rationals(std::vector<Rational> values);

    /// Parses "0.25,0.5", "1/3,2/3" or named constants (sqrt2m1, sqrt3m1, golden).
    /// A list made only of fractions yields an exact rational set.
    static StepSet parse(const std::string& text);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }

    /// 1-based, as symbols are.
    double step(std::size_t symbol) const { return values_.at(symbol - 1); }

    bool degenerate_rational_pair() const noexcept { return rationals_.has_value(); }
    const std::optional<std::vector<Rational>>& rationals() const noexcept { return rationals_; }

    /// Common denominator Q and residues alpha_k * Q; only for rational sets.
    std::uint64_t common_denominator() const noexcept { return denominator_; }
    std::span<const std::uint64_t> residues() const noexcept { return residues_; }

    std::string to_string() const;

private:
    StepSet() = default;

    std::vector<double> values_;
    std::optional<std::vector<Rational>> rationals_;
    std::uint64_t denominator_ = 0;
    std::vector<std::uint64_t> residues_;
};

/// Distance on R/Z.
double circle_distance(double x, double y) noexcept;

}  // namespace abwalk
