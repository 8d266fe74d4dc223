#include "abwalk/core/step_set.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "abwalk/core/error.hpp"

namespace abwalk {
namespace {

// Exact residues must stay exactly representable after division by Q.
constexpr std::uint64_t kMaxCommonDenominator = std::uint64_t{1} << 53;

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::int64_t parse_int(const std::string& token) {
    std::int64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end)
        fail(Errc::invalid_argument, "not an integer: '" + token + "'");
    return value;
}

double parse_real(const std::string& token) {
    if (token == "sqrt2m1") return constants::sqrt2m1;
    if (token == "sqrt3m1") return constants::sqrt3m1;
    if (token == "golden") return constants::golden;
    double value = 0.0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end)
        fail(Errc::invalid_argument, "not a step value: '" + token + "'");
    return value;
}

}  // namespace

StepSet StepSet::from_values(std::vector<double> values) {
    require(!values.empty(), Errc::invalid_alphabet, "a step set needs at least one value");
    for (double v : values) {
        require(std::isfinite(v) && v > 0.0 && v < 1.0, Errc::domain,
                "step values must lie strictly inside (0, 1)");
    }
    StepSet set;
    set.values_ = std::move(values);
    return set;
}

StepSet StepSet::from_rationals(std::vector<Rational> values) {
    require(!values.empty(), Errc::invalid_alphabet, "a step set needs at least one value");
    std::uint64_t lcm = 1;
    for (auto& r : values) {
        require(r.den > 0 && r.num > 0 && r.num < r.den, Errc::domain,
                "rational steps must satisfy 0 < p/q < 1");
        const std::int64_t g = std::gcd(r.num, r.den);
        r.num /= g;
        r.den /= g;
        const auto den = static_cast<std::uint64_t>(r.den);
        const std::uint64_t step = den / std::gcd(lcm, den);
        require(lcm <= kMaxCommonDenominator / step, Errc::invalid_argument,
                "common denominator of the rational steps exceeds 2^53");
        lcm *= step;
    }
    StepSet set;
    set.denominator_ = lcm;
    for (const auto& r : values) {
        set.values_.push_back(r.to_double());
        set.residues_.push_back(static_cast<std::uint64_t>(r.num) * (lcm / static_cast<std::uint64_t>(r.den)));
    }
    set.rationals_ = std::move(values);
    return set;
}

StepSet StepSet::parse(const std::string& text) {
    std::vector<std::string> tokens;
    std::stringstream stream(text);
    for (std::string item; std::getline(stream, item, ',');) tokens.push_back(trim(item));
    require(!tokens.empty(), Errc::invalid_argument, "empty step list");

    bool all_fractions = true;
    for (const auto& t : tokens) all_fractions = all_fractions && t.find('/') != std::string::npos;

    if (all_fractions) {
        std::vector<Rational> rationals;
        for (const auto& t : tokens) {
            const auto slash = t.find('/');
            rationals.push_back({parse_int(t.substr(0, slash)), parse_int(t.substr(slash + 1))});
        }
        return from_rationals(std::move(rationals));
    }
    std::vector<double> values;
    for (const auto& t : tokens) {
        if (const auto slash = t.find('/'); slash != std::string::npos) {
            values.push_back(Rational{parse_int(t.substr(0, slash)), parse_int(t.substr(slash + 1))}.to_double());
        } else {
            values.push_back(parse_real(t));
        }
    }
    return from_values(std::move(values));
}

std::string StepSet::to_string() const {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out << ',';
        if (rationals_) {
            out << (*rationals_)[i].num << '/' << (*rationals_)[i].den;
        } else {
            out << values_[i];
        }
    }
    return out.str();
}

double circle_distance(double x, double y) noexcept {
    double d = std::fabs(x - y);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

}  // namespace abwalk
