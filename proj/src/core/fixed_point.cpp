#include "abwalk/core/fixed_point.hpp"

#include <cmath>

#include "abwalk/core/error.hpp"

namespace abwalk {

Fixed128 to_fixed128(double x) {
    require(x >= 0.0 && x < 1.0, Errc::domain, "fixed-point values live in [0, 1)");
    if (x == 0.0) return 0;
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent);  // x = mantissa * 2^exponent, mantissa in [0.5, 1)
    const auto bits = static_cast<std::uint64_t>(std::ldexp(mantissa, 53));
    const int shift = 128 - 53 + exponent;
    require(shift >= 0, Errc::domain, "value too small for exact 128-bit conversion");
    return static_cast<Fixed128>(bits) << shift;
}

double from_fixed128(Fixed128 x) noexcept {
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    const auto lo = static_cast<std::uint64_t>(x);
    const long double value = std::ldexp(static_cast<long double>(hi), -64) +
                              std::ldexp(static_cast<long double>(lo), -128);
    const auto rounded = static_cast<double>(value);
    return rounded < 1.0 ? rounded : 0.0;
}

std::vector<double> fixed_point_positions(const Word& word, const StepSet& steps) {
    std::vector<Fixed128> table;
    for (double v : steps.values()) table.push_back(to_fixed128(v));
    std::vector<double> out;
    out.reserve(word.size());
    Fixed128 acc = 0;
    for (Word::Symbol s : word) {
        require(s <= table.size(), Errc::invalid_word, "symbol has no step value");
        acc += table[s - 1];
        out.push_back(from_fixed128(acc));
    }
    return out;
}

double fixed_point_final(const Word& word, const StepSet& steps) {
    std::vector<Fixed128> table;
    for (double v : steps.values()) table.push_back(to_fixed128(v));
    Fixed128 acc = 0;
    for (Word::Symbol s : word) {
        require(s <= table.size(), Errc::invalid_word, "symbol has no step value");
        acc += table[s - 1];
    }
    return from_fixed128(acc);
}

}  // namespace abwalk
