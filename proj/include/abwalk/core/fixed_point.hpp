#pragma once

#include <vector>

#include "abwalk/core/step_set.hpp"
#include "abwalk/core/word.hpp"

namespace abwalk {

// Oracle mode: positions as 128-bit binary fractions of the circle. Every
// double step in (2^-75, 1) converts exactly and addition wraps modulo 2^128,
// so the only error is the final conversion back to double.

__extension__ typedef unsigned __int128 Fixed128;

Fixed128 to_fixed128(double x);
double from_fixed128(Fixed128 x) noexcept;

std::vector<double> fixed_point_positions(const Word& word, const StepSet& steps);
double fixed_point_final(const Word& word, const StepSet& steps);

}  // namespace abwalk
