#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "abwalk/core/interval.hpp"
#include "abwalk/core/step_set.hpp"
#include "abwalk/core/word.hpp"

namespace abwalk {

/// frac(x + step) for x in [0, 1), step in (0, 1).
inline double torus_add(double x, double step) noexcept {
    const double s = x + step;
    return s >= 1.0 ? s - 1.0 : s;
}

/// Incremental walker on R/Z. Rational step sets started at the origin walk
/// in exact residues modulo their common denominator; everything else
/// reduces by one subtraction per step.
class TorusWalker {
public:
    explicit TorusWalker(const StepSet& steps);
    TorusWalker(const StepSet& steps, double start);

    double position() const noexcept { return position_; }

    /// Position after taking `symbol` from here, without moving.
    double peek(Word::Symbol symbol) const noexcept;
    double advance(Word::Symbol symbol) noexcept;

private:
    const StepSet* steps_;
    double position_ = 0.0;
    bool exact_ = false;
    std::uint64_t residue_ = 0;
    std::uint64_t modulus_ = 1;
};

/// Trajectory S_1..S_N of a word; S_0 = 0 is implicit.
class Orbit {
public:
    Orbit(StepSet steps, Word word, std::vector<double> positions);

    const StepSet& steps() const noexcept { return steps_; }
    const Word& word() const noexcept { return word_; }
    std::span<const double> positions() const noexcept { return positions_; }
    std::size_t size() const noexcept { return positions_.size(); }

    /// S_n for 1 <= n <= size().
    double at(std::size_t n) const { return positions_.at(n - 1); }

private:
    StepSet steps_;
    Word word_;
    std::vector<double> positions_;
};

/// Throws invalid_word if a symbol exceeds steps.size().
Orbit make_orbit(Word word, const StepSet& steps);

/// #{1 <= j <= n : S_j in I}. S_0 is never counted. Throws range if n > size.
std::uint64_t hit_count(const Orbit& orbit, const Interval& interval, std::size_t n);
std::uint64_t hit_count(std::span<const double> positions, const Interval& interval);

}  // namespace abwalk
