#include "abwalk/core/orbit.hpp"

#include <algorithm>
#include <cmath>

#include "abwalk/core/error.hpp"

namespace abwalk {

TorusWalker::TorusWalker(const StepSet& steps) : steps_(&steps) {
    if (steps.degenerate_rational_pair()) {
        exact_ = true;
        modulus_ = steps.common_denominator();
    }
}

TorusWalker::TorusWalker(const StepSet& steps, double start) : steps_(&steps), position_(start) {
    require(start >= 0.0 && start < 1.0, Errc::domain, "walker start must lie in [0, 1)");
    if (steps.degenerate_rational_pair() && start == 0.0) {
        exact_ = true;
        modulus_ = steps.common_denominator();
    }
}

double TorusWalker::peek(Word::Symbol symbol) const noexcept {
    if (exact_) {
        std::uint64_t r = residue_ + steps_->residues()[symbol - 1];
        if (r >= modulus_) r -= modulus_;
        return static_cast<double>(r) / static_cast<double>(modulus_);
    }
    return torus_add(position_, steps_->values()[symbol - 1]);
}

double TorusWalker::advance(Word::Symbol symbol) noexcept {
    if (exact_) {
        residue_ += steps_->residues()[symbol - 1];
        if (residue_ >= modulus_) residue_ -= modulus_;
        position_ = static_cast<double>(residue_) / static_cast<double>(modulus_);
    } else {
        position_ = torus_add(position_, steps_->values()[symbol - 1]);
    }
    return position_;
}

Orbit::Orbit(StepSet steps, Word word, std::vector<double> positions)
    : steps_(std::move(steps)), word_(std::move(word)), positions_(std::move(positions)) {
    require(word_.size() == positions_.size(), Errc::invalid_argument,
            "orbit needs one position per symbol");
}

Orbit make_orbit(Word word, const StepSet& steps) {
    if (word.alphabet() > steps.size()) {
        for (Word::Symbol s : word) {
            require(s <= steps.size(), Errc::invalid_word,
                    "symbol " + std::to_string(s) + " has no step value (l = " +
                        std::to_string(steps.size()) + ")");
        }
    }
    std::vector<double> positions;
    positions.reserve(word.size());
    TorusWalker walker(steps);
    for (Word::Symbol s : word) positions.push_back(walker.advance(s));
    return Orbit(steps, std::move(word), std::move(positions));
}

std::uint64_t hit_count(std::span<const double> positions, const Interval& interval) {
    return static_cast<std::uint64_t>(
        std::count_if(positions.begin(), positions.end(), [&](double p) { return interval.contains(p); }));
}

std::uint64_t hit_count(const Orbit& orbit, const Interval& interval, std::size_t n) {
    require(n <= orbit.size(), Errc::range, "hit count horizon exceeds orbit length");
    return hit_count(orbit.positions().first(n), interval);
}

}  // namespace abwalk
