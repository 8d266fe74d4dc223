#pragma once

#include <string>

namespace abwalk {

enum class Openness { half_open, open };

/// Subinterval of [0, 1): either [a, b) or (a, b), with 0 <= a < b <= 1.
class Interval {
public:
    static Interval half_open(double a, double b);
    static Interval open(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    Openness openness() const noexcept { return openness_; }
    double length() const noexcept { return b_ - a_; }

    bool contains(double p) const noexcept {
        return openness_ == Openness::half_open ? (a_ <= p && p < b_) : (a_ < p && p < b_);
    }

    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Interval(double a, double b, Openness openness);

    double a_;
    double b_;
    Openness openness_;
};

}  // namespace abwalk
