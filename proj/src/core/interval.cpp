#include "abwalk/core/interval.hpp"

#include <cmath>
#include <sstream>

#include "abwalk/core/error.hpp"

namespace abwalk {

Interval::Interval(double a, double b, Openness openness) : a_(a), b_(b), openness_(openness) {
    require(std::isfinite(a) && std::isfinite(b) && 0.0 <= a && a < b && b <= 1.0, Errc::domain,
            "interval endpoints must satisfy 0 <= a < b <= 1");
}

Interval Interval::half_open(double a, double b) { return {a, b, Openness::half_open}; }

Interval Interval::open(double a, double b) { return {a, b, Openness::open}; }

std::string Interval::to_string() const {
    std::ostringstream out;
    out.precision(17);
    out << (openness_ == Openness::half_open ? '[' : '(') << a_ << ", " << b_ << ')';
    return out.str();
}

}  // namespace abwalk
