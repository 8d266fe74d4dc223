#pragma once

#include <string>

namespace abwalk {

/// Shortest decimal that round-trips; integral values keep a ".0" suffix
/// ("0.0", "3.0"). Non-finite values print as "nan", "inf", "-inf".
std::string format_double(double value);

}  // namespace abwalk
