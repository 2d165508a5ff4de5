#pragma once

#include <boost/rational.hpp>
#include <string>

namespace surfdyn {

// All genus / Euler-characteristic formulas are quarter-integer expressions;
// they are evaluated exactly, never in floating point.
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace surfdyn
