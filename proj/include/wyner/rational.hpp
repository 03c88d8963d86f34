#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <sstream>
#include <string>

namespace wyner {

/// Exact fraction type used for all DoF and backhaul accounting.
/// Magnitudes stay tiny (numerators bounded by a few hundred), so a
/// 64-bit rational is more than enough.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

}  // namespace wyner
