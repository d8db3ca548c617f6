#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace superstring {

using Rational = boost::rational<std::int64_t>;

/// Rendered as "p/q" (always with a denominator) so exact values survive
/// serialization.
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational half(std::int64_t v) { return Rational(v, 2); }

}  // namespace superstring
