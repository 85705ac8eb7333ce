#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cremona {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  return r.str();
}

// Accepts "p", "-p", "p/q" with optional sign on p.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rational r(s);
    if (denominator(r) == 0) throw std::invalid_argument("zero denominator");
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline long to_long_checked(const Integer& n) {
  if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min())
    throw std::overflow_error("integer too large for long");
  return static_cast<long>(n);
}

}  // namespace cremona
