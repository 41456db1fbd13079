#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace twisted {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Floor division for a positive divisor.
inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline Integer floor_of(const Rational& r) {
  return floor_div(numerator_of(r), denominator_of(r));
}

/// Representative of r modulo 1 in [0, 1).
inline Rational mod_one(const Rational& r) { return r - Rational(floor_of(r)); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// Parses "p", "-p", "p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    return Integer(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

/// Always "p/q" with q > 0, so serialized values have one shape.
inline std::string to_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer " + v.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace twisted
