#pragma once

// Arbitrary-precision integer and rational types plus the few helpers the
// rest of the library needs for exact reporting.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "symchar/errors.hpp"

namespace symchar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p/q" in lowest terms; integers render without a denominator.
inline std::string to_fraction_string(const Rational& q) {
  const BigInt den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

/// Decimal with `sig` significant digits (scientific notation when needed).
inline std::string to_significant_string(const Rational& q, int sig = 15) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  Dec v = Dec(numerator_of(q)) / Dec(denominator_of(q));
  return v.str(sig);
}

/// Decimal rounded half away from zero to exactly `places` fractional digits.
/// Computed with integer arithmetic so the rendering is platform-independent.
inline std::string to_fixed_string(const Rational& q, unsigned places) {
  BigInt scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  BigInt num = numerator_of(q);
  const BigInt den = denominator_of(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scaled = (2 * num * scale + den) / (2 * den);
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  if (places > 0) frac = std::string(places - frac.size(), '0') + frac;
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.str();
  if (places > 0) out += "." + frac;
  return out;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Parses an optionally signed decimal integer. Throws ValidationError.
inline BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ValidationError("not a decimal integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw ValidationError("not a decimal integer: '" + text + "'");
  }
  BigInt v(text.substr(i));
  return text[0] == '-' ? BigInt(-v) : v;
}

}  // namespace symchar
