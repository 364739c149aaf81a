#ifndef MINTB_RATIONAL_HPP
#define MINTB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace mintb {

// Exact arbitrary-precision rational. Every decision procedure in the suite
// runs on these; no floating point anywhere near a comparison.
using Rational = mpq_class;

// Parses "p", "-p", "p/q" with integer p, q (q > 0 after normalization).
// The result is always in lowest terms. Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace mintb

#endif
