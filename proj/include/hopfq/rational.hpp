#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfq {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "n", "-n/d" or "n/d"; throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& text);

Rational pow(const Rational& base, int exponent);
Integer factorial(int n);
Integer binomial(int n, int k);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace hopfq
