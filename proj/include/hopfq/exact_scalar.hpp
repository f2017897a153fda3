#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hopfq/rational.hpp"

namespace hopfq {

// Element of Q[u0][eps, 1/eps]. The Planck constant is hbar = eps^2
// throughout; eps may carry negative powers, u0 may not.
class ExactScalar {
 public:
  struct Term {
    int eps = 0;
    int u0 = 0;
    Rational coeff;
  };

  ExactScalar() = default;
  ExactScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  ExactScalar(long c) : ExactScalar(Rational(c)) {}  // NOLINT
  ExactScalar(int c) : ExactScalar(Rational(c)) {}   // NOLINT

  static ExactScalar monomial(const Rational& c, int eps_power, int u0_power);
  static ExactScalar eps(int power = 1) { return monomial(1, power, 0); }
  static ExactScalar hbar(int power = 1) { return monomial(1, 2 * power, 0); }
  static ExactScalar u0(int power = 1) { return monomial(1, 0, power); }

  // Terms sorted by (eps, u0), no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Nullopt unless the value has no eps or u0 dependence.
  std::optional<Rational> as_rational() const;
  bool has_u0() const;
  bool has_eps() const;
  /// Smallest eps power present; requires a nonzero value.
  int min_eps_power() const;
  /// Part of the value with exactly this eps power.
  ExactScalar eps_slice(int eps_power) const;
  ExactScalar coefficient(int eps_power, int u0_power) const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator*=(const Rational& c);
  ExactScalar operator-() const;

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(ExactScalar a, const Rational& c) { return a *= c; }
  friend ExactScalar operator*(const Rational& c, ExactScalar a) { return a *= c; }
  friend ExactScalar operator*(ExactScalar a, int c) { return a *= Rational(c); }
  friend ExactScalar operator*(int c, ExactScalar a) { return a *= Rational(c); }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);

  /// Multiplies by eps^shift_eps * u0^shift_u0 (shift_u0 >= 0).
  ExactScalar shifted(int shift_eps, int shift_u0 = 0) const;
  ExactScalar pow(int n) const;

  ExactScalar substitute_u0(const Rational& u0) const;
  ExactScalar substitute_eps(const Rational& eps) const;
  /// eps -> -eps (the sign flip that exchanges a partition with its transpose).
  ExactScalar flip_eps() const;
  Rational evaluate(const Rational& eps, const Rational& u0) const;

  /// Canonical text: terms `c * u0^a * eps^b` sorted by (b, a), joined by " + ".
  std::string to_string() const;

 private:
  void add_term(int eps, int u0, const Rational& c);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

}  // namespace hopfq
