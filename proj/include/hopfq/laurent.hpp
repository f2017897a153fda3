#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "hopfq/exact_scalar.hpp"
#include "hopfq/rational.hpp"

namespace hopfq {

// Laurent polynomial in eps and v_0..v_{kTimes-1} with rational coefficients.
class LaurentPoly {
 public:
  static constexpr int kTimes = 6;
  using Exponents = std::array<int, kTimes + 1>;  // [eps, v_0, ..., v_5]

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const Rational& c, const Exponents& e);
  /// eps-only scalar; throws std::domain_error if it involves u0.
  static LaurentPoly from_scalar(const ExactScalar& s, const std::optional<Rational>& eps);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Inverse of a single monomial; throws std::domain_error otherwise.
  LaurentPoly inverse_monomial() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void add(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

}  // namespace hopfq
