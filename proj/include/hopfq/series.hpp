#pragma once

#include <stdexcept>
#include <vector>

#include "hopfq/exact_scalar.hpp"
#include "hopfq/rational.hpp"

namespace hopfq {

// Power series in one formal variable, truncated after t^order.
template <class T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(check(order)) + 1) {}
  TruncatedSeries(int order, std::vector<T> coeffs) : TruncatedSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = T(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  T& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_order(b);
    TruncatedSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (is_zero(a[i])) continue;
      for (int j = 0; i + j <= a.order(); ++j) {
        if (is_zero(b[j])) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  TruncatedSeries scaled(const T& c) const {
    TruncatedSeries out = *this;
    for (auto& x : out.coeffs_) x = x * c;
    return out;
  }

  /// t -> c t, i.e. coefficient i multiplied by c^i.
  TruncatedSeries rescaled(const T& c) const {
    TruncatedSeries out = *this;
    T power(1);
    for (auto& x : out.coeffs_) {
      x = x * power;
      power = power * c;
    }
    return out;
  }

  /// Multiplication by t^k (k >= 0), dropping overflow.
  TruncatedSeries shifted(int k) const {
    TruncatedSeries out(order());
    for (int i = 0; i + k <= order(); ++i) out[i + k] = (*this)[i];
    return out;
  }

  TruncatedSeries pow(int n) const {
    TruncatedSeries result = one(order()), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return order;
  }
  void same_order(const TruncatedSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("series orders differ");
  }
  static bool is_zero(const Rational& r) { return r == 0; }
  static bool is_zero(const ExactScalar& s) { return s.is_zero(); }

  std::vector<T> coeffs_;
};

using UnivariateSeries = TruncatedSeries<Rational>;

/// Multiplicative inverse of a series with invertible constant term.
UnivariateSeries inverse(const UnivariateSeries& s);

/// e^{c t} truncated.
UnivariateSeries exp_linear(const Rational& c, int order);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(int n);

/// s(t) = sinh(t/2)/(t/2).
UnivariateSeries s_series(int order);

/// 1/s(t), coefficients (2^{1-n} - 1) B_n / n!.
UnivariateSeries inv_s_series(int order);

/// Converts a rational series to the coefficient ring of exact scalars.
TruncatedSeries<ExactScalar> lift(const UnivariateSeries& s);

}  // namespace hopfq
