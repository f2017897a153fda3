#pragma once

#include <map>
#include <string>

#include "hopfq/partition.hpp"
#include "hopfq/series.hpp"

namespace hopfq {

// Formal sum of c * e^{z x} over half-integers x, keyed by 2x.
class ExponentialSum {
 public:
  void add(int twice_exponent, int coeff);
  const std::map<int, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const ExponentialSum&, const ExponentialSum&) = default;

  /// z-expansion up to z^order.
  UnivariateSeries expand(int order) const;
  /// "[[1,1],[-1,-1]]": one [sign, 2x] entry per unit, sorted by 2x descending.
  std::string to_string() const;

 private:
  std::map<int, int> terms_;
};

/// sum_{i <= l(lambda)} [e^{z(lambda_i - i + 1/2)} - e^{z(-i + 1/2)}]
ExponentialSum row_form(const Partition& lambda);

/// sum_{i <= d(lambda)} [e^{z(alpha_i + 1/2)} - e^{-z(beta_i + 1/2)}]
ExponentialSum frobenius_form(const Partition& lambda);

}  // namespace hopfq
