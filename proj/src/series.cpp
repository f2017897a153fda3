#include "hopfq/series.hpp"

#include <mutex>

namespace hopfq {

UnivariateSeries inverse(const UnivariateSeries& s) {
  if (s[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  UnivariateSeries out(s.order());
  const Rational inv0 = 1 / s[0];
  out[0] = inv0;
  for (int n = 1; n <= s.order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += s[k] * out[n - k];
    out[n] = -acc * inv0;
  }
  return out;
}

UnivariateSeries exp_linear(const Rational& c, int order) {
  UnivariateSeries out(order);
  Rational term = 1;
  for (int n = 0; n <= order; ++n) {
    out[n] = term;
    term = term * c / (n + 1);
  }
  return out;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli index must be >= 0");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[static_cast<std::size_t>(j)];
    table.push_back(-acc / Rational(m + 1));
  }
  return table[static_cast<std::size_t>(n)];
}

UnivariateSeries s_series(int order) {
  UnivariateSeries out(order);
  for (int n = 0; 2 * n <= order; ++n) {
    // t^{2n} / (2^{2n} (2n+1)!)
    out[2 * n] = Rational(1) / (Rational(factorial(2 * n + 1)) * pow(Rational(2), 2 * n));
  }
  return out;
}

UnivariateSeries inv_s_series(int order) {
  UnivariateSeries out(order);
  for (int n = 0; n <= order; ++n) {
    out[n] = (pow(Rational(2), 1 - n) - 1) * bernoulli(n) / Rational(factorial(n));
  }
  return out;
}

TruncatedSeries<ExactScalar> lift(const UnivariateSeries& s) {
  TruncatedSeries<ExactScalar> out(s.order());
  for (int i = 0; i <= s.order(); ++i) out[i] = ExactScalar(s[i]);
  return out;
}

}  // namespace hopfq
