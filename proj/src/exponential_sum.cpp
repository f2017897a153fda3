#include "hopfq/exponential_sum.hpp"

#include <sstream>

namespace hopfq {

void ExponentialSum::add(int twice_exponent, int coeff) {
  if (coeff == 0) return;
  int& c = terms_[twice_exponent];
  c += coeff;
  if (c == 0) terms_.erase(twice_exponent);
}

UnivariateSeries ExponentialSum::expand(int order) const {
  UnivariateSeries out(order);
  for (const auto& [twice, c] : terms_) out += exp_linear(rational(twice, 2), order).scaled(Rational(c));
  return out;
}

std::string ExponentialSum::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int unit = it->second > 0 ? 1 : -1;
    for (int n = 0; n < std::abs(it->second); ++n) {
      if (!first) os << ',';
      first = false;
      os << '[' << unit << ',' << it->first << ']';
    }
  }
  os << ']';
  return os.str();
}

ExponentialSum row_form(const Partition& lambda) {
  ExponentialSum s;
  for (int i = 1; i <= lambda.length(); ++i) {
    s.add(2 * (lambda[i] - i) + 1, 1);
    s.add(-2 * i + 1, -1);
  }
  return s;
}

ExponentialSum frobenius_form(const Partition& lambda) {
  const auto fr = frobenius(lambda);
  ExponentialSum s;
  for (int i = 0; i < fr.d(); ++i) {
    s.add(2 * fr.alpha[static_cast<std::size_t>(i)] + 1, 1);
    s.add(-(2 * fr.beta[static_cast<std::size_t>(i)] + 1), -1);
  }
  return s;
}

}  // namespace hopfq
