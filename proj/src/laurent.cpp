#include "hopfq/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfq {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, const Exponents& e) {
  LaurentPoly p;
  p.add(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_scalar(const ExactScalar& s, const std::optional<Rational>& eps) {
  if (s.has_u0()) throw std::domain_error("scalar " + s.to_string() + " depends on u0");
  if (eps) return LaurentPoly(s.evaluate(*eps, 0));
  LaurentPoly p;
  for (const auto& t : s.terms()) {
    Exponents e{};
    e[0] = t.eps;
    p.add(e, t.coeff);
  }
  return p;
}

void LaurentPoly::add(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::inverse_monomial() const {
  if (!is_monomial()) throw std::domain_error("only a single monomial is invertible, got " + to_string());
  const auto& [e, c] = *terms_.begin();
  Exponents neg{};
  for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
  return monomial(1 / c, neg);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPoly::Exponents e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << hopfq::to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << " * " << (i == 0 ? std::string("eps") : "v" + std::to_string(i - 1));
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace hopfq
