#include "hopfq/exact_scalar.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hopfq {

namespace {

bool key_less(const ExactScalar::Term& a, const ExactScalar::Term& b) {
  return a.eps != b.eps ? a.eps < b.eps : a.u0 < b.u0;
}

bool same_key(const ExactScalar::Term& a, const ExactScalar::Term& b) {
  return a.eps == b.eps && a.u0 == b.u0;
}

// Merges sorted a and (sign * b).
std::vector<ExactScalar::Term> merge(const std::vector<ExactScalar::Term>& a,
                                     const std::vector<ExactScalar::Term>& b, bool negate_b) {
  std::vector<ExactScalar::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key_less(b[j], a[i])) {
      out.push_back(b[j]);
      if (negate_b) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].eps, a[i].u0, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ExactScalar::ExactScalar(const Rational& c) {
  if (c != 0) terms_.push_back({0, 0, c});
}

ExactScalar ExactScalar::monomial(const Rational& c, int eps_power, int u0_power) {
  if (u0_power < 0) throw std::domain_error("negative power of u0");
  ExactScalar s;
  if (c != 0) s.terms_.push_back({eps_power, u0_power, c});
  return s;
}

std::optional<Rational> ExactScalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].eps == 0 && terms_[0].u0 == 0) return terms_[0].coeff;
  return std::nullopt;
}

bool ExactScalar::has_u0() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.u0 != 0; });
}

bool ExactScalar::has_eps() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.eps != 0; });
}

int ExactScalar::min_eps_power() const {
  if (terms_.empty()) throw std::domain_error("min_eps_power of zero");
  return terms_.front().eps;
}

ExactScalar ExactScalar::eps_slice(int eps_power) const {
  ExactScalar s;
  for (const auto& t : terms_)
    if (t.eps == eps_power) s.terms_.push_back(t);
  return s;
}

ExactScalar ExactScalar::coefficient(int eps_power, int u0_power) const {
  for (const auto& t : terms_)
    if (t.eps == eps_power && t.u0 == u0_power) return ExactScalar(t.coeff);
  return {};
}

void ExactScalar::add_term(int eps, int u0, const Rational& c) {
  *this += monomial(c, eps, u0);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    out.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_)
      out.terms_.push_back({t.eps + single.eps, t.u0 + single.u0, Rational(t.coeff * single.coeff)});
    return out;  // a monomial factor keeps the order
  }
  std::vector<ExactScalar::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.eps + y.eps, x.u0 + y.u0, Rational(x.coeff * y.coeff)});
  std::sort(prod.begin(), prod.end(), key_less);
  for (auto& t : prod) {
    if (!out.terms_.empty() && same_key(out.terms_.back(), t)) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  return out;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) { return *this = *this * o; }

ExactScalar& ExactScalar::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar s = *this;
  for (auto& t : s.terms_) t.coeff = -t.coeff;
  return s;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!same_key(a.terms_[i], b.terms_[i]) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

ExactScalar ExactScalar::shifted(int shift_eps, int shift_u0) const {
  if (shift_u0 < 0) throw std::domain_error("negative power of u0");
  ExactScalar s = *this;
  for (auto& t : s.terms_) {
    t.eps += shift_eps;
    t.u0 += shift_u0;
  }
  return s;
}

ExactScalar ExactScalar::pow(int n) const {
  if (n < 0) throw std::domain_error("ExactScalar::pow with negative exponent");
  ExactScalar result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

ExactScalar ExactScalar::substitute_u0(const Rational& u0) const {
  ExactScalar s;
  for (const auto& t : terms_) s.add_term(t.eps, 0, t.coeff * hopfq::pow(u0, t.u0));
  return s;
}

ExactScalar ExactScalar::substitute_eps(const Rational& eps) const {
  ExactScalar s;
  for (const auto& t : terms_) s.add_term(0, t.u0, t.coeff * hopfq::pow(eps, t.eps));
  return s;
}

ExactScalar ExactScalar::flip_eps() const {
  ExactScalar s = *this;
  for (auto& t : s.terms_)
    if (t.eps % 2 != 0) t.coeff = -t.coeff;
  return s;
}

Rational ExactScalar::evaluate(const Rational& eps, const Rational& u0) const {
  Rational v = 0;
  for (const auto& t : terms_) v += t.coeff * hopfq::pow(eps, t.eps) * hopfq::pow(u0, t.u0);
  return v;
}

std::string ExactScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool has_vars = t.eps != 0 || t.u0 != 0;
    std::vector<std::string> factors;
    if (!has_vars) {
      factors.push_back(hopfq::to_string(t.coeff));
    } else if (t.coeff == -1) {
      os << '-';
    } else if (t.coeff != 1) {
      factors.push_back(hopfq::to_string(t.coeff));
    }
    if (t.u0 == 1) factors.emplace_back("u0");
    if (t.u0 > 1) factors.push_back("u0^" + std::to_string(t.u0));
    if (t.eps == 1) factors.emplace_back("eps");
    if (t.eps != 0 && t.eps != 1) factors.push_back("eps^" + std::to_string(t.eps));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " * " : "") << factors[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

}  // namespace hopfq
