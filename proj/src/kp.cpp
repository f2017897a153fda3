#include "hopfq/kp.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "hopfq/schur.hpp"

namespace hopfq {

// ---------------------------------------------------------------- TauSeries

TauSeries TauSeries::constant(const LaurentPoly& c, int max_weight) {
  TauSeries s(max_weight);
  s.add(MultiIndex(), c);
  return s;
}

LaurentPoly TauSeries::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TauSeries::add(const MultiIndex& m, const LaurentPoly& c) {
  if (c.is_zero() || m.weight() > max_weight_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TauSeries TauSeries::truncated(int w) const {
  TauSeries out(std::min(w, max_weight_));
  for (const auto& [m, c] : terms_) out.add(m, c);
  return out;
}

TauSeries& TauSeries::operator+=(const TauSeries& o) {
  if (o.max_weight_ < max_weight_) *this = truncated(o.max_weight_);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

TauSeries& TauSeries::operator-=(const TauSeries& o) {
  if (o.max_weight_ < max_weight_) *this = truncated(o.max_weight_);
  for (const auto& [m, c] : o.terms_) add(m, LaurentPoly(-1) * c);
  return *this;
}

TauSeries operator*(const TauSeries& a, const TauSeries& b) {
  TauSeries out(std::min(a.max_weight_, b.max_weight_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.weight() + mb.weight() > out.max_weight_) continue;
      out.add(ma + mb, ca * cb);
    }
  }
  return out;
}

TauSeries operator*(const LaurentPoly& c, const TauSeries& a) {
  TauSeries out(a.max_weight_);
  for (const auto& [m, x] : a.terms_) out.add(m, c * x);
  return out;
}

TauSeries TauSeries::derivative(const MultiIndex& alpha) const {
  TauSeries out(max_weight_ - alpha.weight());
  for (const auto& [m, c] : terms_) {
    if (!alpha.divides(m)) continue;
    Integer f = 1;
    for (const auto& [k, a] : alpha.entries()) {
      const int n = m.get(k);
      for (int i = 0; i < a; ++i) f *= n - i;
    }
    out.add(m.minus(alpha), LaurentPoly(Rational(f)) * c);
  }
  return out;
}

namespace {

// f / f_0 - 1 and 1 / f_0
std::pair<TauSeries, LaurentPoly> normalized_tail(const TauSeries& f) {
  const LaurentPoly c0 = f.coefficient(MultiIndex());
  if (!c0.is_monomial()) throw std::domain_error("constant term must be a single monomial, got " + c0.to_string());
  const LaurentPoly inv = c0.inverse_monomial();
  TauSeries g = inv * f;
  g.add(MultiIndex(), LaurentPoly(-1));
  return {g, inv};
}

}  // namespace

TauSeries TauSeries::inverse() const {
  auto [g, inv] = normalized_tail(*this);
  TauSeries sum = constant(LaurentPoly(1), max_weight_);
  TauSeries power = sum;
  for (int m = 1; m <= max_weight_; ++m) {
    power = power * g;
    if (m % 2 == 1) sum -= power; else sum += power;
  }
  return inv * sum;
}

TauSeries TauSeries::log() const {
  auto [g, inv] = normalized_tail(*this);
  (void)inv;
  TauSeries sum(max_weight_);
  TauSeries power = constant(LaurentPoly(1), max_weight_);
  for (int m = 1; m <= max_weight_; ++m) {
    power = power * g;
    const TauSeries term = LaurentPoly(rational(m % 2 == 1 ? 1 : -1, m)) * power;
    sum += term;
  }
  return sum;
}

std::optional<std::string> TauSeries::first_term_up_to(int w) const {
  for (const auto& [m, c] : terms_)
    if (m.weight() <= w) return "(" + c.to_string() + ") * " + (m.empty() ? std::string("1") : m.to_string("p"));
  return std::nullopt;
}

// ---------------------------------------------------------------- tau from disk

std::string TruncatedTau::describe() const {
  std::ostringstream os;
  os << "active={";
  for (std::size_t i = 0; i < active.size(); ++i) os << (i ? "," : "") << active[i];
  os << "} u0=" << (u0 ? to_string(*u0) : "symbolic") << " eps=" << (eps ? to_string(*eps) : "symbolic");
  return os.str();
}

TruncatedTau tau_from_disk(const DiskPotential& pot, const std::set<int>& active, const std::optional<Rational>& u0,
                           const std::optional<Rational>& eps) {
  TruncatedTau tau;
  tau.u0 = u0;
  tau.eps = eps;
  tau.active.assign(active.begin(), active.end());
  for (int k : active)
    if (k < 0 || k > pot.K || k >= LaurentPoly::kTimes)
      throw std::invalid_argument("active time t_" + std::to_string(k) + " out of range");

  auto specialize = [&](ExactScalar x) {
    if (u0) x = x.substitute_u0(*u0);
    if (eps) x = x.substitute_eps(*eps);
    return x;
  };
  const DiskAmplitude& vacuum = pot.at(Partition());
  // per active k: rational exponent for each amplitude (relative to vacuum if the vacuum one is not rational)
  std::map<int, std::vector<Rational>> exps;
  for (int k : active) {
    const ExactScalar x0 = specialize(vacuum.exponents[static_cast<std::size_t>(k)]);
    const bool fold = x0.as_rational().has_value();
    if (!fold) tau.gauge[k] = x0;
    Integer den = 1;
    for (const auto& a : pot.amplitudes) {
      ExactScalar x = specialize(a.exponents[static_cast<std::size_t>(k)]);
      if (!fold) x -= x0;
      const auto r = x.as_rational();
      if (!r) {
        throw std::domain_error("exponent of t_" + std::to_string(k) + " for " + a.lambda.to_string() + " is " +
                                x.to_string() + ", not a rational number; specialize u0/eps or drop t_" +
                                std::to_string(k));
      }
      exps[k].push_back(*r);
      den = lcm(den, r->get_den());
    }
    tau.denominators[k] = den;
  }

  tau.series = TauSeries(pot.max_weight);
  for (std::size_t idx = 0; idx < pot.amplitudes.size(); ++idx) {
    const auto& a = pot.amplitudes[idx];
    LaurentPoly::Exponents e{};
    for (int k : active) {
      const Rational n = exps[k][idx] * Rational(tau.denominators[k]);
      e[static_cast<std::size_t>(k + 1)] = static_cast<int>(n.get_num().get_si());
    }
    const LaurentPoly weight = LaurentPoly::monomial(1, e) * LaurentPoly::from_scalar(a.prefactor, eps);
    const FockPolynomial s = scaled_schur(a.lambda);
    for (const auto& [m, c] : s.terms()) tau.series.add(m, weight * LaurentPoly::from_scalar(c, eps));
  }
  return tau;
}

TauSeries exponential_p1(int W, const Rational& a) {
  TauSeries s(W);
  for (int n = 0; n <= W; ++n) s.add(MultiIndex::single(1, n), LaurentPoly(pow(a, n) / Rational(factorial(n))));
  return s;
}

// ---------------------------------------------------------------- Hirota

namespace {

void for_each_divisor(const MultiIndex& bound, const std::function<void(const MultiIndex&)>& fn) {
  const auto& entries = bound.entries();
  std::vector<MultiIndex::Entry> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == entries.size()) {
      fn(MultiIndex(current));
      return;
    }
    for (int m = 0; m <= entries[i].second; ++m) {
      if (m > 0) current.emplace_back(entries[i].first, m);
      rec(i + 1);
      if (m > 0) current.pop_back();
    }
  };
  rec(0);
}

Rational multi_factorial(const MultiIndex& m) {
  Integer f = 1;
  for (const auto& [k, a] : m.entries()) f *= factorial(a);
  return Rational(f);
}

void add_to(HirotaPolynomial& P, const MultiIndex& m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto& slot = P[m];
  slot += c;
  if (slot.is_zero()) P.erase(m);
}

}  // namespace

TauSeries hirota_apply(const HirotaPolynomial& P, const TauSeries& f, const TauSeries& g,
                       const std::optional<Rational>& eps) {
  int top = 0;
  for (const auto& [gamma, c] : P) top = std::max(top, gamma.weight());
  const int W = std::min(f.max_weight(), g.max_weight());
  TauSeries out(W - top);
  std::map<MultiIndex, TauSeries> df, dg;
  auto cached = [](std::map<MultiIndex, TauSeries>& cache, const TauSeries& s, const MultiIndex& a) -> const TauSeries& {
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, s.derivative(a)).first;
    return it->second;
  };
  for (const auto& [gamma, c] : P) {
    const LaurentPoly coeff = LaurentPoly::from_scalar(c, eps);
    for_each_divisor(gamma, [&](const MultiIndex& alpha) {
      const MultiIndex beta = gamma.minus(alpha);
      const Rational binom = multi_factorial(gamma) / (multi_factorial(alpha) * multi_factorial(beta));
      const Rational sign = beta.degree() % 2 == 0 ? 1 : -1;
      const TauSeries term = cached(df, f, alpha) * cached(dg, g, beta);
      out += LaurentPoly(binom * sign) * coeff * term.truncated(out.max_weight());
    });
  }
  return out;
}

HirotaPolynomial kp_bilinear_polynomial(int which) {
  HirotaPolynomial P;
  if (which == 1) {
    add_to(P, MultiIndex::single(2, 2), 12);
    add_to(P, MultiIndex({{1, 1}, {3, 1}}), -12);
    add_to(P, MultiIndex::single(1, 4), ExactScalar::hbar());
  } else if (which == 2) {
    add_to(P, MultiIndex({{2, 1}, {3, 1}}), 6);
    add_to(P, MultiIndex({{1, 1}, {4, 1}}), -6);
    add_to(P, MultiIndex({{1, 3}, {2, 1}}), ExactScalar::hbar());
  } else {
    throw std::invalid_argument("bilinear equation must be 1 or 2");
  }
  return P;
}

HirotaPolynomial kp_generating_coefficient(const MultiIndex& y) {
  HirotaPolynomial out;
  // e^{eps sum y_k D_k}: y^Z -> eps^{|Z|} D^Z / Z!
  std::vector<MultiIndex> divisors;
  for_each_divisor(y, [&](const MultiIndex& z) { divisors.push_back(z); });
  for (int j = 0; j <= y.weight(); ++j) {
    // h_j(-2y): y^mu with coefficient (-2)^{|mu|} / z_mu
    for (const auto& mu_part : partitions_of(j)) {
      const MultiIndex mu = MultiIndex::from_partition(mu_part);
      if (!mu.divides(y)) continue;
      const MultiIndex z = y.minus(mu);
      const Rational hj = pow(Rational(-2), mu.degree()) / Rational(centralizer_order(mu_part));
      const ExactScalar ez = ExactScalar::monomial(Rational(1) / multi_factorial(z), z.degree(), 0);
      // h_{j+1}(eps D~) = sum_nu eps^{|nu|} D^nu / nu!
      for (const auto& nu_part : partitions_of(j + 1)) {
        const MultiIndex nu = MultiIndex::from_partition(nu_part);
        const ExactScalar hn = ExactScalar::monomial(Rational(1) / multi_factorial(nu), nu.degree(), 0);
        add_to(out, z + nu, ez * hn * hj);
      }
    }
  }
  return out;
}

HirotaPolynomial even_part(const HirotaPolynomial& P) {
  HirotaPolynomial out;
  for (const auto& [m, c] : P)
    if (m.degree() % 2 == 0) out.emplace(m, c);
  return out;
}

std::optional<ExactScalar> proportionality(const HirotaPolynomial& P, const HirotaPolynomial& Q) {
  if (P.empty() || Q.empty()) return std::nullopt;
  const auto& [m, q] = *Q.begin();
  if (q.size() != 1) return std::nullopt;
  const auto& t = q.terms().front();
  const ExactScalar r = (P.count(m) ? P.at(m) : ExactScalar()).shifted(-t.eps) * (Rational(1) / t.coeff);
  if (r.is_zero() || t.u0 != 0) return std::nullopt;
  HirotaPolynomial scaled;
  for (const auto& [k, c] : Q) add_to(scaled, k, c * r);
  if (scaled != P) return std::nullopt;
  return r;
}

// ---------------------------------------------------------------- checks

namespace {

KPCheck residual_report(const std::string& equation, const TruncatedTau& tau, const TauSeries& r) {
  KPCheck c;
  c.equation = equation;
  c.specialization = tau.describe();
  c.weight_validated = r.max_weight();
  c.residual_zero = r.max_weight() >= 0 && r.is_zero();
  c.max_residual_term = r.first_term_up_to(r.max_weight());
  return c;
}

}  // namespace

KPCheck kp_bilinear_check(int which, const TruncatedTau& tau) {
  const TauSeries r = hirota_apply(kp_bilinear_polynomial(which), tau.series, tau.series, tau.eps);
  return residual_report(which == 1 ? "bilinear-1" : "bilinear-2", tau, r);
}

std::vector<KPCheck> kp_hierarchy_check(const TruncatedTau& tau, int y_order) {
  std::vector<KPCheck> out;
  const int W = tau.series.max_weight();
  for (int w = 0; w < W; ++w) {
    for (const auto& y : monomials_of_weight(w)) {
      if (y.degree() > y_order) continue;
      const TauSeries r = hirota_apply(kp_generating_coefficient(y), tau.series, tau.series, tau.eps);
      out.push_back(residual_report("y^" + (y.empty() ? std::string("0") : y.to_string("y")), tau, r));
    }
  }
  return out;
}

TauSeries kp_equation_residual(const TauSeries& tau, const std::optional<Rational>& eps) {
  const LaurentPoly hbar = LaurentPoly::from_scalar(ExactScalar::hbar(), eps);
  const MultiIndex x = MultiIndex::single(1);
  const TauSeries u = hbar * tau.log().derivative(MultiIndex::single(1, 2));
  TauSeries r = u.derivative(MultiIndex({{1, 1}, {3, 1}}));
  r -= u.derivative(MultiIndex::single(2, 2));
  r -= (u * u.derivative(x)).derivative(x);
  r -= hbar * LaurentPoly(rational(1, 12)) * u.derivative(MultiIndex::single(1, 4));
  return r;
}

KPCheck kp_equation_check(const TruncatedTau& tau) {
  return residual_report("kp-equation", tau, kp_equation_residual(tau.series, tau.eps));
}

bool kp_reduction_consistent(const TauSeries& tau, const std::optional<Rational>& eps) {
  const LaurentPoly hbar = LaurentPoly::from_scalar(ExactScalar::hbar(), eps);
  const TauSeries R = hirota_apply(kp_bilinear_polynomial(1), tau, tau, eps);
  const TauSeries quotient = R * (tau * tau).inverse();
  const TauSeries rhs = hbar * LaurentPoly(rational(-1, 24)) * quotient.derivative(MultiIndex::single(1, 2));
  const TauSeries diff = kp_equation_residual(tau, eps) - rhs;
  return diff.max_weight() >= 0 && diff.is_zero();
}

}  // namespace hopfq
