#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfq/disk.hpp"
#include "hopfq/laurent.hpp"
#include "hopfq/multi_index.hpp"

namespace hopfq {

// Series in p_1, p_2, ... with Laurent coefficients, exact up to max_weight.
class TauSeries {
 public:
  using Terms = std::map<MultiIndex, LaurentPoly>;

  TauSeries() = default;
  explicit TauSeries(int max_weight) : max_weight_(max_weight) {}
  static TauSeries constant(const LaurentPoly& c, int max_weight);

  int max_weight() const { return max_weight_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const MultiIndex& m) const;
  void add(const MultiIndex& m, const LaurentPoly& c);

  TauSeries& operator+=(const TauSeries& o);
  TauSeries& operator-=(const TauSeries& o);
  friend TauSeries operator+(TauSeries a, const TauSeries& b) { return a += b; }
  friend TauSeries operator-(TauSeries a, const TauSeries& b) { return a -= b; }
  friend TauSeries operator*(const TauSeries& a, const TauSeries& b);
  friend TauSeries operator*(const LaurentPoly& c, const TauSeries& a);
  friend bool operator==(const TauSeries&, const TauSeries&) = default;

  /// Drops terms of weight above w and lowers the validity bound to w.
  TauSeries truncated(int w) const;
  /// d^alpha / dp^alpha; validity drops by weight(alpha).
  TauSeries derivative(const MultiIndex& alpha) const;
  /// Requires a single-monomial constant term.
  TauSeries inverse() const;
  /// log(f / f_0) where f_0 is the constant term.
  TauSeries log() const;

  /// First nonzero term at weight <= w, rendered; nullopt if none.
  std::optional<std::string> first_term_up_to(int w) const;

 private:
  int max_weight_ = 0;
  Terms terms_;
};

struct TruncatedTau {
  TauSeries series;
  std::vector<int> active;                    // times t_k set to formal values
  std::map<int, Integer> denominators;        // e^{t_k / d_k} -> v_k
  std::map<int, ExactScalar> gauge;           // constant exponents kept aside (coefficient of t_k)
  std::optional<Rational> u0;
  std::optional<Rational> eps;
  std::string describe() const;
};

/// Substitutes e^{t_k / d_k} -> v_k for k in active. Throws std::domain_error when a
/// partition-dependent exponent is not rational (e.g. symbolic u0 with k >= 1).
TruncatedTau tau_from_disk(const DiskPotential& pot, const std::set<int>& active, const std::optional<Rational>& u0,
                           const std::optional<Rational>& eps);

/// e^{a p_1} truncated at weight W.
TauSeries exponential_p1(int W, const Rational& a);

// Polynomial in Hirota symbols D_1, D_2, ... with eps-dependent coefficients.
using HirotaPolynomial = std::map<MultiIndex, ExactScalar>;

/// P(D) f.g = P(d/dy) f(p + y) g(p - y) at y = 0; valid to weight W - max weight of P.
TauSeries hirota_apply(const HirotaPolynomial& P, const TauSeries& f, const TauSeries& g,
                       const std::optional<Rational>& eps);

/// 12 D2^2 - 12 D1 D3 + hbar D1^4 (which = 1) or 6 D2 D3 - 6 D1 D4 + hbar D1^3 D2 (which = 2).
HirotaPolynomial kp_bilinear_polynomial(int which);

/// Coefficient of y^Y in sum_j h_j(-2y) h_{j+1}(eps D~) e^{eps sum y_k D_k}.
HirotaPolynomial kp_generating_coefficient(const MultiIndex& y);

/// Drops monomials of odd total degree (they vanish on tau.tau).
HirotaPolynomial even_part(const HirotaPolynomial& P);

/// c with P == c * Q (both nonzero); nullopt if not proportional by a monomial in eps.
std::optional<ExactScalar> proportionality(const HirotaPolynomial& P, const HirotaPolynomial& Q);

struct KPCheck {
  std::string equation;
  std::string specialization;
  int weight_validated = -1;
  bool residual_zero = false;
  std::optional<std::string> max_residual_term;
};

KPCheck kp_bilinear_check(int which, const TruncatedTau& tau);

/// Every y-coefficient of total degree <= y_order (and y-weight < W) vanishes on tau.tau.
std::vector<KPCheck> kp_hierarchy_check(const TruncatedTau& tau, int y_order);

/// u = eps^2 d^2/dx^2 log tau with x, y, t = p_1, p_2, p_3; residual of
/// u_xt - u_yy - (u u_x + (hbar/12) u_xxx)_x.
TauSeries kp_equation_residual(const TauSeries& tau, const std::optional<Rational>& eps);
KPCheck kp_equation_check(const TruncatedTau& tau);

/// residual(kp equation) == -(hbar/24) d^2/dx^2 (R / tau^2), R the first bilinear residual.
bool kp_reduction_consistent(const TauSeries& tau, const std::optional<Rational>& eps);

}  // namespace hopfq
