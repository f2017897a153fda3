#include <random>

#include "doctest.h"
#include "hopfq/disk.hpp"
#include "hopfq/kp.hpp"

using namespace hopfq;

namespace {

using HP = HirotaPolynomial;

TauSeries random_series(std::mt19937& rng, int W) {
  std::uniform_int_distribution<int> c(-4, 4);
  TauSeries f = TauSeries::constant(LaurentPoly(1), W);
  for (int w = 1; w <= W; ++w)
    for (const auto& m : monomials_of_weight(w)) f.add(m, LaurentPoly(rational(c(rng), 1 + w)));
  return f;
}

MultiIndex D(std::initializer_list<MultiIndex::Entry> e) { return MultiIndex(e); }

}  // namespace

TEST_CASE("hirota derivatives") {
  const int W = 6;
  const auto f = exponential_p1(W, 1);
  CHECK(hirota_apply(HP{{D({{1, 1}}), 1}}, f, f, 1).is_zero());
  const auto ea = exponential_p1(W, 2), eb = exponential_p1(W, rational(1, 3));
  const auto lhs = hirota_apply(HP{{D({{1, 1}}), 1}}, ea, eb, 1);
  const auto rhs = LaurentPoly(rational(5, 3)) * exponential_p1(W - 1, rational(7, 3));
  CHECK(lhs == rhs);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_series(rng, W);
    const auto gx = g.derivative(D({{1, 1}}));
    const auto d2 = hirota_apply(HP{{D({{1, 2}}), 1}}, g, g, 1);
    const auto expected = LaurentPoly(2) * (g * g.derivative(D({{1, 2}})) - gx * gx);
    CHECK(d2 == expected.truncated(d2.max_weight()));
    for (const auto& odd : {D({{1, 3}}), D({{1, 1}, {2, 1}, {3, 1}}), D({{3, 1}}), D({{1, 2}, {3, 1}})})
      CHECK(hirota_apply(HP{{odd, 1}}, g, g, 1).is_zero());
    const auto h = random_series(rng, W);
    const HP P{{D({{2, 1}}), 3}}, Q{{D({{1, 2}}), -2}};
    HP PQ = P;
    for (const auto& [m, c] : Q) PQ[m] += c;
    CHECK(hirota_apply(PQ, g, h, 1) == hirota_apply(P, g, h, 1) + hirota_apply(Q, g, h, 1));
    CHECK(hirota_apply(P, g + h, h, 1) == hirota_apply(P, g, h, 1) + hirota_apply(P, h, h, 1));
  }
}

TEST_CASE("tau truncations") {
  const auto pot = disk_potential(6, 1);
  const auto vacuum = tau_from_disk(pot, {}, Rational(0), Rational(1));
  CHECK(vacuum.series == exponential_p1(6, 1));
  const auto t0 = tau_from_disk(pot, {0}, Rational(0), Rational(1));
  CHECK(t0.denominators.at(0) == 24);
  const auto t01 = tau_from_disk(pot, {0, 1}, Rational(0), Rational(1));
  // 2 E_1 = sum lambda_i (lambda_i - 2i + 1) is always even, so no denominator is needed
  CHECK(t01.denominators.at(1) == 1);
  CHECK_THROWS_AS(tau_from_disk(pot, {1}, std::nullopt, Rational(1)), std::domain_error);
  CHECK_NOTHROW(tau_from_disk(pot, {0}, std::nullopt, std::nullopt));
}

TEST_CASE("bilinear equations on the disk potential") {
  const auto pot = disk_potential(8, 1);
  for (const auto& active : std::vector<std::set<int>>{{}, {0}, {0, 1}}) {
    const auto tau = tau_from_disk(pot, active, Rational(0), Rational(1));
    for (int which : {1, 2}) {
      const auto c = kp_bilinear_check(which, tau);
      CHECK(c.residual_zero);
      CHECK(c.weight_validated >= 3);
    }
    CHECK(kp_equation_check(tau).residual_zero);
    CHECK(kp_reduction_consistent(tau.series, tau.eps));
  }
  const auto sym = tau_from_disk(disk_potential(7, 0), {0}, std::nullopt, std::nullopt);
  CHECK(kp_bilinear_check(1, sym).residual_zero);
}

TEST_CASE("generating identity reproduces the printed pair") {
  const auto eq1 = kp_bilinear_polynomial(1), eq2 = kp_bilinear_polynomial(2);
  const auto c3 = proportionality(even_part(kp_generating_coefficient(MultiIndex::single(3))), eq1);
  const auto c4 = proportionality(even_part(kp_generating_coefficient(MultiIndex::single(4))), eq2);
  REQUIRE(c3);
  REQUIRE(c4);
  CHECK(*c3 == ExactScalar::hbar() * rational(-1, 36));
  CHECK(*c4 == ExactScalar::hbar() * rational(-1, 12));
  // y-order 0: eps D_1, odd, vanishes on tau.tau
  CHECK(even_part(kp_generating_coefficient(MultiIndex())).empty());
  const auto tau = tau_from_disk(disk_potential(8, 1), {0, 1}, Rational(0), Rational(1));
  for (const auto& c : kp_hierarchy_check(tau, 2)) CHECK(c.residual_zero);
}

TEST_CASE("random tau fails KP") {
  std::mt19937 rng(5);
  TruncatedTau tau;
  tau.series = random_series(rng, 7);
  tau.eps = Rational(1);
  CHECK_FALSE(kp_bilinear_check(1, tau).residual_zero);
  CHECK(kp_bilinear_check(1, tau).max_residual_term.has_value());
  CHECK_FALSE(kp_equation_check(tau).residual_zero);
  // the reduction identity is algebraic and holds for any tau
  CHECK(kp_reduction_consistent(tau.series, tau.eps));
}
