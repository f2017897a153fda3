#include <random>

#include "doctest.h"
#include "hopfq/exact_scalar.hpp"
#include "hopfq/series.hpp"

using namespace hopfq;

TEST_CASE("rationals stay reduced") {
  CHECK(to_string(rational(2, 8)) == "1/4");
  CHECK(to_string(rational(3, -6)) == "-1/2");
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK_THROWS_AS(rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(parse_rational("1/x"), std::invalid_argument);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == rational(-1, 2));
  CHECK(bernoulli(2) == rational(1, 6));
  CHECK(bernoulli(4) == rational(-1, 30));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == rational(-691, 2730));
}

TEST_CASE("s(t) and 1/s(t)") {
  const auto s = s_series(20);
  CHECK(s[0] == 1);
  CHECK(s[2] == rational(1, 24));
  CHECK(s[3] == 0);
  CHECK(s[4] == rational(1, 1920));
  const auto inv = inv_s_series(20);
  CHECK(inv[0] == 1);
  CHECK(inv[2] == rational(-1, 24));
  CHECK(inv[4] == rational(7, 5760));

  for (int n = 1; n <= 20; ++n) {
    const auto prod = s_series(n) * inv_s_series(n);
    CHECK(prod[0] == 1);
    for (int i = 1; i <= n; ++i) CHECK(prod[i] == 0);
  }
  CHECK(inverse(s).coefficients() == inv.coefficients());
  for (int n = 0; n <= 20; ++n) {
    Rational f = Rational(factorial(n));
    const Rational expected = (pow(Rational(2), 1 - n) - 1) * bernoulli(n) / f;
    CHECK(inv[n] == expected);
  }
}

TEST_CASE("ExactScalar rendering and json-facing accessors") {
  const ExactScalar x = ExactScalar::monomial(rational(1, 2), 0, 2) - ExactScalar::monomial(rational(1, 24), 2, 0);
  CHECK(x.to_string() == "1/2 * u0^2 + -1/24 * eps^2");
  CHECK(ExactScalar::eps(-1).to_string() == "eps^-1");
  CHECK(ExactScalar().to_string() == "0");
  CHECK(x.coefficient(2, 0) == ExactScalar(rational(-1, 24)));
  CHECK(x.min_eps_power() == 0);
  CHECK(x.substitute_u0(1).substitute_eps(1) == ExactScalar(rational(11, 24)));
}

namespace {

ExactScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-3, 3), a(0, 3), c(-5, 5), n(0, 4);
  ExactScalar x;
  for (int i = n(rng); i > 0; --i) x += ExactScalar::monomial(rational(c(rng), 1 + a(rng)), e(rng), a(rng));
  return x;
}

}  // namespace

TEST_CASE("ring axioms and substitution homomorphisms on random scalars") {
  std::mt19937 rng(7);
  const Rational e0 = rational(2, 3), u = rational(-5, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == ExactScalar());
    CHECK((a * b).substitute_eps(e0) == a.substitute_eps(e0) * b.substitute_eps(e0));
    CHECK((a + b).substitute_u0(u) == a.substitute_u0(u) + b.substitute_u0(u));
    CHECK((a * b).evaluate(e0, u) == a.evaluate(e0, u) * b.evaluate(e0, u));
  }
}
