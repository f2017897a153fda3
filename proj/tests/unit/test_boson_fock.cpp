#include <random>

#include "doctest.h"
#include "hopfq/fock.hpp"
#include "hopfq/hamiltonians.hpp"

using namespace hopfq;

namespace {

using Op = NormalOrderedOperator;
const ExactScalar kHbar = ExactScalar::hbar();

FockPolynomial mono(std::initializer_list<MultiIndex::Entry> e) { return FockPolynomial::monomial(MultiIndex(e)); }

Op qp(std::initializer_list<MultiIndex::Entry> a, std::initializer_list<MultiIndex::Entry> b, const ExactScalar& c) {
  return Op::term(MultiIndex(a), MultiIndex(b), c);
}

}  // namespace

TEST_CASE("apply") {
  CHECK(apply(Op::p(1), mono({{1, 1}})) == FockPolynomial(kHbar));
  CHECK(apply(Op::q(2), FockPolynomial(ExactScalar(1))) == FockPolynomial::variable(2));
  CHECK(apply(Op::degree_operator(4), mono({{1, 1}, {2, 1}})) == mono({{1, 1}, {2, 1}}) * (kHbar * 3));
}

TEST_CASE("compose") {
  CHECK(compose(Op::p(1), Op::q(1)) == qp({{1, 1}}, {{1, 1}}, 1) + Op::identity(kHbar));
  CHECK(compose(Op::p(2), Op::q(3)) == qp({{3, 1}}, {{2, 1}}, 1));
  const Op p11 = qp({}, {{1, 2}}, 1), q11 = qp({{1, 2}}, {}, 1);
  CHECK(compose(p11, q11) == qp({{1, 2}}, {{1, 2}}, 1) + qp({{1, 1}}, {{1, 1}}, kHbar * 4) +
                                 Op::identity(kHbar * kHbar * 2));
}

TEST_CASE("commutator") {
  const Op h0 = naive_hamiltonian(0, 6).map_coefficients(
      [](const auto&, const ExactScalar& c) { return c.substitute_u0(0); });
  for (int n = 1; n <= 4; ++n) CHECK(commutator(h0, Op::q(n)) == Op::q(n) * (kHbar * n));
  const Op h1 = naive_hamiltonian(1, 5);
  CHECK(commutator(h1, h1).is_zero());
}

TEST_CASE("naive hamiltonians") {
  CHECK(naive_hamiltonian(-1, 6) == Op::identity(ExactScalar::u0()));
  const Op h0 = naive_hamiltonian(0, 3);
  CHECK(h0 == Op::identity(ExactScalar::u0(2) * rational(1, 2)) + Op::degree_operator(3));
  const Op h1 = naive_hamiltonian(1, 3);
  CHECK(h1.coefficient(MultiIndex(), MultiIndex()) == ExactScalar::u0(3) * rational(1, 6));
  CHECK(h1.coefficient(MultiIndex{{1, 1}}, MultiIndex{{1, 1}}) == ExactScalar::u0());
  CHECK(h1.coefficient(MultiIndex{{1, 2}}, MultiIndex{{2, 1}}) == ExactScalar(rational(1, 2)));
  CHECK(h1.coefficient(MultiIndex{{1, 1}, {2, 1}}, MultiIndex{{3, 1}}) == ExactScalar(1));
  CHECK(h1.coefficient(MultiIndex{{3, 1}}, MultiIndex{{1, 1}, {2, 1}}) == ExactScalar(1));
  for (int n = -1; n <= 5; ++n) CHECK(naive_hamiltonian(n, 8).preserves_weight());
}

TEST_CASE("matrix on weight spaces") {
  const auto deg = matrix_on_weight(Op::degree_operator(2), 2, WeightBasis::monomial);
  CHECK(deg.rows == 2);
  CHECK(deg.is_diagonal());
  CHECK(deg.at(0, 0) == kHbar * 2);
  CHECK(deg.at(1, 1) == kHbar * 2);
  const auto id = matrix_on_weight(Op::identity(), 3, WeightBasis::monomial);
  CHECK(id.rows == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id.at(i, j) == ExactScalar(i == j ? 1 : 0));
  CHECK(matrix_on_weight(quantum_hamiltonian(1, 2), 2, WeightBasis::schur).is_diagonal());
  CHECK_THROWS_AS(matrix_on_weight(Op::q(1), 1, WeightBasis::monomial), std::invalid_argument);
}

TEST_CASE("composition is associative and agrees with repeated application") {
  std::vector<Op> pool;
  for (int n = -1; n <= 2; ++n) pool.push_back(naive_hamiltonian(n, 4));
  for (int n = 0; n <= 2; ++n) pool.push_back(quantum_hamiltonian(n, 4));
  pool.push_back(Op::q(2) + Op::p(1) * ExactScalar::u0());
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 12; ++trial) {
    const Op& a = pool[pick(rng)];
    const Op& b = pool[pick(rng)];
    const Op& c = pool[pick(rng)];
    CHECK(compose(compose(a, b), c).truncated(4) == compose(a, compose(b, c)).truncated(4));
    for (int w = 0; w <= 4; ++w)
      for (const auto& m : monomials_of_weight(w)) {
        const auto f = FockPolynomial::monomial(m);
        CHECK(apply(compose(a, b), f) == apply(a, apply(b, f)));
      }
  }
}
