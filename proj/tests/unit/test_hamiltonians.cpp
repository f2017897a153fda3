#include "doctest.h"
#include "hopfq/exponential_sum.hpp"
#include "hopfq/hamiltonians.hpp"
#include "hopfq/schur.hpp"

using namespace hopfq;

namespace {

using Op = NormalOrderedOperator;
const ExactScalar kEps2 = ExactScalar::eps(2);
const ExactScalar kU0 = ExactScalar::u0();

ExactScalar at_u0_zero(const ExactScalar& x) { return x.substitute_u0(0); }

}  // namespace

TEST_CASE("low hamiltonians carry the vacuum corrections") {
  const int W = 6;
  const auto family = hamiltonian_generating_coefficients(2, W);
  CHECK(family[0] == Op::identity(kU0));
  CHECK(family[1] == naive_hamiltonian(0, W) - Op::identity(kEps2 * rational(1, 24)));
  CHECK(family[2] == naive_hamiltonian(1, W) - Op::identity(kEps2 * kU0 * rational(1, 24)));
  const ExactScalar c2 = family[3].coefficient(MultiIndex(), MultiIndex());
  CHECK(at_u0_zero(c2) == ExactScalar::eps(4) * rational(7, 5760));
  CHECK(c2 == ExactScalar::u0(4) * rational(1, 24) - ExactScalar::u0(2) * kEps2 * rational(1, 48) +
                  ExactScalar::eps(4) * rational(7, 5760));
  for (int n = -1; n <= 2; ++n) CHECK(quantum_hamiltonian(n, W) == family[static_cast<std::size_t>(n + 1)]);
}

TEST_CASE("H_2 against the quadratic density form") {
  const int W = 6;
  const Op h2 = quantum_hamiltonian(2, W);
  CHECK(h2 == h2_from_density(W, -1, -1));
  CHECK_FALSE(h2 == h2_from_density(W, 1, -1));
  for (int k = 1; k <= 4; ++k)
    CHECK(h2.coefficient(MultiIndex::single(k), MultiIndex::single(k)) ==
          ExactScalar::u0(2) * rational(1, 2) + kEps2 * rational(2 * k * k - 1, 24));
}

TEST_CASE("cut and join") {
  const Op cj = cut_and_join(8);
  CHECK(apply(cj, FockPolynomial::variable(2)) == FockPolynomial::monomial(MultiIndex::single(1, 2), kEps2));
  CHECK(apply(cj, FockPolynomial::monomial(MultiIndex::single(1, 2))) ==
        FockPolynomial::variable(2) * ExactScalar::eps(4));
  CHECK(cj == quantum_hamiltonian(1, 8).map_coefficients([](const auto&, const ExactScalar& c) { return at_u0_zero(c); }));
}

TEST_CASE("naive commutator [H_1^0, H_2^0]") {
  for (int W : {6, 8})
    CHECK(commutator(naive_hamiltonian(1, W), naive_hamiltonian(2, W)).truncated(W) == naive_commutator_h1_h2(W));
  CHECK_FALSE(naive_commutator_h1_h2(6).is_zero());
}

TEST_CASE("commutativity") {
  const auto r = verify_commutativity(2, 6, 2);
  CHECK(r.ok());
  CHECK(r.pairs_checked == 6);
  CHECK(verify_commutativity(4, 7, 4).ok());
  std::vector<Op> naive;
  for (int n = -1; n <= 2; ++n) naive.push_back(naive_hamiltonian(n, 6));
  const auto bad = verify_commutativity(naive, 6);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failures.front().n == 1);
  CHECK(bad.failures.front().m == 2);
}

TEST_CASE("eigenvalues") {
  const auto empty = eigenvalue_series(Partition(), 4);
  CHECK(empty.head == ExactScalar(1));
  CHECK(empty.at(-1) == kU0);
  const Partition one{1};
  CHECK(at_u0_zero(eigenvalue_series(one, 2).at(0)) == kEps2 * rational(23, 24));
  CHECK(at_u0_zero(eigenvalue_series(one, 2).at(1)).is_zero());
  CHECK(at_u0_zero(vacuum_constant(0)) == kEps2 * rational(-1, 24));
  CHECK(at_u0_zero(vacuum_constant(2)) == ExactScalar::eps(4) * rational(7, 5760));
  CHECK(at_u0_zero(eigenvalue_closed_form(2, one) - vacuum_constant(2)) == ExactScalar::eps(4) * rational(1, 24));
  CHECK(eigenvalue_closed_form(0, one) == ExactScalar::u0(2) * rational(1, 2) + kEps2 * rational(23, 24));
  for (const auto& l : partitions_up_to(8)) {
    const auto series = eigenvalue_series(l, 8);
    for (int k = -1; k <= 8; ++k) {
      CHECK(series.at(k) == eigenvalue_closed_form(k, l));
      CHECK(eigenvalue_frobenius_form(k, l) == eigenvalue_closed_form(k, l));
    }
  }
  for (const auto& l : partitions_up_to(10)) CHECK(row_form(l) == frobenius_form(l));
  CHECK(row_form(Partition{1}).to_string() == "[[1,1],[-1,-1]]");
}

TEST_CASE("eigenvectors") {
  const Op h0 = quantum_hamiltonian(0, 2);
  const auto s1 = scaled_schur(Partition{1});
  CHECK(apply(h0, s1) == s1 * (ExactScalar::u0(2) * rational(1, 2) + kEps2 - kEps2 * rational(1, 24)));
  for (const auto& l : partitions_up_to(5)) {
    const auto s = scaled_schur(l);
    CHECK(apply(quantum_hamiltonian(-1, 5), s) == s * kU0);
  }
  const auto r = verify_eigenvectors(3, 6, 4);
  CHECK(r.ok());
  CHECK(r.checks > 0);
  const auto family = hamiltonian_generating_coefficients(5, 8);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= 5; ++k)
      CHECK(matrix_on_weight(family[static_cast<std::size_t>(k + 1)].truncated(n), n, WeightBasis::schur).is_diagonal());
}

TEST_CASE("semiclassical limit and transpose symmetry") {
  CHECK(semiclassical_mismatches(4, 6).empty());
  for (int k = -1; k <= 5; ++k) CHECK(is_transpose_symmetric(quantum_hamiltonian(k, 6)));
}
