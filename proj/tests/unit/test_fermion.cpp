#include "doctest.h"
#include "hopfq/exponential_sum.hpp"
#include "hopfq/fermion.hpp"
#include "hopfq/schur.hpp"

using namespace hopfq;

namespace {

HalfInteger h(int twice) { return HalfInteger::from_twice(twice); }

}  // namespace

TEST_CASE("half integers") {
  CHECK(HalfInteger::parse("-3/2") == h(-3));
  CHECK(h(1).to_string() == "1/2");
  CHECK_THROWS(HalfInteger::from_twice(2));
}

TEST_CASE("psi and psi*") {
  const auto vac = FermionVector::vacuum();
  CHECK(psi_star(h(1), vac).is_zero());
  CHECK(psi(h(-1), vac).is_zero());
  // e_{1/2} wedge the vacuum is the charge-one vacuum
  CHECK(psi(h(1), vac) == FermionVector::basis(WedgeState{1, Partition()}));
  CHECK(psi(h(1), psi_star(h(-1), vac)) == FermionVector::basis(WedgeState{0, Partition{1}}));
  const auto anti = verify_anticommutators(5, h(11));
  CHECK(anti.ok());
  CHECK(anti.checks > 0);
}

TEST_CASE("states of partitions") {
  CHECK(state_of_partition(Partition()) == FermionVector::vacuum());
  const auto s1 = state_of_partition(Partition{1});
  REQUIRE(s1.terms().size() == 1);
  CHECK(s1.terms().begin()->first == WedgeState{0, Partition{1}});
  CHECK(s1.terms().begin()->second == FockPolynomial(ExactScalar(1)));
  const auto s21 = state_of_partition(Partition{2, 1});
  REQUIRE(s21.terms().size() == 1);
  CHECK(s21.terms().begin()->first.lambda == Partition{2, 1});
}

TEST_CASE("boson-fermion map") {
  CHECK(boson_fermion_map(FermionVector::vacuum()) == FockPolynomial(ExactScalar(1)));
  CHECK(boson_fermion_map(state_of_partition(Partition{1})) == FockPolynomial::variable(1));
  CHECK_THROWS(boson_fermion_map(FermionVector::basis(WedgeState{1, Partition()})));
  for (const auto& l : partitions_up_to(6)) {
    const auto fr = frobenius(l);
    int sum_beta = 0;
    for (int b : fr.beta) sum_beta += b;
    CHECK(boson_fermion_sign(l) == (sum_beta % 2 ? -1 : 1));
    CHECK(boson_fermion_map(state_of_partition(l)).is_homogeneous(l.size()));
  }
  // sign law written with b(lambda) = sum(beta_i + 1) differs by (-1)^{d(lambda)}
  CHECK(boson_fermion_sign(Partition{1}) != (b_sign_exponent(Partition{1}) % 2 ? -1 : 1));
}

TEST_CASE("diagonal operator O(z)") {
  CHECK(diagonal_operator_eigenvalue(Partition()).is_zero());
  CHECK(diagonal_operator_eigenvalue(Partition{1}).to_string() == "[[1,1],[-1,-1]]");
  for (const auto& l : partitions_up_to(8)) {
    CHECK(diagonal_operator_eigenvalue(l) == frobenius_form(l));
    CHECK(diagonal_operator_eigenvalue(l) == row_form(l));
  }
}

TEST_CASE("dressed fermions") {
  CHECK(dressed_fermion_check(h(-1), 0));
  for (int t = -7; t <= 7; t += 2) {
    CHECK(dressed_fermion_check(h(t), 3));
    CHECK(dressed_fermion_check(h(t), 3, true));
  }
}

TEST_CASE("fermionic hamiltonian") { CHECK(fermionic_hamiltonian_mismatches(6, 3).empty()); }
