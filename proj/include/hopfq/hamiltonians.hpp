#pragma once

#include <string>
#include <vector>

#include "hopfq/fock.hpp"
#include "hopfq/partition.hpp"

namespace hopfq {

/// Quantum Hamiltonians H_n for n = -1..K (entry n + 1), each holding the
/// terms of weight <= max_weight. Built from the coefficient formula
///   e^{z u0}/s(eps z) * prod_k [z s(eps z k)]^{alpha_k + beta_k} / (alpha_k! beta_k!)
/// summed over weight-balanced (alpha, beta).
std::vector<NormalOrderedOperator> hamiltonian_generating_coefficients(int K, int max_weight);

/// Single H_n; same construction.
NormalOrderedOperator quantum_hamiltonian(int n, int max_weight);

/// 1/2 sum_{i,j} (hbar (i+j) q_i q_j d/dq_{i+j} + hbar^2 i j q_{i+j} d^2/dq_i dq_j).
NormalOrderedOperator cut_and_join(int max_weight);

/// (hbar^2/8) sum_{i,j} ij(i+j) (q_{i+j} p_i p_j - q_i q_j p_{i+j}), weight <= max_weight.
NormalOrderedOperator naive_commutator_h1_h2(int max_weight);

// E(z) = 1 + sum_{n >= -1} E_n z^{n+2}
struct EigenvalueSeries {
  ExactScalar head;                    // z^0 coefficient, always 1
  std::vector<ExactScalar> coefficients;  // E_n at index n + 1, n = -1..K
  const ExactScalar& at(int n) const { return coefficients.at(static_cast<std::size_t>(n + 1)); }
};

/// z-expansion of e^{z u0}[1/s(eps z) + eps z sum_i (e^{z eps (lambda_i - i + 1/2)} - e^{z eps (1/2 - i)})].
EigenvalueSeries eigenvalue_series(const Partition& lambda, int K);

/// c_k(u0, hbar), the vacuum eigenvalue.
ExactScalar vacuum_constant(int k);

/// E_k(lambda) from the Bernoulli closed form (row form).
ExactScalar eigenvalue_closed_form(int k, const Partition& lambda);

/// E_k(lambda) from the Frobenius-coordinate form.
ExactScalar eigenvalue_frobenius_form(int k, const Partition& lambda);

struct CommutatorFailure {
  int n = 0;
  int m = 0;
  int weight = 0;
  std::string monomial;  // first monomial on which [H_n, H_m] is nonzero
};

struct CommutativityReport {
  int pairs_checked = 0;
  int weight_bound = 0;
  std::vector<CommutatorFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// [H_n, H_m] on every monomial of weight <= W, for -1 <= n < m <= N.
CommutativityReport verify_commutativity(int N, int W, int jobs = 1);

/// Same check for an arbitrary operator family (index i reported as i - 1).
CommutativityReport verify_commutativity(const std::vector<NormalOrderedOperator>& family, int W, int jobs = 1);

struct EigenFailure {
  int k = 0;
  Partition lambda;
};

struct EigenReport {
  int checks = 0;
  int weight_bound = 0;
  std::vector<EigenFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// H_k s_lambda(q/eps) == E_k(lambda) s_lambda(q/eps) for -1 <= k <= K, |lambda| <= W.
EigenReport verify_eigenvectors(int K, int W, int jobs = 1);

/// Same check with a precomputed family (index i is H_{i-1}).
EigenReport verify_eigenvectors(const std::vector<NormalOrderedOperator>& family, int W, int jobs = 1);

}  // namespace hopfq

namespace hopfq {

/// For every (alpha, beta) term of H_n (n <= N, weight <= W), the eps^0 part at
/// symbolic u0 equals the coefficient of the naive H_n^0. Returns the failing n's.
std::vector<int> semiclassical_mismatches(int N, int W);

/// coeff(alpha, beta) == coeff(beta, alpha) for every term.
bool is_transpose_symmetric(const NormalOrderedOperator& op);

/// Normal-ordered (1/2pi) int (u^(a) u^(b)) dx, u = u0 + sum_k (q_k e^{ikx} + p_k e^{-ikx}).
NormalOrderedOperator quadratic_density(int a, int b, int max_weight);

/// H_2^0 + (hbar/24) :int (sign_uu2 u u'' + sign_u2 u^2/2) dx/2pi: + 7 hbar^2/5760.
/// The generating function gives sign_uu2 = sign_u2 = -1.
NormalOrderedOperator h2_from_density(int max_weight, int sign_uu2, int sign_u2);

}  // namespace hopfq
