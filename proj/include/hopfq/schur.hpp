#pragma once

#include <map>
#include <vector>

#include "hopfq/fock.hpp"
#include "hopfq/partition.hpp"

namespace hopfq {

/// h_k(q) from sum_k h_k z^k = exp(sum_k q_k z^k / k), in q_1..q_num_vars.
FockPolynomial complete_homogeneous(int k, int num_vars);

/// Jacobi-Trudi determinant det(h_{lambda_i - i + j}). Memoized.
const FockPolynomial& schur(const Partition& lambda);

/// s_lambda(q / eps): the coefficient of q^mu picks up eps^{-|mu|}.
FockPolynomial scaled_schur(const Partition& lambda);

/// q_k -> -q_k for every k.
FockPolynomial negate_variables(const FockPolynomial& f);

/// s_{lambda'}(q) == (-1)^{|lambda|} s_lambda(-q), checked exactly.
bool verify_transpose_sign(const Partition& lambda);

/// Coefficients of q_1^n in the Schur basis of V_n.
std::map<Partition, Integer> power_of_q1_expansion(int n);

/// Coordinates of f in {s_lambda(q/eps) : lambda in partitions_of(n)} (or the
/// unscaled basis when scaled == false). Throws unless f lies in V_n.
std::vector<ExactScalar> schur_coordinates(const FockPolynomial& f, int n, bool scaled = true);

/// Transition matrix: row lambda, column mu, entry = coefficient of q^mu in s_lambda.
std::vector<std::vector<Rational>> schur_transition_matrix(int n);

/// Inverse of a square rational matrix; throws std::domain_error if singular.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m);

}  // namespace hopfq
