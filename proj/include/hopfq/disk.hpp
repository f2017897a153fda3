#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfq/fock.hpp"
#include "hopfq/partition.hpp"

namespace hopfq {

// One partition's term: prefactor * e^{sum_k t_k exponents[k]} * s_lambda(p / eps).
struct DiskAmplitude {
  Partition lambda;
  ExactScalar prefactor;               // eps^{-|lambda|} dim(lambda) / |lambda|!
  std::vector<ExactScalar> exponents;  // E_k(lambda) / hbar, k = 0..K
};

struct DiskPotential {
  int max_weight = 0;
  int K = 0;
  std::vector<DiskAmplitude> amplitudes;  // by size, then reverse-lex
  const DiskAmplitude& at(const Partition& lambda) const;
};

DiskPotential disk_potential(int W, int K);

/// u0 -> value in every prefactor and exponent.
DiskPotential specialize_u0(const DiskPotential& pot, const Rational& u0);

// Powers of t_0..t_K.
using TMonomial = std::vector<int>;
// t-monomial -> polynomial in p (stored with FockPolynomial, rendered with var "p").
using TExpansion = std::map<TMonomial, FockPolynomial>;

/// Taylor-expands the exponentials, keeping t_k^j for j <= orders[k].
TExpansion expand_in_t(const DiskPotential& pot, const std::vector<int>& orders);

/// Number of (t-monomial, p-monomial) coefficients containing an odd power of eps.
int odd_eps_coefficients(const TExpansion& e);

/// sum_lambda prefactor * s_lambda(p/eps) == e^{p_1/hbar} up to weight W.
bool plane_wave_check(int W);

struct DisplayComparison {
  std::vector<std::string> mismatches;
  std::vector<int> mismatched_weights;
  bool ok() const { return mismatches.empty(); }
};

/// Compares the amplitude table (u0 = 0, |lambda| <= 3, t_0..t_3) with the
/// reference transcription of the degree <= 3 expansion listed in the README.
DisplayComparison verify_printed_expansion();

/// The transcription evaluated at t = 0 against e^{p_1/hbar}; lists the weights that disagree.
std::vector<int> printed_expansion_t0_mismatches();

/// (a) hbar * exponents[k] == E_k(lambda); (b) transposed H_k on s_lambda(p/eps)
/// gives E_k(lambda) s_lambda(p/eps), for |lambda| <= W.
bool schroedinger_check(int k, int W);

/// bra(p -> hbar n d/dq_n) ket, evaluated at q = 0.
ExactScalar fock_pairing(const FockPolynomial& bra, const FockPolynomial& ket);

struct P1Term {
  Partition lambda;
  ExactScalar prefactor;               // coefficient of z^d
  std::vector<ExactScalar> exponents;  // E_k(lambda) / hbar
  friend bool operator==(const P1Term&, const P1Term&) = default;
};
using P1Slices = std::map<int, std::vector<P1Term>>;

/// Closed formula: hbar^{-d} (dim / d!)^2 e^{(1/hbar) sum t_k E_k}.
P1Slices p1_partition_function(int D, int K);
/// Disk potential paired against e^{z q_1 / hbar}.
P1Slices p1_partition_function_by_pairing(int D, int K);

/// (n, m) -> coefficient of beta^m / m! at u0 = 0, t_1 = beta, other t = 0, hbar = 1,
/// as a polynomial in p.
std::map<std::pair<int, int>, FockPolynomial> hurwitz_series(int W, int M);

/// #{m-tuples of transpositions in S_n with product of cycle type mu} / n!.
/// Throws std::out_of_range for n > 6 or m > 7.
Rational hurwitz_oracle(int n, int m, const Partition& mu);

}  // namespace hopfq
