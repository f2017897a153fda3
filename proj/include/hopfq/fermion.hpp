#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfq/exponential_sum.hpp"
#include "hopfq/fock.hpp"
#include "hopfq/partition.hpp"

namespace hopfq {

// A half-integer k stored as 2k.
struct HalfInteger {
  int twice = 1;
  static HalfInteger from_twice(int twice);
  /// Parses "1/2", "-3/2", ...
  static HalfInteger parse(const std::string& text);
  std::string to_string() const;
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

// Semi-infinite wedge e_{s_1} ^ e_{s_2} ^ ... with s_i = lambda_i - i + 1/2 + charge.
// Charge 0 is the physical sector; psi / psi* pass through charge +-1.
struct WedgeState {
  int charge = 0;
  Partition lambda;

  /// Occupied indices as 2s, strictly decreasing, down to (at least) twice_floor.
  std::vector<int> occupied(int twice_floor) const;
  bool is_occupied(HalfInteger k) const;
  std::string to_string() const;
  friend auto operator<=>(const WedgeState&, const WedgeState&) = default;
};

// Finite combination of wedge states; coefficients may carry boson variables q_k.
class FermionVector {
 public:
  using Terms = std::map<WedgeState, FockPolynomial>;

  FermionVector() = default;
  static FermionVector basis(const WedgeState& s, const FockPolynomial& c = FockPolynomial(ExactScalar(1)));
  static FermionVector vacuum() { return basis(WedgeState{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FockPolynomial coefficient(const WedgeState& s) const;
  void add(const WedgeState& s, const FockPolynomial& c);

  FermionVector& operator+=(const FermionVector& o);
  FermionVector& operator-=(const FermionVector& o);
  friend FermionVector operator+(FermionVector a, const FermionVector& b) { return a += b; }
  friend FermionVector operator-(FermionVector a, const FermionVector& b) { return a -= b; }
  friend FermionVector operator*(const FockPolynomial& c, const FermionVector& v);
  friend bool operator==(const FermionVector&, const FermionVector&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// psi_k = e_k ^ (creation).
FermionVector psi(HalfInteger k, const FermionVector& v);
/// psi*_k = d/de_k (annihilation).
FermionVector psi_star(HalfInteger k, const FermionVector& v);

/// psi_{alpha_1+1/2} ... psi_{alpha_d+1/2} psi*_{-beta_d-1/2} ... psi*_{-beta_1-1/2} |0>.
FermionVector state_of_partition(const Partition& lambda);

/// K(q) = sum_n (q_n / n) sum_j psi_j psi*_{j+n}.
FermionVector apply_k(const FermionVector& v);
/// e^{sign K(q)} v; finite since K lowers |lambda|.
FermionVector exp_k(const FermionVector& v, int sign = 1);

/// <0| e^{K(q)} v; v must be charge zero.
FockPolynomial boson_fermion_map(const FermionVector& v);

/// O(z) = sum_k e^{kz} :psi_k psi*_k: on |lambda>, applied summand by summand.
/// Throws std::logic_error if |lambda> is not an eigenvector of some summand.
ExponentialSum diagonal_operator_eigenvalue(const Partition& lambda);

/// e^K psi_i e^{-K} == sum_m h_m(q) psi_{i-m} (and the psi* analogue with h_m(-q))
/// on every charge-zero state of energy <= max_energy.
bool dressed_fermion_check(HalfInteger i, int max_energy, bool starred = false);

struct AnticommutatorReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// {psi_i, psi*_j} = delta_ij, {psi_i, psi_j} = {psi*_i, psi*_j} = 0 on charge-zero
/// states of energy <= max_energy, for |i|, |j| <= max_index (a half-integer bound).
AnticommutatorReport verify_anticommutators(int max_energy, HalfInteger max_index);

/// Sign s with boson_fermion_map(state_of_partition(lambda)) == s * schur(lambda);
/// 0 if it is not a multiple.
int boson_fermion_sign(const Partition& lambda);

/// For |lambda| <= max_size: H(z, u0, hbar = 1) s_lambda(q) against
/// e^{z u0}(z O-eigenvalue + 1/s(z)) s_lambda(q), coefficients z^{n+2}, n = -1..K.
/// Returns the partitions that fail.
std::vector<Partition> fermionic_hamiltonian_mismatches(int max_size, int K);

}  // namespace hopfq
