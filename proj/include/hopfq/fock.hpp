#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfq/exact_scalar.hpp"
#include "hopfq/multi_index.hpp"

namespace hopfq {

// Polynomial in q_1, q_2, ... (deg q_k = k) with exact coefficients.
// The same type also holds polynomials in the dual variables p_k.
class FockPolynomial {
 public:
  using Terms = std::map<MultiIndex, ExactScalar>;

  FockPolynomial() = default;
  FockPolynomial(const ExactScalar& c);  // NOLINT(google-explicit-constructor)
  static FockPolynomial monomial(const MultiIndex& m, const ExactScalar& c = ExactScalar(1));
  static FockPolynomial variable(int k) { return monomial(MultiIndex::single(k)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  ExactScalar coefficient(const MultiIndex& m) const;
  /// Coefficient of the constant monomial.
  ExactScalar constant_term() const { return coefficient(MultiIndex()); }

  void add(const MultiIndex& m, const ExactScalar& c);
  FockPolynomial& operator+=(const FockPolynomial& o);
  FockPolynomial& operator-=(const FockPolynomial& o);
  FockPolynomial& operator*=(const ExactScalar& c);
  friend FockPolynomial operator+(FockPolynomial a, const FockPolynomial& b) { return a += b; }
  friend FockPolynomial operator-(FockPolynomial a, const FockPolynomial& b) { return a -= b; }
  friend FockPolynomial operator*(const FockPolynomial& a, const FockPolynomial& b);
  friend FockPolynomial operator*(FockPolynomial a, const ExactScalar& c) { return a *= c; }
  friend FockPolynomial operator*(const ExactScalar& c, FockPolynomial a) { return a *= c; }
  FockPolynomial operator-() const { return *this * ExactScalar(-1); }
  friend bool operator==(const FockPolynomial&, const FockPolynomial&);

  /// Applies fn to each (monomial, coefficient) and rebuilds, dropping zeros.
  FockPolynomial map_coefficients(const std::function<ExactScalar(const MultiIndex&, const ExactScalar&)>& fn) const;
  /// Drops monomials of weight above max_weight.
  FockPolynomial truncated(int max_weight) const;
  /// True iff every monomial has weight w.
  bool is_homogeneous(int w) const;

  /// "c * q1^2*q2 + ..." in canonical monomial order.
  std::string to_string(const char* var = "q") const;

 private:
  Terms terms_;
};

// Sum of terms c * q^alpha p^beta, all q's to the left, p_k acting as
// hbar * k * d/dq_k on FockPolynomial.
class NormalOrderedOperator {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;  // (alpha, beta)
  using Terms = std::map<Key, ExactScalar>;

  NormalOrderedOperator() = default;
  static NormalOrderedOperator identity(const ExactScalar& c = ExactScalar(1));
  static NormalOrderedOperator q(int k);
  static NormalOrderedOperator p(int k);
  static NormalOrderedOperator term(const MultiIndex& alpha, const MultiIndex& beta, const ExactScalar& c);
  /// Degree operator sum_n q_n p_n restricted to n <= max_index.
  static NormalOrderedOperator degree_operator(int max_index);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  ExactScalar coefficient(const MultiIndex& alpha, const MultiIndex& beta) const;

  void add(const MultiIndex& alpha, const MultiIndex& beta, const ExactScalar& c);
  NormalOrderedOperator& operator+=(const NormalOrderedOperator& o);
  NormalOrderedOperator& operator-=(const NormalOrderedOperator& o);
  NormalOrderedOperator& operator*=(const ExactScalar& c);
  friend NormalOrderedOperator operator+(NormalOrderedOperator a, const NormalOrderedOperator& b) { return a += b; }
  friend NormalOrderedOperator operator-(NormalOrderedOperator a, const NormalOrderedOperator& b) { return a -= b; }
  friend NormalOrderedOperator operator*(NormalOrderedOperator a, const ExactScalar& c) { return a *= c; }
  friend bool operator==(const NormalOrderedOperator&, const NormalOrderedOperator&);

  NormalOrderedOperator map_coefficients(const std::function<ExactScalar(const Key&, const ExactScalar&)>& fn) const;
  /// Keeps terms with weight(alpha) <= max_weight.
  NormalOrderedOperator truncated(int max_weight) const;
  /// (alpha, beta) -> (beta, alpha): the operator acting from the right, on p.
  NormalOrderedOperator transposed() const;
  bool preserves_weight() const;

  /// One line per term: "c * q1*q2 p3" with "Id" for the identity.
  std::string to_string() const;

 private:
  Terms terms_;
};

FockPolynomial apply(const NormalOrderedOperator& op, const FockPolynomial& f);
NormalOrderedOperator compose(const NormalOrderedOperator& a, const NormalOrderedOperator& b);
NormalOrderedOperator commutator(const NormalOrderedOperator& a, const NormalOrderedOperator& b);

/// Pairs (alpha, beta) with weight(alpha) == weight(beta) <= max_weight and
/// |alpha| + |beta| <= max_degree, in canonical order.
std::vector<NormalOrderedOperator::Key> balanced_pairs(int max_weight, int max_degree);

/// Normally ordered (1/2pi) int u^{n+2}/(n+2)! dx, terms with weight <= max_weight.
NormalOrderedOperator naive_hamiltonian(int n, int max_weight);

struct ExactMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<ExactScalar> data;  // row-major

  ExactMatrix() = default;
  ExactMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r * c)) {}
  ExactScalar& at(int i, int j) { return data[static_cast<std::size_t>(i * cols + j)]; }
  const ExactScalar& at(int i, int j) const { return data[static_cast<std::size_t>(i * cols + j)]; }
  bool is_diagonal() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  bool is_zero() const;
};

enum class WeightBasis { monomial, schur };

/// Matrix of op on V_n (columns are images of basis vectors). The monomial
/// basis is q_mu over partitions_of(n); the Schur basis is s_lambda(q/eps).
/// Throws std::invalid_argument unless op preserves weight.
ExactMatrix matrix_on_weight(const NormalOrderedOperator& op, int n, WeightBasis basis);

}  // namespace hopfq
