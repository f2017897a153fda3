#include "hopfq/schur.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hopfq {

FockPolynomial complete_homogeneous(int k, int num_vars) {
  if (k < 0) return {};
  FockPolynomial h;
  for (const auto& mu : partitions_of(k)) {
    if (!mu.empty() && mu[1] > num_vars) continue;
    h.add(MultiIndex::from_partition(mu), ExactScalar(Rational(1) / Rational(centralizer_order(mu))));
  }
  return h;
}

namespace {

std::mutex& schur_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<Partition, FockPolynomial>& schur_cache() {
  static std::map<Partition, FockPolynomial> cache;
  return cache;
}

FockPolynomial jacobi_trudi(const Partition& lambda) {
  const int l = lambda.length();
  if (l == 0) return FockPolynomial(ExactScalar(1));
  const int n = lambda.size();
  std::vector<FockPolynomial> h(static_cast<std::size_t>(n + l + 1));
  for (int k = 0; k <= n + l; ++k) h[static_cast<std::size_t>(k)] = complete_homogeneous(k, n);
  auto entry = [&](int i, int j) -> const FockPolynomial* {  // 0-based
    const int k = lambda[i + 1] - (i + 1) + (j + 1);
    static const FockPolynomial zero;
    return k < 0 ? &zero : &h[static_cast<std::size_t>(k)];
  };
  // Laplace expansion along rows; the minor of rows i..l-1 is keyed by its column set.
  std::unordered_map<unsigned, FockPolynomial> memo;
  std::function<FockPolynomial(int, unsigned)> minor = [&](int row, unsigned cols) -> FockPolynomial {
    if (row == l) return FockPolynomial(ExactScalar(1));
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    FockPolynomial acc;
    int sign_position = 0;
    for (int j = 0; j < l; ++j) {
      if (!(cols & (1u << j))) continue;
      const FockPolynomial* e = entry(row, j);
      if (!e->is_zero()) {
        FockPolynomial term = *e * minor(row + 1, cols & ~(1u << j));
        if (sign_position % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      ++sign_position;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  if (l > 30) throw std::length_error("partition too long for Jacobi-Trudi expansion");
  return minor(0, (1u << l) - 1);
}

}  // namespace

const FockPolynomial& schur(const Partition& lambda) {
  {
    std::lock_guard<std::mutex> lock(schur_mutex());
    auto& cache = schur_cache();
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  FockPolynomial s = jacobi_trudi(lambda);
  std::lock_guard<std::mutex> lock(schur_mutex());
  return schur_cache().emplace(lambda, std::move(s)).first->second;
}

FockPolynomial scaled_schur(const Partition& lambda) {
  return schur(lambda).map_coefficients(
      [](const MultiIndex& m, const ExactScalar& c) { return c.shifted(-m.degree()); });
}

FockPolynomial negate_variables(const FockPolynomial& f) {
  return f.map_coefficients(
      [](const MultiIndex& m, const ExactScalar& c) { return m.degree() % 2 == 0 ? c : -c; });
}

bool verify_transpose_sign(const Partition& lambda) {
  FockPolynomial rhs = negate_variables(schur(lambda));
  if (lambda.size() % 2 != 0) rhs = -rhs;
  return schur(lambda.transpose()) == rhs;
}

std::vector<std::vector<Rational>> schur_transition_matrix(int n) {
  const auto parts = partitions_of(n);
  const auto monos = monomials_of_weight(n);
  std::vector<std::vector<Rational>> c(parts.size(), std::vector<Rational>(monos.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      auto value = schur(parts[i]).coefficient(monos[j]).as_rational();
      c[i][j] = value ? *value : Rational(0);
    }
  return c;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

// (C^T)^{-1}, so that coordinates x solve C^T x = f.
const std::vector<std::vector<Rational>>& inverse_transpose_transition(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<Rational>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  auto c = schur_transition_matrix(n);
  std::vector<std::vector<Rational>> ct(c.size(), std::vector<Rational>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) ct[i][j] = c[j][i];
  return cache.emplace(n, invert(std::move(ct))).first->second;
}

}  // namespace

std::vector<ExactScalar> schur_coordinates(const FockPolynomial& f, int n, bool scaled) {
  if (!f.is_homogeneous(n)) throw std::invalid_argument("polynomial is not in V_n");
  const auto monos = monomials_of_weight(n);
  const auto& inv = inverse_transpose_transition(n);
  std::vector<ExactScalar> g(monos.size());
  for (std::size_t j = 0; j < monos.size(); ++j) {
    g[j] = f.coefficient(monos[j]);
    if (scaled) g[j] = g[j].shifted(monos[j].degree());
  }
  std::vector<ExactScalar> x(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (inv[i][j] != 0 && !g[j].is_zero()) x[i] += g[j] * inv[i][j];
  return x;
}

std::map<Partition, Integer> power_of_q1_expansion(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const auto coords = schur_coordinates(FockPolynomial::monomial(MultiIndex::single(1, n)).truncated(n), n, false);
  const auto parts = partitions_of(n);
  std::map<Partition, Integer> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto r = coords[i].as_rational();
    if (!r || r->get_den() != 1) throw std::logic_error("non-integer Schur coefficient of q1^n");
    out.emplace(parts[i], r->get_num());
  }
  return out;
}

ExactMatrix matrix_on_weight(const NormalOrderedOperator& op, int n, WeightBasis basis) {
  if (!op.preserves_weight()) throw std::invalid_argument("operator does not preserve weight");
  if (n < 0) throw std::invalid_argument("weight must be >= 0");
  const auto parts = partitions_of(n);
  const int dim_n = static_cast<int>(parts.size());
  ExactMatrix m(dim_n, dim_n);
  for (int j = 0; j < dim_n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (basis == WeightBasis::monomial) {
      const FockPolynomial image = apply(op, FockPolynomial::monomial(MultiIndex::from_partition(parts[uj])));
      for (int i = 0; i < dim_n; ++i)
        m.at(i, j) = image.coefficient(MultiIndex::from_partition(parts[static_cast<std::size_t>(i)]));
    } else {
      const FockPolynomial image = apply(op, scaled_schur(parts[uj]));
      const auto coords = schur_coordinates(image, n, true);
      for (int i = 0; i < dim_n; ++i) m.at(i, j) = coords[static_cast<std::size_t>(i)];
    }
  }
  return m;
}

}  // namespace hopfq
