#include "hopfq/fock.hpp"

#include <sstream>
#include <stdexcept>

#include "hopfq/partition.hpp"

namespace hopfq {

namespace {

// Calls fn(kappa) for every kappa with kappa <= bound componentwise.
void for_each_sub_index(const MultiIndex& bound, const std::function<void(const MultiIndex&)>& fn) {
  const auto& entries = bound.entries();
  std::vector<MultiIndex::Entry> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == entries.size()) {
      fn(MultiIndex(current));
      return;
    }
    for (int m = 0; m <= entries[i].second; ++m) {
      if (m > 0) current.emplace_back(entries[i].first, m);
      rec(i + 1);
      if (m > 0) current.pop_back();
    }
  };
  rec(0);
}

MultiIndex componentwise_min(const MultiIndex& a, const MultiIndex& b) {
  std::vector<MultiIndex::Entry> out;
  for (const auto& [k, m] : a.entries()) {
    const int n = b.get(k);
    if (n > 0) out.emplace_back(k, std::min(m, n));
  }
  return MultiIndex(std::move(out));
}

Integer falling(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- FockPolynomial

FockPolynomial::FockPolynomial(const ExactScalar& c) {
  if (!c.is_zero()) terms_.emplace(MultiIndex(), c);
}

FockPolynomial FockPolynomial::monomial(const MultiIndex& m, const ExactScalar& c) {
  FockPolynomial f;
  f.add(m, c);
  return f;
}

ExactScalar FockPolynomial::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactScalar() : it->second;
}

void FockPolynomial::add(const MultiIndex& m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockPolynomial& FockPolynomial::operator+=(const FockPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FockPolynomial& FockPolynomial::operator-=(const FockPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

FockPolynomial& FockPolynomial::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

FockPolynomial operator*(const FockPolynomial& a, const FockPolynomial& b) {
  FockPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(ma + mb, ca * cb);
  return out;
}

bool operator==(const FockPolynomial& a, const FockPolynomial& b) { return a.terms_ == b.terms_; }

FockPolynomial FockPolynomial::map_coefficients(
    const std::function<ExactScalar(const MultiIndex&, const ExactScalar&)>& fn) const {
  FockPolynomial out;
  for (const auto& [m, c] : terms_) out.add(m, fn(m, c));
  return out;
}

FockPolynomial FockPolynomial::truncated(int max_weight) const {
  FockPolynomial out;
  for (const auto& [m, c] : terms_)
    if (m.weight() <= max_weight) out.terms_.emplace(m, c);
  return out;
}

bool FockPolynomial::is_homogeneous(int w) const {
  for (const auto& [m, c] : terms_)
    if (m.weight() != w) return false;
  return true;
}

std::string FockPolynomial::to_string(const char* var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    if (!m.empty()) os << " * " << m.to_string(var);
  }
  return os.str();
}

// ---------------------------------------------------------- NormalOrderedOperator

NormalOrderedOperator NormalOrderedOperator::identity(const ExactScalar& c) {
  return term(MultiIndex(), MultiIndex(), c);
}

NormalOrderedOperator NormalOrderedOperator::q(int k) { return term(MultiIndex::single(k), MultiIndex(), 1); }

NormalOrderedOperator NormalOrderedOperator::p(int k) { return term(MultiIndex(), MultiIndex::single(k), 1); }

NormalOrderedOperator NormalOrderedOperator::term(const MultiIndex& alpha, const MultiIndex& beta,
                                                  const ExactScalar& c) {
  NormalOrderedOperator op;
  op.add(alpha, beta, c);
  return op;
}

NormalOrderedOperator NormalOrderedOperator::degree_operator(int max_index) {
  NormalOrderedOperator op;
  for (int k = 1; k <= max_index; ++k) op.add(MultiIndex::single(k), MultiIndex::single(k), 1);
  return op;
}

ExactScalar NormalOrderedOperator::coefficient(const MultiIndex& alpha, const MultiIndex& beta) const {
  auto it = terms_.find({alpha, beta});
  return it == terms_.end() ? ExactScalar() : it->second;
}

void NormalOrderedOperator::add(const MultiIndex& alpha, const MultiIndex& beta, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{alpha, beta}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalOrderedOperator& NormalOrderedOperator::operator+=(const NormalOrderedOperator& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

NormalOrderedOperator& NormalOrderedOperator::operator-=(const NormalOrderedOperator& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

NormalOrderedOperator& NormalOrderedOperator::operator*=(const ExactScalar& c) {
  *this = map_coefficients([&](const Key&, const ExactScalar& x) { return x * c; });
  return *this;
}

bool operator==(const NormalOrderedOperator& a, const NormalOrderedOperator& b) { return a.terms_ == b.terms_; }

NormalOrderedOperator NormalOrderedOperator::map_coefficients(
    const std::function<ExactScalar(const Key&, const ExactScalar&)>& fn) const {
  NormalOrderedOperator out;
  for (const auto& [k, c] : terms_) out.add(k.first, k.second, fn(k, c));
  return out;
}

NormalOrderedOperator NormalOrderedOperator::truncated(int max_weight) const {
  NormalOrderedOperator out;
  for (const auto& [k, c] : terms_)
    if (k.first.weight() <= max_weight) out.terms_.emplace(k, c);
  return out;
}

NormalOrderedOperator NormalOrderedOperator::transposed() const {
  NormalOrderedOperator out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.second, k.first}, c);
  return out;
}

bool NormalOrderedOperator::preserves_weight() const {
  for (const auto& [k, c] : terms_)
    if (k.first.weight() != k.second.weight()) return false;
  return true;
}

std::string NormalOrderedOperator::to_string() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [k, c] : terms_) {
    const bool is_identity = k.first.empty() && k.second.empty();
    const std::string coeff = c.size() > 1 ? "(" + c.to_string() + ")" : c.to_string();
    if (is_identity) {
      os << coeff << " * Id\n";
      continue;
    }
    os << coeff;
    if (!k.first.empty()) os << " * " << k.first.to_string("q");
    if (!k.second.empty()) os << " * " << k.second.to_string("p");
    os << '\n';
  }
  return os.str();
}

// ------------------------------------------------------------------ operations

FockPolynomial apply(const NormalOrderedOperator& op, const FockPolynomial& f) {
  FockPolynomial out;
  for (const auto& [gamma, fc] : f.terms()) {
    for (const auto& [key, oc] : op.terms()) {
      const auto& [alpha, beta] = key;
      if (!beta.divides(gamma)) continue;
      // p^beta q^gamma = prod_k (hbar k)^{beta_k} gamma_k!/(gamma_k - beta_k)! q^{gamma - beta}
      Integer factor = 1;
      for (const auto& [k, b] : beta.entries()) {
        Integer kb;
        mpz_ui_pow_ui(kb.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(b));
        factor *= kb * falling(gamma.get(k), b);
      }
      out.add(gamma.minus(beta) + alpha, (oc * fc).shifted(2 * beta.degree()) * Rational(factor));
    }
  }
  return out;
}

NormalOrderedOperator compose(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
  NormalOrderedOperator out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const auto& [alpha1, beta1] = ka;
      const auto& [alpha2, beta2] = kb;
      const ExactScalar c = ca * cb;
      // Wick: p^beta1 q^alpha2 = sum_kappa prod_k C(b,kap) C(a,kap) kap! (hbar k)^kap q^{a-kap} p^{b-kap}
      for_each_sub_index(componentwise_min(beta1, alpha2), [&](const MultiIndex& kappa) {
        Integer factor = 1;
        for (const auto& [k, m] : kappa.entries()) {
          Integer km;
          mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
          factor *= binomial(beta1.get(k), m) * binomial(alpha2.get(k), m) * factorial(m) * km;
        }
        out.add(alpha1 + alpha2.minus(kappa), beta1.minus(kappa) + beta2,
                c.shifted(2 * kappa.degree()) * Rational(factor));
      });
    }
  }
  return out;
}

NormalOrderedOperator commutator(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
  return compose(a, b) - compose(b, a);
}

std::vector<NormalOrderedOperator::Key> balanced_pairs(int max_weight, int max_degree) {
  std::vector<NormalOrderedOperator::Key> out;
  for (int w = 0; w <= max_weight; ++w) {
    const auto monomials = monomials_of_weight(w);
    for (const auto& alpha : monomials) {
      if (alpha.degree() > max_degree) continue;
      for (const auto& beta : monomials)
        if (alpha.degree() + beta.degree() <= max_degree) out.emplace_back(alpha, beta);
    }
  }
  return out;
}

NormalOrderedOperator naive_hamiltonian(int n, int max_weight) {
  if (n < -1) throw std::invalid_argument("Hamiltonians are indexed from -1");
  if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
  NormalOrderedOperator op;
  for (const auto& [alpha, beta] : balanced_pairs(max_weight, n + 2)) {
    const int m = n + 2 - alpha.degree() - beta.degree();
    Integer denom = factorial(m);
    for (const auto& [k, a] : alpha.entries()) denom *= factorial(a);
    for (const auto& [k, b] : beta.entries()) denom *= factorial(b);
    op.add(alpha, beta, ExactScalar::monomial(Rational(1) / Rational(denom), 0, m));
  }
  return op;
}

// ---------------------------------------------------------------- ExactMatrix

bool ExactMatrix::is_diagonal() const {
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not match");
  ExactMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const ExactScalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) {
        const ExactScalar& y = b.at(k, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shapes do not match");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

}  // namespace hopfq
