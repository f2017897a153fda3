#include "hopfq/fermion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hopfq/hamiltonians.hpp"
#include "hopfq/schur.hpp"

namespace hopfq {

// ---------------------------------------------------------------- HalfInteger

HalfInteger HalfInteger::from_twice(int twice) {
  if (twice % 2 == 0) throw std::invalid_argument("not a half-integer: " + std::to_string(twice) + "/2");
  return HalfInteger{twice};
}

HalfInteger HalfInteger::parse(const std::string& text) {
  const Rational r = parse_rational(text);
  const Rational twice = r * 2;
  if (twice.get_den() != 1) throw std::invalid_argument("not a half-integer: " + text);
  return from_twice(static_cast<int>(twice.get_num().get_si()));
}

std::string HalfInteger::to_string() const { return std::to_string(twice) + "/2"; }

// ---------------------------------------------------------------- WedgeState

namespace {

int tail_top(const WedgeState& s) { return 2 * (s.charge - s.lambda.length()) - 1; }

// Inverse of WedgeState::occupied: every index below twice_floor is occupied.
WedgeState from_occupied(const std::vector<int>& occ, int twice_floor) {
  const int n = static_cast<int>(occ.size());
  WedgeState s;
  s.charge = (twice_floor - 1) / 2 + n;
  // twice_floor is odd; (twice_floor - 1) / 2 must round toward -inf
  if ((twice_floor - 1) % 2 != 0) throw std::logic_error("floor must be odd");
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) {
    const int part = (occ[static_cast<std::size_t>(i - 1)] - 1) / 2 + i - s.charge;
    if (part < 0) throw std::logic_error("wedge state is not a partition");
    if (part > 0) parts.push_back(part);
  }
  s.lambda = Partition(parts);
  return s;
}

int sign_above(const std::vector<int>& occ, int twice_k) {
  const auto above = std::count_if(occ.begin(), occ.end(), [&](int t) { return t > twice_k; });
  return above % 2 == 0 ? 1 : -1;
}


}  // namespace

std::vector<int> WedgeState::occupied(int twice_floor) const {
  std::vector<int> out;
  for (int i = 1;; ++i) {
    const int t = 2 * (lambda[i] - i + charge) + 1;
    if (t < twice_floor) break;
    out.push_back(t);
  }
  return out;
}

bool WedgeState::is_occupied(HalfInteger k) const {
  const auto occ = occupied(k.twice);
  return !occ.empty() && occ.back() == k.twice;
}

std::string WedgeState::to_string() const {
  if (charge == 0) return lambda.to_string();
  return "(" + std::to_string(charge) + ")" + lambda.to_string();
}

// ---------------------------------------------------------------- FermionVector

FermionVector FermionVector::basis(const WedgeState& s, const FockPolynomial& c) {
  FermionVector v;
  v.add(s, c);
  return v;
}

FockPolynomial FermionVector::coefficient(const WedgeState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? FockPolynomial() : it->second;
}

void FermionVector::add(const WedgeState& s, const FockPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FermionVector& FermionVector::operator+=(const FermionVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FermionVector& FermionVector::operator-=(const FermionVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FermionVector operator*(const FockPolynomial& c, const FermionVector& v) {
  FermionVector out;
  for (const auto& [s, x] : v.terms_) out.add(s, c * x);
  return out;
}

std::string FermionVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ") |" << s.to_string() << '>';
  }
  return os.str();
}

// ---------------------------------------------------------------- psi, psi*

namespace {

template <class Fn>
FermionVector on_basis(const FermionVector& v, Fn fn) {
  FermionVector out;
  for (const auto& [s, c] : v.terms()) {
    auto [sign, state] = fn(s);
    if (sign != 0) out.add(*state, c * ExactScalar(sign));
  }
  return out;
}

}  // namespace

FermionVector psi(HalfInteger k, const FermionVector& v) {
  return on_basis(v, [&](const WedgeState& s) -> std::pair<int, std::optional<WedgeState>> {
    const int floor = std::min(k.twice, tail_top(s)) - 2;
    auto occ = s.occupied(floor);
    if (std::find(occ.begin(), occ.end(), k.twice) != occ.end()) return {0, std::nullopt};
    const int sign = sign_above(occ, k.twice);
    occ.insert(std::upper_bound(occ.begin(), occ.end(), k.twice, std::greater<>()), k.twice);
    return {sign, from_occupied(occ, floor)};
  });
}

FermionVector psi_star(HalfInteger k, const FermionVector& v) {
  return on_basis(v, [&](const WedgeState& s) -> std::pair<int, std::optional<WedgeState>> {
    const int floor = std::min(k.twice, tail_top(s)) - 2;
    auto occ = s.occupied(floor);
    auto it = std::find(occ.begin(), occ.end(), k.twice);
    if (it == occ.end()) return {0, std::nullopt};
    const int sign = sign_above(occ, k.twice);
    occ.erase(it);
    return {sign, from_occupied(occ, floor)};
  });
}

FermionVector state_of_partition(const Partition& lambda) {
  const auto fr = frobenius(lambda);
  FermionVector v = FermionVector::vacuum();
  for (int i = 0; i < fr.d(); ++i) v = psi_star(HalfInteger::from_twice(-2 * fr.beta[static_cast<std::size_t>(i)] - 1), v);
  for (int i = fr.d() - 1; i >= 0; --i) v = psi(HalfInteger::from_twice(2 * fr.alpha[static_cast<std::size_t>(i)] + 1), v);
  return v;
}

FermionVector apply_k(const FermionVector& v) {
  FermionVector out;
  for (const auto& [s, c] : v.terms()) {
    const FermionVector basis = FermionVector::basis(s);
    const auto occ = s.occupied(tail_top(s));
    for (int n = 1; n <= s.lambda.size(); ++n) {
      const FockPolynomial qn = FockPolynomial::monomial(MultiIndex::single(n), ExactScalar(rational(1, n)));
      for (int t : occ) {
        const FermionVector moved = psi(HalfInteger::from_twice(t - 2 * n), psi_star(HalfInteger::from_twice(t), basis));
        if (!moved.is_zero()) out += (qn * c) * moved;
      }
    }
  }
  return out;
}

FermionVector exp_k(const FermionVector& v, int sign) {
  FermionVector result = v, current = v;
  for (int m = 1; !current.is_zero(); ++m) {
    current = FockPolynomial(ExactScalar(rational(sign, m))) * apply_k(current);
    result += current;
  }
  return result;
}

FockPolynomial boson_fermion_map(const FermionVector& v) {
  for (const auto& [s, c] : v.terms())
    if (s.charge != 0) throw std::invalid_argument("boson-fermion map needs charge zero, got " + s.to_string());
  return exp_k(v).coefficient(WedgeState{});
}

ExponentialSum diagonal_operator_eigenvalue(const Partition& lambda) {
  const FermionVector v = state_of_partition(lambda);
  const WedgeState s{0, lambda};
  const Rational a = *v.coefficient(s).constant_term().as_rational();
  ExponentialSum out;
  const int top = 2 * (lambda[1] - 1) + 1;
  for (int t = tail_top(s); t <= top; t += 2) {
    const HalfInteger k = HalfInteger::from_twice(t);
    const FermionVector w = t > 0 ? psi(k, psi_star(k, v)) : FockPolynomial(ExactScalar(-1)) * psi_star(k, psi(k, v));
    if (w.is_zero()) continue;
    if (w.terms().size() != 1 || w.terms().begin()->first != s) throw std::logic_error("state is not an eigenvector");
    const auto b = w.coefficient(s).constant_term().as_rational();
    if (!b) throw std::logic_error("non-scalar eigenvalue");
    const Rational ratio = *b / a;
    if (ratio.get_den() != 1) throw std::logic_error("non-integer eigenvalue");
    out.add(t, static_cast<int>(ratio.get_num().get_si()));
  }
  return out;
}

bool dressed_fermion_check(HalfInteger i, int max_energy, bool starred) {
  for (int n = 0; n <= max_energy; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const WedgeState s{0, lambda};
      const FermionVector v = FermionVector::basis(s);
      const FermionVector inner = exp_k(v, -1);
      const FermionVector lhs = exp_k(starred ? psi_star(i, inner) : psi(i, inner));
      FermionVector rhs;
      if (!starred) {
        for (int m = 0; i.twice - 2 * m >= tail_top(s); ++m) {
          const FermionVector shifted = psi(HalfInteger::from_twice(i.twice - 2 * m), v);
          if (!shifted.is_zero()) rhs += complete_homogeneous(m, m) * shifted;
        }
      } else {
        const int top = 2 * (lambda[1] - 1) + 1;
        for (int m = 0; i.twice + 2 * m <= top; ++m) {
          const FermionVector shifted = psi_star(HalfInteger::from_twice(i.twice + 2 * m), v);
          if (!shifted.is_zero()) rhs += negate_variables(complete_homogeneous(m, m)) * shifted;
        }
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

AnticommutatorReport verify_anticommutators(int max_energy, HalfInteger max_index) {
  AnticommutatorReport report;
  std::vector<HalfInteger> indices;
  for (int t = -max_index.twice; t <= max_index.twice; t += 2) indices.push_back(HalfInteger::from_twice(t));
  for (int n = 0; n <= max_energy; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const FermionVector v = FermionVector::basis(WedgeState{0, lambda});
      for (const auto i : indices) {
        for (const auto j : indices) {
          const FermionVector mixed = psi(i, psi_star(j, v)) + psi_star(j, psi(i, v));
          const FermionVector expected = i == j ? v : FermionVector();
          const FermionVector creation = psi(i, psi(j, v)) + psi(j, psi(i, v));
          const FermionVector annihilation = psi_star(i, psi_star(j, v)) + psi_star(j, psi_star(i, v));
          report.checks += 3;
          const std::string where = " i=" + i.to_string() + " j=" + j.to_string() + " on " + lambda.to_string();
          if (!(mixed == expected)) report.failures.push_back("{psi, psi*}" + where);
          if (!creation.is_zero()) report.failures.push_back("{psi, psi}" + where);
          if (!annihilation.is_zero()) report.failures.push_back("{psi*, psi*}" + where);
        }
      }
    }
  }
  return report;
}

int boson_fermion_sign(const Partition& lambda) {
  const FockPolynomial f = boson_fermion_map(state_of_partition(lambda));
  const FockPolynomial& s = schur(lambda);
  if (f == s) return 1;
  if (f == -s) return -1;
  return 0;
}

std::vector<Partition> fermionic_hamiltonian_mismatches(int max_size, int K) {
  const auto hs = hamiltonian_generating_coefficients(K, max_size);
  const int order = K + 2;
  using Series = TruncatedSeries<ExactScalar>;
  Series e_u0(order);
  for (int i = 0; i <= order; ++i) e_u0[i] = ExactScalar::monomial(Rational(1) / Rational(factorial(i)), 0, i);
  std::vector<Partition> bad;
  for (int n = 0; n <= max_size; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const UnivariateSeries bracket = diagonal_operator_eigenvalue(lambda).expand(order).shifted(1) + inv_s_series(order);
      const Series eigen = e_u0 * lift(bracket);
      const FockPolynomial& s = schur(lambda);
      bool ok = eigen[0] == ExactScalar(1);
      for (int k = -1; k <= K && ok; ++k) {
        const FockPolynomial lhs = apply(hs[static_cast<std::size_t>(k + 1)].truncated(n), s)
                                       .map_coefficients([](const MultiIndex&, const ExactScalar& c) {
                                         return c.substitute_eps(Rational(1));
                                       });
        ok = lhs == s * eigen[k + 2];
      }
      if (!ok) bad.push_back(lambda);
    }
  }
  return bad;
}

}  // namespace hopfq
