#include "hopfq/disk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hopfq/hamiltonians.hpp"
#include "hopfq/schur.hpp"

namespace hopfq {

const DiskAmplitude& DiskPotential::at(const Partition& lambda) const {
  for (const auto& a : amplitudes)
    if (a.lambda == lambda) return a;
  throw std::out_of_range("no amplitude for " + lambda.to_string());
}

DiskPotential disk_potential(int W, int K) {
  if (W < 0 || K < 0) throw std::invalid_argument("disk potential needs W >= 0 and K >= 0");
  DiskPotential pot;
  pot.max_weight = W;
  pot.K = K;
  for (const auto& lambda : partitions_up_to(W)) {
    DiskAmplitude a;
    a.lambda = lambda;
    const int n = lambda.size();
    a.prefactor = ExactScalar::monomial(Rational(dim(lambda)) / Rational(factorial(n)), -n, 0);
    for (int k = 0; k <= K; ++k) a.exponents.push_back(eigenvalue_closed_form(k, lambda).shifted(-2));
    pot.amplitudes.push_back(std::move(a));
  }
  return pot;
}

DiskPotential specialize_u0(const DiskPotential& pot, const Rational& u0) {
  DiskPotential out = pot;
  for (auto& a : out.amplitudes) {
    a.prefactor = a.prefactor.substitute_u0(u0);
    for (auto& x : a.exponents) x = x.substitute_u0(u0);
  }
  return out;
}

namespace {

// e^{sum_k t_k x_k} with t_k^j, j <= orders[k]
std::map<TMonomial, ExactScalar> exp_expansion(const std::vector<ExactScalar>& x, const std::vector<int>& orders) {
  std::map<TMonomial, ExactScalar> out{{TMonomial(x.size(), 0), ExactScalar(1)}};
  for (std::size_t k = 0; k < x.size(); ++k) {
    const int order = k < orders.size() ? orders[k] : 0;
    if (order == 0 || x[k].is_zero()) continue;
    std::map<TMonomial, ExactScalar> next;
    for (const auto& [mono, c] : out) {
      ExactScalar power(1);
      for (int j = 0; j <= order; ++j) {
        TMonomial m = mono;
        m[k] = j;
        next[m] += c * power * (Rational(1) / Rational(factorial(j)));
        power *= x[k];
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TExpansion expand_in_t(const DiskPotential& pot, const std::vector<int>& orders) {
  TExpansion out;
  for (const auto& a : pot.amplitudes) {
    const FockPolynomial s = scaled_schur(a.lambda) * a.prefactor;
    for (const auto& [mono, c] : exp_expansion(a.exponents, orders)) {
      if (c.is_zero()) continue;
      auto& slot = out[mono];
      slot += s * c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

int odd_eps_coefficients(const TExpansion& e) {
  int count = 0;
  for (const auto& [mono, poly] : e) {
    for (const auto& [m, c] : poly.terms()) {
      const bool odd = std::any_of(c.terms().begin(), c.terms().end(), [](const auto& t) { return t.eps % 2 != 0; });
      if (odd) ++count;
    }
  }
  return count;
}

bool plane_wave_check(int W) {
  FockPolynomial lhs;
  for (const auto& lambda : partitions_up_to(W)) {
    const int n = lambda.size();
    lhs += scaled_schur(lambda) * ExactScalar::monomial(Rational(dim(lambda)) / Rational(factorial(n)), -n, 0);
  }
  FockPolynomial rhs;
  for (int n = 0; n <= W; ++n)
    rhs.add(MultiIndex::single(1, n), ExactScalar::monomial(Rational(1) / Rational(factorial(n)), -2 * n, 0));
  return lhs == rhs;
}

// ------------------------------------------------------------ printed expansion

namespace {

struct PrintedTerm {
  int weight;
  ExactScalar prefactor;
  std::vector<ExactScalar> exponents;  // t_0..t_3, relative to the global factor
  FockPolynomial poly;
};

ExactScalar eps_c(long num, long den, int eps_power) { return ExactScalar::monomial(rational(num, den), eps_power, 0); }

FockPolynomial p_mono(std::initializer_list<MultiIndex::Entry> e, const ExactScalar& c) {
  return FockPolynomial::monomial(MultiIndex(e), c);
}

// Degree <= 3, u0 = 0, t_0..t_3, as published; prefactors and exponents verbatim.
std::vector<PrintedTerm> printed_terms() {
  std::vector<PrintedTerm> out;
  out.push_back({0, ExactScalar(1), {0, 0, 0, 0}, FockPolynomial(ExactScalar(1))});
  out.push_back({1, eps_c(1, 1, -2), {1, 0, eps_c(1, 24, 2), 0}, p_mono({{1, 1}}, 1)});
  for (int sign : {1, -1}) {
    out.push_back({2,
                   eps_c(1, 2, -4),
                   {2, eps_c(sign, 1, 1), eps_c(7, 12, 2), eps_c(5 * sign, 24, 3)},
                   p_mono({{1, 2}}, 1) + p_mono({{2, 1}}, eps_c(sign, 1, 1))});
  }
  for (int sign : {1, -1}) {
    out.push_back({3,
                   eps_c(1, 36, -6),
                   {3, eps_c(3 * sign, 1, 1), eps_c(21, 8, 2), eps_c(13 * sign, 8, 3)},
                   p_mono({{1, 3}}, 1) + p_mono({{1, 1}, {2, 1}}, eps_c(3 * sign, 1, 1)) + p_mono({{3, 1}}, eps_c(2, 1, 2))});
  }
  out.push_back({3, eps_c(4, 36, -6), {3, 0, eps_c(9, 8, 2), 0}, p_mono({{1, 3}}, 1) + p_mono({{3, 1}}, eps_c(-1, 1, 2))});
  return out;
}

std::string render_exponents(const std::vector<ExactScalar>& x) {
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) s += (k ? ", " : "") + x[k].to_string();
  return s + ")";
}

}  // namespace

DisplayComparison verify_printed_expansion() {
  const DiskPotential pot = specialize_u0(disk_potential(3, 3), 0);
  const auto& vacuum = pot.at(Partition());
  // the global factor e^{-t_0/24 + 7 hbar t_2/5760}
  const std::vector<ExactScalar> global{eps_c(-1, 24, 0), 0, eps_c(7, 5760, 2), 0};
  DisplayComparison cmp;
  if (!(vacuum.exponents == global)) cmp.mismatches.push_back("global factor: computed " + render_exponents(vacuum.exponents));

  using Key = std::pair<int, std::vector<ExactScalar>>;
  auto less = [](const Key& a, const Key& b) {
    if (a.first != b.first) return a.first < b.first;
    for (std::size_t k = 0; k < a.second.size(); ++k) {
      const auto sa = a.second[k].to_string(), sb = b.second[k].to_string();
      if (sa != sb) return sa < sb;
    }
    return false;
  };
  std::map<Key, FockPolynomial, decltype(less)> computed(less), printed(less);
  for (const auto& a : pot.amplitudes) {
    std::vector<ExactScalar> rel;
    for (std::size_t k = 0; k < a.exponents.size(); ++k) rel.push_back(a.exponents[k] - vacuum.exponents[k]);
    computed[{a.lambda.size(), rel}] += scaled_schur(a.lambda) * a.prefactor;
  }
  for (const auto& t : printed_terms()) printed[{t.weight, t.exponents}] += t.poly * t.prefactor;

  auto flag = [&](int w, const std::string& msg) {
    cmp.mismatches.push_back("weight " + std::to_string(w) + ": " + msg);
    if (std::find(cmp.mismatched_weights.begin(), cmp.mismatched_weights.end(), w) == cmp.mismatched_weights.end())
      cmp.mismatched_weights.push_back(w);
  };
  for (const auto& [key, poly] : printed) {
    auto it = computed.find(key);
    if (it == computed.end()) {
      flag(key.first, "exponent " + render_exponents(key.second) + " not produced");
    } else if (!(it->second == poly)) {
      flag(key.first, "exponent " + render_exponents(key.second) + ": published " + poly.to_string("p") +
                          " vs computed " + it->second.to_string("p"));
    }
  }
  for (const auto& [key, poly] : computed)
    if (!printed.count(key)) flag(key.first, "computed exponent " + render_exponents(key.second) + " missing from display");
  return cmp;
}

std::vector<int> printed_expansion_t0_mismatches() {
  std::map<int, FockPolynomial> by_weight;
  for (const auto& t : printed_terms()) by_weight[t.weight] += t.poly * t.prefactor;
  std::vector<int> bad;
  for (const auto& [w, poly] : by_weight) {
    const auto expected =
        FockPolynomial::monomial(MultiIndex::single(1, w), ExactScalar::monomial(Rational(1) / Rational(factorial(w)), -2 * w, 0));
    if (!(poly == (w == 0 ? FockPolynomial(ExactScalar(1)) : expected))) bad.push_back(w);
  }
  return bad;
}

bool schroedinger_check(int k, int W) {
  const NormalOrderedOperator h = quantum_hamiltonian(k, W).transposed();
  const DiskPotential pot = disk_potential(W, std::max(k, 0));
  for (const auto& a : pot.amplitudes) {
    const ExactScalar e = eigenvalue_closed_form(k, a.lambda);
    if (k >= 0 && !(a.exponents[static_cast<std::size_t>(k)].shifted(2) == e)) return false;
    const FockPolynomial s = scaled_schur(a.lambda);
    if (!(apply(h.truncated(a.lambda.size()), s) == s * e)) return false;
  }
  return true;
}

ExactScalar fock_pairing(const FockPolynomial& bra, const FockPolynomial& ket) {
  ExactScalar out;
  for (const auto& [mu, c] : bra.terms())
    out += apply(NormalOrderedOperator::term(MultiIndex(), mu, c), ket).constant_term();
  return out;
}

P1Slices p1_partition_function(int D, int K) {
  P1Slices out;
  for (int d = 0; d <= D; ++d) {
    for (const auto& lambda : partitions_of(d)) {
      P1Term t;
      t.lambda = lambda;
      const Rational r = Rational(dim(lambda)) / Rational(factorial(d));
      t.prefactor = ExactScalar::monomial(r * r, -2 * d, 0);
      for (int k = 0; k <= K; ++k) t.exponents.push_back(eigenvalue_closed_form(k, lambda).shifted(-2));
      out[d].push_back(std::move(t));
    }
  }
  return out;
}

P1Slices p1_partition_function_by_pairing(int D, int K) {
  const DiskPotential pot = disk_potential(D, K);
  P1Slices out;
  for (const auto& a : pot.amplitudes) {
    const int d = a.lambda.size();
    // z^d coefficient of e^{z q_1 / hbar} is q_1^d / (hbar^d d!)
    const FockPolynomial ket = FockPolynomial::monomial(
        MultiIndex::single(1, d), ExactScalar::monomial(Rational(1) / Rational(factorial(d)), -2 * d, 0));
    P1Term t;
    t.lambda = a.lambda;
    t.prefactor = a.prefactor * fock_pairing(scaled_schur(a.lambda), d == 0 ? FockPolynomial(ExactScalar(1)) : ket);
    t.exponents = a.exponents;
    out[d].push_back(std::move(t));
  }
  return out;
}

std::map<std::pair<int, int>, FockPolynomial> hurwitz_series(int W, int M) {
  const DiskPotential pot = specialize_u0(disk_potential(W, 1), 0);
  std::map<std::pair<int, int>, FockPolynomial> out;
  for (const auto& a : pot.amplitudes) {
    const Rational pref = a.prefactor.evaluate(1, 0);
    const Rational x = a.exponents[1].evaluate(1, 0);
    const FockPolynomial& s = schur(a.lambda);
    Rational power = 1;
    for (int m = 0; m <= M; ++m) {
      out[{a.lambda.size(), m}] += s * ExactScalar(pref * power);
      power *= x;
    }
  }
  return out;
}

Rational hurwitz_oracle(int n, int m, const Partition& mu) {
  if (n > 6 || m > 7) throw std::out_of_range("hurwitz oracle is limited to n <= 6, m <= 7");
  if (mu.size() != n) throw std::invalid_argument("mu must be a partition of n");
  using Perm = std::vector<int>;
  Perm id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, Integer> counts{{id, 1}};
  for (int step = 0; step < m; ++step) {
    std::map<Perm, Integer> next;
    for (const auto& [perm, c] : counts) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          Perm p = perm;  // perm followed by the transposition (i j)
          std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
          next[p] += c;
        }
      }
    }
    counts = std::move(next);
  }
  Integer total = 0;
  for (const auto& [perm, c] : counts) {
    std::vector<int> cycles;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      int len = 0;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    if (Partition(cycles) == mu) total += c;
  }
  return Rational(total) / Rational(factorial(n));
}

}  // namespace hopfq
