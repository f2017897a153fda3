#include "hopfq/hamiltonians.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "hopfq/parallel.hpp"
#include "hopfq/schur.hpp"
#include "hopfq/series.hpp"

namespace hopfq {

namespace {

Rational multi_factorial(const MultiIndex& m) {
  Integer f = 1;
  for (const auto& [k, mult] : m.entries()) f *= factorial(mult);
  return Rational(f);
}

// prod_k s(k t)^{m_k} / s(t), truncated at t^order
UnivariateSeries r_series(const MultiIndex& m, int order) {
  UnivariateSeries r = inv_s_series(order);
  const UnivariateSeries s = s_series(order);
  for (const auto& [k, mult] : m.entries()) r *= s.rescaled(Rational(k)).pow(mult);
  return r;
}

}  // namespace

std::vector<NormalOrderedOperator> hamiltonian_generating_coefficients(int K, int max_weight) {
  if (K < -1) throw std::invalid_argument("K must be >= -1");
  if (max_weight < 0) throw std::invalid_argument("weight bound must be >= 0");
  std::vector<NormalOrderedOperator> out(static_cast<std::size_t>(K + 2));
  std::map<MultiIndex, UnivariateSeries> r_cache;
  for (const auto& [alpha, beta] : balanced_pairs(max_weight, K + 2)) {
    const int length = alpha.degree() + beta.degree();
    const int top = K + 2 - length;  // largest N = n + 2 - L needed
    if (top < 0) continue;
    const MultiIndex m = alpha + beta;
    auto it = r_cache.find(m);
    if (it == r_cache.end() || it->second.order() < top) {
      it = r_cache.insert_or_assign(m, r_series(m, K + 2)).first;
    }
    const UnivariateSeries& r = it->second;
    const Rational norm = 1 / (multi_factorial(alpha) * multi_factorial(beta));
    for (int n = -1; n <= K; ++n) {
      const int N = n + 2 - length;
      if (N < 0) continue;
      ExactScalar c;
      for (int j = 0; j <= N; ++j) {
        if (r[j] == 0) continue;
        const int i = N - j;
        c += ExactScalar::monomial(r[j] * norm / Rational(factorial(i)), j, i);
      }
      out[static_cast<std::size_t>(n + 1)].add(alpha, beta, c);
    }
  }
  return out;
}

NormalOrderedOperator quantum_hamiltonian(int n, int max_weight) {
  return hamiltonian_generating_coefficients(n, max_weight).back();
}

NormalOrderedOperator cut_and_join(int max_weight) {
  NormalOrderedOperator out;
  const ExactScalar half(Rational(1, 2));
  for (int i = 1; i < max_weight; ++i) {
    for (int j = 1; i + j <= max_weight; ++j) {
      const MultiIndex qq = MultiIndex::single(i) + MultiIndex::single(j);
      const MultiIndex joined = MultiIndex::single(i + j);
      // hbar (i+j) q_i q_j d/dq_{i+j} = q_i q_j p_{i+j}
      out.add(qq, joined, half);
      // hbar^2 i j q_{i+j} d^2/dq_i dq_j = q_{i+j} p_i p_j
      out.add(joined, qq, half);
    }
  }
  return out;
}

NormalOrderedOperator naive_commutator_h1_h2(int max_weight) {
  NormalOrderedOperator out;
  for (int i = 1; i < max_weight; ++i) {
    for (int j = 1; i + j <= max_weight; ++j) {
      const ExactScalar c = ExactScalar::monomial(rational(i * j * (i + j), 8), 4, 0);
      const MultiIndex qq = MultiIndex::single(i) + MultiIndex::single(j);
      const MultiIndex joined = MultiIndex::single(i + j);
      out.add(joined, qq, c);
      out.add(qq, joined, -c);
    }
  }
  return out;
}

EigenvalueSeries eigenvalue_series(const Partition& lambda, int K) {
  const int order = K + 2;
  using Series = TruncatedSeries<ExactScalar>;
  // 1/s(eps z)
  Series bracket = lift(inv_s_series(order)).rescaled(ExactScalar::eps());
  Series sum(order);
  for (int i = 1; i <= lambda.length(); ++i) {
    const Rational a = Rational(lambda[i] - i) + Rational(1, 2);
    const Rational b = Rational(-i) + Rational(1, 2);
    sum += lift(exp_linear(a, order)).rescaled(ExactScalar::eps());
    sum -= lift(exp_linear(b, order)).rescaled(ExactScalar::eps());
  }
  bracket += sum.shifted(1).scaled(ExactScalar::eps());
  Series e_u0(order);
  for (int i = 0; i <= order; ++i) e_u0[i] = ExactScalar::monomial(Rational(1) / Rational(factorial(i)), 0, i);
  const Series total = e_u0 * bracket;
  EigenvalueSeries out;
  out.head = total[0];
  for (int n = -1; n <= K; ++n) out.coefficients.push_back(total[n + 2]);
  return out;
}

ExactScalar vacuum_constant(int k) {
  const int top = k + 2;
  ExactScalar sum;
  for (int j = 0; j <= top; ++j) {
    const Rational two_pow = j == 0 ? Rational(2) : Rational(1) / pow(Rational(2), j - 1);
    const Rational c = Rational(binomial(top, j)) * (1 - two_pow) * bernoulli(j);
    if (c == 0) continue;
    sum += ExactScalar::monomial(c, j, top - j);
  }
  return sum * (Rational(-1) / Rational(factorial(top)));
}

namespace {

// ([u0 + eps x]^{p} - [u0 + eps y]^{p}) summed over pairs, times eps / p!
ExactScalar shifted_power_sum(const std::vector<std::pair<Rational, Rational>>& pairs, int power) {
  ExactScalar sum;
  for (const auto& [x, y] : pairs) {
    const ExactScalar ex = ExactScalar::u0() + ExactScalar::monomial(x, 1, 0);
    const ExactScalar ey = ExactScalar::u0() + ExactScalar::monomial(y, 1, 0);
    sum += ex.pow(power) - ey.pow(power);
  }
  return sum.shifted(1) * (Rational(1) / Rational(factorial(power)));
}

}  // namespace

ExactScalar eigenvalue_closed_form(int k, const Partition& lambda) {
  std::vector<std::pair<Rational, Rational>> pairs;
  for (int i = 1; i <= lambda.length(); ++i) {
    pairs.emplace_back(Rational(lambda[i] - i) + Rational(1, 2), Rational(-i) + Rational(1, 2));
  }
  return vacuum_constant(k) + shifted_power_sum(pairs, k + 1);
}

ExactScalar eigenvalue_frobenius_form(int k, const Partition& lambda) {
  const auto fr = frobenius(lambda);
  std::vector<std::pair<Rational, Rational>> pairs;
  for (int i = 0; i < fr.d(); ++i) {
    pairs.emplace_back(Rational(fr.alpha[static_cast<std::size_t>(i)]) + Rational(1, 2),
                       -(Rational(fr.beta[static_cast<std::size_t>(i)]) + Rational(1, 2)));
  }
  return vacuum_constant(k) + shifted_power_sum(pairs, k + 1);
}

CommutativityReport verify_commutativity(const std::vector<NormalOrderedOperator>& family, int W, int jobs) {
  const int count = static_cast<int>(family.size());
  struct Task {
    int a, b, w;
  };
  // matrices per (operator, weight)
  std::vector<std::vector<ExactMatrix>> mats(family.size(), std::vector<ExactMatrix>(static_cast<std::size_t>(W + 1)));
  parallel_for(family.size() * static_cast<std::size_t>(W + 1), jobs, [&](std::size_t idx) {
    const std::size_t op = idx / static_cast<std::size_t>(W + 1);
    const int w = static_cast<int>(idx % static_cast<std::size_t>(W + 1));
    mats[op][static_cast<std::size_t>(w)] = matrix_on_weight(family[op].truncated(w), w, WeightBasis::monomial);
  });
  std::vector<Task> tasks;
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      for (int w = 0; w <= W; ++w) tasks.push_back({a, b, w});
  std::vector<std::optional<CommutatorFailure>> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t t) {
    const auto [a, b, w] = tasks[t];
    const auto& ma = mats[static_cast<std::size_t>(a)][static_cast<std::size_t>(w)];
    const auto& mb = mats[static_cast<std::size_t>(b)][static_cast<std::size_t>(w)];
    const ExactMatrix diff = ma * mb - mb * ma;
    for (int col = 0; col < diff.cols; ++col) {
      for (int row = 0; row < diff.rows; ++row) {
        if (diff.at(row, col).is_zero()) continue;
        const auto monos = monomials_of_weight(w);
        results[t] = CommutatorFailure{a - 1, b - 1, w, monos[static_cast<std::size_t>(col)].to_string("q")};
        return;
      }
    }
  });
  CommutativityReport report;
  report.weight_bound = W;
  report.pairs_checked = count * (count - 1) / 2;
  for (auto& r : results)
    if (r) report.failures.push_back(*r);
  return report;
}

CommutativityReport verify_commutativity(int N, int W, int jobs) {
  return verify_commutativity(hamiltonian_generating_coefficients(N, W), W, jobs);
}

EigenReport verify_eigenvectors(int K, int W, int jobs) {
  return verify_eigenvectors(hamiltonian_generating_coefficients(K, W), W, jobs);
}

EigenReport verify_eigenvectors(const std::vector<NormalOrderedOperator>& hs, int W, int jobs) {
  const int K = static_cast<int>(hs.size()) - 2;
  std::vector<Partition> lambdas;
  for (int n = 0; n <= W; ++n)
    for (auto& p : partitions_of(n)) lambdas.push_back(p);
  struct Task {
    int k;
    std::size_t lambda;
  };
  std::vector<Task> tasks;
  for (int k = -1; k <= K; ++k)
    for (std::size_t l = 0; l < lambdas.size(); ++l) tasks.push_back({k, l});
  std::vector<char> bad(tasks.size(), 0);
  parallel_for(tasks.size(), jobs, [&](std::size_t t) {
    const auto& lambda = lambdas[tasks[t].lambda];
    const int k = tasks[t].k;
    const FockPolynomial s = scaled_schur(lambda);
    const FockPolynomial lhs = apply(hs[static_cast<std::size_t>(k + 1)].truncated(lambda.size()), s);
    const FockPolynomial rhs = s * eigenvalue_closed_form(k, lambda);
    bad[t] = lhs == rhs ? 0 : 1;
  });
  EigenReport report;
  report.weight_bound = W;
  report.checks = static_cast<int>(tasks.size());
  for (std::size_t t = 0; t < tasks.size(); ++t)
    if (bad[t]) report.failures.push_back({tasks[t].k, lambdas[tasks[t].lambda]});
  return report;
}

}  // namespace hopfq

namespace hopfq {

std::vector<int> semiclassical_mismatches(int N, int W) {
  const auto hs = hamiltonian_generating_coefficients(N, W);
  std::vector<int> bad;
  for (int n = -1; n <= N; ++n) {
    const auto& h = hs[static_cast<std::size_t>(n + 1)];
    const auto naive = naive_hamiltonian(n, W);
    bool ok = true;
    for (const auto& [key, c] : h.terms()) {
      if (c.min_eps_power() < 0 || !(c.eps_slice(0) == naive.coefficient(key.first, key.second))) ok = false;
    }
    for (const auto& [key, c] : naive.terms()) {
      if (!(h.coefficient(key.first, key.second).eps_slice(0) == c)) ok = false;
    }
    if (!ok) bad.push_back(n);
  }
  return bad;
}

bool is_transpose_symmetric(const NormalOrderedOperator& op) { return op.transposed() == op; }

NormalOrderedOperator quadratic_density(int a, int b, int max_weight) {
  // modes (ik)^a q_k e^{ikx} and (-ik)^a p_k e^{-ikx}; the integral pairs k with -k:
  // i^{a+b} k^{a+b} ((-1)^a + (-1)^b) q_k p_k after normal ordering
  NormalOrderedOperator out;
  if (a == 0 && b == 0) out.add(MultiIndex(), MultiIndex(), ExactScalar::u0(2));
  if ((a + b) % 2 != 0) return out;
  const int sign = ((a + b) / 2) % 2 == 0 ? 1 : -1;
  const int parity = (a % 2 == 0 ? 1 : -1) + (b % 2 == 0 ? 1 : -1);
  for (int k = 1; k <= max_weight; ++k) {
    out.add(MultiIndex::single(k), MultiIndex::single(k), ExactScalar(pow(Rational(k), a + b) * (sign * parity)));
  }
  return out;
}

NormalOrderedOperator h2_from_density(int max_weight, int sign_uu2, int sign_u2) {
  NormalOrderedOperator out = naive_hamiltonian(2, max_weight);
  NormalOrderedOperator corr = quadratic_density(0, 2, max_weight) * ExactScalar(sign_uu2);
  corr += quadratic_density(0, 0, max_weight) * ExactScalar(rational(sign_u2, 2));
  out += corr * ExactScalar::monomial(rational(1, 24), 2, 0);
  out.add(MultiIndex(), MultiIndex(), ExactScalar::monomial(rational(7, 5760), 4, 0));
  return out;
}

}  // namespace hopfq
