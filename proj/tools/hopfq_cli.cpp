// hopfq: operators, verification sweeps and tables for the quantized Hopf hierarchy.
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopfq/disk.hpp"
#include "hopfq/exponential_sum.hpp"
#include "hopfq/fermion.hpp"
#include "hopfq/hamiltonians.hpp"
#include "hopfq/json_io.hpp"
#include "hopfq/kp.hpp"
#include "hopfq/parallel.hpp"
#include "hopfq/render.hpp"
#include "hopfq/schur.hpp"

using namespace hopfq;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int weight = 8;
  int N = 5;
  int K = 3;
  int n = 0;
  int m = 5;
  int degree = 4;
  std::string u0_text;
  std::string eps_text;
  std::string hbar_text;
  std::string format = "text";
  std::string cache_dir = ".hopfq-cache";
  int jobs = 1;
  unsigned seed = 1;
  bool naive = false;
  bool no_cache = false;
  std::string suite = "all";
  std::string table;

  std::optional<Rational> u0() const {
    if (u0_text.empty() || u0_text == "symbolic") return std::nullopt;
    return parse_or_usage(u0_text, "--u0");
  }

  std::optional<Rational> eps() const {
    if (!hbar_text.empty()) {
      const Rational h = parse_or_usage(hbar_text, "--hbar");
      Integer num, den;
      if (h < 0 || !mpz_perfect_square_p(h.get_num_mpz_t()) || !mpz_perfect_square_p(h.get_den_mpz_t()))
        throw UsageError("--hbar must be the square of a rational (eps = hbar^{1/2} is needed exactly)");
      mpz_sqrt(num.get_mpz_t(), h.get_num_mpz_t());
      mpz_sqrt(den.get_mpz_t(), h.get_den_mpz_t());
      return rational(num, den);
    }
    if (eps_text.empty() || eps_text == "symbolic") return std::nullopt;
    const Rational e = parse_or_usage(eps_text, "--eps");
    if (e == 0) throw UsageError("--eps must be nonzero");
    return e;
  }

  static Rational parse_or_usage(const std::string& text, const std::string& flag) {
    try {
      return parse_rational(text);
    } catch (const std::exception&) {
      throw UsageError(flag + " expects a rational such as 1/2, got '" + text + "'");
    }
  }
};

ExactScalar specialize(ExactScalar x, const RunConfig& cfg) {
  if (auto u = cfg.u0()) x = x.substitute_u0(*u);
  if (auto e = cfg.eps()) x = x.substitute_eps(*e);
  return x;
}

NormalOrderedOperator specialize(const NormalOrderedOperator& op, const RunConfig& cfg) {
  return op.map_coefficients([&](const auto&, const ExactScalar& c) { return specialize(c, cfg); });
}

// ---------------------------------------------------------------- operator cache

std::vector<NormalOrderedOperator> load_family(int K, int W, const RunConfig& cfg) {
  if (cfg.no_cache) return hamiltonian_generating_coefficients(K, W);
  OperatorCache cache(OperatorCache::resolve_dir(cfg.cache_dir));
  std::vector<NormalOrderedOperator> family;
  for (int n = -1; n <= K; ++n) {
    auto op = cache.load(n, W);
    if (!op) break;
    family.push_back(std::move(*op));
  }
  if (static_cast<int>(family.size()) == K + 2) {
    // re-verify one sampled member against a fresh build
    std::mt19937 rng(cfg.seed);
    const int n = std::uniform_int_distribution<int>(-1, K)(rng);
    if (family[static_cast<std::size_t>(n + 1)] == quantum_hamiltonian(n, W)) return family;
    std::cerr << "warning: cached H_" << n << " (W=" << W << ") is stale; regenerating\n";
  }
  family = hamiltonian_generating_coefficients(K, W);
  try {
    for (int n = -1; n <= K; ++n) cache.store(n, W, family[static_cast<std::size_t>(n + 1)]);
  } catch (const std::exception& e) {
    std::cerr << "warning: operator cache not written: " << e.what() << '\n';
  }
  return family;
}

// ---------------------------------------------------------------- hamiltonian

int cmd_hamiltonian(const RunConfig& cfg) {
  if (cfg.n < -1) throw UsageError("--n must be >= -1");
  if (cfg.weight < 0) throw UsageError("--weight must be >= 0");
  NormalOrderedOperator op = cfg.naive ? naive_hamiltonian(cfg.n, cfg.weight)
                                       : load_family(cfg.n, cfg.weight, cfg).back();
  op = specialize(op, cfg);
  if (cfg.format == "json") {
    const Json j{{"header", Json{{"n", cfg.n}, {"W", cfg.weight}, {"naive", cfg.naive}, {"code_version", kCodeVersion}}},
                 {"operator", to_json(op)}};
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "latex") {
    std::cout << latex(op) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "alpha,beta,coeff\n";
    for (const auto& [key, c] : op.terms())
      std::cout << csv_field(key.first.to_string("q")) << ',' << csv_field(key.second.to_string("p")) << ','
                << csv_field(c.to_string()) << '\n';
  } else {
    std::cout << op.to_string();
  }
  return kExitPass;
}

// ---------------------------------------------------------------- verify

struct CheckResult {
  std::string name;
  bool pass = false;
  Json detail;
  bool skipped = false;  // refused specialization, reported but not counted
};

std::vector<CheckResult> suite_commute(const RunConfig& cfg) {
  const auto family = load_family(cfg.N, cfg.weight, cfg);
  const auto report = verify_commutativity(family, cfg.weight, cfg.jobs);
  const bool naive_ok = commutator(naive_hamiltonian(1, cfg.weight), naive_hamiltonian(2, cfg.weight))
                            .truncated(cfg.weight) == naive_commutator_h1_h2(cfg.weight);
  return {{"commute/quantum", report.ok(), to_json(report)},
          {"commute/naive-h1-h2", naive_ok, Json{{"weight_bound", cfg.weight}}}};
}

std::vector<CheckResult> suite_eigen(const RunConfig& cfg) {
  const auto family = load_family(cfg.K, cfg.weight, cfg);
  const auto report = verify_eigenvectors(family, cfg.weight, cfg.jobs);
  int mismatches = 0;
  for (const auto& lambda : partitions_up_to(cfg.weight)) {
    const auto series = eigenvalue_series(lambda, cfg.K);
    for (int k = -1; k <= cfg.K; ++k) {
      const auto closed = eigenvalue_closed_form(k, lambda);
      if (!(series.at(k) == closed) || !(eigenvalue_frobenius_form(k, lambda) == closed)) ++mismatches;
    }
    if (!(row_form(lambda) == frobenius_form(lambda))) ++mismatches;
  }
  return {{"eigen/schur-eigenvectors", report.ok(), to_json(report)},
          {"eigen/closed-form-vs-series", mismatches == 0, Json{{"mismatches", mismatches}}}};
}

std::vector<CheckResult> suite_disk(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  const auto cmp = verify_printed_expansion();
  Json mism = Json::array();
  for (const auto& s : cmp.mismatches) mism.push_back(s);
  out.push_back({"disk/published-expansion", cmp.ok(), Json{{"mismatches", mism}}});
  const auto t0 = printed_expansion_t0_mismatches();
  out.push_back({"disk/published-expansion-at-t0", t0.empty(), Json{{"weights_off", t0}}});
  bool schr = true;
  for (int k = 0; k <= cfg.K; ++k) schr = schr && schroedinger_check(k, std::min(cfg.weight, 6));
  out.push_back({"disk/schroedinger", schr, Json{{"K", cfg.K}}});
  out.push_back({"disk/plane-wave", plane_wave_check(cfg.weight), Json{{"weight_bound", cfg.weight}}});
  const int W = std::min(cfg.weight, 6);
  const int odd = odd_eps_coefficients(expand_in_t(disk_potential(W, 3), {2, 2, 2, 2}));
  out.push_back({"disk/integer-hbar", odd == 0, Json{{"weight_bound", W}, {"odd_coefficients", odd}}});
  return out;
}

std::vector<CheckResult> suite_hirota(const RunConfig& cfg) {
  struct Spec {
    std::set<int> active;
    std::optional<Rational> u0, eps;
  };
  std::vector<Spec> specs;
  if (!cfg.u0_text.empty() || !cfg.eps_text.empty() || !cfg.hbar_text.empty()) {
    for (const auto& a : std::vector<std::set<int>>{{}, {0}, {0, 1}}) specs.push_back({a, cfg.u0(), cfg.eps()});
  } else {
    for (const auto& a : std::vector<std::set<int>>{{}, {0}, {0, 1}})
      for (const Rational u : {Rational(0), rational(1, 2)})
        for (const Rational e : {Rational(1), rational(1, 2)}) specs.push_back({a, u, e});
    specs.push_back({{0}, std::nullopt, std::nullopt});
  }
  const int W = cfg.weight;
  const DiskPotential pot = disk_potential(W, 1);
  std::vector<std::vector<CheckResult>> slots(specs.size());
  parallel_for(specs.size(), cfg.jobs, [&](std::size_t i) {
    const auto& s = specs[i];
    TruncatedTau tau;
    try {
      tau = tau_from_disk(pot, s.active, s.u0, s.eps);
    } catch (const std::domain_error& e) {
      std::string label = "active={";
      for (int k : s.active) label += (label.back() == '{' ? "" : ",") + std::to_string(k);
      slots[i].push_back({"hirota/tau " + label + "}", false, Json{{"refused", e.what()}}, true});
      return;
    }
    for (int which : {1, 2}) {
      const auto c = kp_bilinear_check(which, tau);
      slots[i].push_back({"hirota/" + c.equation + " " + c.specialization, c.residual_zero, to_json(c)});
    }
    bool hier_ok = true;
    Json failing = Json::array();
    const auto checks = kp_hierarchy_check(tau, 2);
    for (const auto& c : checks)
      if (!c.residual_zero) {
        hier_ok = false;
        failing.push_back(to_json(c));
      }
    slots[i].push_back({"hirota/generating-y<=2 " + tau.describe(), hier_ok,
                        Json{{"coefficients", checks.size()}, {"failures", failing}}});
    const auto kp = kp_equation_check(tau);
    slots[i].push_back({"hirota/" + kp.equation + " " + kp.specialization, kp.residual_zero, to_json(kp)});
  });
  std::vector<CheckResult> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

std::vector<CheckResult> suite_fermion(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  const int size = std::min(cfg.weight, 6);
  const auto anti = verify_anticommutators(std::min(cfg.weight, 3), HalfInteger::from_twice(7));
  out.push_back({"fermion/anticommutators", anti.ok(), Json{{"checks", anti.checks}, {"failures", anti.failures.size()}}});
  bool dressed = true;
  for (int t = -7; t <= 7; t += 2)
    dressed = dressed && dressed_fermion_check(HalfInteger::from_twice(t), 3) &&
              dressed_fermion_check(HalfInteger::from_twice(t), 3, true);
  out.push_back({"fermion/dressed", dressed, Json{{"max_energy", 3}}});
  int o_bad = 0, sign_law_bad = 0, literal_bad = 0;
  for (const auto& lambda : partitions_up_to(size)) {
    if (!(diagonal_operator_eigenvalue(lambda) == frobenius_form(lambda))) ++o_bad;
    const int s = boson_fermion_sign(lambda);
    const auto fr = frobenius(lambda);
    int sum_beta = 0;
    for (int b : fr.beta) sum_beta += b;
    if (s != (sum_beta % 2 == 0 ? 1 : -1)) ++sign_law_bad;
    if (s != (b_sign_exponent(lambda) % 2 == 0 ? 1 : -1)) ++literal_bad;
  }
  out.push_back({"fermion/O-eigenvalues", o_bad == 0, Json{{"mismatches", o_bad}}});
  out.push_back({"fermion/phi-sign-(-1)^sum(beta)", sign_law_bad == 0, Json{{"mismatches", sign_law_bad}}});
  out.push_back({"fermion/phi-sign-(-1)^b", literal_bad == 0, Json{{"mismatches", literal_bad}}});
  const auto fh = fermionic_hamiltonian_mismatches(size, cfg.K);
  out.push_back({"fermion/hamiltonian", fh.empty(), Json{{"mismatches", fh.size()}}});
  return out;
}

std::vector<CheckResult> suite_hurwitz(const RunConfig& cfg, int n_max, int m_max) {
  if (n_max > 6 || m_max > 7) throw UsageError("hurwitz oracle bounds: --n <= 6, --m <= 7");
  const auto series = hurwitz_series(n_max, m_max);
  int checked = 0, bad = 0;
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= m_max; ++m)
      for (const auto& mu : partitions_of(n)) {
        ++checked;
        if (!(series.at({n, m}).coefficient(MultiIndex::from_partition(mu)) == ExactScalar(hurwitz_oracle(n, m, mu))))
          ++bad;
      }
  (void)cfg;
  return {{"hurwitz/oracle", bad == 0, Json{{"checked", checked}, {"mismatches", bad}}}};
}

std::vector<CheckResult> suite_p1(const RunConfig& cfg) {
  const bool ok = p1_partition_function(cfg.degree, cfg.K) == p1_partition_function_by_pairing(cfg.degree, cfg.K);
  return {{"p1/formula-vs-pairing", ok, Json{{"degree", cfg.degree}, {"K", cfg.K}}}};
}

int cmd_verify(const RunConfig& cfg, bool n_set, bool m_set) {
  static const std::set<std::string> suites{"commute", "eigen", "disk", "hirota", "fermion", "hurwitz", "p1", "all"};
  if (!suites.count(cfg.suite)) throw UsageError("unknown suite '" + cfg.suite + "'");
  if (cfg.weight < 0 || cfg.N < -1 || cfg.K < 0) throw UsageError("bounds must be non-negative");
  std::vector<CheckResult> results;
  auto run = [&](const std::string& name, auto fn) {
    if (cfg.suite == name || cfg.suite == "all")
      for (auto& r : fn()) results.push_back(std::move(r));
  };
  run("commute", [&] { return suite_commute(cfg); });
  run("eigen", [&] { return suite_eigen(cfg); });
  run("disk", [&] { return suite_disk(cfg); });
  run("hirota", [&] { return suite_hirota(cfg); });
  run("fermion", [&] { return suite_fermion(cfg); });
  run("hurwitz", [&] { return suite_hurwitz(cfg, n_set ? cfg.n : 5, m_set ? cfg.m : 6); });
  run("p1", [&] { return suite_p1(cfg); });

  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && (r.pass || r.skipped);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(Json{{"check", r.name}, {"pass", r.pass}, {"skipped", r.skipped}, {"detail", r.detail}});
    std::cout << Json{{"pass", all_pass}, {"results", arr}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) std::cout << (r.skipped ? "SKIP " : r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.detail.dump() << '\n';
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all_pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- tables

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> latex_rows;
};

void emit(const Table& t, const std::string& format) {
  if (format == "csv") {
    for (std::size_t i = 0; i < t.header.size(); ++i) std::cout << (i ? "," : "") << csv_field(t.header[i]);
    std::cout << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
      std::cout << '\n';
    }
  } else if (format == "json") {
    Json arr = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.header[i]] = row[i];
      arr.push_back(obj);
    }
    std::cout << arr.dump(2) << '\n';
  } else if (format == "latex") {
    std::cout << "\\begin{tabular}{" << std::string(t.header.size(), 'l') << "}\n";
    for (std::size_t i = 0; i < t.header.size(); ++i) std::cout << (i ? " & " : "") << t.header[i];
    std::cout << " \\\\\n\\hline\n";
    for (const auto& row : t.latex_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " & " : "") << '$' << row[i] << '$';
      std::cout << " \\\\\n";
    }
    std::cout << "\\end{tabular}\n";
  } else {
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::cout << row[i];
        if (i + 1 < row.size()) std::cout << std::string(width[i] - row[i].size() + 2, ' ');
      }
      std::cout << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
  }
}

void add_row(Table& t, const std::string& label, const ExactScalar& pref, const std::vector<ExactScalar>& xs) {
  std::vector<std::string> row{label, pref.to_string()}, lrow{label, latex(pref)};
  for (const auto& x : xs) {
    row.push_back(x.to_string());
    lrow.push_back(latex(x));
  }
  t.rows.push_back(row);
  t.latex_rows.push_back(lrow);
}

int cmd_tables(const RunConfig& cfg, bool n_set, bool m_set) {
  Table t;
  if (cfg.table == "disk") {
    if (cfg.weight < 0) throw UsageError("--weight must be >= 0");
    t.header = {"lambda", "prefactor"};
    for (int k = 0; k <= cfg.K; ++k) t.header.push_back("E_" + std::to_string(k) + "/hbar");
    for (const auto& a : disk_potential(cfg.weight, cfg.K).amplitudes) {
      std::vector<ExactScalar> xs;
      for (const auto& x : a.exponents) xs.push_back(specialize(x, cfg));
      add_row(t, a.lambda.to_string(), specialize(a.prefactor, cfg), xs);
    }
  } else if (cfg.table == "p1") {
    if (cfg.degree < 0) throw UsageError("--degree must be >= 0");
    t.header = {"lambda", "z^d coefficient"};
    for (int k = 0; k <= cfg.K; ++k) t.header.push_back("(E_" + std::to_string(k) + "-c_" + std::to_string(k) + ")/hbar");
    const auto slices = p1_partition_function(cfg.degree, cfg.K);
    const auto& vac = slices.at(0).front();
    std::vector<ExactScalar> vac_x;
    for (const auto& x : vac.exponents) vac_x.push_back(specialize(x, cfg));
    add_row(t, "vacuum", specialize(vac.prefactor, cfg), vac_x);
    for (const auto& term : slices.at(cfg.degree)) {
      if (cfg.degree == 0) break;
      std::vector<ExactScalar> xs;
      for (std::size_t k = 0; k < term.exponents.size(); ++k)
        xs.push_back(specialize(term.exponents[k] - vac.exponents[k], cfg));
      add_row(t, term.lambda.to_string(), specialize(term.prefactor, cfg), xs);
    }
  } else if (cfg.table == "hurwitz") {
    const int n = n_set ? cfg.n : 3;
    const int m_max = m_set ? cfg.m : 4;
    if (n < 0 || n > 6 || m_max < 0 || m_max > 7) throw UsageError("hurwitz table bounds: 0 <= --n <= 6, 0 <= --m <= 7");
    const auto series = hurwitz_series(n, m_max);
    t.header = {"n", "m", "mu", "series", "oracle", "match"};
    for (int m = 0; m <= m_max; ++m) {
      for (const auto& mu : partitions_of(n)) {
        const auto c = series.at({n, m}).coefficient(MultiIndex::from_partition(mu));
        const Rational o = hurwitz_oracle(n, m, mu);
        const std::vector<std::string> row{std::to_string(n), std::to_string(m), mu.to_string(), c.to_string(),
                                           to_string(o), c == ExactScalar(o) ? "yes" : "no"};
        t.rows.push_back(row);
        t.latex_rows.push_back({row[0], row[1], row[2], latex(c), latex(ExactScalar(o)), row[5]});
      }
    }
  } else {
    throw UsageError("unknown table '" + cfg.table + "' (disk | p1 | hurwitz)");
  }
  emit(t, cfg.format);
  return kExitPass;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "text | json | csv | latex")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  sub->add_option("--u0", cfg.u0_text, "rational value of u0 (default symbolic)");
  auto* eps = sub->add_option("--eps", cfg.eps_text, "rational value of eps = hbar^{1/2} (default symbolic)");
  auto* hbar = sub->add_option("--hbar", cfg.hbar_text, "rational value of hbar; must be a square");
  eps->excludes(hbar);
  sub->add_option("--cache-dir", cfg.cache_dir, "operator cache directory (env HOPFQ_CACHE_DIR overrides)");
  sub->add_flag("--no-cache", cfg.no_cache, "regenerate operators, ignore the cache");
  sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "seed for sampled cache re-verification");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantized Hopf hierarchy: commuting Hamiltonians, disk potential, KP and Hurwitz checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* ham = app.add_subcommand("hamiltonian", "print H_n (or the naive H_n^0 with --naive)");
  ham->add_option("--n", cfg.n, "index n >= -1")->required();
  ham->add_option("--weight", cfg.weight, "keep terms of weight <= W");
  ham->add_flag("--naive", cfg.naive, "normally ordered classical Hamiltonian, no eps corrections");
  add_common(ham, cfg);

  auto* ver = app.add_subcommand("verify", "run verification suites; exit 1 if any check fails");
  ver->add_option("suite", cfg.suite, "commute | eigen | disk | hirota | fermion | hurwitz | p1 | all");
  ver->add_option("--weight", cfg.weight, "weight bound W");
  ver->add_option("--N", cfg.N, "commutativity: -1 <= n < m <= N");
  ver->add_option("--K", cfg.K, "eigenvalues / exponents k <= K");
  auto* vn = ver->add_option("--n", cfg.n, "hurwitz: n <= value");
  auto* vm = ver->add_option("--m", cfg.m, "hurwitz: m <= value");
  ver->add_option("--degree", cfg.degree, "P1: degree bound");
  add_common(ver, cfg);

  auto* tab = app.add_subcommand("tables", "emit tables: disk | p1 | hurwitz");
  tab->add_option("what", cfg.table, "disk | p1 | hurwitz")->required();
  tab->add_option("--weight", cfg.weight, "disk: |lambda| <= W");
  tab->add_option("--K", cfg.K, "exponent columns k <= K");
  tab->add_option("--degree", cfg.degree, "p1: degree d");
  auto* tn = tab->add_option("--n", cfg.n, "hurwitz: n");
  auto* tm = tab->add_option("--m", cfg.m, "hurwitz: m <= value");
  add_common(tab, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*ham) return cmd_hamiltonian(cfg);
    if (*ver) return cmd_verify(cfg, vn->count() > 0, vm->count() > 0);
    if (*tab) return cmd_tables(cfg, tn->count() > 0, tm->count() > 0);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
