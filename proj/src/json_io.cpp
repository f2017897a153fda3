#include "hopfq/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace hopfq {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

// FNV-1a over the compact operator dump; catches edited or truncated cache files.
std::string digest(const Json& op) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : op.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

Json to_json(const ExactScalar& s) {
  Json out = Json::array();
  for (const auto& t : s.terms())
    out.push_back(Json::array({t.eps, t.u0, integer_json(t.coeff.get_num()), integer_json(t.coeff.get_den())}));
  return out;
}

ExactScalar exact_scalar_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("ExactScalar JSON must be an array");
  ExactScalar s;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4) throw std::invalid_argument("ExactScalar term must be [b, a, num, den]");
    const Rational c = rational(integer_from_json(t[2]), integer_from_json(t[3]));
    s += ExactScalar::monomial(c, t[0].get<int>(), t[1].get<int>());
  }
  return s;
}

Json to_json(const MultiIndex& m) {
  Json out = Json::array();
  for (const auto& [k, mult] : m.entries()) out.push_back(Json::array({k, mult}));
  return out;
}

MultiIndex multi_index_from_json(const Json& j) {
  std::vector<MultiIndex::Entry> entries;
  for (const auto& e : j) entries.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return MultiIndex(std::move(entries));
}

Json to_json(const NormalOrderedOperator& op) {
  Json out = Json::array();
  for (const auto& [key, c] : op.terms())
    out.push_back(Json{{"alpha", to_json(key.first)}, {"beta", to_json(key.second)}, {"coeff", to_json(c)}});
  return out;
}

NormalOrderedOperator operator_from_json(const Json& j) {
  NormalOrderedOperator op;
  for (const auto& t : j)
    op.add(multi_index_from_json(t.at("alpha")), multi_index_from_json(t.at("beta")),
           exact_scalar_from_json(t.at("coeff")));
  return op;
}

Json to_json(const CommutativityReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"n", f.n}, {"m", f.m}, {"weight", f.weight}, {"monomial", f.monomial}});
  return Json{{"pairs_checked", r.pairs_checked}, {"weight_bound", r.weight_bound}, {"failures", failures}};
}

Json to_json(const EigenReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"k", f.k}, {"lambda", f.lambda.to_string()}});
  return Json{{"checks", r.checks}, {"weight_bound", r.weight_bound}, {"failures", failures}};
}

Json to_json(const KPCheck& c) {
  return Json{{"equation", c.equation},
              {"specialization", c.specialization},
              {"weight_validated", c.weight_validated},
              {"residual_zero", c.residual_zero},
              {"max_residual_term", c.max_residual_term ? Json(*c.max_residual_term) : Json(nullptr)}};
}

std::filesystem::path OperatorCache::resolve_dir(const std::string& fallback) {
  if (const char* env = std::getenv("HOPFQ_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return fallback;
}

std::filesystem::path OperatorCache::path_for(int n, int W) const {
  return dir_ / ("H" + (n < 0 ? "m" + std::to_string(-n) : std::to_string(n)) + "_W" + std::to_string(W) + ".json");
}

std::optional<NormalOrderedOperator> OperatorCache::load(int n, int W) const {
  std::ifstream in(path_for(n, W));
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    const auto& h = j.at("header");
    if (h.at("code_version") != kCodeVersion || h.at("n") != n || h.at("W") != W) return std::nullopt;
    if (h.at("digest") != digest(j.at("operator"))) return std::nullopt;
    return operator_from_json(j.at("operator"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void OperatorCache::store(int n, int W, const NormalOrderedOperator& op) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(n, W);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    const Json body = to_json(op);
    const Json j{{"header", Json{{"n", n}, {"W", W}, {"code_version", kCodeVersion}, {"digest", digest(body)}}},
                 {"operator", body}};
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace hopfq
