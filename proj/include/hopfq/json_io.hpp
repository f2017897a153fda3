#pragma once

#include <filesystem>
#include <optional>

#include "json.hpp"

#include "hopfq/exact_scalar.hpp"
#include "hopfq/fock.hpp"
#include "hopfq/hamiltonians.hpp"
#include "hopfq/kp.hpp"

namespace hopfq {

using Json = nlohmann::ordered_json;

// Bumped whenever operator construction changes; older caches are ignored.
inline constexpr const char* kCodeVersion = "hopfq-1";

/// [[b, a, num, den], ...] for terms c * u0^a * eps^b. Big integers become strings.
Json to_json(const ExactScalar& s);
ExactScalar exact_scalar_from_json(const Json& j);

Json to_json(const MultiIndex& m);
MultiIndex multi_index_from_json(const Json& j);

/// [{alpha, beta, coeff}, ...]
Json to_json(const NormalOrderedOperator& op);
NormalOrderedOperator operator_from_json(const Json& j);

Json to_json(const CommutativityReport& r);
Json to_json(const EigenReport& r);
Json to_json(const KPCheck& c);

// On-disk cache of H_n truncated at weight W: {"header": {n, W, code_version, digest}, "operator": [...]}.
class OperatorCache {
 public:
  explicit OperatorCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// $HOPFQ_CACHE_DIR if set, else `fallback`.
  static std::filesystem::path resolve_dir(const std::string& fallback);

  std::filesystem::path path_for(int n, int W) const;
  /// nullopt when missing, unreadable, or written by another code version.
  std::optional<NormalOrderedOperator> load(int n, int W) const;
  void store(int n, int W, const NormalOrderedOperator& op) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace hopfq
