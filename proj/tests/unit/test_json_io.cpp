#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hopfq/hamiltonians.hpp"
#include "hopfq/json_io.hpp"

using namespace hopfq;

TEST_CASE("scalar json") {
  const ExactScalar x = ExactScalar::monomial(rational(1, 2), 0, 2) - ExactScalar::monomial(rational(1, 24), 2, 0);
  CHECK(to_json(x).dump() == R"([[0,2,1,2],[2,0,-1,24]])");
  CHECK(exact_scalar_from_json(to_json(x)) == x);
  const ExactScalar big(Rational(factorial(30)));
  CHECK(to_json(big).dump() == R"([[0,0,"265252859812191058636308480000000",1]])");
  CHECK(exact_scalar_from_json(to_json(big)) == big);
}

TEST_CASE("operator json roundtrip") {
  const auto h = quantum_hamiltonian(2, 5);
  CHECK(operator_from_json(to_json(h)) == h);
  const auto j = to_json(NormalOrderedOperator::q(2));
  CHECK(j.dump() == R"([{"alpha":[[2,1]],"beta":[],"coeff":[[0,0,1,1]]}])");
}

TEST_CASE("operator cache") {
  const auto dir = std::filesystem::temp_directory_path() / "hopfq-cache-test";
  std::filesystem::remove_all(dir);
  OperatorCache cache(dir);
  CHECK_FALSE(cache.load(1, 4));
  const auto h = quantum_hamiltonian(1, 4);
  cache.store(1, 4, h);
  REQUIRE(cache.load(1, 4));
  CHECK(*cache.load(1, 4) == h);
  CHECK_FALSE(cache.load(1, 5));
  CHECK(cache.path_for(-1, 3).filename() == "Hm1_W3.json");

  ::setenv("HOPFQ_CACHE_DIR", "/tmp/elsewhere", 1);
  CHECK(OperatorCache::resolve_dir("fallback") == std::filesystem::path("/tmp/elsewhere"));
  ::unsetenv("HOPFQ_CACHE_DIR");
  CHECK(OperatorCache::resolve_dir("fallback") == std::filesystem::path("fallback"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("edited cache files are rejected") {
  const auto dir = std::filesystem::temp_directory_path() / "hopfq-cache-digest";
  std::filesystem::remove_all(dir);
  OperatorCache cache(dir);
  cache.store(2, 4, quantum_hamiltonian(2, 4));
  Json j;
  {
    std::ifstream in(cache.path_for(2, 4));
    j = Json::parse(in);
  }
  j["operator"][3]["coeff"] = Json::parse("[[0,0,99,1]]");
  {
    std::ofstream out(cache.path_for(2, 4));
    out << j.dump();
  }
  CHECK_FALSE(cache.load(2, 4));
  std::filesystem::remove_all(dir);
}
