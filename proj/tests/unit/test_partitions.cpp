#include "doctest.h"
#include "hopfq/partition.hpp"

using namespace hopfq;

TEST_CASE("transpose") {
  CHECK(Partition{3}.transpose() == Partition{1, 1, 1});
  CHECK(Partition{2, 1}.transpose() == Partition{2, 1});
  CHECK(Partition().transpose() == Partition());
  for (const auto& l : partitions_up_to(12)) CHECK(l.transpose().transpose() == l);
}

TEST_CASE("frobenius coordinates") {
  const auto one = frobenius(Partition{1});
  CHECK(one.alpha == std::vector<int>{0});
  CHECK(one.beta == std::vector<int>{0});
  const auto f = frobenius(Partition{3, 2});
  CHECK(f.alpha == std::vector<int>{2, 0});
  CHECK(f.beta == std::vector<int>{1, 0});
  CHECK(f.d() == 2);
  CHECK(frobenius(Partition()).d() == 0);
  for (const auto& l : partitions_up_to(10)) {
    CHECK(from_frobenius(frobenius(l)) == l);
    const auto ft = frobenius(l.transpose());
    CHECK(ft.alpha == frobenius(l).beta);
    CHECK(ft.beta == frobenius(l).alpha);
  }
}

TEST_CASE("dimensions") {
  CHECK(dim(Partition{1}) == 1);
  CHECK(dim(Partition{2, 1}) == 2);
  CHECK(dim(Partition{2, 2}) == 2);
  CHECK(syt_count(Partition{1, 1}) == 1);
  CHECK(syt_count(Partition{3, 2}) == 5);
  CHECK(syt_count(Partition{2, 1, 1}) == 3);
  CHECK_THROWS(syt_count(Partition{13}));
  for (const auto& l : partitions_up_to(8)) CHECK(dim(l) == syt_count(l));
  for (const auto& l : partitions_up_to(10)) CHECK(dim(l) == dim(l.transpose()));
  for (int n = 0; n <= 8; ++n) {
    Integer total = 0;
    for (const auto& l : partitions_of(n)) total += dim(l) * dim(l);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("b exponent") {
  CHECK(b_sign_exponent(Partition{1}) == 1);
  CHECK(b_sign_exponent(Partition()) == 0);
  CHECK(b_sign_exponent(Partition{2, 2}) == 3);
}

TEST_CASE("enumeration") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_up_to(3).size() == 7);
}

TEST_CASE("rendering") {
  CHECK(Partition{3, 2}.to_string() == "[3,2]");
  CHECK(Partition().to_string() == "[]");
  CHECK(Partition::parse("[3,2]") == Partition{3, 2});
  CHECK_THROWS(Partition(std::vector<int>{1, 2}));
}
