#include <doctest.h>

#include <algorithm>

#include "giambelli/partition.hpp"

using namespace giambelli;

TEST_CASE("from_parts canonicalization") {
  CHECK(Partition::from_parts({}).length() == 0);
  Partition p = Partition::from_parts({4, 3, 1});
  CHECK(p.length() == 3);
  CHECK(p.size() == 8);
  CHECK(Partition::from_parts({3, 1, 0, 0}).length() == 2);
  CHECK_THROWS(Partition::from_parts({1, 2}));
  CHECK_THROWS(Partition::from_parts({2, -1}));
}

TEST_CASE("frobenius coordinates") {
  CHECK(Partition().frobenius().d() == 0);
  FrobeniusCoords fc = Partition::from_parts({4, 3, 1}).frobenius();
  REQUIRE(fc.d() == 2);
  CHECK(fc.p == std::vector<int>{3, 1});
  CHECK(fc.q == std::vector<int>{2, 0});
  fc = Partition::from_parts({1}).frobenius();
  CHECK(fc.p == std::vector<int>{0});
  CHECK(fc.q == std::vector<int>{0});
  for (int n = 0; n <= 9; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      CHECK(Partition::from_frobenius(lam.frobenius()) == lam);
      CHECK(lam.transpose().transpose() == lam);
    }
}

TEST_CASE("dimension by two algorithms") {
  CHECK(dim_skew(Partition(), Partition::from_parts({2, 1})) == 2);
  CHECK(dim_skew(Partition::from_parts({1}), Partition::from_parts({2})) == 1);
  CHECK(dim_skew(Partition::from_parts({2}),
                 Partition::from_parts({1, 1})) == 0);
  for (int n = 0; n <= 12; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      CHECK(lam.dim_hook() == dim_skew(Partition(), lam));
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(10).size() == 42);
  auto l = enumerate_partitions(4);
  CHECK(l.front() == Partition::from_parts({4}));
  CHECK(l.back() == Partition::from_parts({1, 1, 1, 1}));
}

TEST_CASE("successors and covers") {
  auto s0 = Partition().successors();
  REQUIRE(s0.size() == 1);
  CHECK(s0[0].first == Partition::from_parts({1}));
  CHECK(s0[0].second == 0);

  auto s = Partition::from_parts({2, 1}).successors();
  REQUIRE(s.size() == 3);
  std::vector<int> contents;
  for (const auto& [lam, c] : s) contents.push_back(c);
  std::sort(contents.begin(), contents.end());
  CHECK(contents == std::vector<int>{-2, 0, 2});

  // dim lambda = sum of dim mu over covers mu of lambda
  for (int n = 1; n <= 10; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      Integer acc = 0;
      for (const auto& [mu, c] : lam.predecessors()) acc += mu.dim_hook();
      CHECK(acc == lam.dim_hook());
    }
}

TEST_CASE("lattice configuration bijection") {
  CHECK(Partition().lattice_config().empty());
  CHECK(Partition::from_parts({1}).lattice_config() ==
        std::vector<int>{-1, 1});
  CHECK(Partition::from_parts({4, 3, 1}).lattice_config() ==
        std::vector<int>{-5, -1, 3, 7});
  for (int n = 0; n <= 12; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      std::vector<int> cfg = lam.lattice_config();
      CHECK(Partition::from_lattice_config(cfg) == lam);
      // sum of (a_i + b_i) over the modified coordinates is |lambda|
      int total2 = 0;
      for (int x : cfg) total2 += std::abs(x);
      CHECK(total2 == 2 * n);
    }
  CHECK_THROWS(Partition::from_lattice_config({1, 3}));
}
