#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "toddpoly/partition.hpp"

using namespace toddpoly;

namespace {

// Independent oracle: p(n) by Euler's pentagonal-number recurrence.
std::vector<long> pentagonal_counts(int top) {
  std::vector<long> p(static_cast<size_t>(top) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= top; ++n) {
    long total = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      const long sign = (j % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<size_t>(n - g2)];
    }
    p[static_cast<size_t>(n)] = total;
  }
  return p;
}

}  // namespace

TEST_CASE("partition counts match the pentagonal recurrence") {
  const std::vector<long> p = pentagonal_counts(40);
  CHECK(p[5] == 7);
  CHECK(p[10] == 42);
  CHECK(p[20] == 627);
  for (int k = 0; k <= 40; ++k) {
    CHECK(partitions_of(k).size() == static_cast<size_t>(p[static_cast<size_t>(k)]));
  }
}

TEST_CASE("canonical order is descending lexicographic") {
  const std::vector<Partition> p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));

  const std::vector<Partition> p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());

  CanonicalLess less;
  for (int k = 1; k <= 12; ++k) {
    const std::vector<Partition> all = partitions_of(k);
    CHECK(all.front() == Partition({k}));
    CHECK(all.back() == Partition(std::vector<int>(static_cast<size_t>(k), 1)));
    CHECK(std::is_sorted(all.begin(), all.end(), less));
    // Strictly sorted: no duplicates.
    for (size_t i = 1; i < all.size(); ++i) {
      CHECK(less(all[i - 1], all[i]));
      CHECK(!less(all[i], all[i - 1]));
    }
  }
}

TEST_CASE("for_each_partition streams the same sequence") {
  for (int k = 0; k <= 10; ++k) {
    std::vector<Partition> streamed;
    for_each_partition(k, [&](const Partition& p) { streamed.push_back(p); });
    CHECK(streamed == partitions_of(k));
  }
}

TEST_CASE("accessors on (3,2,2,1)") {
  const Partition p({3, 2, 2, 1});
  CHECK(p.weight() == 8);
  CHECK(p.length() == 4);
  CHECK(!p.empty());
  CHECK(p.multiplicity(2) == 2);
  CHECK(p.multiplicity(3) == 1);
  CHECK(p.multiplicity(5) == 0);
  const std::vector<std::pair<int, int>> vm = p.value_multiplicities();
  REQUIRE(vm.size() == 3);
  CHECK(vm[0] == std::pair<int, int>{3, 1});
  CHECK(vm[1] == std::pair<int, int>{2, 2});
  CHECK(vm[2] == std::pair<int, int>{1, 1});
  CHECK(p.to_string() == "(3,2,2,1)");
  CHECK(Partition().to_string() == "()");
  CHECK(Partition().weight() == 0);
}

TEST_CASE("partition_from_multiset sorts and drops zeros") {
  CHECK(partition_from_multiset({0, 2, 1, 2, 0}) == Partition({2, 2, 1}));
  CHECK(partition_from_multiset({}) == Partition());
  CHECK(partition_from_multiset({5}) == Partition({5}));
}

TEST_CASE("permutation_count equals brute-force enumeration") {
  CHECK(permutation_count(Partition()) == 1);
  CHECK(permutation_count(Partition({2, 1})) == 2);
  CHECK(permutation_count(Partition({1, 1, 1})) == 1);
  CHECK(permutation_count(Partition({3, 2, 2, 1})) == 12);
  for (int k = 1; k <= 7; ++k) {
    for (const Partition& lambda : partitions_of(k)) {
      std::vector<int> v = lambda.parts();
      std::sort(v.begin(), v.end());
      Int count = 0;
      do {
        ++count;
      } while (std::next_permutation(v.begin(), v.end()));
      CHECK(permutation_count(lambda) == count);
    }
  }
}

TEST_CASE("shifted products") {
  const ShiftedProducts empty = shifted_products(Partition());
  CHECK(empty.factorial_shift == 1);
  CHECK(empty.plain_shift == 1);
  CHECK(empty.odd_shift == 1);

  const ShiftedProducts sp = shifted_products(Partition({2, 1}));
  CHECK(sp.factorial_shift == 12);  // 3! * 2!
  CHECK(sp.plain_shift == 6);       // 3 * 2
  CHECK(sp.odd_shift == 15);        // 5 * 3
}

TEST_CASE("PartitionMap iterates canonically") {
  PartitionMap<int> m;
  m[Partition({1, 1, 1})] = 3;
  m[Partition({3})] = 1;
  m[Partition({2, 1})] = 2;
  std::vector<int> order;
  for (const auto& [p, v] : m) order.push_back(v);
  CHECK(order == std::vector<int>{1, 2, 3});
}
