#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "toddpoly/arith.hpp"

namespace toddpoly {

/// Integer partition: weakly decreasing positive parts, possibly empty.
/// Immutable value type; the index set for every basis and partition sum.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// m_j(lambda): number of parts equal to j.
  int multiplicity(int part) const;

  /// Distinct part values with multiplicities, values descending.
  std::vector<std::pair<int, int>> value_multiplicities() const;

  /// "(2,1)"; the empty partition prints "()".
  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Sorts a multiset of nonnegative entries into a partition, dropping zeros.
Partition partition_from_multiset(std::vector<int> values);

/// Canonical order: descending lexicographic on part lists, so for weight 3
/// the order is (3), (2,1), (1,1,1). Every matrix, serialization, and
/// iteration in the project agrees with this order.
struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const;
};

template <class T>
using PartitionMap = std::map<Partition, T, CanonicalLess>;

/// All partitions of k in canonical order. k = 0 yields the empty partition.
std::vector<Partition> partitions_of(int k);

/// Streams partitions of k in canonical order without materializing the list.
void for_each_partition(int k, const std::function<void(const Partition&)>& fn);

/// N(lambda) = l! / prod_j m_j(lambda)!: the number of distinct permutations
/// of the parts list.
Int permutation_count(const Partition& lambda);

struct ShiftedProducts {
  Int factorial_shift;  // prod (lambda_i + 1)!
  Int plain_shift;      // prod (lambda_i + 1)
  Int odd_shift;        // prod (2 lambda_i + 1)
};

/// The three shifted products; the empty partition gives (1, 1, 1).
ShiftedProducts shifted_products(const Partition& lambda);

}  // namespace toddpoly
