#include "toddpoly/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toddpoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<std::pair<int, int>> Partition::value_multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition partition_from_multiset(std::vector<int> values) {
  std::erase(values, 0);
  std::sort(values.begin(), values.end(), std::greater<int>());
  return Partition(std::move(values));
}

bool CanonicalLess::operator()(const Partition& a, const Partition& b) const {
  // a precedes b iff a is lexicographically greater
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

namespace {

// DFS over parts in decreasing order; prefix ordering gives canonical order.
void visit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                      const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(prefix));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    visit_partitions(remaining - p, p, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(int k, const std::function<void(const Partition&)>& fn) {
  if (k < 0) throw std::invalid_argument("for_each_partition: negative weight");
  std::vector<int> prefix;
  visit_partitions(k, k, prefix, fn);
}

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  for_each_partition(k, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Int permutation_count(const Partition& lambda) {
  Int n = factorial(static_cast<unsigned>(lambda.length()));
  for (const auto& [value, mult] : lambda.value_multiplicities())
    n /= factorial(static_cast<unsigned>(mult));
  return n;
}

ShiftedProducts shifted_products(const Partition& lambda) {
  ShiftedProducts sp{1, 1, 1};
  for (int p : lambda.parts()) {
    sp.factorial_shift *= factorial(static_cast<unsigned>(p + 1));
    sp.plain_shift *= p + 1;
    sp.odd_shift *= 2 * p + 1;
  }
  return sp;
}

}  // namespace toddpoly
