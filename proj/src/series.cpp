#include "toddpoly/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace toddpoly {
namespace {

using Series = std::vector<WeightedPoly>;  // [j] = coefficient of v^j

// Product of two v-series, truncated at v^top.
Series series_mul(const Series& x, const Series& y, int top) {
  Series out(top + 1);
  for (int i = 0; i <= top && i < static_cast<int>(x.size()); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; i + j <= top && j < static_cast<int>(y.size()); ++j) {
      if (y[j].is_zero()) continue;
      out[i + j] = out[i + j] + x[i] * y[j];
    }
  }
  return out;
}

}  // namespace

WeightedPoly WeightedPoly::one() {
  WeightedPoly out;
  out.add_term(Partition(std::vector<int>{}), Rat(1));
  return out;
}

WeightedPoly WeightedPoly::symbol(int n) {
  WeightedPoly out;
  out.add_term(Partition({n}), Rat(1));
  return out;
}

Rat WeightedPoly::coeff(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rat(0) : it->second;
}

WeightedPoly& WeightedPoly::add_term(const Partition& key, const Rat& c) {
  if (c == 0) return *this;
  Rat& slot = terms_[key];
  slot += c;
  if (slot == 0) terms_.erase(key);
  return *this;
}

WeightedPoly WeightedPoly::operator+(const WeightedPoly& o) const {
  WeightedPoly out = *this;
  for (const auto& [p, c] : o.terms_) out.add_term(p, c);
  return out;
}

WeightedPoly WeightedPoly::operator-(const WeightedPoly& o) const {
  return *this + (-o);
}

WeightedPoly WeightedPoly::operator-() const {
  WeightedPoly out;
  for (const auto& [p, c] : terms_) out.terms_[p] = -c;
  return out;
}

WeightedPoly WeightedPoly::operator*(const WeightedPoly& o) const {
  WeightedPoly out;
  for (const auto& [pa, ca] : terms_) {
    for (const auto& [pb, cb] : o.terms_) {
      std::vector<int> merged = pa.parts();
      merged.insert(merged.end(), pb.parts().begin(), pb.parts().end());
      out.add_term(partition_from_multiset(merged), ca * cb);
    }
  }
  return out;
}

WeightedPoly WeightedPoly::operator*(const Rat& scalar) const {
  WeightedPoly out;
  if (scalar == 0) return out;
  for (const auto& [p, c] : terms_) out.terms_[p] = c * scalar;
  return out;
}

std::vector<WeightedPoly> revert_series(int max) {
  if (max < 0) throw std::invalid_argument("revert_series: negative order");
  std::vector<WeightedPoly> b(max + 1);
  for (int m = 1; m <= max; ++m) {
    const int top = m + 1;
    // beta truncated at v^top; the v^top coefficient b_m is still unknown but
    // cannot contribute to [v^top] beta^{n+1} for n >= 1.
    Series beta(top + 1);
    beta[1] = WeightedPoly::one();
    for (int j = 2; j < top; ++j) beta[j] = b[j - 1];
    Series pow = beta;
    WeightedPoly sum;
    for (int n = 1; n <= m; ++n) {
      pow = series_mul(pow, beta, top);  // beta^{n+1}
      if (!pow[top].is_zero()) {
        sum = sum + WeightedPoly::symbol(n) * pow[top];
      }
    }
    b[m] = -sum;
  }
  return b;
}

WeightedPoly bell_closed_form(int n) {
  WeightedPoly out;
  if (n == 0) return out;
  const Int np1_fact = factorial(static_cast<unsigned>(n + 1));
  for (const auto& lambda : partitions_of(n)) {
    const int l = lambda.length();
    Int num = factorial(static_cast<unsigned>(n + l));
    Int den = np1_fact;
    for (const auto& [v, mult] : lambda.value_multiplicities()) {
      (void)v;
      den *= factorial(static_cast<unsigned>(mult));
    }
    Rat c = make_rat(num, den);
    if (c.get_den() != 1) throw std::logic_error("bell coefficient not integral");
    if (l % 2 != 0) c = -c;
    out.add_term(lambda, c);
  }
  return out;
}

Int CoeffMatrix::entry(const Partition& mu, const Partition& lambda) const {
  return rows.at(static_cast<size_t>(pos.at(mu)))
      .at(static_cast<size_t>(pos.at(lambda)));
}

const CoeffMatrix& c_matrix(int k) {
  static std::mutex mu;
  static std::map<int, CoeffMatrix> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }

  CoeffMatrix m;
  m.k = k;
  m.index = partitions_of(k);
  const size_t n = m.index.size();
  for (size_t i = 0; i < n; ++i) m.pos[m.index[i]] = static_cast<int>(i);
  m.rows.assign(n, std::vector<Int>(n, Int(0)));

  const std::vector<WeightedPoly> b = revert_series(k);
  // b^mu assembled with shared tails: mu with its largest part removed is a
  // partition again, so products for the canonical index list overlap heavily.
  struct TailProducts {
    const std::vector<WeightedPoly>& b;
    PartitionMap<WeightedPoly> memo;  // std::map: stable references
    const WeightedPoly& get(const Partition& nu) {
      auto it = memo.find(nu);
      if (it != memo.end()) return it->second;
      WeightedPoly value;
      if (nu.empty()) {
        value = WeightedPoly::one();
      } else {
        std::vector<int> rest(nu.parts().begin() + 1, nu.parts().end());
        value = b[static_cast<size_t>(nu.parts().front())] * get(Partition(rest));
      }
      return memo.emplace(nu, std::move(value)).first->second;
    }
  } tails{b, {}};
  for (size_t i = 0; i < n; ++i) {
    const WeightedPoly& prod = tails.get(m.index[i]);
    for (const auto& [lambda, c] : prod.terms()) {
      if (c.get_den() != 1) throw std::logic_error("c-matrix entry not integral");
      m.rows[i][static_cast<size_t>(m.pos.at(lambda))] = c.get_num();
    }
  }

  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(k, std::move(m)).first->second;
}

SymFn g_function(const Partition& lambda) {
  return convert(SymFn::generator(Basis::gnew, lambda), Basis::monomial);
}

namespace {

// Number of distinct permutations of the parts of mu, counted one by one with
// std::next_permutation. Deliberately shares nothing with the closed form
// l!/prod m_j(mu)! that permutation_count uses.
const Int& enumerated_permutation_count(const Partition& mu) {
  static std::mutex mtx;
  static PartitionMap<Int> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(mu);
  if (it != cache.end()) return it->second;
  std::vector<int> parts = mu.parts();
  std::sort(parts.begin(), parts.end());
  Int count(0);
  do {
    ++count;
  } while (std::next_permutation(parts.begin(), parts.end()));
  return cache.emplace(mu, std::move(count)).first->second;
}

}  // namespace

Rat g_value_at_one(const Partition& lambda) {
  const CoeffMatrix& c = c_matrix(lambda.weight());
  // The value at (1, 0, ...) is the m_(k) coefficient of
  // g_lambda = sum_mu c(mu, lambda) f_mu, and the m_(k) coefficient of f_mu
  // is (-1)^(|mu|-l(mu)) times the number of permutations of mu. Compute the
  // count by enumeration and by closed form, and insist they agree.
  Rat by_enumeration(0);
  Rat by_closed_form(0);
  for (const auto& mu : c.index) {
    const Int e = c.entry(mu, lambda);
    if (e == 0) continue;
    Int t_enum = e * enumerated_permutation_count(mu);
    Int t_closed = e * permutation_count(mu);
    if ((mu.weight() - mu.length()) % 2 != 0) {
      t_enum = -t_enum;
      t_closed = -t_closed;
    }
    by_enumeration += Rat(t_enum);
    by_closed_form += Rat(t_closed);
  }
  if (by_enumeration != by_closed_form) {
    throw std::logic_error("g_value_at_one: routes disagree");
  }
  return by_enumeration;
}

}  // namespace toddpoly
