#include "toddpoly/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toddpoly/series.hpp"

namespace toddpoly {
namespace {

using MMap = PartitionMap<Rat>;

Rat sign_of(const Partition& nu) {
  return ((nu.weight() - nu.length()) % 2 == 0) ? Rat(1) : Rat(-1);
}

void accumulate(MMap& m, const Partition& p, const Rat& c) {
  if (c == 0) return;
  Rat& slot = m[p];
  slot += c;
  if (slot == 0) m.erase(p);
}

long mult_of(const std::vector<std::pair<int, int>>& mv, int v) {
  for (const auto& [value, mult] : mv) {
    if (value == v) return mult;
  }
  return 0;
}

// Coefficient of m_mu in m_nu * e_r.  Writing mu by value multiplicities,
// exactly j_v parts of value v must have been bumped up from v-1; the j_v are
// forced top-down by j_v = m_v(mu) - m_v(nu) + j_{v+1} and each choice of
// which parts were bumped contributes binomial(m_v(mu), j_v).
Int m_times_e_coeff(const Partition& nu, const Partition& mu) {
  auto mv_nu = nu.value_multiplicities();
  auto mv_mu = mu.value_multiplicities();
  int vmax = 0;
  if (!nu.parts().empty()) vmax = nu.parts().front();
  if (!mu.parts().empty()) vmax = std::max(vmax, mu.parts().front());
  Int coeff = 1;
  long j = 0;
  for (int v = vmax; v >= 1; --v) {
    long mmu = mult_of(mv_mu, v);
    j = mmu - mult_of(mv_nu, v) + j;
    if (j < 0 || j > mmu) return 0;
    if (j > 0) coeff *= binomial(Int(mmu), static_cast<unsigned>(j));
  }
  return coeff;
}

// Coefficient of m_mu in m_nu * h_r: the number of distinct rearrangements
// alpha of nu (padded with zeros to l(mu) slots) with alpha_i <= mu_i.
// Placing values of nu largest first, each value v may occupy any slot i with
// mu_i >= v, and every slot taken so far qualifies, giving a closed product.
Int m_times_h_coeff(const Partition& nu, const Partition& mu) {
  if (nu.length() > mu.length()) return 0;
  const auto& mp = mu.parts();
  Int ways = 1;
  long placed = 0;
  // value_multiplicities is already in descending value order.
  for (const auto& [v, mult] : nu.value_multiplicities()) {
    long t = static_cast<long>(std::upper_bound(mp.begin(), mp.end(), v,
                                                std::greater<int>()) -
                               mp.begin());
    if (t - placed < mult) return 0;
    ways *= binomial(Int(t - placed), static_cast<unsigned>(mult));
    placed += mult;
  }
  return ways;
}

MMap multiply_by_e(const MMap& in, int degree_in, int r) {
  MMap out;
  if (in.empty()) return out;
  for (const auto& mu : partitions_of(degree_in + r)) {
    for (const auto& [nu, c] : in) {
      Int n = m_times_e_coeff(nu, mu);
      if (n != 0) accumulate(out, mu, c * Rat(n));
    }
  }
  return out;
}

MMap multiply_by_h(const MMap& in, int degree_in, int r) {
  MMap out;
  if (in.empty()) return out;
  for (const auto& mu : partitions_of(degree_in + r)) {
    for (const auto& [nu, c] : in) {
      Int n = m_times_h_coeff(nu, mu);
      if (n != 0) accumulate(out, mu, c * Rat(n));
    }
  }
  return out;
}

// m_nu * p_r: a monomial of mu arises by adding r to one exponent of nu, so
// run over the distinct values w >= r of mu, strip one part w, put back w - r,
// and when the leftover equals nu the term m_mu gains multiplicity m_w(mu).
MMap multiply_by_p(const MMap& in, int degree_in, int r) {
  MMap out;
  if (in.empty()) return out;
  for (const auto& mu : partitions_of(degree_in + r)) {
    auto mv_mu = mu.value_multiplicities();
    for (const auto& [w, mult] : mv_mu) {
      if (w < r) continue;
      std::vector<int> cand;
      cand.reserve(mu.parts().size());
      bool removed = false;
      for (int part : mu.parts()) {
        if (!removed && part == w) {
          removed = true;
          if (w - r > 0) cand.push_back(w - r);
          continue;
        }
        cand.push_back(part);
      }
      Partition nu = partition_from_multiset(cand);
      auto it = in.find(nu);
      if (it != in.end()) accumulate(out, mu, it->second * Rat(mult));
    }
  }
  return out;
}

// Coefficient of m_mu in m_a * m_b: the number of vectors alpha over the
// l(mu) slots whose nonzero entries rearrange a, such that mu - alpha
// (slotwise) rearranges b.  Depth-first over slots, drawing values from the
// two remaining multisets, counts each vector exactly once.
Int mono_product_coeff(const Partition& a, const Partition& b,
                       const Partition& mu) {
  const long n = mu.length();
  if (a.length() > n || b.length() > n) return 0;
  if (a.weight() + b.weight() != mu.weight()) return 0;
  std::map<int, long> rem_a, rem_b;
  for (int v : a.parts()) ++rem_a[v];
  for (int v : b.parts()) ++rem_b[v];
  rem_a[0] += n - a.length();
  rem_b[0] += n - b.length();

  const auto& mp = mu.parts();
  // Recurse slot by slot.
  struct Walker {
    const std::vector<int>& mp;
    std::map<int, long>& rem_a;
    std::map<int, long>& rem_b;
    Int count = 0;
    void go(size_t i) {
      if (i == mp.size()) {
        ++count;
        return;
      }
      for (auto& [va, ca] : rem_a) {
        if (ca == 0 || va > mp[i]) continue;
        auto itb = rem_b.find(mp[i] - va);
        if (itb == rem_b.end() || itb->second == 0) continue;
        --ca;
        --itb->second;
        go(i + 1);
        ++ca;
        ++itb->second;
      }
    }
  } walker{mp, rem_a, rem_b};
  walker.go(0);
  return walker.count;
}

// Exact Gauss-Jordan inverse with determinant, for the change-of-basis
// matrices (small and nonsingular by construction).
void invert_matrix(const std::vector<std::vector<Rat>>& a,
                   std::vector<std::vector<Rat>>& inv, Rat& det) {
  const size_t n = a.size();
  std::vector<std::vector<Rat>> w = a;
  inv.assign(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && w[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular transition matrix");
    if (piv != col) {
      std::swap(w[piv], w[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    Rat p = w[col][col];
    det *= p;
    for (size_t j = 0; j < n; ++j) {
      w[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || w[row][col] == 0) continue;
      Rat f = w[row][col];
      for (size_t j = 0; j < n; ++j) {
        w[row][j] -= f * w[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
}

std::vector<std::vector<Rat>> identity(size_t n) {
  std::vector<std::vector<Rat>> id(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

TransitionMatrix build_transition(Basis basis, int degree);

// Column for each multiplicative generator product b_{lambda_1}...b_{lambda_l}
// computed by iterated single-generator multiplication in the m basis.
void fill_multiplicative(TransitionMatrix& t,
                         MMap (*step)(const MMap&, int, int)) {
  const size_t n = t.index.size();
  for (size_t j = 0; j < n; ++j) {
    MMap acc;
    acc[Partition(std::vector<int>{})] = Rat(1);
    int d = 0;
    for (int part : t.index[j].parts()) {
      acc = step(acc, d, part);
      d += part;
    }
    for (const auto& [mu, c] : acc) t.to_m[t.pos.at(mu)][j] = c;
  }
}

TransitionMatrix build_transition(Basis basis, int degree) {
  TransitionMatrix t;
  t.index = partitions_of(degree);
  const size_t n = t.index.size();
  for (size_t i = 0; i < n; ++i) t.pos[t.index[i]] = static_cast<int>(i);
  t.to_m.assign(n, std::vector<Rat>(n, Rat(0)));

  switch (basis) {
    case Basis::monomial:
      t.to_m = identity(n);
      break;
    case Basis::elementary:
      fill_multiplicative(t, &multiply_by_e);
      break;
    case Basis::complete:
      fill_multiplicative(t, &multiply_by_h);
      break;
    case Basis::powersum:
      fill_multiplicative(t, &multiply_by_p);
      break;
    case Basis::forgotten: {
      // f_lambda = omega(m_lambda): conjugate the diagonal sign matrix of the
      // power-sum basis, to_m_f = P * diag(sign) * P^{-1} with P = to_m_p.
      const TransitionMatrix& p = transition(Basis::powersum, degree);
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          Rat sum(0);
          for (size_t s = 0; s < n; ++s) {
            if (p.from_m[s][j] == 0 || p.to_m[i][s] == 0) continue;
            sum += p.to_m[i][s] * sign_of(t.index[s]) * p.from_m[s][j];
          }
          t.to_m[i][j] = sum;
        }
      }
      break;
    }
    case Basis::gnew: {
      // g_lambda = sum_mu c(mu, lambda) f_mu with c the reversion coefficient
      // matrix.
      const TransitionMatrix& f = transition(Basis::forgotten, degree);
      const CoeffMatrix& c = c_matrix(degree);
      for (size_t j = 0; j < n; ++j) {
        for (size_t s = 0; s < n; ++s) {
          Int e = c.entry(t.index[s], t.index[j]);
          if (e == 0) continue;
          Rat re(e);
          for (size_t i = 0; i < n; ++i) {
            if (f.to_m[i][s] == 0) continue;
            t.to_m[i][j] += re * f.to_m[i][s];
          }
        }
      }
      break;
    }
  }

  if (basis == Basis::monomial) {
    t.from_m = identity(n);
    t.det_to_m = 1;
  } else {
    invert_matrix(t.to_m, t.from_m, t.det_to_m);
  }
  return t;
}

}  // namespace

char basis_symbol(Basis b) {
  switch (b) {
    case Basis::monomial: return 'm';
    case Basis::elementary: return 'e';
    case Basis::complete: return 'h';
    case Basis::powersum: return 'p';
    case Basis::forgotten: return 'f';
    case Basis::gnew: return 'g';
  }
  throw std::logic_error("unknown basis");
}

std::optional<Basis> basis_from_symbol(char c) {
  switch (c) {
    case 'm': return Basis::monomial;
    case 'e': return Basis::elementary;
    case 'h': return Basis::complete;
    case 'p': return Basis::powersum;
    case 'f': return Basis::forgotten;
    case 'g': return Basis::gnew;
    default: return std::nullopt;
  }
}

SymFn SymFn::constant(const Rat& c) {
  SymFn out(0, Basis::monomial);
  out.add_term(Partition(std::vector<int>{}), c);
  return out;
}

SymFn SymFn::generator(Basis basis, const Partition& lambda) {
  SymFn out(lambda.weight(), basis);
  out.add_term(lambda, Rat(1));
  return out;
}

Rat SymFn::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

SymFn& SymFn::add_term(const Partition& lambda, const Rat& c) {
  if (lambda.weight() != degree_) {
    throw std::invalid_argument("term degree mismatch");
  }
  accumulate(coeffs_, lambda, c);
  return *this;
}

SymFn SymFn::operator+(const SymFn& other) const {
  if (degree_ != other.degree_ || basis_ != other.basis_) {
    throw std::invalid_argument("sum requires matching degree and basis");
  }
  SymFn out = *this;
  for (const auto& [p, c] : other.coeffs_) accumulate(out.coeffs_, p, c);
  return out;
}

SymFn SymFn::operator-(const SymFn& other) const { return *this + (-other); }

SymFn SymFn::operator-() const {
  SymFn out(degree_, basis_);
  for (const auto& [p, c] : coeffs_) out.coeffs_[p] = -c;
  return out;
}

SymFn SymFn::operator*(const Rat& scalar) const {
  SymFn out(degree_, basis_);
  if (scalar == 0) return out;
  for (const auto& [p, c] : coeffs_) out.coeffs_[p] = c * scalar;
  return out;
}

const TransitionMatrix& transition(Basis basis, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, TransitionMatrix> cache;
  const std::pair<int, int> key{static_cast<int>(basis), degree};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TransitionMatrix fresh = build_transition(basis, degree);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(fresh)).first->second;
}

Rat transition_determinant(Basis basis, int degree) {
  return transition(basis, degree).det_to_m;
}

SymFn convert(const SymFn& sf, Basis target) {
  if (sf.basis() == target) return sf;
  const TransitionMatrix& src = transition(sf.basis(), sf.degree());
  const size_t n = src.index.size();
  std::vector<Rat> coords(n, Rat(0));
  for (const auto& [p, c] : sf.terms()) coords[src.pos.at(p)] = c;

  std::vector<Rat> in_m(n, Rat(0));
  if (sf.basis() == Basis::monomial) {
    in_m = coords;
  } else {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (coords[j] == 0 || src.to_m[i][j] == 0) continue;
        in_m[i] += src.to_m[i][j] * coords[j];
      }
    }
  }

  SymFn out(sf.degree(), target);
  if (target == Basis::monomial) {
    for (size_t i = 0; i < n; ++i) {
      if (in_m[i] != 0) out.add_term(src.index[i], in_m[i]);
    }
    return out;
  }
  const TransitionMatrix& dst = transition(target, sf.degree());
  for (size_t i = 0; i < n; ++i) {
    Rat sum(0);
    for (size_t j = 0; j < n; ++j) {
      if (in_m[j] == 0 || dst.from_m[i][j] == 0) continue;
      sum += dst.from_m[i][j] * in_m[j];
    }
    if (sum != 0) out.add_term(dst.index[i], sum);
  }
  return out;
}

SymFn multiply(const SymFn& a, const SymFn& b) {
  SymFn am = convert(a, Basis::monomial);
  SymFn bm = convert(b, Basis::monomial);
  SymFn out(a.degree() + b.degree(), Basis::monomial);
  if (am.is_zero() || bm.is_zero()) return convert(out, a.basis());
  const auto& mus = partitions_of(out.degree());
  for (const auto& [la, ca] : am.terms()) {
    for (const auto& [nu, cb] : bm.terms()) {
      Rat cc = ca * cb;
      for (const auto& mu : mus) {
        Int cnt = mono_product_coeff(la, nu, mu);
        if (cnt != 0) out.add_term(mu, cc * Rat(cnt));
      }
    }
  }
  return convert(out, a.basis());
}

SymFn omega(const SymFn& sf) {
  SymFn p = convert(sf, Basis::powersum);
  SymFn scaled(p.degree(), Basis::powersum);
  for (const auto& [nu, c] : p.terms()) scaled.add_term(nu, c * sign_of(nu));
  return convert(scaled, sf.basis());
}

SymFn forgotten(const Partition& lambda) {
  return convert(SymFn::generator(Basis::forgotten, lambda), Basis::monomial);
}

SymFn forgotten_combinatorial(const Partition& lambda) {
  const int k = lambda.weight();
  if (k > 63) throw std::invalid_argument("degree too large for bitmask route");
  SymFn out(k, Basis::monomial);

  // Prefix-sum bitmasks of every distinct rearrangement of lambda.
  std::vector<int> seq = lambda.parts();
  std::sort(seq.begin(), seq.end());
  std::vector<unsigned long long> masks;
  do {
    unsigned long long mask = 0;
    int s = 0;
    for (int part : seq) {
      s += part;
      mask |= 1ULL << s;
    }
    masks.push_back(mask);
  } while (std::next_permutation(seq.begin(), seq.end()));

  const Rat sign = sign_of(lambda);
  for (const auto& mu : partitions_of(k)) {
    unsigned long long need = 0;
    int s = 0;
    for (int part : mu.parts()) {
      s += part;
      need |= 1ULL << s;
    }
    Int count = 0;
    for (unsigned long long mask : masks) {
      if ((mask & need) == need) ++count;
    }
    if (count != 0) out.add_term(mu, sign * Rat(count));
  }
  return out;
}

Rat eval_at_one(const SymFn& sf) {
  SymFn m = convert(sf, Basis::monomial);
  if (sf.degree() == 0) return m.coeff(Partition(std::vector<int>{}));
  return m.coeff(Partition({sf.degree()}));
}

bool equal(const SymFn& a, const SymFn& b) {
  SymFn am = convert(a, Basis::monomial);
  SymFn bm = convert(b, Basis::monomial);
  if (am.is_zero() && bm.is_zero()) return true;
  return am.degree() == bm.degree() && am.terms() == bm.terms();
}

}  // namespace toddpoly
