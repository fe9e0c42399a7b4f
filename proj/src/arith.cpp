#include "toddpoly/arith.hpp"

#include <algorithm>
#include <mutex>

namespace toddpoly {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(const Int& n, unsigned k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Int lcm_list(const std::vector<Int>& values) {
  Int acc = 1;
  for (const Int& v : values) {
    if (v < 1) throw std::invalid_argument("lcm_list: values must be positive");
    acc = lcm(acc, v);
  }
  return acc;
}

std::vector<Int> primes_upto(unsigned n) {
  std::vector<Int> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (unsigned p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.emplace_back(p);
    for (unsigned long q = static_cast<unsigned long>(p) * p; q <= n; q += p)
      composite[q] = true;
  }
  return primes;
}

Int stirling2(unsigned m, unsigned k) {
  if (k > m) return 0;
  if (m == 0) return k == 0 ? 1 : 0;
  // row-by-row recurrence, one row of state
  std::vector<Int> row(k + 1, 0);
  row[0] = 1;  // S(0,0)
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j)
      row[j] = Int(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

Int catalan(unsigned n) {
  Int num = binomial(Int(2) * n, n);
  Int den = Int(n) + 1;
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("catalan: binomial(2n,n) not divisible by n+1");
  return q;
}

Rat bernoulli_ref(unsigned n) {
  static std::mutex mu;
  static std::vector<Rat> cache{Rat(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    Rat sum(0);
    for (unsigned j = 0; j < m; ++j) sum += Rat(binomial(Int(m) + 1, j)) * cache[j];
    cache.push_back(-sum / Rat(Int(m) + 1));
  }
  return cache[n];
}

PrimePowerMap factorize(const Int& value) {
  if (value < 1) throw std::invalid_argument("factorize: value must be positive");
  PrimePowerMap factors;
  Int rest = value;
  Int p = 2;
  while (rest > 1) {
    if (p * p > rest) {
      factors.push_back({rest, 1});
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return factors;
}

Int unfactorize(const PrimePowerMap& factors) {
  Int r = 1;
  for (const auto& pp : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    r *= pe;
  }
  return r;
}

unsigned p_valuation(const Int& value, const Int& p) {
  if (value == 0) throw std::invalid_argument("p_valuation: zero value");
  Int rest = abs(value);
  unsigned v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    rest /= p;
    ++v;
  }
  return v;
}

}  // namespace toddpoly
