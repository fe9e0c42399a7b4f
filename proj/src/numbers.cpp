#include "toddpoly/numbers.hpp"

#include <algorithm>
#include <stdexcept>

#include "toddpoly/partition.hpp"
#include "toddpoly/series.hpp"

namespace toddpoly {
namespace {

void require_nonnegative(int k, const char* who) {
  if (k < 0) throw std::invalid_argument(std::string(who) + ": negative argument");
}

Int pow_int(const Int& base, unsigned exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

// 1, 2!, 3!, ..., (top)! as a table so the partition scans below do not
// recompute factorials per part.
std::vector<Int> factorial_table(int top) {
  std::vector<Int> fact(static_cast<size_t>(top) + 1);
  fact[0] = 1;
  for (int i = 1; i <= top; ++i) fact[static_cast<size_t>(i)] = fact[i - 1] * i;
  return fact;
}

// lcm over partitions of k of prod_i weight(lambda_i). Splitting on the
// largest part a, every completion shares the factor weight(a), and
// lcm(c*x, c*y) = c*lcm(x, y), so
//   L(rem, max_part) = lcm over a <= min(rem, max_part) of
//                      weight(a) * L(rem - a, a),   L(0, *) = 1.
// The (rem, max_part) table has O(k^2) states, so the whole computation is
// polynomial in k even though it ranges over all p(k) partitions.
Int lcm_over_partitions(int k, const std::vector<Int>& weight) {
  const size_t n = static_cast<size_t>(k) + 1;
  std::vector<std::vector<Int>> memo(n, std::vector<Int>(n, Int(0)));
  auto rec = [&](auto&& self, int rem, int max_part) -> const Int& {
    if (max_part > rem) max_part = rem;  // share the memo slot
    Int& slot = memo[static_cast<size_t>(rem)][static_cast<size_t>(max_part)];
    if (slot != 0) return slot;
    if (rem == 0) {
      slot = 1;
      return slot;
    }
    Int acc(1);
    for (int a = max_part; a >= 1; --a) {
      acc = lcm(acc, weight[static_cast<size_t>(a)] * self(self, rem - a, a));
    }
    slot = std::move(acc);
    return slot;
  };
  return rec(rec, k, k);
}

}  // namespace

Int hirzebruch_prime(int k) {
  require_nonnegative(k, "hirzebruch_prime");
  Int out(1);
  for (const Int& p : primes_upto(static_cast<unsigned>(k + 1))) {
    const unsigned e = static_cast<unsigned>(k / (p.get_ui() - 1));
    if (e > 0) out *= pow_int(p, e);
  }
  return out;
}

Int hirzebruch_lcm_factorial(int k) {
  require_nonnegative(k, "hirzebruch_lcm_factorial");
  const std::vector<Int> fact = factorial_table(k + 1);
  std::vector<Int> weight(static_cast<size_t>(k) + 1, Int(1));
  for (int part = 1; part <= k; ++part) {
    weight[static_cast<size_t>(part)] = fact[static_cast<size_t>(part) + 1];
  }
  return lcm_over_partitions(k, weight);
}

Int hirzebruch_lcm_plain(int k) {
  require_nonnegative(k, "hirzebruch_lcm_plain");
  std::vector<Int> weight(static_cast<size_t>(k) + 1, Int(1));
  for (int part = 1; part <= k; ++part) {
    weight[static_cast<size_t>(part)] = part + 1;
  }
  return lcm_over_partitions(k, weight);
}

HirzebruchRecord hirzebruch_record(int k) {
  HirzebruchRecord rec;
  rec.k = k;
  rec.value = hirzebruch_prime(k);
  if (hirzebruch_lcm_factorial(k) != rec.value ||
      hirzebruch_lcm_plain(k) != rec.value) {
    throw std::logic_error("hirzebruch_record: methods disagree at k=" +
                           std::to_string(k));
  }
  rec.factorization = factorize(rec.value);
  rec.methods_agreeing = {"prime_product", "lcm_factorial", "lcm_plain"};
  return rec;
}

Int l_denominator_prime(int k) {
  require_nonnegative(k, "l_denominator_prime");
  Int out(1);
  for (const Int& p : primes_upto(static_cast<unsigned>(2 * k + 1))) {
    if (p == 2) continue;
    const unsigned e = static_cast<unsigned>(2 * k / (p.get_ui() - 1));
    if (e > 0) out *= pow_int(p, e);
  }
  return out;
}

Int l_denominator_lcm(int k) {
  require_nonnegative(k, "l_denominator_lcm");
  std::vector<Int> weight(static_cast<size_t>(k) + 1, Int(1));
  for (int part = 1; part <= k; ++part) {
    weight[static_cast<size_t>(part)] = 2 * part + 1;
  }
  return lcm_over_partitions(k, weight);
}

Int l_from_hirzebruch(int k) {
  require_nonnegative(k, "l_from_hirzebruch");
  const Int h_even = hirzebruch_prime(2 * k);
  const Int pow4 = pow_int(Int(2), static_cast<unsigned>(2 * k));
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), h_even.get_mpz_t(), pow4.get_mpz_t());
  if (r != 0) {
    throw std::logic_error("l_from_hirzebruch: 2^{2k} does not divide h_{2k}");
  }
  const Int h_odd = hirzebruch_prime(2 * k + 1);
  if (h_odd != 2 * h_even) {
    throw std::logic_error("l_from_hirzebruch: h_{2k+1} != 2 h_{2k}");
  }
  return q;
}

Int buchstaber(int n) {
  if (n < 1) throw std::invalid_argument("buchstaber: argument must be >= 1");
  Int out(1);
  // p contributes iff 2(p-1) <= n-1.
  for (const Int& p : primes_upto(static_cast<unsigned>((n + 1) / 2))) {
    if (p == 2) continue;
    const long denom = 2 * (static_cast<long>(p.get_ui()) - 1);
    const long e = (n - 1) / denom;  // n >= 1, so never negative
    if (e > 0) out *= pow_int(p, static_cast<unsigned>(e));
  }
  return out;
}

Rat bernoulli_stirling(int m) {
  require_nonnegative(m, "bernoulli_stirling");
  Rat sum(0);
  Int kfact(1);
  for (int k = 0; k <= m; ++k) {
    if (k > 0) kfact *= k;
    Int num = kfact * stirling2(static_cast<unsigned>(m), static_cast<unsigned>(k));
    if (k % 2 != 0) num = -num;
    sum += make_rat(num, Int(k + 1));
  }
  return sum;
}

Rat bernoulli_partition_factorial(int k) {
  require_nonnegative(k, "bernoulli_partition_factorial");
  const std::vector<Int> fact = factorial_table(k + 1);
  Rat sum(0);
  for_each_partition(k, [&](const Partition& lambda) {
    Int den(1);
    for (int part : lambda.parts()) den *= fact[static_cast<size_t>(part) + 1];
    Int num = permutation_count(lambda);
    if (lambda.length() % 2 != 0) num = -num;
    sum += make_rat(num, den);
  });
  return sum * Rat(factorial(static_cast<unsigned>(k)));
}

Rat bernoulli_partition_g(int k) {
  require_nonnegative(k, "bernoulli_partition_g");
  Rat sum(0);
  for (const Partition& lambda : partitions_of(k)) {
    sum += g_value_at_one(lambda) /
           Rat(shifted_products(lambda).plain_shift);
  }
  return sum * Rat(factorial(static_cast<unsigned>(k)));
}

BernoulliRecord bernoulli_record(int k) {
  BernoulliRecord rec;
  rec.k = k;
  rec.value = bernoulli_ref(static_cast<unsigned>(k));
  if (bernoulli_stirling(k) != rec.value ||
      bernoulli_partition_factorial(k) != rec.value ||
      bernoulli_partition_g(k) != rec.value) {
    throw std::logic_error("bernoulli_record: methods disagree at k=" +
                           std::to_string(k));
  }
  rec.methods_agreeing = {"reference", "stirling", "partition_factorial",
                          "partition_g"};
  return rec;
}

VonStaudtClausen von_staudt_clausen(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) {
    throw std::invalid_argument("von_staudt_clausen: argument must be even and >= 2");
  }
  VonStaudtClausen out;
  Rat sum = bernoulli_ref(static_cast<unsigned>(two_n));
  Int prime_product(1);
  for (const Int& p : primes_upto(static_cast<unsigned>(two_n + 1))) {
    if (two_n % (p.get_ui() - 1) == 0) {
      out.primes.push_back(p);
      prime_product *= p;
      sum += make_rat(Int(1), p);
    }
  }
  if (sum.get_den() != 1) {
    throw std::logic_error("von_staudt_clausen: sum is not an integer");
  }
  if (bernoulli_ref(static_cast<unsigned>(two_n)).get_den() != prime_product) {
    throw std::logic_error(
        "von_staudt_clausen: denominator of B_{2n} is not the prime product");
  }
  out.integer_part = sum.get_num();
  return out;
}

}  // namespace toddpoly
