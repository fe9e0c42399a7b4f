#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace toddpoly {

// Arbitrary-precision integer and rational. mpq_class values stay canonical
// (gcd 1, positive denominator) as long as construction goes through
// make_rat or whole integers; all arithmetic preserves canonical form.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in lowest terms with positive denominator. Throws on den == 0.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline bool is_canonical(const Rat& q) {
  return sgn(q.get_den()) > 0 && gcd(Int(abs(q.get_num())), q.get_den()) == 1;
}

/// Exact n!.
Int factorial(unsigned n);

/// Exact binomial coefficient C(n, k); zero for k > n.
Int binomial(const Int& n, unsigned k);

/// Least common multiple; empty list yields 1. Rejects values < 1.
Int lcm_list(const std::vector<Int>& values);

/// All primes <= n, ascending (sieve of Eratosthenes).
std::vector<Int> primes_upto(unsigned n);

/// Stirling number of the second kind S(m, k) via the standard recurrence
/// S(m,k) = k*S(m-1,k) + S(m-1,k-1).
Int stirling2(unsigned m, unsigned k);

/// Catalan number C_n = binomial(2n, n)/(n+1) (exact division).
Int catalan(unsigned n);

/// Bernoulli number B_n from the recurrence
///   sum_{j=0}^{m} C(m+1, j) B_j = 0  (m >= 1),  B_0 = 1,
/// so B_1 = -1/2. This is the reference every other Bernoulli route is
/// checked against. Values are cached; safe to call concurrently.
Rat bernoulli_ref(unsigned n);

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

// Ordered factorization: primes strictly increasing, exponents >= 1.
using PrimePowerMap = std::vector<PrimePower>;

/// Trial-division factorization of a positive integer.
PrimePowerMap factorize(const Int& value);

/// Multiplies a factorization back into an integer.
Int unfactorize(const PrimePowerMap& factors);

/// p-adic valuation v_p(value) for value != 0.
unsigned p_valuation(const Int& value, const Int& p);

}  // namespace toddpoly
