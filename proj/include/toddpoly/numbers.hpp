#pragma once

#include <string>
#include <vector>

#include "toddpoly/arith.hpp"

namespace toddpoly {

// ---------------------------------------------------------------------------
// Hirzebruch numbers h_k: the minimal clearing denominator of the k-th Todd
// polynomial, by three independent routes.
// ---------------------------------------------------------------------------

/// Product over primes p <= k+1 of p^{floor(k/(p-1))}; k = 0 gives 1.
Int hirzebruch_prime(int k);

/// lcm over partitions lambda of k of prod_i (lambda_i + 1)!.
Int hirzebruch_lcm_factorial(int k);

/// lcm over partitions lambda of k of prod_i (lambda_i + 1).
Int hirzebruch_lcm_plain(int k);

struct HirzebruchRecord {
  int k = 0;
  Int value;
  PrimePowerMap factorization;
  // Routes computed for this record; always all three, and they must agree.
  std::vector<std::string> methods_agreeing;
};

/// Runs all three routes; throws std::logic_error if they disagree.
HirzebruchRecord hirzebruch_record(int k);

// ---------------------------------------------------------------------------
// L-genus denominators mu(L_k), by three independent routes.
// ---------------------------------------------------------------------------

/// Product over odd primes p <= 2k+1 of p^{floor(2k/(p-1))}; k = 0 gives 1.
Int l_denominator_prime(int k);

/// lcm over partitions lambda of k of prod_i (2 lambda_i + 1).
Int l_denominator_lcm(int k);

/// h_{2k} / 2^{2k}. Throws std::logic_error if the division is inexact or if
/// it differs from h_{2k+1} / 2^{2k+1}; both identities must hold.
Int l_from_hirzebruch(int k);

// ---------------------------------------------------------------------------
// Buchstaber numbers b_n.
// ---------------------------------------------------------------------------

/// Product over odd primes p of p^{floor((n-1)/(2(p-1)))}, exponents clamped
/// at 0 (the clamp only matters below n = 1). Requires n >= 1.
///
/// The exponent is (n-1)-based. The circulated (n-2)-based form is
/// inconsistent with the published value table (it would give b_5 = 1, b_9 =
/// 3, b_13 = 45 instead of 3, 45, 945) and with the plateau identity
/// b_{4k+1} = mu(L_k), both of which force (n-1); see README.
Int buchstaber(int n);

// ---------------------------------------------------------------------------
// Bernoulli numbers B_m by three routes beyond the reference recurrence
// (bernoulli_ref in core arithmetic). B_1 = -1/2 throughout.
// ---------------------------------------------------------------------------

/// B_m = sum_{k=0}^{m} (-1)^k k! S(m,k) / (k+1) with S the Stirling numbers
/// of the second kind.
Rat bernoulli_stirling(int m);

/// B_k = k! sum over partitions lambda of k of
/// (-1)^{l(lambda)} N(lambda) / prod_i (lambda_i + 1)!.
Rat bernoulli_partition_factorial(int k);

/// B_k = k! sum over partitions lambda of k of
/// G(lambda) / prod_i (lambda_i + 1), with G(lambda) = g_value_at_one(lambda).
Rat bernoulli_partition_g(int k);

struct BernoulliRecord {
  int k = 0;
  Rat value;
  // Routes computed for this record; always all four, and they must agree.
  std::vector<std::string> methods_agreeing;
};

/// Runs the reference recurrence and all three routes above; throws
/// std::logic_error if they disagree.
BernoulliRecord bernoulli_record(int k);

// ---------------------------------------------------------------------------
// von Staudt-Clausen.
// ---------------------------------------------------------------------------

struct VonStaudtClausen {
  Int integer_part;          // B_{2n} + sum 1/p, an exact integer
  std::vector<Int> primes;   // primes p with (p-1) | 2n, ascending
};

/// Requires an even argument >= 2. Also checks that the denominator of
/// B_{2n} equals the product of the listed primes; throws std::logic_error
/// if either integrality or the denominator identity fails.
VonStaudtClausen von_staudt_clausen(int two_n);

}  // namespace toddpoly
