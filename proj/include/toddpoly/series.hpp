#pragma once

#include <vector>

#include "toddpoly/arith.hpp"
#include "toddpoly/partition.hpp"
#include "toddpoly/symfunc.hpp"

namespace toddpoly {

/// Polynomial with rational coefficients in the graded symbols a_1, a_2, ...
/// (symbol a_i has weight i).  A monomial a_1^2 a_3 is keyed by the partition
/// whose parts are the symbol indices with multiplicity, here (3,1,1), so the
/// key's weight is the monomial's weight.
class WeightedPoly {
 public:
  WeightedPoly() = default;

  static WeightedPoly one();
  /// The single symbol a_n (n >= 1).
  static WeightedPoly symbol(int n);

  const PartitionMap<Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Partition& key) const;
  WeightedPoly& add_term(const Partition& key, const Rat& c);

  WeightedPoly operator+(const WeightedPoly& o) const;
  WeightedPoly operator-(const WeightedPoly& o) const;
  WeightedPoly operator-() const;
  WeightedPoly operator*(const WeightedPoly& o) const;
  WeightedPoly operator*(const Rat& scalar) const;

  bool operator==(const WeightedPoly& o) const = default;

 private:
  PartitionMap<Rat> terms_;
};

/// Compositional reversion of alpha(u) = u + sum_{n>=1} a_n u^{n+1} with
/// symbolic coefficients: returns r with r[n] the coefficient polynomial b_n
/// of v^{n+1} in the inverse series, for 1 <= n <= max (r[0] is zero, and
/// r.size() == max + 1).  Solved degree by degree from alpha(beta(v)) = v.
std::vector<WeightedPoly> revert_series(int max);

/// Closed form for the same b_n: the coefficient of a_{lambda_1}...a_{lambda_l}
/// is (-1)^l (n+l)! / ((n+1)! prod_j m_j(lambda)!) over partitions lambda of n.
WeightedPoly bell_closed_form(int n);

/// Integer matrix of the coefficients of b^mu = b_{mu_1}...b_{mu_l} on the
/// monomials a^lambda, both indices running over partitions of k in canonical
/// order.  Upper triangular with diagonal (-1)^{l(lambda)}.
struct CoeffMatrix {
  int k = 0;
  std::vector<Partition> index;
  PartitionMap<int> pos;
  std::vector<std::vector<Int>> rows;  // rows[mu][lambda]

  Int entry(const Partition& mu, const Partition& lambda) const;
};

/// Cached coefficient matrix for weight k (thread-safe).
const CoeffMatrix& c_matrix(int k);

/// g_lambda expanded in the monomial basis.
SymFn g_function(const Partition& lambda);

/// g_lambda evaluated at (1, 0, 0, ...): the m_(|lambda|) coefficient of
/// g_lambda = sum_mu c(mu, lambda) f_mu, which reduces to the signed sum
/// sum_mu c(mu, lambda) (-1)^{|mu|-l(mu)} N(mu). The permutation count N(mu)
/// is computed both by direct enumeration and by the closed form
/// l!/prod_j m_j(mu)!; throws if the two disagree.
Rat g_value_at_one(const Partition& lambda);

}  // namespace toddpoly
