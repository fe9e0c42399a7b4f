#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "toddpoly/arith.hpp"
#include "toddpoly/partition.hpp"

namespace toddpoly {

/// The supported bases of the ring of symmetric functions. m, e, h, f and g
/// are Z-bases (unimodular integer transitions); p is a Q-basis only and is
/// kept for the involution omega and diagnostics.
enum class Basis { monomial, elementary, complete, powersum, forgotten, gnew };

char basis_symbol(Basis b);
std::optional<Basis> basis_from_symbol(char c);

/// Homogeneous degree-k element of the ring of symmetric functions, stored
/// as a coefficient map over partitions of k in one tagged basis. Immutable
/// in spirit: operations return new values. Zero coefficients are never
/// stored; equality across bases goes through equal().
class SymFn {
 public:
  SymFn(int degree, Basis basis) : degree_(degree), basis_(basis) {}

  static SymFn constant(const Rat& c);

  /// The basis element b_lambda in its own basis (single term, coefficient 1).
  static SymFn generator(Basis basis, const Partition& lambda);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const PartitionMap<Rat>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rat coeff(const Partition& lambda) const;
  SymFn& add_term(const Partition& lambda, const Rat& c);

  SymFn operator+(const SymFn& other) const;
  SymFn operator-(const SymFn& other) const;
  SymFn operator-() const;
  SymFn operator*(const Rat& scalar) const;

 private:
  int degree_ = 0;
  Basis basis_ = Basis::monomial;
  PartitionMap<Rat> coeffs_;
};

/// Exact change of basis. Any non-p target of an integer-coefficient input
/// stays integral; round trips are exact.
SymFn convert(const SymFn& sf, Basis target);

/// Exact product in the ring of symmetric functions, computed by orbit
/// convolution on monomial expansions. Result carries the left operand's
/// basis tag.
SymFn multiply(const SymFn& a, const SymFn& b);

/// The standard involution omega with omega(e_k) = h_k: convert to the
/// power-sum basis, scale p_lambda by (-1)^(|lambda|-l(lambda)), convert back.
SymFn omega(const SymFn& sf);

/// Forgotten symmetric function f_lambda = omega(m_lambda), in the m-basis
/// (Macdonald's sign convention).
SymFn forgotten(const Partition& lambda);

/// f_lambda by the independent prefix-sum permutation count: the coefficient
/// of m_mu is (-1)^(|lambda|-l(lambda)) times the number of distinct
/// permutations alpha of lambda whose prefix-sum set contains the prefix-sum
/// set of mu. Must agree with forgotten().
SymFn forgotten_combinatorial(const Partition& lambda);

/// Value at (1, 0, 0, ...): the coefficient of m_(k) after conversion to the
/// monomial basis (m_mu vanishes there for every mu with more than one part).
Rat eval_at_one(const SymFn& sf);

/// Equality as elements of the ring (compared in the monomial basis).
bool equal(const SymFn& a, const SymFn& b);

/// Per-degree transition matrix between a basis and the monomial basis.
/// Rows and columns are indexed by partitions_of(degree) in canonical order;
/// to_m[i][j] is the m_{index[i]} coefficient of basis element index[j].
struct TransitionMatrix {
  std::vector<Partition> index;
  PartitionMap<int> pos;  // partition -> row/column number
  std::vector<std::vector<Rat>> to_m;
  std::vector<std::vector<Rat>> from_m;
  Rat det_to_m;
};

/// Cached transition data for a basis at one degree. Thread-safe.
const TransitionMatrix& transition(Basis basis, int degree);

/// det of the basis -> m matrix (must be +-1 for the Z-bases).
Rat transition_determinant(Basis basis, int degree);

}  // namespace toddpoly
