#pragma once

#include <string>
#include <vector>

#include "toddpoly/arith.hpp"
#include "toddpoly/partition.hpp"
#include "toddpoly/symfunc.hpp"

namespace toddpoly {

/// Dense truncated power series in one variable over the rationals;
/// c[i] is the coefficient of x^i.
struct UniSeries {
  std::vector<Rat> c;

  UniSeries() = default;
  explicit UniSeries(int order) : c(static_cast<size_t>(order) + 1, Rat(0)) {}

  int order() const { return static_cast<int>(c.size()) - 1; }
  Rat at(int i) const;

  UniSeries mul(const UniSeries& o, int order) const;
  /// Multiplicative inverse modulo x^{order+1}; requires c[0] != 0.
  UniSeries reciprocal(int order) const;
  /// Substitute x -> s*x.
  UniSeries scale_arg(const Rat& s) const;
};

/// q_0..q_order of Q(x) = x/(1 - e^{-x}), computed as the reciprocal of
/// (1 - e^{-x})/x = sum_j (-x)^j/(j+1)!.
std::vector<Rat> todd_kernel(int order);

/// r_0..r_order of x/tanh(x) as a series in y = x^2, computed as
/// cosh(x) / (sinh(x)/x) with both factors rewritten in y.
std::vector<Rat> l_kernel_even(int order);

/// Todd polynomial of weight k from the product generating function
/// prod_i Q(x_i): the m_lambda coefficient is prod_i q_{lambda_i}.
/// Returned in the monomial basis.
SymFn todd_gf(int k);

/// The same polynomial as sum_lambda f_lambda / prod_i (lambda_i + 1)!,
/// returned in the forgotten basis.
SymFn todd_forgotten(int k);

/// The same polynomial as (-1)^k sum_lambda g_lambda / prod_i (lambda_i + 1),
/// returned in the g basis.
SymFn todd_g(int k);

/// L-genus polynomial of weight k from prod_i x_i/tanh(x_i), written in the
/// squared variables y_i = x_i^2: the m_lambda(y) coefficient is
/// prod_i r_{lambda_i}. Returned in the monomial basis; the elementary
/// functions of y are the Pontryagin variables.
SymFn l_gf(int k);

enum class GenusKind { todd, lgenus };

/// A genus polynomial prepared for output: expanded in the elementary basis
/// (Chern variables c_i for todd, Pontryagin variables p_i for lgenus),
/// together with the least common denominator of its coefficients.
struct GenusTable {
  GenusKind kind = GenusKind::todd;
  int k = 0;
  SymFn in_e{0, Basis::elementary};
  Int denominator;
  std::string method;
};

/// method is one of "gf", "forgotten", "gbasis" for todd; "gf" for lgenus.
GenusTable genus_table(GenusKind kind, int k, const std::string& method);

/// Least common multiple of the coefficient denominators. Refuses the
/// power-sum basis, whose coordinates are not integrality-comparable.
Int denominator_of(const SymFn& sf);

/// Noerlund number B_k^{(n)}(xs) with n = xs.size():
/// k! [t^k] prod_i x_i t / (e^{x_i t} - 1).
Rat norlund_eval(int k, const std::vector<Rat>& xs);

/// e_0..e_k of the concrete values xs.
std::vector<Rat> elementary_values(const std::vector<Rat>& xs, int k);

/// Evaluate sf with the elementary generators set to evals (evals[j] is the
/// value of e_j; evals[0] is ignored and treated as 1).
Rat eval_at_elementary(const SymFn& sf, const std::vector<Rat>& evals);

}  // namespace toddpoly
