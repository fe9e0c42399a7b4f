#include "toddpoly/genera.hpp"

#include <stdexcept>

namespace toddpoly {
namespace {

// Coefficient of m_lambda in a product genus prod_i K(x_i): the kernel
// coefficients multiply across the parts because each factor only touches its
// own variable.
SymFn product_genus(int k, const std::vector<Rat>& kernel) {
  SymFn out(k, Basis::monomial);
  for (const auto& lambda : partitions_of(k)) {
    Rat c(1);
    for (int part : lambda.parts()) {
      c *= kernel.at(static_cast<size_t>(part));
      if (c == 0) break;
    }
    if (c != 0) out.add_term(lambda, c);
  }
  return out;
}

}  // namespace

Rat UniSeries::at(int i) const {
  if (i < 0 || i > order()) return Rat(0);
  return c[static_cast<size_t>(i)];
}

UniSeries UniSeries::mul(const UniSeries& o, int order) const {
  UniSeries out(order);
  for (int i = 0; i <= this->order() && i <= order; ++i) {
    if (c[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j <= o.order() && i + j <= order; ++j) {
      if (o.c[static_cast<size_t>(j)] == 0) continue;
      out.c[static_cast<size_t>(i + j)] +=
          c[static_cast<size_t>(i)] * o.c[static_cast<size_t>(j)];
    }
  }
  return out;
}

UniSeries UniSeries::reciprocal(int order) const {
  if (c.empty() || c[0] == 0) {
    throw std::invalid_argument("reciprocal requires a unit constant term");
  }
  UniSeries out(order);
  out.c[0] = Rat(1) / c[0];
  for (int n = 1; n <= order; ++n) {
    Rat s(0);
    for (int j = 1; j <= n && j <= this->order(); ++j) {
      if (c[static_cast<size_t>(j)] == 0) continue;
      s += c[static_cast<size_t>(j)] * out.c[static_cast<size_t>(n - j)];
    }
    out.c[static_cast<size_t>(n)] = -s / c[0];
  }
  return out;
}

UniSeries UniSeries::scale_arg(const Rat& s) const {
  UniSeries out(order());
  Rat pw(1);
  for (int i = 0; i <= order(); ++i) {
    out.c[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] * pw;
    pw *= s;
  }
  return out;
}

std::vector<Rat> todd_kernel(int order) {
  UniSeries e(order);
  Rat sign(1);
  for (int j = 0; j <= order; ++j) {
    e.c[static_cast<size_t>(j)] =
        sign / Rat(factorial(static_cast<unsigned>(j + 1)));
    sign = -sign;
  }
  return e.reciprocal(order).c;
}

std::vector<Rat> l_kernel_even(int order) {
  UniSeries cosh_y(order), sinh_y(order);
  for (int n = 0; n <= order; ++n) {
    cosh_y.c[static_cast<size_t>(n)] =
        Rat(1) / Rat(factorial(static_cast<unsigned>(2 * n)));
    sinh_y.c[static_cast<size_t>(n)] =
        Rat(1) / Rat(factorial(static_cast<unsigned>(2 * n + 1)));
  }
  return cosh_y.mul(sinh_y.reciprocal(order), order).c;
}

SymFn todd_gf(int k) { return product_genus(k, todd_kernel(k)); }

SymFn todd_forgotten(int k) {
  SymFn out(k, Basis::forgotten);
  for (const auto& lambda : partitions_of(k)) {
    Int den(1);
    for (int part : lambda.parts()) {
      den *= factorial(static_cast<unsigned>(part + 1));
    }
    out.add_term(lambda, make_rat(Int(1), den));
  }
  return out;
}

SymFn todd_g(int k) {
  SymFn out(k, Basis::gnew);
  const Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
  for (const auto& lambda : partitions_of(k)) {
    Int den(1);
    for (int part : lambda.parts()) den *= part + 1;
    out.add_term(lambda, sign * make_rat(Int(1), den));
  }
  return out;
}

SymFn l_gf(int k) { return product_genus(k, l_kernel_even(k)); }

Int denominator_of(const SymFn& sf) {
  if (sf.basis() == Basis::powersum) {
    throw std::invalid_argument(
        "denominator_of: power-sum coordinates are rational by nature; "
        "convert to an integral basis first");
  }
  std::vector<Int> dens;
  dens.reserve(sf.terms().size());
  for (const auto& [p, c] : sf.terms()) dens.push_back(c.get_den());
  return dens.empty() ? Int(1) : lcm_list(dens);
}

GenusTable genus_table(GenusKind kind, int k, const std::string& method) {
  SymFn poly(0, Basis::monomial);
  if (kind == GenusKind::todd) {
    if (method == "gf") {
      poly = todd_gf(k);
    } else if (method == "forgotten") {
      poly = todd_forgotten(k);
    } else if (method == "gbasis") {
      poly = todd_g(k);
    } else {
      throw std::invalid_argument("unknown todd method: " + method);
    }
  } else {
    if (method != "gf") {
      throw std::invalid_argument("unknown lgenus method: " + method);
    }
    poly = l_gf(k);
  }
  GenusTable t;
  t.kind = kind;
  t.k = k;
  t.in_e = convert(poly, Basis::elementary);
  t.denominator = denominator_of(t.in_e);
  t.method = method;
  return t;
}

Rat norlund_eval(int k, const std::vector<Rat>& xs) {
  UniSeries prod(k);
  prod.c[0] = Rat(1);
  for (const Rat& x : xs) {
    UniSeries d(k);
    Rat pw(1);
    for (int j = 0; j <= k; ++j) {
      d.c[static_cast<size_t>(j)] =
          pw / Rat(factorial(static_cast<unsigned>(j + 1)));
      pw *= x;
    }
    prod = prod.mul(d, k);
  }
  return prod.reciprocal(k).at(k) * Rat(factorial(static_cast<unsigned>(k)));
}

std::vector<Rat> elementary_values(const std::vector<Rat>& xs, int k) {
  std::vector<Rat> e(static_cast<size_t>(k) + 1, Rat(0));
  e[0] = 1;
  size_t used = 0;
  for (const Rat& x : xs) {
    ++used;
    size_t top = std::min(used, static_cast<size_t>(k));
    for (size_t j = top; j >= 1; --j) {
      e[j] += x * e[j - 1];
    }
  }
  return e;
}

Rat eval_at_elementary(const SymFn& sf, const std::vector<Rat>& evals) {
  SymFn in_e = convert(sf, Basis::elementary);
  Rat total(0);
  for (const auto& [lambda, c] : in_e.terms()) {
    Rat prod(1);
    for (int part : lambda.parts()) {
      if (part >= static_cast<int>(evals.size())) {
        throw std::invalid_argument("eval_at_elementary: missing e-value");
      }
      prod *= evals[static_cast<size_t>(part)];
    }
    total += c * prod;
  }
  return total;
}

}  // namespace toddpoly
