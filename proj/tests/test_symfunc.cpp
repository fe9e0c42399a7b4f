#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "toddpoly/symfunc.hpp"

using namespace toddpoly;

namespace {

SymFn m_terms(int degree,
              std::initializer_list<std::pair<std::vector<int>, long>> terms) {
  SymFn out(degree, Basis::monomial);
  for (const auto& [parts, c] : terms) out.add_term(Partition(parts), Rat(c));
  return out;
}

// Brute-force model: expand in d variables as exponent-vector -> coefficient.
using Mono = std::vector<int>;
using Poly = std::map<Mono, Rat>;

Poly model_m(const Partition& lambda, int d) {
  Poly out;
  if (lambda.length() > d) return out;
  Mono e(static_cast<size_t>(d), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
  std::sort(e.begin(), e.end());
  do {
    out[e] = Rat(1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

Poly model_of(const SymFn& sf_in_m, int d) {
  Poly out;
  for (const auto& [lambda, c] : sf_in_m.terms()) {
    for (const auto& [mono, unit] : model_m(lambda, d)) out[mono] += c * unit;
  }
  return out;
}

Poly model_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Mono m = ma;
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out[m] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

TEST_CASE("basis symbols round trip") {
  const Basis all[] = {Basis::monomial, Basis::elementary, Basis::complete,
                       Basis::powersum, Basis::forgotten, Basis::gnew};
  std::string letters;
  for (Basis b : all) {
    const char c = basis_symbol(b);
    letters += c;
    REQUIRE(basis_from_symbol(c).has_value());
    CHECK(*basis_from_symbol(c) == b);
  }
  CHECK(letters == "mehpfg");
  CHECK(!basis_from_symbol('q').has_value());
}

TEST_CASE("constant, generator, coeff bookkeeping") {
  const SymFn c = SymFn::constant(make_rat(5, 3));
  CHECK(c.degree() == 0);
  CHECK(c.coeff(Partition()) == make_rat(5, 3));

  const SymFn e21 = SymFn::generator(Basis::elementary, Partition({2, 1}));
  CHECK(e21.degree() == 3);
  CHECK(e21.basis() == Basis::elementary);
  CHECK(e21.coeff(Partition({2, 1})) == 1);
  CHECK(e21.coeff(Partition({3})) == 0);

  SymFn x(2, Basis::monomial);
  x.add_term(Partition({2}), Rat(1));
  x.add_term(Partition({2}), Rat(-1));  // cancels to zero and is dropped
  CHECK(x.is_zero());
}

TEST_CASE("classical degree-2 expansions in the monomial basis") {
  CHECK(convert(SymFn::generator(Basis::elementary, Partition({2})),
                Basis::monomial)
            .terms() == m_terms(2, {{{1, 1}, 1}}).terms());
  CHECK(convert(SymFn::generator(Basis::complete, Partition({2})),
                Basis::monomial)
            .terms() == m_terms(2, {{{2}, 1}, {{1, 1}, 1}}).terms());
  CHECK(convert(SymFn::generator(Basis::powersum, Partition({2})),
                Basis::monomial)
            .terms() == m_terms(2, {{{2}, 1}}).terms());
  // e_1^2 = m_(2) + 2 m_(1,1).
  CHECK(convert(SymFn::generator(Basis::elementary, Partition({1, 1})),
                Basis::monomial)
            .terms() == m_terms(2, {{{2}, 1}, {{1, 1}, 2}}).terms());
}

TEST_CASE("multiply matches the monomial model and classical products") {
  // m_(1) * m_(1) = m_(2) + 2 m_(1,1).
  const SymFn m1 = SymFn::generator(Basis::monomial, Partition({1}));
  CHECK(multiply(m1, m1).terms() ==
        m_terms(2, {{{2}, 1}, {{1, 1}, 2}}).terms());
  // m_(1) * m_(2) = m_(3) + m_(2,1).
  const SymFn m2 = SymFn::generator(Basis::monomial, Partition({2}));
  CHECK(multiply(m1, m2).terms() ==
        m_terms(3, {{{3}, 1}, {{2, 1}, 1}}).terms());

  // Random-ish mixed products validated against the d-variable model.
  for (int d1 = 1; d1 <= 3; ++d1) {
    for (int d2 = 1; d2 <= 3; ++d2) {
      SymFn a(d1, Basis::monomial);
      long j = 1;
      for (const Partition& p : partitions_of(d1)) a.add_term(p, Rat(j++));
      SymFn b(d2, Basis::monomial);
      j = 2;
      for (const Partition& p : partitions_of(d2)) b.add_term(p, Rat(j += 3));
      const SymFn prod = multiply(a, b);
      const int d = d1 + d2;  // enough variables to see every monomial
      CHECK(model_of(prod, d) == model_mul(model_of(a, d), model_of(b, d)));
    }
  }
}

TEST_CASE("multiplicative bases concatenate under multiply") {
  const SymFn p2 = SymFn::generator(Basis::powersum, Partition({2}));
  const SymFn p31 = SymFn::generator(Basis::powersum, Partition({3, 1}));
  const SymFn prod = multiply(p2, p31);
  CHECK(prod.basis() == Basis::powersum);
  CHECK(prod.terms() ==
        SymFn::generator(Basis::powersum, Partition({3, 2, 1})).terms());

  const SymFn e2 = SymFn::generator(Basis::elementary, Partition({2}));
  const SymFn e1 = SymFn::generator(Basis::elementary, Partition({1}));
  CHECK(multiply(e2, e1).terms() ==
        SymFn::generator(Basis::elementary, Partition({2, 1})).terms());

  const SymFn h3 = SymFn::generator(Basis::complete, Partition({3}));
  const SymFn h21 = SymFn::generator(Basis::complete, Partition({2, 1}));
  CHECK(multiply(h3, h21).terms() ==
        SymFn::generator(Basis::complete, Partition({3, 2, 1})).terms());
}

TEST_CASE("omega on generators and power sums") {
  for (int k = 1; k <= 6; ++k) {
    const SymFn ek = SymFn::generator(Basis::elementary, Partition({k}));
    const SymFn hk = SymFn::generator(Basis::complete, Partition({k}));
    CHECK(equal(omega(ek), hk));
    CHECK(equal(omega(hk), ek));
    const SymFn pk = SymFn::generator(Basis::powersum, Partition({k}));
    const SymFn image = omega(pk);
    CHECK(equal(image, k % 2 == 1 ? pk : -pk));
  }
}

TEST_CASE("omega is an involution on mixed elements") {
  for (int d = 1; d <= 5; ++d) {
    SymFn x(d, Basis::monomial);
    long j = 0;
    for (const Partition& p : partitions_of(d)) {
      x.add_term(p, make_rat(2 * j + 1, j + 2));
      ++j;
    }
    CHECK(equal(omega(omega(x)), x));
  }
}

TEST_CASE("forgotten golden expansions") {
  CHECK(forgotten(Partition({2})).terms() == m_terms(2, {{{2}, -1}}).terms());
  CHECK(forgotten(Partition({1, 1})).terms() ==
        m_terms(2, {{{1, 1}, 1}, {{2}, 1}}).terms());
  CHECK(forgotten(Partition({2, 1})).terms() ==
        m_terms(3, {{{2, 1}, -1}, {{3}, -2}}).terms());
  CHECK(forgotten(Partition({3})).terms() == m_terms(3, {{{3}, 1}}).terms());
  for (int d = 0; d <= 6; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      CHECK(forgotten(lambda).terms() ==
            forgotten_combinatorial(lambda).terms());
    }
  }
}

TEST_CASE("eval_at_one on the classical bases") {
  for (int k = 1; k <= 8; ++k) {
    CHECK(eval_at_one(SymFn::generator(Basis::complete, Partition({k}))) == 1);
    CHECK(eval_at_one(SymFn::generator(Basis::powersum, Partition({k}))) == 1);
    CHECK(eval_at_one(SymFn::generator(Basis::elementary, Partition({k}))) ==
          (k == 1 ? 1 : 0));
    CHECK(eval_at_one(SymFn::generator(Basis::monomial, Partition({k}))) == 1);
  }
  // f_(2,1)(1,0,...) = (-1)^(3-2) N((2,1)) = -2.
  CHECK(eval_at_one(forgotten(Partition({2, 1}))) == -2);
  CHECK(eval_at_one(SymFn::constant(make_rat(7, 2))) == make_rat(7, 2));
}

TEST_CASE("transition matrices invert exactly") {
  const Basis all[] = {Basis::elementary, Basis::complete, Basis::powersum,
                       Basis::forgotten, Basis::gnew};
  for (int d = 0; d <= 6; ++d) {
    for (Basis b : all) {
      const TransitionMatrix& t = transition(b, d);
      const size_t n = t.index.size();
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          Rat sum(0);
          for (size_t s = 0; s < n; ++s) sum += t.to_m[i][s] * t.from_m[s][j];
          CHECK(sum == (i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("Z-basis determinants are unimodular, powersum is not") {
  for (int d = 0; d <= 7; ++d) {
    for (Basis b : {Basis::elementary, Basis::complete, Basis::forgotten,
                    Basis::gnew}) {
      const Rat det = transition_determinant(b, d);
      CHECK((det == 1 || det == -1));
    }
  }
  // det of the powersum transition at degree 2 is +-2 (p is not a Z-basis).
  Rat detp = transition_determinant(Basis::powersum, 2);
  CHECK((detp == 2 || detp == -2));
}

TEST_CASE("convert round trips across all basis pairs") {
  const Basis all[] = {Basis::monomial, Basis::elementary, Basis::complete,
                       Basis::powersum, Basis::forgotten, Basis::gnew};
  for (int d = 1; d <= 5; ++d) {
    for (Basis b1 : all) {
      SymFn x(d, b1);
      long j = 0;
      for (const Partition& p : partitions_of(d)) {
        x.add_term(p, make_rat(j + 1, (j % 4) + 1));
        ++j;
      }
      for (Basis b2 : all) {
        const SymFn back = convert(convert(x, b2), b1);
        CHECK(back.terms() == x.terms());
        CHECK(equal(convert(x, b2), x));
      }
    }
  }
}

TEST_CASE("duality between e and h") {
  for (int k = 1; k <= 8; ++k) {
    SymFn acc(k, Basis::monomial);
    for (int i = 0; i <= k; ++i) {
      SymFn ei = i == 0 ? SymFn::constant(Rat(1))
                        : SymFn::generator(Basis::elementary, Partition({i}));
      SymFn hk = i == k
                     ? SymFn::constant(Rat(1))
                     : SymFn::generator(Basis::complete, Partition({k - i}));
      SymFn term = convert(multiply(convert(ei, Basis::monomial),
                                    convert(hk, Basis::monomial)),
                           Basis::monomial);
      acc = i % 2 == 0 ? acc + term : acc - term;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("g basis weight-2 golden rows") {
  const SymFn g2 = convert(SymFn::generator(Basis::gnew, Partition({2})),
                           Basis::monomial);
  CHECK(g2.terms() == m_terms(2, {{{2}, 1}}).terms());
  const SymFn g11 = convert(SymFn::generator(Basis::gnew, Partition({1, 1})),
                            Basis::monomial);
  CHECK(g11.terms() == m_terms(2, {{{1, 1}, 1}, {{2}, -1}}).terms());
}
