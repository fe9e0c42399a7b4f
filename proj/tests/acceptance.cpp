// Acceptance gate: ten end-to-end criteria over the Todd/L-polynomial stack,
// each checked in exact rational arithmetic (tolerance zero) against golden
// tables and cross-construction identities, with wall-clock budgets.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <toddpoly/arith.hpp>
#include <toddpoly/genera.hpp>
#include <toddpoly/numbers.hpp>
#include <toddpoly/partition.hpp>
#include <toddpoly/series.hpp>
#include <toddpoly/symfunc.hpp>
#include <toddpoly/verify.hpp>

#include <chrono>
#include <cstdio>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

using namespace toddpoly;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string g_detail;

bool expect(bool ok, const std::string& what) {
  if (!ok && g_detail.empty()) g_detail = what;
  return ok;
}

SymFn table(Basis b, int degree,
            std::initializer_list<std::pair<std::vector<int>, long>> terms,
            long den = 1) {
  SymFn out(degree, b);
  for (const auto& [parts, num] : terms) {
    out.add_term(Partition(std::vector<int>(parts)), make_rat(num, den));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1. Golden Todd and L tables (T_6 with the degree-correct c_1^2 c_4 term).

bool criterion1() {
  bool ok = true;
  const std::vector<std::pair<SymFn, long>> todd = {
      {table(Basis::elementary, 0, {{{}, 1}}), 1},
      {table(Basis::elementary, 1, {{{1}, 1}}, 2), 2},
      {table(Basis::elementary, 2, {{{2}, 1}, {{1, 1}, 1}}, 12), 12},
      {table(Basis::elementary, 3, {{{2, 1}, 1}}, 24), 24},
      {table(Basis::elementary, 4,
             {{{4}, -1}, {{3, 1}, 1}, {{2, 2}, 3}, {{2, 1, 1}, 4},
              {{1, 1, 1, 1}, -1}},
             720),
       720},
      {table(Basis::elementary, 5,
             {{{4, 1}, -1}, {{3, 1, 1}, 1}, {{2, 2, 1}, 3},
              {{2, 1, 1, 1}, -1}},
             1440),
       1440},
      {table(Basis::elementary, 6,
             {{{6}, 2}, {{5, 1}, -2}, {{4, 2}, -9}, {{4, 1, 1}, -5},
              {{3, 3}, -1}, {{3, 2, 1}, 11}, {{3, 1, 1, 1}, 5},
              {{2, 2, 2}, 10}, {{2, 2, 1, 1}, 11}, {{2, 1, 1, 1, 1}, -12},
              {{1, 1, 1, 1, 1, 1}, 2}},
             60480),
       60480}};
  for (int k = 0; k <= 6; ++k) {
    const GenusTable t = genus_table(GenusKind::todd, k, "gf");
    ok = expect(equal(t.in_e, todd[k].first),
                "T_" + std::to_string(k) + " table") &&
         ok;
    ok = expect(t.denominator == Int(todd[k].second),
                "T_" + std::to_string(k) + " denominator") &&
         ok;
  }

  const std::vector<std::pair<SymFn, long>> lgen = {
      {table(Basis::elementary, 0, {{{}, 1}}), 1},
      {table(Basis::elementary, 1, {{{1}, 1}}, 3), 3},
      {table(Basis::elementary, 2, {{{2}, 7}, {{1, 1}, -1}}, 45), 45},
      {table(Basis::elementary, 3, {{{3}, 62}, {{2, 1}, -13}, {{1, 1, 1}, 2}},
             945),
       945},
      {table(Basis::elementary, 4,
             {{{4}, 381}, {{3, 1}, -71}, {{2, 2}, -19}, {{2, 1, 1}, 22},
              {{1, 1, 1, 1}, -3}},
             14175),
       14175}};
  for (int k = 0; k <= 4; ++k) {
    const GenusTable t = genus_table(GenusKind::lgenus, k, "gf");
    ok = expect(equal(t.in_e, lgen[k].first),
                "L_" + std::to_string(k) + " table") &&
         ok;
    ok = expect(t.denominator == Int(lgen[k].second),
                "L_" + std::to_string(k) + " denominator") &&
         ok;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Three independent Todd constructions agree.

bool criterion2(double* small_elapsed, double* full_elapsed) {
  bool ok = true;
  const auto t0 = Clock::now();
  for (int k = 0; k <= 6; ++k) {
    const SymFn a = todd_gf(k);
    ok = expect(equal(a, todd_forgotten(k)),
                "gf vs forgotten at k = " + std::to_string(k)) &&
         ok;
    ok = expect(equal(a, todd_g(k)),
                "gf vs gbasis at k = " + std::to_string(k)) &&
         ok;
  }
  *small_elapsed = seconds_since(t0);
  for (int k = 7; k <= 10; ++k) {
    const SymFn a = todd_gf(k);
    ok = expect(equal(a, todd_forgotten(k)),
                "gf vs forgotten at k = " + std::to_string(k)) &&
         ok;
    ok = expect(equal(a, todd_g(k)),
                "gf vs gbasis at k = " + std::to_string(k)) &&
         ok;
  }
  *full_elapsed = seconds_since(t0);
  ok = expect(*small_elapsed < 10.0, "k <= 6 budget of 10 s exceeded") && ok;
  ok = expect(*full_elapsed < 300.0, "k <= 10 budget of 5 min exceeded") && ok;
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Hirzebruch numbers: Todd denominators and three constructions.

bool criterion3() {
  bool ok = true;
  for (int k = 0; k <= 10; ++k) {
    ok = expect(denominator_of(todd_gf(k)) == hirzebruch_prime(k),
                "denominator_of(T_k) != h_k at k = " + std::to_string(k)) &&
         ok;
  }
  for (int k = 0; k <= 60; ++k) {
    const Int a = hirzebruch_prime(k);
    ok = expect(a == hirzebruch_lcm_factorial(k) &&
                    a == hirzebruch_lcm_plain(k),
                "h_k methods disagree at k = " + std::to_string(k)) &&
         ok;
  }
  const long golden[] = {1, 2, 12, 24, 720, 1440, 60480};
  for (int k = 0; k <= 6; ++k) {
    ok = expect(hirzebruch_prime(k) == Int(golden[k]),
                "h_" + std::to_string(k) + " golden") &&
         ok;
  }
  for (int k = 0; 2 * k + 1 <= 60; ++k) {
    ok = expect(hirzebruch_prime(2 * k + 1) == 2 * hirzebruch_prime(2 * k),
                "h_{2k+1} = 2 h_{2k} at k = " + std::to_string(k)) &&
         ok;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 4. L-genus denominators.

bool criterion4() {
  bool ok = true;
  for (int k = 0; k <= 5; ++k) {
    ok = expect(denominator_of(l_gf(k)) == l_denominator_prime(k),
                "denominator_of(L_k) at k = " + std::to_string(k)) &&
         ok;
  }
  for (int k = 0; k <= 30; ++k) {
    const Int a = l_denominator_prime(k);
    ok = expect(a == l_denominator_lcm(k) && a == l_from_hirzebruch(k),
                "mu(L_k) methods disagree at k = " + std::to_string(k)) &&
         ok;
    Int pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), 2 * k);
    const Int h = hirzebruch_prime(2 * k);
    ok = expect(h % pow2 == 0 && a == h / pow2,
                "mu(L_k) != h_{2k}/2^{2k} at k = " + std::to_string(k)) &&
         ok;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Power-series reversion.

bool criterion5() {
  bool ok = true;
  const auto b = revert_series(10);

  WeightedPoly b1, b2, b3, b4;
  b1.add_term(Partition({1}), Rat(-1));
  b2.add_term(Partition({1, 1}), Rat(2));
  b2.add_term(Partition({2}), Rat(-1));
  b3.add_term(Partition({1, 1, 1}), Rat(-5));
  b3.add_term(Partition({2, 1}), Rat(5));
  b3.add_term(Partition({3}), Rat(-1));
  b4.add_term(Partition({1, 1, 1, 1}), Rat(14));
  b4.add_term(Partition({2, 1, 1}), Rat(-21));
  b4.add_term(Partition({2, 2}), Rat(3));
  b4.add_term(Partition({3, 1}), Rat(6));
  b4.add_term(Partition({4}), Rat(-1));
  ok = expect(b.at(1) == b1, "b_1 golden") && ok;
  ok = expect(b.at(2) == b2, "b_2 golden") && ok;
  ok = expect(b.at(3) == b3, "b_3 golden") && ok;
  ok = expect(b.at(4) == b4, "b_4 golden") && ok;

  for (int n = 1; n <= 10; ++n) {
    ok = expect(b.at(n) == bell_closed_form(n),
                "reversion vs closed form at n = " + std::to_string(n)) &&
         ok;
    const Rat head = b.at(n).coeff(Partition(std::vector<int>(n, 1)));
    const Rat want = Rat(n % 2 == 0 ? 1 : -1) * Rat(catalan(n));
    ok = expect(head == want,
                "a_1^n coefficient at n = " + std::to_string(n)) &&
         ok;
    for (const auto& [key, c] : b.at(n).terms()) {
      ok = expect(c.get_den() == 1,
                  "non-integer coefficient in b_" + std::to_string(n) +
                      " at " + key.to_string()) &&
           ok;
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 6. g-basis tables in forgotten coordinates and C-matrix triangularity.

PartitionMap<SymFn> golden_g_in_f(int k) {
  PartitionMap<SymFn> out;
  if (k == 2) {
    out.emplace(Partition({2}), table(Basis::forgotten, 2, {{{2}, -1}}));
    out.emplace(Partition({1, 1}),
                table(Basis::forgotten, 2, {{{1, 1}, 1}, {{2}, 2}}));
  } else if (k == 3) {
    out.emplace(Partition({3}), table(Basis::forgotten, 3, {{{3}, -1}}));
    out.emplace(Partition({2, 1}),
                table(Basis::forgotten, 3, {{{2, 1}, 1}, {{3}, 5}}));
    out.emplace(Partition({1, 1, 1}),
                table(Basis::forgotten, 3,
                      {{{1, 1, 1}, -1}, {{2, 1}, -2}, {{3}, -5}}));
  } else if (k == 4) {
    out.emplace(Partition({4}), table(Basis::forgotten, 4, {{{4}, -1}}));
    // The (3,1) row carries the degree-consistency correction: + 6 f_(4).
    out.emplace(Partition({3, 1}),
                table(Basis::forgotten, 4, {{{3, 1}, 1}, {{4}, 6}}));
    out.emplace(Partition({2, 2}),
                table(Basis::forgotten, 4, {{{2, 2}, 1}, {{4}, 3}}));
    out.emplace(Partition({2, 1, 1}),
                table(Basis::forgotten, 4,
                      {{{2, 1, 1}, -1}, {{2, 2}, -4}, {{3, 1}, -5},
                       {{4}, -21}}));
    out.emplace(Partition({1, 1, 1, 1}),
                table(Basis::forgotten, 4,
                      {{{1, 1, 1, 1}, 1}, {{2, 1, 1}, 2}, {{2, 2}, 4},
                       {{3, 1}, 5}, {{4}, 14}}));
  }
  return out;
}

bool criterion6() {
  bool ok = true;
  for (int k = 2; k <= 4; ++k) {
    const CoeffMatrix& m = c_matrix(k);
    for (const auto& [lambda, want] : golden_g_in_f(k)) {
      for (const Partition& mu : m.index) {
        ok = expect(Rat(m.entry(mu, lambda)) == want.coeff(mu),
                    "c(" + mu.to_string() + "," + lambda.to_string() +
                        ") at k = " + std::to_string(k)) &&
             ok;
      }
    }
  }
  for (int k = 1; k <= 8; ++k) {
    const CoeffMatrix& m = c_matrix(k);
    const size_t n = m.index.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < i; ++j) {
        ok = expect(m.rows[i][j] == 0,
                    "C(" + std::to_string(k) + ") not triangular at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")") &&
             ok;
      }
      const Int want = m.index[i].length() % 2 == 0 ? 1 : -1;
      ok = expect(m.rows[i][i] == want,
                  "C(" + std::to_string(k) + ") diagonal at " +
                      m.index[i].to_string()) &&
           ok;
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 7. Bernoulli numbers: four constructions and the Todd evaluation identity.

bool criterion7() {
  bool ok = true;
  for (int k = 0; k <= 20; ++k) {
    const Rat ref = bernoulli_ref(static_cast<unsigned>(k));
    ok = expect(ref == bernoulli_stirling(k) &&
                    ref == bernoulli_partition_factorial(k) &&
                    ref == bernoulli_partition_g(k),
                "Bernoulli methods disagree at k = " + std::to_string(k)) &&
         ok;
    if (k >= 3 && k % 2 == 1) {
      ok = expect(ref == 0, "B_k != 0 at odd k = " + std::to_string(k)) && ok;
    }
  }
  ok = expect(bernoulli_ref(12) == make_rat(-691, 2730), "B_12 golden") && ok;

  for (int k = 0; k <= 12; ++k) {
    const Rat want = Rat(k % 2 == 0 ? 1 : -1) *
                     bernoulli_ref(static_cast<unsigned>(k)) /
                     Rat(factorial(static_cast<unsigned>(k)));
    ok = expect(eval_at_one(todd_gf(k)) == want,
                "eval_at_one(T_k) at k = " + std::to_string(k)) &&
         ok;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 8. von Staudt-Clausen.

bool criterion8() {
  bool ok = true;
  for (int n = 1; n <= 15; ++n) {
    const VonStaudtClausen v = von_staudt_clausen(2 * n);
    Rat sum = bernoulli_ref(static_cast<unsigned>(2 * n));
    Int prod = 1;
    for (const Int& p : v.primes) {
      sum += make_rat(Int(1), p);
      prod *= p;
    }
    ok = expect(sum.get_den() == 1 && sum.get_num() == v.integer_part,
                "B_{2n} + sum 1/p not the stated integer at n = " +
                    std::to_string(n)) &&
         ok;
    ok = expect(bernoulli_ref(static_cast<unsigned>(2 * n)).get_den() == prod,
                "denominator(B_{2n}) != product of primes at n = " +
                    std::to_string(n)) &&
         ok;
    const Int q = bernoulli_ref(static_cast<unsigned>(2 * n)).get_den();
    const Int h = hirzebruch_prime(2 * n);
    ok = expect(h % q == 0,
                "q_{2n} does not divide h_{2n} at n = " + std::to_string(n)) &&
         ok;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 9. Buchstaber numbers.

bool criterion9() {
  bool ok = true;
  const long golden[] = {1, 1, 1, 1, 3, 3, 3, 3, 45, 45, 45, 45,
                         945, 945, 945, 945};
  for (int n = 1; n <= 16; ++n) {
    ok = expect(buchstaber(n) == Int(golden[n - 1]),
                "b_" + std::to_string(n) + " golden") &&
         ok;
  }
  for (int k = 0; k <= 15; ++k) {
    ok = expect(buchstaber(4 * k + 1) == l_denominator_prime(k),
                "b_{4k+1} != mu(L_k) at k = " + std::to_string(k)) &&
         ok;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 10. Property suites and the full verification run.

bool criterion10(double* verify_elapsed) {
  bool ok = true;

  // omega: generator images, involution, ring map.
  for (int k = 1; k <= 8; ++k) {
    const SymFn ek = SymFn::generator(Basis::elementary, Partition({k}));
    const SymFn hk = SymFn::generator(Basis::complete, Partition({k}));
    const SymFn pk = SymFn::generator(Basis::powersum, Partition({k}));
    ok = expect(equal(omega(ek), hk), "omega(e_k)") && ok;
    ok = expect(equal(omega(hk), ek), "omega(h_k)") && ok;
    ok = expect(equal(omega(pk), pk * Rat(k % 2 == 1 ? 1 : -1)),
                "omega(p_k)") &&
         ok;
  }
  {
    const SymFn f = SymFn::generator(Basis::elementary, Partition({2, 1}));
    const SymFn g = SymFn::generator(Basis::complete, Partition({2}));
    ok = expect(equal(omega(multiply(f, convert(g, Basis::elementary))),
                      multiply(omega(f), convert(omega(g), Basis::complete))),
                "omega is not a ring map") &&
         ok;
    SymFn mix(5, Basis::monomial);
    int j = 0;
    for (const Partition& p : partitions_of(5)) {
      mix = mix + SymFn::generator(Basis::monomial, p) *
                      make_rat(j % 2 == 0 ? j + 1 : -(j + 1), (j % 3) + 1);
      ++j;
    }
    ok = expect(equal(omega(omega(mix)), mix), "omega not an involution") && ok;
  }

  // Forgotten functions: involution route vs combinatorial route.
  for (int d = 1; d <= 8; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      ok = expect(equal(forgotten(lambda), forgotten_combinatorial(lambda)),
                  "forgotten routes at " + lambda.to_string()) &&
           ok;
    }
  }

  // Duality: sum_i (-1)^i e_i h_{k-i} = 0.
  for (int k = 1; k <= 10; ++k) {
    SymFn acc(k, Basis::monomial);
    for (int i = 0; i <= k; ++i) {
      SymFn term =
          i == 0 ? convert(SymFn::generator(Basis::complete, Partition({k})),
                           Basis::monomial)
          : i == k
              ? convert(SymFn::generator(Basis::elementary, Partition({k})),
                        Basis::monomial)
              : convert(
                    multiply(
                        SymFn::generator(Basis::elementary, Partition({i})),
                        SymFn::generator(Basis::complete, Partition({k - i}))),
                    Basis::monomial);
      acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    ok = expect(acc.is_zero(), "duality fails at k = " + std::to_string(k)) &&
         ok;
  }

  // Denominators are independent of the integral basis used.
  for (int k = 0; k <= 10; ++k) {
    const SymFn t = todd_gf(k);
    const Int want = denominator_of(t);
    for (Basis b : {Basis::elementary, Basis::complete, Basis::forgotten,
                    Basis::gnew}) {
      ok = expect(denominator_of(convert(t, b)) == want,
                  "denominator depends on basis at k = " + std::to_string(k)) &&
           ok;
    }
  }

  // All integral-basis transition matrices are unimodular.
  for (int d = 1; d <= 8; ++d) {
    for (Basis b : {Basis::elementary, Basis::complete, Basis::forgotten,
                    Basis::gnew}) {
      const Rat det = transition_determinant(b, d);
      ok = expect(det == 1 || det == -1,
                  "non-unimodular transition at degree " + std::to_string(d)) &&
           ok;
    }
  }

  // Full verification pass with default bounds.
  const auto t0 = Clock::now();
  const VerifyReport report = run_verify({}, -1);
  *verify_elapsed = seconds_since(t0);
  ok = expect(report.ok(), "run_verify reports a failing check") && ok;
  ok = expect(*verify_elapsed < 600.0, "verify budget of 10 min exceeded") &&
       ok;
  return ok;
}

}  // namespace

int main() {
  bool all_ok = true;

  const auto run = [&all_ok](int id, const char* description, double budget,
                             auto&& fn) {
    g_detail.clear();
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      g_detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(t0);
    if (budget > 0 && elapsed >= budget) {
      ok = false;
      if (g_detail.empty()) g_detail = "budget exceeded";
    }
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id,
                description, elapsed, g_detail.empty() ? "" : " -- ",
                g_detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  };

  run(1, "golden Todd tables T_0..T_6 and L tables L_0..L_4", 10.0,
      criterion1);
  double small_elapsed = 0.0, full_elapsed = 0.0;
  run(2, "three-way Todd construction agreement for k <= 10", 300.0,
      [&] { return criterion2(&small_elapsed, &full_elapsed); });
  run(3, "Hirzebruch numbers: Todd denominators and three methods to k = 60",
      30.0, criterion3);
  run(4, "L-genus denominators match h_{2k}/2^{2k} through k = 30", 30.0,
      criterion4);
  run(5, "series reversion: golden b_n, closed form, Catalan, integrality",
      60.0, criterion5);
  run(6, "g-basis tables in forgotten coordinates; C-matrix triangularity",
      0.0, criterion6);
  run(7, "Bernoulli four-way agreement and Todd evaluation identity", 60.0,
      criterion7);
  run(8, "von Staudt-Clausen decomposition and denominator divisibility", 0.0,
      criterion8);
  run(9, "Buchstaber numbers: golden plateau table and b_{4k+1} = mu(L_k)",
      0.0, criterion9);
  double verify_elapsed = 0.0;
  run(10, "property suites and full default verification pass", 600.0,
      [&] { return criterion10(&verify_elapsed); });

  return all_ok ? 0 : 1;
}
