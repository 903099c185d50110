// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion is self-contained and timed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sl2tor/sl2tor.hpp"

using namespace sl2tor;

namespace {

std::vector<std::string> g_notes;

void note(std::string s) { g_notes.push_back(std::move(s)); }

std::vector<Int> chain(std::vector<long> orders) {
  std::vector<Int> v(orders.begin(), orders.end());
  return chain_from_orders(v).torsion;
}

// 1. Torsion tables for n = 10, 22, 34.
bool criterion1() {
  bool ok = true;
  struct Row {
    long n;
    std::vector<long> h1, h2;
  };
  // n = 34: the source example lists (Z/3)^2 in H^2_c, but three independent
  // computations give (Z/3)^3; the corrected value is pinned here.
  std::vector<Row> rows = {{10, {4}, {2, 2, 3}},
                           {22, {4, 4, 2, 3}, {2, 2, 2, 4, 3, 3}},
                           {34, {4, 4, 4, 3, 3, 2, 2}, {8, 4, 3, 3, 3, 2, 2, 2, 2}}};
  for (const Row& r : rows) {
    if (h1_interior(r.n).torsion != chain(r.h1)) {
      ok = false;
      note("h1 torsion mismatch at n=" + std::to_string(r.n));
    }
    AbelianGroupStructure h2 = h2_compact(r.n);
    if (h2.free_rank != 0 || h2.torsion != chain(r.h2)) {
      ok = false;
      note("h2_c mismatch at n=" + std::to_string(r.n));
    }
  }
  return ok;
}

// 2. Hecke eigenvalues on boundary cohomology and the (3,24,17,23) obstruction.
bool criterion2() {
  bool ok = true;
  for (auto [p, n] :
       std::vector<std::pair<long, long>>{{11, 10}, {13, 10}, {23, 22}, {37, 34}}) {
    HeckeEigenReport rep = verify_hecke_eigen(p, n);
    if (!rep.ok) {
      ok = false;
      note("hecke not diagonal at p=" + std::to_string(p));
      continue;
    }
    for (long k = 0; k <= n; ++k)
      if (rep.eigenvalues[k] != pow_int(Int(p), n - k) + pow_int(Int(p), k + 1)) {
        ok = false;
        note("wrong eigenvalue at p=" + std::to_string(p) + " k=" + std::to_string(k));
      }
  }
  Int eig_k = pow_int(Int(3), 1) + pow_int(Int(3), 24);
  Int eig_j = pow_int(Int(3), 7) + pow_int(Int(3), 18);
  if (mod_reduce((eig_k - eig_j) * stirling2(23, 17), Int(18)) != 6) {
    ok = false;
    note("(3,24,17,23) obstruction is not 6 mod 18");
  }
  return ok;
}

// 3. Dickson invariance and orders for p in {5,7}, delta in {1,2,3}.
bool criterion3() {
  bool ok = true;
  for (long p : {5L, 7L}) {
    for (long delta : {1L, 2L, 3L}) {
      DicksonPair d = dickson_pair(p, delta);
      Int order = pow_int(Int(p), delta);
      if (!is_invariant(d.f1, p, delta) || !is_invariant(d.f2, p, delta)) {
        ok = false;
        note("not invariant at p=" + std::to_string(p) + " delta=" + std::to_string(delta));
      }
      CoefficientRing rm(order);
      if (additive_order(d.f1.with_ring(rm), p, delta) != order ||
          additive_order(d.f2.with_ring(rm), p, delta) != order) {
        ok = false;
        note("wrong order at p=" + std::to_string(p) + " delta=" + std::to_string(delta));
      }
    }
    // f1 itself fails invariance mod p^2; produce a witness coefficient
    HomogeneousPoly f1 = dickson_f1_base(p);
    if (is_invariant(f1, p, 2)) {
      ok = false;
      note("f1 unexpectedly invariant mod p^2 at p=" + std::to_string(p));
      continue;
    }
    HomogeneousPoly diff = poly_sub(act(gen_T(), f1), f1);
    long witness = -1;
    for (long v = 0; v <= diff.degree; ++v)
      if (mod_reduce(diff.coeffs[v], Int(p) * Int(p)) != 0) witness = v;
    if (witness < 0) {
      ok = false;
      note("no witness coefficient at p=" + std::to_string(p));
    }
  }
  return ok;
}

// 4. Hilbert series of the graded coinvariants vs the closed forms.
bool criterion4() {
  bool ok = true;
  for (long p : {5L, 7L}) {
    HilbertCheckReport rep = hilbert_check(p, 1, 60);
    if (!rep.ok) {
      ok = false;
      note("delta=1 mismatch at p=" + std::to_string(p) +
           " d=" + std::to_string(rep.first_mismatch));
    }
  }
  HilbertCheckReport rep = hilbert_check(5, 2, 130);
  if (!rep.ok) {
    ok = false;
    note("delta=2 mismatch at d=" + std::to_string(rep.first_mismatch));
  }
  for (long d = 1; d < 128; ++d)
    if (rep.computed[d] != 0) {
      ok = false;
      note("nonzero rank below the gap at d=" + std::to_string(d));
    }
  if (rep.computed[128] != 1) {
    ok = false;
    note("rank at d=128 is not 1");
  }
  return ok;
}

// 5. Divided-power suite: adjointness, nu recurrence, u_delta, w2.
bool criterion5() {
  bool ok = true;
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (long d : {3L, 10L, 17L})
    for (const auto& g : {gen_R(), gen_S(), gen_T()}) {
      DividedPowerElement f(d);
      HomogeneousPoly q(d);
      for (long j = 0; j <= d; ++j) {
        f.coeffs[j] = dist(rng);
        q.coeffs[j] = dist(rng);
      }
      if (pairing(dp_act(g, f), q) != pairing(f, act(g, q))) {
        ok = false;
        note("pairing not adjoint at degree " + std::to_string(d));
      }
    }
  for (long d : {8L, 25L, 40L})
    for (long i = 0; i < d; ++i) {
      DividedPowerElement lhs =
          dp_sub(dp_act(gen_T(), nu_element(d, i)), nu_element(d, i));
      if (!(lhs == dp_scale(i + 1, nu_element(d, i + 1)))) {
        ok = false;
        note("nu recurrence fails at d=" + std::to_string(d) + " i=" + std::to_string(i));
      }
    }
  for (long delta : {1L, 2L}) {
    const long p = 5;
    DividedPowerElement u = u_delta(p, delta);
    if (!(dp_act(gen_S(), u) == u) || !(dp_act(gen_T(), u) == u)) {
      ok = false;
      note("u_delta not invariant at delta=" + std::to_string(delta));
    }
    long lo = 1;
    for (long i = 0; i < delta; ++i) lo *= p;
    CoefficientRing fp((Int(p)));
    if (!(u == dp_sub(nu_element(u.degree, lo - 1, fp),
                      nu_element(u.degree, lo * p - 1, fp)))) {
      ok = false;
      note("u_delta nu-difference fails at delta=" + std::to_string(delta));
    }
  }
  DividedPowerElement w = w2_element(5);
  if (!(dp_act(gen_S(), w) == w) || !(dp_act(gen_T(), w) == w)) {
    ok = false;
    note("w2 not invariant mod 25");
  }
  bool unit = false;
  for (const Int& c : w.coeffs)
    if (mod_reduce(c, Int(5)) != 0) unit = true;
  if (!unit || !(w.with_ring(CoefficientRing(Int(5))) == u_delta(5, 2))) {
    ok = false;
    note("w2 not a primitive lift of u_2");
  }
  return ok;
}

// 6. Primitive generator U_delta and the distinguished pairing.
bool criterion6() {
  bool ok = true;
  for (auto [p, delta] : std::vector<std::pair<long, long>>{{5, 1}, {5, 2}, {7, 1}}) {
    HomogeneousPoly u = primitive_generator_U(p, delta);
    if (coinvariant_class_order(u, p, delta) != pow_int(Int(p), delta)) {
      ok = false;
      note("U order wrong at p=" + std::to_string(p) + " delta=" + std::to_string(delta));
    }
  }
  if (primitive_pairing(5, 1, 1, 0) != 1) {
    ok = false;
    note("<u_2, f1^4 f2^4 U_1> is not 1 mod 5");
  }
  return ok;
}

// 7. Eisenstein congruences for level-one cusp forms.
bool criterion7() {
  bool ok = true;
  auto expect = [&](CongruencePrediction pred, long p_max, const char* what) {
    if (!verify_congruence(pred, p_max).ok) {
      ok = false;
      note(std::string("congruence fails: ") + what);
    }
  };
  // tau(p) = p^5 + p^6 mod 5 and p^7 + p^4 mod 7 for p <= 100
  CongruencePrediction t5{10, 5, 1, 6, 5, 5};
  expect(t5, 100, "tau mod 5");
  CongruencePrediction t7{10, 7, 1, 4, 7, 7};
  expect(t7, 100, "tau mod 7");
  // tau(p) = p + p^10 mod 25 for p <= 100
  CongruencePrediction t25{10, 5, 2, 1, 10, 10};
  expect(t25, 100, "tau mod 25");
  // weight-24 determinant congruences mod 5, 7, 11, 13 for p <= 50
  for (const CongruencePrediction& pred : predict_congruences(22))
    if (pred.ell <= 13) expect(pred, 50, "weight-24 determinant");
  // T_2 on the weight-24 cusp forms: char poly x^2 - 1080x - 20468736,
  // equivalently eigenvalues -24*alpha + 552 with alpha^2 - alpha - 36042 = 0
  auto m = hecke_matrix(24, 2, 10);
  Rat tr = m[0][0] + m[1][1];
  Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (tr != 1080 || det != -20468736) {
    ok = false;
    note("T_2 characteristic polynomial mismatch on weight-24 forms");
  }
  if (Rat(-24) * 1 + 2 * Rat(552) != tr ||
      Rat(576) * Rat(-36042) + Rat(-24 * 552) + Rat(552 * 552) != det) {
    ok = false;
    note("resultant identity for -24*alpha + 552 fails");
  }
  return ok;
}

// 8. Combinatorics sweeps.
bool criterion8() {
  bool ok = true;
  for (long p : {5L, 7L})
    if (!corstir_check(corstir_table(p))) {
      ok = false;
      note("trichotomy fails at p=" + std::to_string(p));
    }
  for (long p : {5L, 7L, 11L})
    for (long delta = 1; delta <= 3; ++delta) {
      long pd = 1;
      for (long i = 0; i < delta; ++i) pd *= p;
      if (auto bad = stirl_valuation_sweep(p, delta, 4 * pd)) {
        ok = false;
        note("valuation bound fails at p=" + std::to_string(p) +
             " delta=" + std::to_string(delta) + " n=" + std::to_string(*bad));
      }
    }
  for (long p : {5L, 7L}) {
    for (long m = 1; m <= 2; ++m) {
      long pm = 1;
      for (long i = 0; i < m; ++i) pm *= p;
      for (long n = pm; n <= pm + 3 * (p - 1); ++n) {
        if (stirling_ppower_congruence(n, m, p) !=
            mod_reduce(stirling2(n, pm), pow_int(Int(p), m))) {
          ok = false;
          note("p-power congruence fails at n=" + std::to_string(n));
        }
        if (!stirling_shift_congruence(n, m, p)) {
          ok = false;
          note("shift congruence fails at n=" + std::to_string(n));
        }
      }
      for (long n = 1; n <= std::min(pm, 100L); ++n)
        if (!binom_valuation_check(n, m, p)) {
          ok = false;
          note("binomial valuation fails at n=" + std::to_string(n));
        }
    }
    for (long m = 0; m <= 40; ++m)
      for (long n = 0; n <= m; ++n)
        if (!lucas_check(m, n, p)) {
          ok = false;
          note("lucas fails at (" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
    for (long gamma = 1; gamma <= 3; ++gamma)
      for (long j = 1; j <= 40; ++j)
        if (!unit_power_valuation_check(j, gamma, p)) {
          ok = false;
          note("unit power valuation fails at j=" + std::to_string(j));
        }
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
      {"torsion tables n=10,22,34", criterion1},
      {"Hecke boundary eigenvalues + obstruction", criterion2},
      {"Dickson invariance p=5,7 delta=1..3", criterion3},
      {"Hilbert series vs closed forms", criterion4},
      {"divided-power suite", criterion5},
      {"primitive generator U_delta", criterion6},
      {"Eisenstein congruences", criterion7},
      {"combinatorics sweeps", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    g_notes.clear();
    auto t0 = std::chrono::steady_clock::now();
    bool ok = criteria[i].second();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    std::printf("[criterion %zu] %s (%.1fs) %s\n", i + 1, ok ? "PASS" : "FAIL", secs,
                criteria[i].first);
    for (const std::string& n : g_notes) std::printf("    - %s\n", n.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
