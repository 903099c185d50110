#pragma once

// Graded coinvariants of Z/p^delta[X,Y] under SL2(Z/p^delta): degree-d slices
// as cokernels of [(act(S)-Id) | (act(T)-Id)] mod p^delta, Hilbert series
// against the closed forms, class-order tracking of specific polynomials,
// and the distinguished primitive generator U_delta.

#include "sl2tor/divpow.hpp"
#include "sl2tor/invariants.hpp"

namespace sl2tor {

inline IntMatrix coinvariant_relation_matrix(long n) {
  IntMatrix as = mat_sub(action_matrix(gen_S(), n), IntMatrix::identity(n + 1));
  IntMatrix at = mat_sub(action_matrix(gen_T(), n), IntMatrix::identity(n + 1));
  return hconcat(as, at);
}

inline CokernelModResult coinvariants_degree(long p, long delta, long d) {
  if (p <= 3 || !is_prime(Int(p)) || delta < 1 || d < 0)
    throw std::invalid_argument("coinvariants_degree: bad arguments");
  return cokernel_mod(coinvariant_relation_matrix(d), pow_int(Int(p), delta));
}

// Additive order of the class of P in the degree-d coinvariants mod p^delta.
inline Int coinvariant_class_order(const HomogeneousPoly& poly, long p, long delta) {
  CokernelModResult r = coinvariants_degree(p, delta, poly.degree);
  std::vector<Int> v(poly.coeffs.begin(), poly.coeffs.end());
  std::optional<Int> o = class_order(r.snf, v);
  if (!o) throw std::logic_error("coinvariant_class_order: infinite order");
  return *o;
}

struct HilbertSeries {
  long p = 0;
  long delta = 1;
  std::vector<long> coefficients;  // index d -> count of Z/p^delta summands
};

// Closed form: delta = 1 uses
//   1 + t^{2(p-1)}/(1-t^{p-1}) + t^{p(p+1)}/((1-t^{p+1})(1-t^{p(p-1)}));
// delta >= 2 uses
//   1 + t^{p^{delta+1}+p^{delta-1}-2}/((1-t^{p^{delta-1}(p+1)})(1-t^{p^delta(p-1)})).
inline HilbertSeries hilbert_closed_form(long p, long delta, long d_max) {
  HilbertSeries h;
  h.p = p;
  h.delta = delta;
  h.coefficients.assign(d_max + 1, 0);
  h.coefficients[0] += 1;
  auto add_two_denoms = [&](long num, long den1, long den2) {
    for (long a = 0; num + a * den1 <= d_max; ++a)
      for (long b = 0; num + a * den1 + b * den2 <= d_max; ++b)
        h.coefficients[num + a * den1 + b * den2] += 1;
  };
  if (delta == 1) {
    for (long k = 0; 2 * (p - 1) + k * (p - 1) <= d_max; ++k)
      h.coefficients[2 * (p - 1) + k * (p - 1)] += 1;
    add_two_denoms(p * (p + 1), p + 1, p * (p - 1));
  } else {
    long q = 1;
    for (long i = 1; i < delta; ++i) q *= p;
    add_two_denoms(q * p * p + q - 2, q * (p + 1), q * p * (p - 1));
  }
  return h;
}

struct HilbertCheckReport {
  long p = 0;
  long delta = 1;
  long d_max = 0;
  bool ok = false;
  long first_mismatch = -1;
  std::vector<long> computed;
  std::vector<long> expected;
};

inline HilbertCheckReport hilbert_check(long p, long delta, long d_max) {
  HilbertCheckReport rep;
  rep.p = p;
  rep.delta = delta;
  rep.d_max = d_max;
  rep.expected = hilbert_closed_form(p, delta, d_max).coefficients;
  rep.computed.assign(d_max + 1, 0);
  rep.ok = true;
  for (long d = 0; d <= d_max; ++d) {
    rep.computed[d] = coinvariants_degree(p, delta, d).rank_m;
    if (rep.ok && rep.computed[d] != rep.expected[d]) {
      rep.ok = false;
      rep.first_mismatch = d;
    }
  }
  return rep;
}

// U_delta = X^{p^{delta+1}-p^delta+p^{delta-1}-1} Y^{p^delta-1},
// degree p^{delta+1} + p^{delta-1} - 2.
inline HomogeneousPoly primitive_generator_U(long p, long delta) {
  long q = 1;
  for (long i = 1; i < delta; ++i) q *= p;
  long xexp = q * p * p - q * p + q - 1;
  long yexp = q * p - 1;
  return HomogeneousPoly::monomial(xexp + yexp, xexp);
}

struct PrimitiveGeneratorReport {
  long p = 0;
  long delta = 1;
  bool order_ok = false;          // class of U_delta has order p^delta
  bool rank_one = false;          // single Z/p^delta summand in that degree
  bool products_ok = false;       // sampled f1^a f2^b * U_delta stay primitive
  std::vector<std::tuple<long, long, Int>> product_orders;  // (a, b, order)
};

// Sampled (a, b) exponent pairs keeping the product degree at desk scale.
inline std::vector<std::pair<long, long>> primitive_sample_exponents(long p,
                                                                     long delta) {
  if (delta >= 2) return {{1, 0}};            // p=5: degree 128+30 = 158
  if (p == 5) return {{1, 0}, {0, 1}, {2, 0}};  // degrees 30, 44, 36
  return {{1, 0}, {0, 1}};                      // p=7: degrees 56, 90
}

inline PrimitiveGeneratorReport primitive_generator_check(long p, long delta) {
  PrimitiveGeneratorReport rep;
  rep.p = p;
  rep.delta = delta;
  Int m = pow_int(Int(p), delta);
  HomogeneousPoly u = primitive_generator_U(p, delta);
  CokernelModResult cd = coinvariants_degree(p, delta, u.degree);
  rep.rank_one = cd.rank_m == 1;
  std::vector<Int> v(u.coeffs.begin(), u.coeffs.end());
  std::optional<Int> o = class_order(cd.snf, v);
  rep.order_ok = o.has_value() && *o == m;

  DicksonPair dp = dickson_pair(p, delta);
  rep.products_ok = true;
  for (auto [a, b] : primitive_sample_exponents(p, delta)) {
    HomogeneousPoly f = poly_mul(poly_mul(poly_pow(dp.f1, a), poly_pow(dp.f2, b)), u);
    Int ord = coinvariant_class_order(f, p, delta);
    rep.product_orders.emplace_back(a, b, ord);
    if (ord != m) rep.products_ok = false;
  }
  return rep;
}

// <u_{delta+r}, f_{1,delta}^{p^r-1+a p(p-1)} f_{2,delta}^{p^r-1-a(p+1)} U_delta>
// vanishes mod p for a > 0 (and equals 1 at a = 0).
inline Int primitive_pairing(long p, long delta, long r, long a) {
  long pr = 1;
  for (long i = 0; i < r; ++i) pr *= p;
  long e1 = pr - 1 + a * p * (p - 1);
  long e2 = pr - 1 - a * (p + 1);
  if (e1 < 0 || e2 < 0)
    throw std::invalid_argument("primitive_pairing: negative exponent");
  CoefficientRing fp((Int(p)));
  DicksonPair dp = dickson_pair(p, delta);
  HomogeneousPoly prod =
      poly_mul(poly_mul(poly_pow(dp.f1.with_ring(fp), e1),
                        poly_pow(dp.f2.with_ring(fp), e2)),
               primitive_generator_U(p, delta).with_ring(fp));
  DividedPowerElement u = u_delta(p, delta + r);
  if (u.degree != prod.degree)
    throw std::logic_error("primitive_pairing: degree mismatch");
  return pairing(u, prod);
}

inline bool pairing_vanishing_check(long p, long delta, long r, long a) {
  if (a <= 0) throw std::invalid_argument("pairing_vanishing_check: a must be > 0");
  return primitive_pairing(p, delta, r, a) == 0;
}

struct DecompositionReport {
  long p = 0;
  bool ok = false;
  std::vector<std::string> failures;
};

// Mod-p module structure witnesses in low degrees:
// (a) f1 kills 1 and X^{(k-1)(p-1)} Y^{p-1} for 2 <= k <= p-1,
// (b) powers of f2 do not kill them,
// (c) f1^a f2^b * X^{p^2-p} Y^{p-1} stays nonzero (freeness sample),
// (d) in degree p(p-1) the interior monomials X^{i(p-1)} Y^{(p-i)(p-1)} all
//     share one class c with f2 = (p-1) c, so c dies once f2 is quotiented
//     out; and classes of X^i Y^{p-1} with (p-1) not dividing i vanish.
inline DecompositionReport decomposition_witness_mod_p(long p) {
  DecompositionReport rep;
  rep.p = p;
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  auto order_of = [&](const HomogeneousPoly& f) {
    return coinvariant_class_order(f, p, 1);
  };
  DicksonPair dp = dickson_pair(p, 1);
  HomogeneousPoly one(0);
  one.coeffs[0] = 1;

  // (a)
  if (order_of(dp.f1) != 1) fail("f1*1 nonzero");
  for (long k = 2; k <= p - 1; ++k) {
    HomogeneousPoly eps = HomogeneousPoly::monomial((k) * (p - 1), (k - 1) * (p - 1));
    if (order_of(poly_mul(dp.f1, eps)) != 1)
      fail("f1*eps class nonzero at k=" + std::to_string(k));
  }
  // (b)  keep degrees modest: J = 2 for p = 5, J = 1 for p = 7
  long jmax = p == 5 ? 2 : 1;
  for (long j = 1; j <= jmax; ++j) {
    HomogeneousPoly f2j = poly_pow(dp.f2, j);
    if (order_of(f2j) == 1) fail("f2^j*1 vanished at j=" + std::to_string(j));
    HomogeneousPoly eps2 = HomogeneousPoly::monomial(2 * (p - 1), p - 1);
    if (order_of(poly_mul(f2j, eps2)) == 1)
      fail("f2^j*eps class vanished at j=" + std::to_string(j));
  }
  // (c)
  HomogeneousPoly u1 = primitive_generator_U(p, 1);
  long abmax = p == 5 ? 2 : 1;
  for (long a = 0; a <= abmax; ++a)
    for (long b = 0; a + b <= abmax; ++b) {
      HomogeneousPoly f = poly_mul(poly_mul(poly_pow(dp.f1, a), poly_pow(dp.f2, b)), u1);
      if (order_of(f) == 1)
        fail("f1^a f2^b U1 vanished at a=" + std::to_string(a) +
             " b=" + std::to_string(b));
    }
  // (d)
  HomogeneousPoly eps_top =
      HomogeneousPoly::monomial(p * (p - 1), (p - 1) * (p - 1));
  for (long i = 1; i <= p - 1; ++i) {
    HomogeneousPoly mono = HomogeneousPoly::monomial(p * (p - 1), i * (p - 1));
    if (order_of(poly_sub(mono, eps_top)) != 1)
      fail("interior monomial class differs at i=" + std::to_string(i));
  }
  if (order_of(poly_sub(dp.f2, poly_scale(p - 1, eps_top))) != 1)
    fail("f2 class is not (p-1) times the interior class");
  for (long i : {1L, p - 2, p}) {
    if (i % (p - 1) == 0) continue;
    if (order_of(HomogeneousPoly::monomial(i + p - 1, i)) != 1)
      fail("X^i Y^{p-1} class nonzero at i=" + std::to_string(i));
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace sl2tor
