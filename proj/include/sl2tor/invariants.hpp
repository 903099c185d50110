#pragma once

// Dickson invariants f1 = X^p Y - X Y^p, f2 = (X^{p^2-1}-Y^{p^2-1})/(X^{p-1}-Y^{p-1})
// and their p^{delta-1}-th powers, which are invariant of additive order
// p^delta mod p^delta.  Invariance is checked on the generators S and T.

#include <map>

#include "sl2tor/cohomology.hpp"

namespace sl2tor {

struct DicksonPair {
  long p = 0;
  long delta = 1;
  HomogeneousPoly f1;  // degree p^{delta-1}(p+1), integer coefficients
  HomogeneousPoly f2;  // degree p^delta (p-1), integer coefficients
};

inline HomogeneousPoly dickson_f1_base(long p) {
  HomogeneousPoly f(p + 1);
  f.coeffs[p] = 1;   // X^p Y
  f.coeffs[1] = -1;  // -X Y^p
  return f;
}

inline HomogeneousPoly dickson_f2_base(long p) {
  HomogeneousPoly f(p * (p - 1));
  for (long i = 0; i <= p; ++i) f.coeffs[(p - 1) * (p - i)] = 1;
  return f;
}

inline DicksonPair dickson_pair(long p, long delta) {
  if (p <= 3 || !is_prime(Int(p)))
    throw std::invalid_argument("dickson_pair: p must be a prime > 3");
  if (delta < 1) throw std::invalid_argument("dickson_pair: delta must be >= 1");
  unsigned long e = 1;
  for (long i = 1; i < delta; ++i) e *= static_cast<unsigned long>(p);
  DicksonPair d;
  d.p = p;
  d.delta = delta;
  d.f1 = poly_pow(dickson_f1_base(p), e);
  d.f2 = poly_pow(dickson_f2_base(p), e);
  return d;
}

inline bool is_invariant(const HomogeneousPoly& poly, long p, long delta) {
  Int m = pow_int(Int(p), delta);
  HomogeneousPoly q = poly.with_ring(CoefficientRing(m));
  return act(gen_S(), q) == q && act(gen_T(), q) == q;
}

// Smallest p^e with p^e * P = 0 in Z/p^delta coefficients.
inline Int additive_order(const HomogeneousPoly& poly, long p, long delta) {
  if (poly.ring.modulus != pow_int(Int(p), delta))
    throw std::invalid_argument("additive_order: ring mismatch");
  long minval = delta;
  for (const Int& c : poly.coeffs) {
    if (c == 0) continue;
    PValuation v = valuation(c, p);
    minval = std::min(minval, *v.value);
  }
  return pow_int(Int(p), delta - minval);
}

struct MembershipWitness {
  // P = sum of coeff * f1^a f2^b mod p over the listed terms.
  std::vector<std::tuple<long, long, Int>> terms;  // (a, b, coeff mod p)
};

// Searches the graded span of f_{1,delta}^a f_{2,delta}^b (matching degree)
// for a mod-p representative of P.  P must be invariant and primitive.
inline std::optional<MembershipWitness> primitive_ring_membership_mod_p(
    const HomogeneousPoly& poly, long p, long delta) {
  if (!is_invariant(poly, p, delta))
    throw std::invalid_argument("membership: input not invariant");
  if (additive_order(poly, p, delta) != pow_int(Int(p), delta))
    throw std::invalid_argument("membership: input not primitive");
  DicksonPair dp = dickson_pair(p, delta);
  const long d1 = dp.f1.degree, d2 = dp.f2.degree, n = poly.degree;
  CoefficientRing fp((Int(p)));

  std::vector<std::pair<long, long>> exps;
  std::vector<HomogeneousPoly> prods;
  for (long a = 0; a * d1 <= n; ++a) {
    long rem = n - a * d1;
    if (rem % d2 != 0) continue;
    long b = rem / d2;
    HomogeneousPoly g = poly_mul(poly_pow(dp.f1.with_ring(fp), a),
                                 poly_pow(dp.f2.with_ring(fp), b));
    exps.emplace_back(a, b);
    prods.push_back(std::move(g));
  }
  if (prods.empty()) return std::nullopt;

  // Solve sum c_i prods[i] = P mod p by Gaussian elimination over F_p.
  const std::size_t cols = prods.size();
  IntMatrix aug(n + 1, cols + 1);
  for (std::size_t j = 0; j < cols; ++j)
    for (long i = 0; i <= n; ++i) aug.at(i, j) = prods[j].coeffs[i];
  HomogeneousPoly target = poly.with_ring(fp);
  for (long i = 0; i <= n; ++i) aug.at(i, cols) = target.coeffs[i];

  Int pm(p);
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t j = 0; j < cols && row < aug.rows; ++j) {
    std::size_t piv = row;
    while (piv < aug.rows && mod_reduce(aug.at(piv, j), pm) == 0) ++piv;
    if (piv == aug.rows) continue;
    for (std::size_t jj = 0; jj <= cols; ++jj) std::swap(aug.at(row, jj), aug.at(piv, jj));
    Int inv;
    mpz_invert(inv.get_mpz_t(), aug.at(row, j).get_mpz_t(), pm.get_mpz_t());
    for (std::size_t jj = 0; jj <= cols; ++jj)
      aug.at(row, jj) = mod_reduce(aug.at(row, jj) * inv, pm);
    for (std::size_t i = 0; i < aug.rows; ++i) {
      if (i == row) continue;
      Int f = mod_reduce(aug.at(i, j), pm);
      if (f == 0) continue;
      for (std::size_t jj = 0; jj <= cols; ++jj)
        aug.at(i, jj) = mod_reduce(aug.at(i, jj) - f * aug.at(row, jj), pm);
    }
    pivot_col.push_back(j);
    ++row;
  }
  // Consistency: no pivot in the augmented column.
  for (std::size_t i = row; i < aug.rows; ++i)
    if (mod_reduce(aug.at(i, cols), pm) != 0) return std::nullopt;

  std::vector<Int> sol(cols, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = aug.at(r, cols);
  MembershipWitness w;
  for (std::size_t j = 0; j < cols; ++j)
    if (sol[j] != 0) w.terms.emplace_back(exps[j].first, exps[j].second, sol[j]);
  return w;
}

}  // namespace sl2tor
