#pragma once

// Cohomology of the open modular orbifold with coefficients in the degree-n
// polynomial module: interior H^1 torsion, compactly supported H^2, mod-p^delta
// invariants (H^0 with finite coefficients), good primes, and the derivation
// r_n measuring failure of T-invariance one p-power up.

#include "sl2tor/boundary.hpp"

namespace sl2tor {

inline void require_even_degree(long n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("degree must be even and >= 2");
}

// M_n / (M_n^{<R>} + M_n^{<S>}): cokernel of the concatenated fixed-space bases.
inline AbelianGroupStructure h1_interior(long n) {
  require_even_degree(n);
  IntMatrix kr = kernel_basis(mat_sub(action_matrix(gen_R(), n),
                                      IntMatrix::identity(n + 1)));
  IntMatrix ks = kernel_basis(mat_sub(action_matrix(gen_S(), n),
                                      IntMatrix::identity(n + 1)));
  return cokernel_structure(hconcat(kr, ks));
}

// M_n / I_Gamma M_n: cokernel of [(act(R)-Id) | (act(S)-Id)].
inline AbelianGroupStructure h2_compact(long n) {
  require_even_degree(n);
  IntMatrix ar = mat_sub(action_matrix(gen_R(), n), IntMatrix::identity(n + 1));
  IntMatrix as = mat_sub(action_matrix(gen_S(), n), IntMatrix::identity(n + 1));
  return cokernel_structure(hconcat(ar, as));
}

struct H0ModResult {
  AbelianGroupStructure structure;       // orders of the basis classes (chain)
  long primitive_rank = 0;               // count of Z/p^delta summands
  std::vector<HomogeneousPoly> basis;    // generators, one per torsion entry
  std::vector<Int> orders;               // order of each basis element
};

// Invariants of M_n mod p^delta: kernel over Z/p^delta of the stacked maps
// (act(R)-Id), (act(S)-Id).
inline H0ModResult h0_mod(long n, long p, long delta) {
  require_even_degree(n);
  if (p <= 3 || !is_prime(Int(p)) || delta < 1)
    throw std::invalid_argument("h0_mod: need prime p > 3 and delta >= 1");
  Int m = pow_int(Int(p), delta);
  IntMatrix ar = mat_sub(action_matrix(gen_R(), n), IntMatrix::identity(n + 1));
  IntMatrix as = mat_sub(action_matrix(gen_S(), n), IntMatrix::identity(n + 1));
  IntMatrix stacked = vconcat(ar, as);
  SmithDecomposition s = smith_normal_form(stacked);
  std::vector<Int> diag = diagonal_of(s);

  // x solves (stacked)x = 0 mod m iff x = sum c_j (m/g_j) V_j with
  // g_j = gcd(d_j, m); the j-th generator has additive order g_j.
  H0ModResult r;
  CoefficientRing ring(m);
  for (std::size_t j = 0; j < static_cast<std::size_t>(n + 1); ++j) {
    Int d = j < diag.size() ? diag[j] : Int(0);
    Int g = d == 0 ? m : gcd(d, m);
    if (g == 1) continue;
    HomogeneousPoly b(n, ring);
    Int scale = m / g;
    for (long i = 0; i <= n; ++i) b.coeffs[i] = ring.reduce(scale * s.V.at(i, j));
    r.basis.push_back(std::move(b));
    r.orders.push_back(g);
    if (g == m) ++r.primitive_rank;
  }
  std::vector<Int> orders = r.orders;
  r.structure = chain_from_orders(std::move(orders), 0);
  return r;
}

struct CohomologyReport {
  long n = 0;
  AbelianGroupStructure h0;  // always trivial for n > 0
  AbelianGroupStructure h1_interior;
  AbelianGroupStructure h1_boundary;
  AbelianGroupStructure h2_compact;
};

inline CohomologyReport cohomology_report(long n) {
  CohomologyReport r;
  r.n = n;
  r.h1_interior = h1_interior(n);
  r.h1_boundary = boundary_structure(n);
  r.h2_compact = h2_compact(n);
  return r;
}

struct GoodPrimeSet {
  long n = 0;
  std::vector<long> primes;  // sorted, all in (3, n)
};

inline bool has_p_torsion(const AbelianGroupStructure& g, long p) {
  for (const Int& d : g.torsion)
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) return true;
  return false;
}

inline GoodPrimeSet good_primes(long n) {
  require_even_degree(n);
  AbelianGroupStructure h1 = h1_interior(n);
  AbelianGroupStructure h2 = h2_compact(n);
  GoodPrimeSet out;
  out.n = n;
  for (long ell : primes_up_to(n - 1)) {
    if (ell <= 3) continue;
    if (!has_p_torsion(h1, ell) && !has_p_torsion(h2, ell)) out.primes.push_back(ell);
  }
  return out;
}

// Surviving eps coordinates of (act(T,f) - f)/p^{level-1} mod p: index d
// (degree slot) and each k-1 with p | k, reported sorted by index descending.
struct RnImage {
  long degree = 0;
  long p = 0;
  std::vector<std::pair<long, Int>> coords;  // (eps index, residue mod p)
};

// The polynomial (act(T,f) - f)/p^{level-1} over Z (exact); throws naming the
// first coefficient index where divisibility fails.
inline HomogeneousPoly rn_quotient_poly(const HomogeneousPoly& f, long p,
                                        long level) {
  if (f.ring.modulus != 0)
    throw std::invalid_argument("rn_quotient_poly: integer coefficients required");
  if (p <= 3 || level < 2)
    throw std::invalid_argument("rn_quotient_poly: need p > 3, level >= 2");
  Int q = pow_int(Int(p), level - 1);
  HomogeneousPoly diff = poly_sub(act(gen_T(), f), f);
  HomogeneousPoly g(f.degree);
  for (long v = 0; v <= f.degree; ++v) {
    Int quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), diff.coeffs[v].get_mpz_t(),
                q.get_mpz_t());
    if (rem != 0)
      throw std::invalid_argument(
          "rn_image: input not T-invariant mod p^(level-1) at coefficient X^" +
          std::to_string(v));
    g.coeffs[v] = quo;
  }
  return g;
}

inline RnImage rn_image(const HomogeneousPoly& f, long p, long level) {
  HomogeneousPoly g = rn_quotient_poly(f, p, level);
  EpsilonVector ev = to_epsilon(g);
  RnImage out;
  out.degree = f.degree;
  out.p = p;
  const long d = f.degree;
  out.coords.emplace_back(d, mod_reduce(ev.coords[d], Int(p)));
  for (long k = (d / p) * p; k >= p; k -= p)
    out.coords.emplace_back(k - 1, mod_reduce(ev.coords[k - 1], Int(p)));
  return out;
}

}  // namespace sl2tor
