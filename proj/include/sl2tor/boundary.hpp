#pragma once

// Boundary cohomology: the quotient M_n / (Id - T) M_n in eps coordinates
// (slot k has modulus k+1 for k < n, slot n is free, generator eps_n),
// and the Hecke operator T_p acting on it.

#include "sl2tor/polyspace.hpp"
#include "sl2tor/smith.hpp"

namespace sl2tor {

struct BoundaryClass {
  long degree = 0;
  std::vector<Int> coords;  // index k; reduced mod k+1 for k < n, free at k = n

  explicit BoundaryClass(long n = 0) : degree(n), coords(n + 1) {}

  Int modulus(long k) const { return k < degree ? Int(k + 1) : Int(0); }

  void reduce() {
    for (long k = 0; k < degree; ++k) coords[k] = mod_reduce(coords[k], Int(k + 1));
  }

  bool operator==(const BoundaryClass& o) const {
    return degree == o.degree && coords == o.coords;
  }

  bool is_zero() const {
    for (const Int& c : coords)
      if (c != 0) return false;
    return true;
  }
};

// Z eps_n + sum_{k=1}^{n} (Z/k) eps_{k-1}, as an elementary-divisor chain.
inline AbelianGroupStructure boundary_structure(long n) {
  if (n < 1) throw std::invalid_argument("boundary_structure: n must be >= 1");
  std::vector<Int> orders;
  for (long k = 2; k <= n; ++k) orders.push_back(k);
  return chain_from_orders(std::move(orders), 1);
}

inline BoundaryClass reduce_to_boundary(const HomogeneousPoly& p) {
  EpsilonVector v = to_epsilon(p);
  BoundaryClass b(p.degree);
  b.coords = v.coords;
  b.reduce();
  return b;
}

struct HeckeBoundaryMatrix {
  long p = 0;
  long degree = 0;
  IntMatrix entries;  // (n+1)x(n+1); column k = T_p(eps_k) in eps coords
};

// T_p(X^v Y^k) = p^k sum_{j=0}^{p-1} X^v (Y+jX)^k + p^v X^v Y^k  (v + k = n).
inline HomogeneousPoly hecke_on_monomial(long p, long n, long v) {
  const long k = n - v;
  HomogeneousPoly out(n);
  // p^k * sum_j X^v (Y+jX)^k: coefficient of X^{v+i} Y^{k-i} gets
  // p^k * C(k,i) * sum_j j^i.
  std::vector<Int> powsum(k + 1);  // sum_{j=0}^{p-1} j^i
  for (long j = 0; j < p; ++j) {
    Int jp = 1;
    for (long i = 0; i <= k; ++i) {
      powsum[i] += jp;
      jp *= j;
    }
  }
  Int pk = pow_int(Int(p), k);
  for (long i = 0; i <= k; ++i) out.coeffs[v + i] += pk * binomial(k, i) * powsum[i];
  out.coeffs[v] += pow_int(Int(p), v);
  return out;
}

inline HeckeBoundaryMatrix hecke_boundary_matrix(long p, long n) {
  if (n < 1 || !is_prime(Int(p)))
    throw std::invalid_argument("hecke_boundary_matrix: need prime p, n >= 1");
  HeckeBoundaryMatrix h;
  h.p = p;
  h.degree = n;
  h.entries = IntMatrix(n + 1, n + 1);
  for (long k = 0; k <= n; ++k) {
    HomogeneousPoly ek = epsilon_basis_poly(n, k);
    HomogeneousPoly img(n);
    for (long v = 0; v <= n; ++v) {
      if (ek.coeffs[v] == 0) continue;
      HomogeneousPoly t = hecke_on_monomial(p, n, v);
      img = poly_add(img, poly_scale(ek.coeffs[v], t));
    }
    EpsilonVector ev = to_epsilon(img);
    for (long j = 0; j <= n; ++j) h.entries.at(j, k) = ev.coords[j];
  }
  return h;
}

struct HeckeEigenFailure {
  long j = 0, k = 0;
  Int residue;  // offending entry value in the quotient slot
  Int modulus;  // slot modulus (0 = free slot, exact equality required)
};

struct HeckeEigenReport {
  long p = 0;
  long degree = 0;
  bool ok = false;
  std::vector<Int> eigenvalues;  // p^{n-k} + p^{k+1} for k = 0..n
  std::vector<HeckeEigenFailure> failures;
};

// Checks that T_p is diagonal on the boundary quotient with eigenvalue
// p^{n-k} + p^{k+1} on the class of eps_k (slot moduli as in BoundaryClass).
inline HeckeEigenReport verify_hecke_eigen(long p, long n) {
  HeckeBoundaryMatrix h = hecke_boundary_matrix(p, n);
  HeckeEigenReport rep;
  rep.p = p;
  rep.degree = n;
  for (long k = 0; k <= n; ++k)
    rep.eigenvalues.push_back(pow_int(Int(p), n - k) + pow_int(Int(p), k + 1));
  for (long k = 0; k <= n; ++k) {
    for (long j = 0; j <= n; ++j) {
      Int want = j == k ? rep.eigenvalues[k] : Int(0);
      Int diff = h.entries.at(j, k) - want;
      if (j < n) {
        Int m(j + 1);
        Int r = mod_reduce(diff, m);
        if (r != 0) rep.failures.push_back({j, k, r, m});
      } else if (diff != 0) {
        rep.failures.push_back({j, k, diff, Int(0)});
      }
    }
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace sl2tor
