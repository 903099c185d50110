#pragma once

// Homogeneous degree-n forms in X, Y over Z or Z/m, the SL2 substitution
// action g.P(X,Y) = P(aX+cY, bX+dY), and the falling-factorial basis
// eps_0 = X^n, eps_k = Y(Y-X)...(Y-(k-1)X) X^{n-k}.
//
// Composition convention (asserted in tests): act(g, act(h, P)) = act(g*h, P).

#include "sl2tor/combinat.hpp"
#include "sl2tor/matrix.hpp"

namespace sl2tor {

struct CoefficientRing {
  Int modulus = 0;  // 0 = Z, otherwise m >= 2 meaning Z/m

  CoefficientRing() = default;
  explicit CoefficientRing(Int m) : modulus(std::move(m)) {
    if (modulus != 0 && modulus < 2)
      throw std::invalid_argument("CoefficientRing: modulus must be 0 or >= 2");
  }

  Int reduce(const Int& x) const { return modulus == 0 ? x : mod_reduce(x, modulus); }
  bool operator==(const CoefficientRing& o) const { return modulus == o.modulus; }
};

struct HomogeneousPoly {
  long degree = 0;
  CoefficientRing ring;
  std::vector<Int> coeffs;  // index v -> coefficient of X^v Y^{degree-v}

  HomogeneousPoly() : coeffs(1) {}
  HomogeneousPoly(long n, CoefficientRing r = {})
      : degree(n), ring(std::move(r)), coeffs(n + 1) {}

  static HomogeneousPoly monomial(long n, long xexp, Int c = 1,
                                  CoefficientRing r = {}) {
    HomogeneousPoly p(n, std::move(r));
    p.coeffs[xexp] = p.ring.reduce(c);
    return p;
  }

  void reduce() {
    for (Int& c : coeffs) c = ring.reduce(c);
  }

  bool is_zero() const {
    for (const Int& c : coeffs)
      if (c != 0) return false;
    return true;
  }

  bool operator==(const HomogeneousPoly& o) const {
    return degree == o.degree && ring == o.ring && coeffs == o.coeffs;
  }

  HomogeneousPoly with_ring(CoefficientRing r) const {
    HomogeneousPoly p(degree, std::move(r));
    for (long v = 0; v <= degree; ++v) p.coeffs[v] = p.ring.reduce(coeffs[v]);
    return p;
  }
};

inline HomogeneousPoly poly_add(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.degree != b.degree || !(a.ring == b.ring))
    throw std::invalid_argument("poly_add: mismatch");
  HomogeneousPoly c(a.degree, a.ring);
  for (long v = 0; v <= a.degree; ++v)
    c.coeffs[v] = c.ring.reduce(a.coeffs[v] + b.coeffs[v]);
  return c;
}

inline HomogeneousPoly poly_sub(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.degree != b.degree || !(a.ring == b.ring))
    throw std::invalid_argument("poly_sub: mismatch");
  HomogeneousPoly c(a.degree, a.ring);
  for (long v = 0; v <= a.degree; ++v)
    c.coeffs[v] = c.ring.reduce(a.coeffs[v] - b.coeffs[v]);
  return c;
}

inline HomogeneousPoly poly_scale(const Int& s, const HomogeneousPoly& a) {
  HomogeneousPoly c(a.degree, a.ring);
  for (long v = 0; v <= a.degree; ++v) c.coeffs[v] = c.ring.reduce(s * a.coeffs[v]);
  return c;
}

inline HomogeneousPoly poly_mul(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (!(a.ring == b.ring)) throw std::invalid_argument("poly_mul: ring mismatch");
  HomogeneousPoly c(a.degree + b.degree, a.ring);
  for (long i = 0; i <= a.degree; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (long j = 0; j <= b.degree; ++j) {
      if (b.coeffs[j] == 0) continue;
      c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  c.reduce();
  return c;
}

inline HomogeneousPoly poly_pow(HomogeneousPoly base, unsigned long e) {
  HomogeneousPoly r(0, base.ring);
  r.coeffs[0] = base.ring.reduce(1);
  while (e > 0) {
    if (e & 1) r = poly_mul(r, base);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base);
  }
  return r;
}

struct UnimodularMatrix {
  Int a, b, c, d;

  UnimodularMatrix(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1)
      throw std::invalid_argument("UnimodularMatrix: determinant must be 1");
  }

  UnimodularMatrix operator*(const UnimodularMatrix& o) const {
    return UnimodularMatrix(a * o.a + b * o.c, a * o.b + b * o.d,
                            c * o.a + d * o.c, c * o.b + d * o.d);
  }
};

inline UnimodularMatrix gen_identity() { return UnimodularMatrix(1, 0, 0, 1); }
inline UnimodularMatrix gen_R() { return UnimodularMatrix(1, -1, 1, 0); }
inline UnimodularMatrix gen_S() { return UnimodularMatrix(0, -1, 1, 0); }
inline UnimodularMatrix gen_T() { return UnimodularMatrix(1, 1, 0, 1); }

// g.P(X,Y) = P(aX+cY, bX+dY).  Homogeneous Horner scheme: O(n^2) ring ops.
inline HomogeneousPoly act(const UnimodularMatrix& g, const HomogeneousPoly& p) {
  const long n = p.degree;
  const CoefficientRing& ring = p.ring;
  // P = sum_v c_v U^v W^{n-v} with U = aX+cY, W = bX+dY.
  // H_0 = c_n; H_k = H_{k-1} * U + c_{n-k} * W^k.
  std::vector<Int> h(1, ring.reduce(p.coeffs[n]));  // H_k coeffs, X-exponent idx
  std::vector<Int> w(1, ring.reduce(1));            // W^k coeffs
  for (long k = 1; k <= n; ++k) {
    // w <- w * (bX + dY)
    std::vector<Int> w2(k + 1);
    for (long i = 0; i < k; ++i) {
      if (w[i] == 0) continue;
      w2[i + 1] += w[i] * g.b;
      w2[i] += w[i] * g.d;
    }
    for (Int& x : w2) x = ring.reduce(x);
    w.swap(w2);
    // h <- h * (aX + cY) + c_{n-k} * w
    std::vector<Int> h2(k + 1);
    for (long i = 0; i < k; ++i) {
      if (h[i] == 0) continue;
      h2[i + 1] += h[i] * g.a;
      h2[i] += h[i] * g.c;
    }
    const Int& cv = p.coeffs[n - k];
    if (cv != 0)
      for (long i = 0; i <= k; ++i) h2[i] += cv * w[i];
    for (Int& x : h2) x = ring.reduce(x);
    h.swap(h2);
  }
  HomogeneousPoly out(n, ring);
  out.coeffs = std::move(h);
  return out;
}

// Matrix of act(g, .) on the monomial basis X^v Y^{n-v}, v = 0..n.
inline IntMatrix action_matrix(const UnimodularMatrix& g, long n,
                               const CoefficientRing& ring = {}) {
  IntMatrix m(n + 1, n + 1);
  for (long v = 0; v <= n; ++v) {
    HomogeneousPoly img = act(g, HomogeneousPoly::monomial(n, v, 1, ring));
    for (long i = 0; i <= n; ++i) m.at(i, v) = img.coeffs[i];
  }
  return m;
}

struct EpsilonVector {
  long degree = 0;
  std::vector<Int> coords;  // index k -> coefficient of eps_k

  EpsilonVector() : coords(1) {}
  explicit EpsilonVector(long n) : degree(n), coords(n + 1) {}

  bool operator==(const EpsilonVector& o) const {
    return degree == o.degree && coords == o.coords;
  }
};

// X^{n-k} Y^k = sum_j {k, j} eps_j.
inline EpsilonVector to_epsilon(const HomogeneousPoly& p) {
  if (p.ring.modulus != 0)
    throw std::invalid_argument("to_epsilon: integer coefficients required");
  const long n = p.degree;
  EpsilonVector v(n);
  for (long k = 0; k <= n; ++k) {
    const Int& c = p.coeffs[n - k];  // coefficient of X^{n-k} Y^k
    if (c == 0) continue;
    for (long j = 0; j <= k; ++j) v.coords[j] += c * stirling2(k, j);
  }
  return v;
}

// eps_k = sum_j s(k, j) X^{n-j} Y^j with signed first-kind Stirling numbers.
inline HomogeneousPoly from_epsilon(const EpsilonVector& v) {
  const long n = v.degree;
  HomogeneousPoly p(n);
  for (long k = 0; k <= n; ++k) {
    const Int& c = v.coords[k];
    if (c == 0) continue;
    for (long j = 0; j <= k; ++j) p.coeffs[n - j] += c * stirling1_signed(k, j);
  }
  return p;
}

inline HomogeneousPoly epsilon_basis_poly(long n, long k) {
  EpsilonVector v(n);
  v.coords[k] = 1;
  return from_epsilon(v);
}

}  // namespace sl2tor
