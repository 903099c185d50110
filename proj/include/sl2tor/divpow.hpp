#pragma once

// Divided-power dual algebra on two generators xi1, xi2:
// xi^{(m)} xi^{(n)} = binom(m+n, n) xi^{(m+n)}, group action
// g.f(xi1, xi2) = f(a xi1 + b xi2, c xi1 + d xi2) with
// (xi1+xi2)^{(m)} = sum_i xi1^{(i)} xi2^{(m-i)} and (a xi)^{(i)} = a^i xi^{(i)}.
// This is a right action, adjoint to the polynomial action under the pairing
// <xi1^{(m)} xi2^{(n)}, X^m Y^n> = 1: <g.f, P> = <f, g.P>.

#include "sl2tor/polyspace.hpp"

namespace sl2tor {

struct DividedPowerElement {
  long degree = 0;
  CoefficientRing ring;
  std::vector<Int> coeffs;  // index j -> coefficient of xi1^{(d-j)} xi2^{(j)}

  DividedPowerElement() : coeffs(1) {}
  DividedPowerElement(long d, CoefficientRing r = {})
      : degree(d), ring(std::move(r)), coeffs(d + 1) {}

  static DividedPowerElement basis(long d, long xi2exp, Int c = 1,
                                   CoefficientRing r = {}) {
    DividedPowerElement e(d, std::move(r));
    e.coeffs[xi2exp] = e.ring.reduce(c);
    return e;
  }

  void reduce() {
    for (Int& c : coeffs) c = ring.reduce(c);
  }

  bool is_zero() const {
    for (const Int& c : coeffs)
      if (c != 0) return false;
    return true;
  }

  bool operator==(const DividedPowerElement& o) const {
    return degree == o.degree && ring == o.ring && coeffs == o.coeffs;
  }

  DividedPowerElement with_ring(CoefficientRing r) const {
    DividedPowerElement e(degree, std::move(r));
    for (long j = 0; j <= degree; ++j) e.coeffs[j] = e.ring.reduce(coeffs[j]);
    return e;
  }
};

inline DividedPowerElement dp_add(const DividedPowerElement& a,
                                  const DividedPowerElement& b) {
  if (a.degree != b.degree || !(a.ring == b.ring))
    throw std::invalid_argument("dp_add: mismatch");
  DividedPowerElement c(a.degree, a.ring);
  for (long j = 0; j <= a.degree; ++j)
    c.coeffs[j] = c.ring.reduce(a.coeffs[j] + b.coeffs[j]);
  return c;
}

inline DividedPowerElement dp_sub(const DividedPowerElement& a,
                                  const DividedPowerElement& b) {
  if (a.degree != b.degree || !(a.ring == b.ring))
    throw std::invalid_argument("dp_sub: mismatch");
  DividedPowerElement c(a.degree, a.ring);
  for (long j = 0; j <= a.degree; ++j)
    c.coeffs[j] = c.ring.reduce(a.coeffs[j] - b.coeffs[j]);
  return c;
}

inline DividedPowerElement dp_scale(const Int& s, const DividedPowerElement& a) {
  DividedPowerElement c(a.degree, a.ring);
  for (long j = 0; j <= a.degree; ++j) c.coeffs[j] = c.ring.reduce(s * a.coeffs[j]);
  return c;
}

inline DividedPowerElement dp_multiply(const DividedPowerElement& a,
                                       const DividedPowerElement& b) {
  if (!(a.ring == b.ring)) throw std::invalid_argument("dp_multiply: ring mismatch");
  const long da = a.degree, db = b.degree, d = da + db;
  DividedPowerElement c(d, a.ring);
  for (long i = 0; i <= da; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (long j = 0; j <= db; ++j) {
      if (b.coeffs[j] == 0) continue;
      // xi1^{(da-i)} xi2^{(i)} * xi1^{(db-j)} xi2^{(j)}
      Int f = binomial(d - i - j, da - i) * binomial(i + j, i);
      c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j] * f;
    }
  }
  c.reduce();
  return c;
}

// g.f = f(a xi1 + b xi2, c xi1 + d xi2).
inline DividedPowerElement dp_act(const UnimodularMatrix& g,
                                  const DividedPowerElement& f) {
  const long d = f.degree;
  const CoefficientRing& ring = f.ring;
  DividedPowerElement out(d, ring);
  // (u xi1 + v xi2)^{(m)} = sum_i u^i v^{m-i} xi1^{(i)} xi2^{(m-i)}.
  auto linear_power = [&](const Int& u, const Int& v, long m) {
    DividedPowerElement e(m, ring);
    std::vector<Int> upow(m + 1), vpow(m + 1);
    upow[0] = 1;
    vpow[0] = 1;
    for (long i = 1; i <= m; ++i) {
      upow[i] = ring.reduce(upow[i - 1] * u);
      vpow[i] = ring.reduce(vpow[i - 1] * v);
    }
    for (long i = 0; i <= m; ++i)
      e.coeffs[m - i] = ring.reduce(upow[i] * vpow[m - i]);  // xi2 exponent m-i
    return e;
  };
  for (long j = 0; j <= d; ++j) {
    if (f.coeffs[j] == 0) continue;
    DividedPowerElement t = dp_multiply(linear_power(g.a, g.b, d - j),
                                        linear_power(g.c, g.d, j));
    out = dp_add(out, dp_scale(f.coeffs[j], t));
  }
  return out;
}

// <sum_j c_j xi1^{(d-j)} xi2^{(j)}, P> = sum_j c_j * coeff of X^{d-j} Y^j in P.
inline Int pairing(const DividedPowerElement& f, const HomogeneousPoly& poly) {
  if (f.degree != poly.degree) throw std::invalid_argument("pairing: degree mismatch");
  Int s = 0;
  for (long j = 0; j <= f.degree; ++j)
    if (f.coeffs[j] != 0) s += f.coeffs[j] * poly.coeffs[f.degree - j];
  Int m = f.ring.modulus != 0 ? f.ring.modulus : poly.ring.modulus;
  return m != 0 ? mod_reduce(s, m) : s;
}

// nu_i = sum_{j=i}^{d} {j, i} xi1^{(d-j)} xi2^{(j)}; (T-Id) nu_i = (i+1) nu_{i+1}.
inline DividedPowerElement nu_element(long d, long i, CoefficientRing ring = {}) {
  if (i < 0 || i > d) throw std::invalid_argument("nu_element: need 0 <= i <= d");
  DividedPowerElement e(d, std::move(ring));
  for (long j = i; j <= d; ++j) e.coeffs[j] = e.ring.reduce(stirling2(j, i));
  return e;
}

// u_delta = sum_{j=1}^{p} xi1^{(p^{delta-1}-1 + j p^{delta-1}(p-1))}
//                        xi2^{(p^{delta-1}-1 + (p-j+1) p^{delta-1}(p-1))},
// an F_p invariant of degree p^{delta+1} + p^{delta-1} - 2.
inline DividedPowerElement u_delta(long p, long delta) {
  if (p <= 3 || !is_prime(Int(p)) || delta < 1)
    throw std::invalid_argument("u_delta: need prime p > 3, delta >= 1");
  long q = 1;
  for (long i = 1; i < delta; ++i) q *= p;  // p^{delta-1}
  long d = q * p * p + q - 2;
  DividedPowerElement e(d, CoefficientRing(Int(p)));
  for (long j = 1; j <= p; ++j) {
    long e2 = q - 1 + (p - j + 1) * q * (p - 1);  // xi2 exponent
    e.coeffs[e2] = 1;
  }
  return e;
}

// sum_{k=1}^{n-1} xi1^{(k(p-1))} xi2^{((n-k)(p-1))}, degree n(p-1).
inline DividedPowerElement divel_element(long p, long n_blocks,
                                         CoefficientRing ring = {}) {
  if (n_blocks < 2) throw std::invalid_argument("divel_element: n_blocks >= 2");
  DividedPowerElement e(n_blocks * (p - 1), std::move(ring));
  for (long k = 1; k <= n_blocks - 1; ++k)
    e.coeffs[(n_blocks - k) * (p - 1)] = e.ring.reduce(1);
  return e;
}

// w2 = sum_{j=p^2-1}^{d0-p^2+1} {j, p^2-1} xi1^{(d0-j)} xi2^{(j)} over Z/p^2,
// d0 = p^3 + p - 2.  Lifts u_2: invariant mod p^2, reduces to u_2 mod p.
inline DividedPowerElement w2_element(long p) {
  if (p <= 3 || !is_prime(Int(p)))
    throw std::invalid_argument("w2_element: p must be a prime > 3");
  long d0 = p * p * p + p - 2;
  long s = p * p - 1;
  DividedPowerElement e(d0, CoefficientRing(Int(p) * Int(p)));
  for (long j = s; j <= d0 - s; ++j) e.coeffs[j] = e.ring.reduce(stirling2(j, s));
  return e;
}

}  // namespace sl2tor
