#pragma once

// Level-one modular forms with exact rational q-expansions: Eisenstein
// series, Delta (with an eta-product cross-check), the echelon (Miller)
// basis of cusp forms, Hecke matrices, and the Eisenstein congruences
// predicted by boundary torsion (weight = degree + 2 throughout).

#include "sl2tor/cohomology.hpp"

namespace sl2tor {

struct QExpansion {
  long weight = 0;
  long precision = 0;        // coefficients a_0 .. a_{precision-1}
  std::vector<Rat> coeffs;

  QExpansion() = default;
  QExpansion(long w, long n) : weight(w), precision(n), coeffs(n) {}

  const Rat& a(long n) const { return coeffs[n]; }

  // Integer coefficient accessor; throws if not integral.
  Int ai(long n) const {
    if (coeffs[n].get_den() != 1)
      throw std::logic_error("QExpansion: non-integral coefficient");
    return coeffs[n].get_num();
  }
};

inline QExpansion q_mul(const QExpansion& a, const QExpansion& b) {
  long n = std::min(a.precision, b.precision);
  QExpansion c(a.weight + b.weight, n);
  for (long i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (long j = 0; i + j < n; ++j) {
      if (b.coeffs[j] == 0) continue;
      c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return c;
}

inline QExpansion q_pow(QExpansion base, unsigned long e, long weight_hint = -1) {
  QExpansion r(0, base.precision);
  r.coeffs[0] = 1;
  while (e > 0) {
    if (e & 1) r = q_mul(r, base);
    e >>= 1;
    if (e > 0) base = q_mul(base, base);
  }
  if (weight_hint >= 0) r.weight = weight_hint;
  return r;
}

inline QExpansion q_sub(const QExpansion& a, const QExpansion& b) {
  long n = std::min(a.precision, b.precision);
  QExpansion c(a.weight, n);
  for (long i = 0; i < n; ++i) c.coeffs[i] = a.coeffs[i] - b.coeffs[i];
  return c;
}

inline QExpansion q_scale(const Rat& s, const QExpansion& a) {
  QExpansion c(a.weight, a.precision);
  for (long i = 0; i < a.precision; ++i) c.coeffs[i] = s * a.coeffs[i];
  return c;
}

// Bernoulli numbers B_0..B_n via sum_{j=0}^{m} C(m+1, j) B_j = 0.
inline std::vector<Rat> bernoulli_numbers(long n) {
  std::vector<Rat> b(n + 1);
  b[0] = 1;
  for (long m = 1; m <= n; ++m) {
    Rat s = 0;
    for (long j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * b[j];
    b[m] = -s / Rat(binomial(m + 1, m));
  }
  return b;
}

inline Int sigma_power(long n, long k) {
  Int s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += pow_int(Int(d), k);
  return s;
}

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
inline QExpansion eisenstein(long k, long n_prec) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("eisenstein: weight must be even >= 4");
  QExpansion e(k, n_prec);
  Rat bk = bernoulli_numbers(k)[k];
  Rat c = Rat(-2 * k) / bk;
  e.coeffs[0] = 1;
  for (long n = 1; n < n_prec; ++n) e.coeffs[n] = c * Rat(sigma_power(n, k - 1));
  return e;
}

// Delta = (E4^3 - E6^2)/1728.
inline QExpansion delta(long n_prec) {
  if (n_prec < 2) throw std::invalid_argument("delta: precision too small");
  QExpansion e4 = eisenstein(4, n_prec), e6 = eisenstein(6, n_prec);
  QExpansion d = q_scale(Rat(1, 1728), q_sub(q_pow(e4, 3, 12), q_pow(e6, 2, 12)));
  d.weight = 12;
  return d;
}

// Independent oracle: q * prod_{n>=1} (1-q^n)^24.
inline QExpansion delta_eta_product(long n_prec) {
  QExpansion f(0, n_prec);
  f.coeffs[0] = 1;
  for (long n = 1; n < n_prec; ++n) {
    // f *= (1 - q^n)
    for (long i = n_prec - 1; i >= n; --i) f.coeffs[i] -= f.coeffs[i - n];
  }
  QExpansion g = q_pow(f, 24, 12);
  QExpansion d(12, n_prec);
  for (long i = 1; i < n_prec; ++i) d.coeffs[i] = g.coeffs[i - 1];
  return d;
}

inline long dim_cusp_forms(long k) {
  if (k < 12 || k % 2 != 0) return 0;
  long d = k / 12;
  if (k % 12 == 2) d -= 1;
  return d;
}

// Echelon basis of S_k: f_i with a_j(f_i) = delta_{ij}, 1 <= i,j <= dim.
inline std::vector<QExpansion> miller_basis(long k, long n_prec) {
  long dim = dim_cusp_forms(k);
  if (n_prec < dim + 1)
    throw std::invalid_argument("miller_basis: insufficient precision");
  QExpansion e4 = eisenstein(4, n_prec), e6 = eisenstein(6, n_prec);
  QExpansion dlt = delta(n_prec);
  std::vector<QExpansion> fs;
  for (long i = 1; i <= dim; ++i) {
    long w = k - 12 * i;
    long a = -1, b = -1;
    for (long bb = 0; 6 * bb <= w; ++bb)
      if ((w - 6 * bb) % 4 == 0) {
        b = bb;
        a = (w - 6 * bb) / 4;
        break;
      }
    if (a < 0) throw std::logic_error("miller_basis: no Eisenstein monomial");
    QExpansion f = q_pow(dlt, i, 12 * i);
    f = q_mul(f, q_pow(e4, a, 4 * a));
    f = q_mul(f, q_pow(e6, b, 6 * b));
    f.weight = k;
    fs.push_back(std::move(f));
  }
  // fs[i-1] has leading coefficient 1 at q^i; reduce to echelon.
  for (long i = dim; i >= 1; --i)
    for (long j = 1; j < i; ++j) {
      Rat c = fs[j - 1].coeffs[i];
      if (c != 0) fs[j - 1] = q_sub(fs[j - 1], q_scale(c, fs[i - 1]));
    }
  return fs;
}

// a_n(T_p f) = a_{np}(f) + p^{k-1} a_{n/p}(f).
inline QExpansion hecke_apply(const QExpansion& f, long p) {
  long n = (f.precision - 1) / p + 1;
  QExpansion g(f.weight, n);
  Int pk = pow_int(Int(p), f.weight - 1);
  for (long i = 0; i < n; ++i) {
    Rat s = f.coeffs[i * p];
    if (i % p == 0) s += Rat(pk) * f.coeffs[i / p];
    g.coeffs[i] = s;
  }
  return g;
}

// Matrix M with (T_p f_i) = sum_j M[i][j] f_j in the Miller basis.
inline std::vector<std::vector<Rat>> hecke_matrix_from_basis(
    const std::vector<QExpansion>& fs, long p) {
  long dim = static_cast<long>(fs.size());
  if (dim > 0 && fs[0].precision < dim * p + 1)
    throw std::invalid_argument("hecke_matrix: insufficient precision");
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim));
  for (long i = 0; i < dim; ++i) {
    QExpansion tf = hecke_apply(fs[i], p);
    for (long j = 0; j < dim; ++j) m[i][j] = tf.coeffs[j + 1];
  }
  return m;
}

inline std::vector<std::vector<Rat>> hecke_matrix(long k, long p, long n_prec) {
  return hecke_matrix_from_basis(miller_basis(k, n_prec), p);
}

// det(M - c*Id) for dim <= 3, exact.
inline Rat shifted_det(std::vector<std::vector<Rat>> m, const Rat& c) {
  long n = static_cast<long>(m.size());
  for (long i = 0; i < n; ++i) m[i][i] -= c;
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (n == 3)
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  throw std::invalid_argument("shifted_det: dim > 3 unsupported");
}

struct CongruencePrediction {
  long n = 0;       // module degree; weight is n + 2
  long ell = 0;     // good prime
  long e = 1;       // congruence holds mod ell^e
  long a = 0, b = 0;  // a_p = p^a + p^b, a = n-k+1, b = k
  long source_k = 0;  // boundary torsion generator eps_{k-1}
};

inline std::vector<CongruencePrediction> predict_congruences(long n) {
  GoodPrimeSet gp = good_primes(n);
  std::vector<CongruencePrediction> out;
  for (long ell : gp.primes)
    for (long k = ell; k <= n; k += ell) {
      CongruencePrediction c;
      c.n = n;
      c.ell = ell;
      c.e = *valuation(Int(k), ell).value;
      c.a = n - k + 1;
      c.b = k;
      c.source_k = k;
      out.push_back(c);
    }
  return out;
}

struct CongruenceCheck {
  long p = 0;
  Int lhs, rhs;  // dim 1: a_p vs p^a+p^b; dim >= 2: det residue vs 0
  bool ok = false;
};

struct CongruenceReport {
  CongruencePrediction pred;
  long dim = 0;
  bool ok = false;
  std::vector<CongruenceCheck> checks;
};

inline CongruenceReport verify_congruence(const CongruencePrediction& pred,
                                          long p_max) {
  CongruenceReport rep;
  rep.pred = pred;
  long k = pred.n + 2;
  long dim = dim_cusp_forms(k);
  rep.dim = dim;
  if (dim == 0) throw std::invalid_argument("verify_congruence: no cusp forms");
  Int mod = pow_int(Int(pred.ell), pred.e);
  long n_prec = dim == 1 ? p_max + 2 : dim * p_max + 2;
  std::vector<QExpansion> fs = miller_basis(k, n_prec);
  rep.ok = true;
  for (long p : primes_up_to(p_max)) {
    if (p == pred.ell) continue;
    CongruenceCheck c;
    c.p = p;
    Int eig = pow_int(Int(p), pred.a) + pow_int(Int(p), pred.b);
    if (dim == 1) {
      c.lhs = mod_reduce(fs[0].ai(p), mod);
      c.rhs = mod_reduce(eig, mod);
    } else {
      Rat det = shifted_det(hecke_matrix_from_basis(fs, p), Rat(eig));
      if (det.get_den() != 1)
        throw std::logic_error("verify_congruence: non-integral determinant");
      c.lhs = mod_reduce(det.get_num(), mod);
      c.rhs = 0;
    }
    c.ok = c.lhs == c.rhs;
    if (!c.ok) rep.ok = false;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace sl2tor
