#pragma once

// Smith normal form over Z and the abelian-group bookkeeping built on it:
// cokernels over Z and Z/m, saturated kernels, and additive orders of
// specific classes in a cokernel.

#include <algorithm>
#include <optional>

#include "sl2tor/matrix.hpp"

namespace sl2tor {

struct SmithDecomposition {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal, d_i >= 0, d_i | d_{i+1}
  IntMatrix V;  // cols x cols, unimodular
};

struct AbelianGroupStructure {
  long free_rank = 0;
  std::vector<Int> torsion;  // elementary divisors > 1, d_i | d_{i+1}

  bool operator==(const AbelianGroupStructure& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }

  Int torsion_order() const {
    Int t = 1;
    for (const Int& d : torsion) t *= d;
    return t;
  }
};

namespace detail {

// Quotient minimizing |a - q*b| for b > 0 (remainder in (-b/2, b/2]).
inline Int nearest_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > b) q += 1;
  return q;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows, cols = a.cols;
  SmithDecomposition s;
  s.U = IntMatrix::identity(rows);
  s.V = IntMatrix::identity(cols);
  s.D = a;
  IntMatrix& u = s.U;
  IntMatrix& d = s.D;
  IntMatrix& v = s.V;

  const std::size_t tmax = std::min(rows, cols);
  auto swap_rows = [&](std::size_t i1, std::size_t i2) {
    if (i1 == i2) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(d.at(i1, j), d.at(i2, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(i1, j), u.at(i2, j));
  };
  auto swap_cols = [&](std::size_t j1, std::size_t j2) {
    if (j1 == j2) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(d.at(i, j1), d.at(i, j2));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, j1), v.at(i, j2));
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) d.at(i, j) = -d.at(i, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(i, j) = -u.at(i, j);
  };
  // row_i -= q * row_t
  auto row_op = [&](std::size_t i, std::size_t t, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) d.at(i, j) -= q * d.at(t, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(i, j) -= q * u.at(t, j);
  };
  // col_j -= q * col_t
  auto col_op = [&](std::size_t j, std::size_t t, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) d.at(i, j) -= q * d.at(i, t);
    for (std::size_t i = 0; i < cols; ++i) v.at(i, j) -= q * v.at(i, t);
  };
  // row_t += row_i
  auto row_add = [&](std::size_t t, std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) d.at(t, j) += d.at(i, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(t, j) += u.at(i, j);
  };

  for (std::size_t t = 0; t < tmax; ++t) {
    for (;;) {
      // Minimal-absolute-value nonzero pivot in the trailing block,
      // first in row-major order among ties.
      std::size_t pi = rows, pj = cols;
      Int best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Int& x = d.at(i, j);
          if (x == 0) continue;
          Int ax = abs(x);
          if (pi == rows || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        t = tmax;  // trailing block is zero; done
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);
      if (d.at(t, t) < 0) negate_row(t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d.at(i, t) == 0) continue;
        row_op(i, t, detail::nearest_quotient(d.at(i, t), d.at(t, t)));
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d.at(t, j) == 0) continue;
        col_op(j, t, detail::nearest_quotient(d.at(t, j), d.at(t, t)));
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // smaller pivot now exists; rerun selection

      // Pivot row/column cleared; enforce divisibility into the rest.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
            row_add(t, i);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (t == tmax) break;
  }
  return s;
}

inline std::vector<Int> diagonal_of(const SmithDecomposition& s) {
  std::vector<Int> d;
  const std::size_t n = std::min(s.D.rows, s.D.cols);
  for (std::size_t i = 0; i < n; ++i) d.push_back(s.D.at(i, i));
  return d;
}

// Structure of Z^rows / column-span(A).
inline AbelianGroupStructure cokernel_structure(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  AbelianGroupStructure g;
  long rank = 0;
  for (const Int& d : diagonal_of(s)) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = static_cast<long>(a.rows) - rank;
  return g;
}

struct CokernelModResult {
  AbelianGroupStructure structure;  // free_rank always 0; divisors divide m
  long rank_m = 0;                  // count of divisors equal to m
  SmithDecomposition snf;           // SNF of [A mod m | m*I], for class tracking
};

// Structure of (Z/m)^rows / image(A), computed as the cokernel of
// [A mod m | m*I].
inline CokernelModResult cokernel_mod(const IntMatrix& a, const Int& m) {
  if (m < 2) throw std::invalid_argument("cokernel_mod: m must be >= 2");
  IntMatrix mi(a.rows, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) mi.at(i, i) = m;
  IntMatrix b = hconcat(mat_mod(a, m), mi);
  CokernelModResult r;
  r.snf = smith_normal_form(b);
  for (const Int& d : diagonal_of(r.snf)) {
    if (d > 1) r.structure.torsion.push_back(d);
    if (d == m) ++r.rank_m;
  }
  return r;
}

// Additive order of the class of v in the cokernel described by snf(B):
// Z^rows / column-span(B). nullopt = infinite order.
inline std::optional<Int> class_order(const SmithDecomposition& s,
                                      const std::vector<Int>& v) {
  std::vector<Int> w = mat_apply(s.U, v);
  const std::size_t nd = std::min(s.D.rows, s.D.cols);
  Int order = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Int d = i < nd ? s.D.at(i, i) : Int(0);
    if (d == 0) {
      if (w[i] != 0) return std::nullopt;
      continue;
    }
    Int g = gcd(d, w[i]);
    Int o = d / g;
    order = lcm(order, o);
  }
  return order;
}

// Columns form a saturated basis of ker(A) over Z.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  std::vector<Int> diag = diagonal_of(s);
  std::size_t rank = 0;
  for (const Int& d : diag)
    if (d != 0) ++rank;
  IntMatrix k(a.cols, a.cols - rank);
  for (std::size_t j = rank; j < a.cols; ++j)
    for (std::size_t i = 0; i < a.cols; ++i) k.at(i, j - rank) = s.V.at(i, j);
  return k;
}

// Normalize a multiset of cyclic orders into an elementary-divisor chain;
// used by tests as an independent oracle for expected group structures.
inline AbelianGroupStructure chain_from_orders(std::vector<Int> orders,
                                               long free_rank = 0) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag.at(i, i) = orders[i];
  AbelianGroupStructure g = cokernel_structure(diag);
  g.free_rank = free_rank;
  return g;
}

}  // namespace sl2tor
