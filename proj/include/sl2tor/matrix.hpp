#pragma once

// Dense arbitrary-precision integer matrices (row-major).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sl2tor/integer.hpp"

namespace sl2tor {

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> e;  // row-major, size rows*cols

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && e == o.e;
  }
};

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

inline IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("mat_sub: shape mismatch");
  IntMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.e.size(); ++i) c.e[i] = a.e[i] - b.e[i];
  return c;
}

// [a | b]
inline IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("hconcat: row mismatch");
  IntMatrix c(a.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
  }
  return c;
}

// [a; b]
inline IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("vconcat: col mismatch");
  IntMatrix c(a.rows + b.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) c.at(a.rows + i, j) = b.at(i, j);
  return c;
}

inline std::vector<Int> mat_apply(const IntMatrix& a, const std::vector<Int>& v) {
  if (a.cols != v.size()) throw std::invalid_argument("mat_apply: size mismatch");
  std::vector<Int> out(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (a.at(i, j) != 0 && v[j] != 0) out[i] += a.at(i, j) * v[j];
  return out;
}

inline IntMatrix mat_mod(const IntMatrix& a, const Int& m) {
  IntMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.e.size(); ++i) c.e[i] = mod_reduce(a.e[i], m);
  return c;
}

// Exact determinant by fraction-free (Bareiss) elimination; used in tests
// to certify unimodularity of SNF transforms.
inline Int mat_det(IntMatrix a) {
  if (a.rows != a.cols) throw std::invalid_argument("mat_det: not square");
  const std::size_t n = a.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

}  // namespace sl2tor
