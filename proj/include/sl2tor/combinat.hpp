#pragma once

// Stirling numbers of both kinds, Lucas decompositions, and the
// valuation/congruence predicates used throughout the torsion computations.

#include <cstdint>
#include <mutex>

#include "sl2tor/integer.hpp"

namespace sl2tor {

namespace detail {

// Memoized triangle, grown row by row.  {n,k} = k*{n-1,k} + {n-1,k-1}.
class Stirling2Table {
 public:
  Int get(long n, long k) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<long>(rows_.size()) <= n) {
      long r = static_cast<long>(rows_.size());
      std::vector<Int> row(r + 1);
      if (r == 0) {
        row[0] = 1;
      } else {
        row[0] = 0;
        for (long j = 1; j <= r; ++j) {
          row[j] = Int(j) * (j < r ? rows_[r - 1][j] : Int(0)) + rows_[r - 1][j - 1];
        }
      }
      rows_.push_back(std::move(row));
    }
    if (k > n) return 0;
    return rows_[n][k];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Int>> rows_;
};

// Signed first kind: prod_{i=0}^{k-1} (Y - iX) = sum_j s(k,j) X^{k-j} Y^j;
// s(k+1,j) = s(k,j-1) - k*s(k,j).
class Stirling1Table {
 public:
  Int get(long k, long j) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<long>(rows_.size()) <= k) {
      long r = static_cast<long>(rows_.size());
      std::vector<Int> row(r + 1);
      if (r == 0) {
        row[0] = 1;
      } else {
        row[0] = 0;
        for (long i = 1; i <= r; ++i) {
          Int above = i < r ? rows_[r - 1][i] : Int(0);
          row[i] = rows_[r - 1][i - 1] - Int(r - 1) * above;
        }
      }
      rows_.push_back(std::move(row));
    }
    if (j > k) return 0;
    return rows_[k][j];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Int>> rows_;
};

inline Stirling2Table& stirling2_table() {
  static Stirling2Table t;
  return t;
}

inline Stirling1Table& stirling1_table() {
  static Stirling1Table t;
  return t;
}

}  // namespace detail

inline Int stirling2(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative index");
  if (k > n) return 0;
  return detail::stirling2_table().get(n, k);
}

inline Int stirling1_signed(long k, long j) {
  if (k < 0 || j < 0) throw std::invalid_argument("stirling1: negative index");
  if (j > k) return 0;
  return detail::stirling1_table().get(k, j);
}

// One pass of the second-kind recurrence mod m, reporting {n, k} mod m for
// every n in [0, n_max] at fixed k.  Lets large sweeps avoid the exact table.
inline std::vector<std::uint64_t> stirling2_column_mod(long n_max, long k,
                                                       std::uint64_t m) {
  std::vector<std::uint64_t> out(n_max + 1, 0);
  std::vector<std::uint64_t> row(k + 1, 0);  // row[j] = {n, j} mod m
  row[0] = 1 % m;
  out[0] = k == 0 ? row[0] : 0;
  for (long n = 1; n <= n_max; ++n) {
    for (long j = std::min<long>(k, n); j >= 1; --j)
      row[j] = (static_cast<std::uint64_t>(j) * row[j] + row[j - 1]) % m;
    row[0] = 0;
    out[n] = k <= n ? row[k] : 0;
  }
  return out;
}

// --- Stirling congruence table: residues of three families mod p ---
// {p^2-tp, kp-1}, {t(p-1), kp-1}, {p^2-1, kp-1} for 1 <= t,k <= p.
struct CorstirTable {
  long p;
  // indexed [t-1][k-1]
  std::vector<std::vector<long>> fam1, fam2, fam3;
};

inline CorstirTable corstir_table(long p) {
  if (p <= 3 || !is_prime(Int(p)))
    throw std::invalid_argument("corstir_table: p must be a prime > 3");
  CorstirTable t;
  t.p = p;
  t.fam1.assign(p, std::vector<long>(p));
  t.fam2.assign(p, std::vector<long>(p));
  t.fam3.assign(p, std::vector<long>(p));
  for (long tt = 1; tt <= p; ++tt)
    for (long k = 1; k <= p; ++k) {
      auto res = [&](long n) {
        return mpz_class(mod_reduce(stirling2(n, k * p - 1), Int(p))).get_si();
      };
      t.fam1[tt - 1][k - 1] = res(p * p - tt * p);
      t.fam2[tt - 1][k - 1] = res(tt * (p - 1));
      t.fam3[tt - 1][k - 1] = res(p * p - 1);
    }
  return t;
}

// Asserts the trichotomy: family 1 is 1 exactly at (t,k)=(1,1), family 2
// exactly at k=1, family 3 exactly at k in {1,p}; all other entries 0.
inline bool corstir_check(const CorstirTable& t) {
  for (long tt = 1; tt <= t.p; ++tt)
    for (long k = 1; k <= t.p; ++k) {
      long e1 = (tt == 1 && k == 1) ? 1 : 0;
      long e2 = (k == 1) ? 1 : 0;
      long e3 = (k == 1 || k == t.p) ? 1 : 0;
      if (t.fam1[tt - 1][k - 1] != e1) return false;
      if (t.fam2[tt - 1][k - 1] != e2) return false;
      if (t.fam3[tt - 1][k - 1] != e3) return false;
    }
  return true;
}

// val_p({n, p^delta - 1}) >= delta - 1 - val_p(n+1).
inline bool stirl_valuation_check(long n, long p, long delta) {
  long pd = 1;
  for (long i = 0; i < delta; ++i) pd *= p;
  if (n < pd - 1) throw std::invalid_argument("stirl_valuation_check: n too small");
  long bound = delta - 1 - *valuation(Int(n + 1), p).value;
  if (bound <= 0) return true;
  return valuation(stirling2(n, pd - 1), p).at_least(bound);
}

// Batched version of the same bound for all n in [p^delta - 1, n_max];
// returns the first failing n, or nullopt if the sweep passes.
inline std::optional<long> stirl_valuation_sweep(long p, long delta, long n_max) {
  long pd = 1;
  for (long i = 0; i < delta; ++i) pd *= p;
  long bmax = delta - 1;
  if (bmax <= 0) return std::nullopt;  // bound never positive
  std::uint64_t mod = 1;
  for (long i = 0; i < bmax; ++i) mod *= static_cast<std::uint64_t>(p);
  std::vector<std::uint64_t> col = stirling2_column_mod(n_max, pd - 1, mod);
  for (long n = pd - 1; n <= n_max; ++n) {
    long bound = delta - 1 - *valuation(Int(n + 1), p).value;
    if (bound <= 0) continue;
    std::uint64_t pb = 1;
    for (long i = 0; i < bound; ++i) pb *= static_cast<std::uint64_t>(p);
    if (col[n] % pb != 0) return n;
  }
  return std::nullopt;
}

// Right-hand side of the p-power congruence:
// {n, p^m} mod p^m equals binom((n-p^{m-1})/(p-1) - 1, (n-p^m)/(p-1)) when
// n = 1 mod p-1, and 0 otherwise.
inline Int stirling_ppower_congruence(long n, long m, long p) {
  long pm = 1;
  for (long i = 0; i < m; ++i) pm *= p;
  if (n < pm) throw std::invalid_argument("stirling_ppower_congruence: n < p^m");
  Int mod = pow_int(Int(p), m);
  if ((n - 1) % (p - 1) != 0) return 0;
  long top = (n - pm / p) / (p - 1) - 1;
  long bot = (n - pm) / (p - 1);
  return mod_reduce(binomial(top, bot), mod);
}

// {n-1, p^m - 1} = {n, p^m} mod p^m.
inline bool stirling_shift_congruence(long n, long m, long p) {
  long pm = 1;
  for (long i = 0; i < m; ++i) pm *= p;
  if (n < pm) throw std::invalid_argument("stirling_shift_congruence: n < p^m");
  Int mod = pow_int(Int(p), m);
  return mod_reduce(stirling2(n - 1, pm - 1) - stirling2(n, pm), mod) == 0;
}

// val_p(binom(n-1+p^m, n)) >= m - val_p(n), and for n <= p^m also
// val_p(binom(p^m, n)) >= m - val_p(n).
inline bool binom_valuation_check(long n, long m, long p) {
  if (n < 1 || m < 1) throw std::invalid_argument("binom_valuation_check: bad args");
  long pm = 1;
  for (long i = 0; i < m; ++i) pm *= p;
  long bound = m - *valuation(Int(n), p).value;
  if (!valuation(binomial(n - 1 + pm, n), p).at_least(bound)) return false;
  if (n <= pm && !valuation(binomial(pm, n), p).at_least(bound)) return false;
  return true;
}

// Lucas: binom(m,n) = prod over base-p digits of binom(m_i, n_i) mod p.
inline bool lucas_check(long m, long n, long p) {
  Int prod = 1;
  long mm = m, nn = n;
  while (mm > 0 || nn > 0) {
    long md = mm % p, nd = nn % p;
    prod *= nd <= md ? binomial(md, nd) : Int(0);
    mm /= p;
    nn /= p;
  }
  return mod_reduce(binomial(m, n) - prod, Int(p)) == 0;
}

// val_p((1-p^gamma)^j - 1) >= val_p(j) + gamma, with equality when p > 2,
// or when p = 2 and gamma >= 2.
inline bool unit_power_valuation_check(long j, long gamma, long p) {
  if (j < 1 || gamma < 1)
    throw std::invalid_argument("unit_power_valuation_check: bad args");
  Int x = pow_int(Int(1) - pow_int(Int(p), gamma), j) - 1;
  long bound = *valuation(Int(j), p).value + gamma;
  PValuation v = valuation(x, p);
  if (!v.at_least(bound)) return false;
  if (p > 2 || gamma >= 2) return v.equals(bound);
  return true;
}

}  // namespace sl2tor
