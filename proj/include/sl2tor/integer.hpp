#pragma once

// Arbitrary-precision integer helpers on top of GMP.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace sl2tor {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Canonical residue in [0, m).
inline Int mod_reduce(const Int& x, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p)
    if (is_prime(Int(p))) out.push_back(p);
  return out;
}

// p-adic valuation; val_p(0) is represented as an empty optional (+infinity).
struct PValuation {
  long p = 2;
  std::optional<long> value;  // nullopt means +infinity (input was 0)

  bool is_infinite() const { return !value.has_value(); }
  // +infinity >= anything; finite values compare numerically.
  bool at_least(long bound) const { return is_infinite() || *value >= bound; }
  bool equals(long v) const { return value.has_value() && *value == v; }
};

inline PValuation valuation(Int x, long p) {
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  PValuation v;
  v.p = p;
  if (x == 0) return v;  // +infinity
  long e = 0;
  Int q, r, pp(p);
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t());
    if (r != 0) break;
    x = q;
    ++e;
  }
  v.value = e;
  return v;
}

// Valuation as a plain long; throws on 0.
inline long val_exact(const Int& x, long p) {
  PValuation v = valuation(x, p);
  if (v.is_infinite()) throw std::invalid_argument("val_exact: zero input");
  return *v.value;
}

}  // namespace sl2tor
