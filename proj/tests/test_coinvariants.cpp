#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2tor/coinvariants.hpp"

using namespace sl2tor;

TEST_CASE("degree slices: smallest cases") {
  // degree 0: everything is fixed, one Z/p^delta summand
  CokernelModResult r0 = coinvariants_degree(5, 1, 0);
  CHECK(r0.rank_m == 1);
  CHECK(r0.structure.torsion == std::vector<Int>{5});

  // p = 5, delta = 1: first positive-degree class appears at 2(p-1) = 8
  CHECK(coinvariants_degree(5, 1, 4).rank_m == 0);
  CHECK(coinvariants_degree(5, 1, 8).rank_m == 1);

  CHECK_THROWS(coinvariants_degree(4, 1, 0));
  CHECK_THROWS(coinvariants_degree(5, 0, 0));
}

TEST_CASE("hilbert series against the closed form, delta = 1") {
  for (long p : {5L, 7L}) {
    HilbertCheckReport rep = hilbert_check(p, 1, 40);
    CAPTURE(p);
    CAPTURE(rep.first_mismatch);
    CHECK(rep.ok);
  }
  // pinned closed-form values, p = 5: 1 at d = 0, geometric tail from d = 8
  HilbertSeries h = hilbert_closed_form(5, 1, 32);
  CHECK(h.coefficients[0] == 1);
  CHECK(h.coefficients[8] == 1);
  CHECK(h.coefficients[12] == 1);
  CHECK(h.coefficients[9] == 0);
  CHECK(h.coefficients[30] == 1);  // t^{p(p+1)} term overlaps nothing yet
}

TEST_CASE("hilbert series against the closed form, delta = 2 below the gap") {
  // p = 5, delta = 2: nothing between degree 0 and 128
  HilbertCheckReport rep = hilbert_check(5, 2, 40);
  CHECK(rep.ok);
  for (long d = 1; d <= 40; ++d) CHECK(rep.computed[d] == 0);
  HilbertSeries h = hilbert_closed_form(5, 2, 130);
  for (long d = 1; d < 128; ++d) CHECK(h.coefficients[d] == 0);
  CHECK(h.coefficients[128] == 1);
}

TEST_CASE("X^{p^2-1} = X^{p-1} f2 - f1^{p-1} mod p") {
  for (long p : {5L, 7L}) {
    CoefficientRing fp((Int(p)));
    DicksonPair d = dickson_pair(p, 1);
    HomogeneousPoly lhs = HomogeneousPoly::monomial(p * p - 1, p * p - 1).with_ring(fp);
    HomogeneousPoly rhs = poly_sub(
        poly_mul(HomogeneousPoly::monomial(p - 1, p - 1).with_ring(fp),
                 d.f2.with_ring(fp)),
        poly_pow(d.f1.with_ring(fp), p - 1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("monomial classes: divisibility pattern of X^a Y^b") {
  // class of X^a Y^b mod p^delta vanishes unless (p-1) | a-b; otherwise its
  // order divides p^{min(r+1, delta)} with r = val_p((a-b)/(p-1))
  const long p = 5, delta = 2;
  for (long d = 1; d <= 30; ++d)
    for (long a = d / 2; a <= d; ++a) {
      long b = d - a;
      Int ord = coinvariant_class_order(HomogeneousPoly::monomial(d, a), p, delta);
      CAPTURE(a);
      CAPTURE(b);
      if ((a - b) % (p - 1) != 0) {
        CHECK(ord == 1);
      } else if (a != b) {
        long r = *valuation(Int((a - b) / (p - 1)), p).value;
        Int bound = pow_int(Int(p), std::min(r + 1, delta));
        CHECK(mpz_divisible_p(bound.get_mpz_t(), ord.get_mpz_t()));
      }
    }
}

TEST_CASE("U_1 is a primitive class of order p") {
  CHECK(primitive_generator_U(5, 1) == HomogeneousPoly::monomial(24, 20));
  CHECK(coinvariant_class_order(primitive_generator_U(5, 1), 5, 1) == 5);
  // delta = 2 shape: X^{104} Y^{24}, degree 128
  HomogeneousPoly u2 = primitive_generator_U(5, 2);
  CHECK(u2.degree == 128);
  CHECK(u2 == HomogeneousPoly::monomial(128, 104));
}

TEST_CASE("primitive generator report, delta = 1") {
  for (long p : {5L, 7L}) {
    PrimitiveGeneratorReport rep = primitive_generator_check(p, 1);
    CAPTURE(p);
    CHECK(rep.order_ok);
    CHECK(rep.rank_one);
    CHECK(rep.products_ok);
    for (auto& [a, b, ord] : rep.product_orders) CHECK(ord == p);
  }
}

TEST_CASE("decomposition witnesses mod p") {
  for (long p : {5L, 7L}) {
    DecompositionReport rep = decomposition_witness_mod_p(p);
    CAPTURE(p);
    for (const auto& f : rep.failures) CAPTURE(f);
    CHECK(rep.ok);
  }
}

TEST_CASE("pairing of u_{delta+r} with the matching product is 1 at a = 0") {
  CHECK(primitive_pairing(5, 1, 1, 0) == 1);
  CHECK(primitive_pairing(5, 1, 2, 0) == 1);
  CHECK(primitive_pairing(7, 1, 1, 0) == 1);
}

TEST_CASE("pairing vanishes for a > 0 and rejects bad exponents") {
  CHECK(pairing_vanishing_check(5, 1, 2, 1));
  CHECK_THROWS_AS(primitive_pairing(5, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(pairing_vanishing_check(5, 1, 2, 0), std::invalid_argument);
}
