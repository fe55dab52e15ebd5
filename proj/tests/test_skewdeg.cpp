#include <random>

#include "doctest.h"
#include "dynzeta/skewdeg.hpp"

using namespace dynzeta;

namespace {

SkewPoly random_skew(const FieldPtr& F, std::mt19937_64& rng, unsigned maxdeg) {
  std::vector<Elem> c(1 + rng() % (maxdeg + 1));
  for (auto& e : c) e = static_cast<Elem>(rng() % F->size());
  return SkewPoly(F, c);
}

// deg(sigma^n - 1) for the 2x2 example: 9^n for odd n, 9^(n - |n|_3^-1) for even n
mpz_class example_oracle(unsigned n) {
  unsigned e = n;
  if (n % 2 == 0) {
    unsigned q = 1;
    while (n % (3 * q) == 0) q *= 3;
    e = n - q;
  }
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 9, e);
  return r;
}

}  // namespace

TEST_SUITE("skewdeg") {
  TEST_CASE("twisted commutation") {
    auto F = make_field(3, 2);
    SkewPoly phi = SkewPoly::phi_power(F, 1);
    for (Elem c = 0; c < F->size(); ++c)
      CHECK(phi * SkewPoly::constant(F, c) == SkewPoly(F, {0, F->frob(c)}));
    SkewPoly phi2 = SkewPoly::phi_power(F, 2);
    for (Elem c = 1; c < F->size(); ++c)
      CHECK(phi2 * SkewPoly::constant(F, c) == SkewPoly(F, {0, 0, c}));  // c^9 = c
  }

  TEST_CASE("binomial collapse in characteristic 3") {
    auto F = make_field(3, 1);
    SkewPoly s = SkewPoly::from_ints(F, {1, 1});
    CHECK(skew_pow(s, 3) == SkewPoly::from_ints(F, {1, 0, 0, 1}));
    CHECK(skew_pow(s, 2) == SkewPoly::from_ints(F, {1, 2, 1}));
    CHECK(skew_pow(s, 9) == SkewPoly::from_ints(F, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  }

  TEST_CASE("additive action is composition") {
    auto F = make_field(3, 3);
    std::mt19937_64 rng(42);
    for (int t = 0; t < 40; ++t) {
      SkewPoly a = random_skew(F, rng, 2), b = random_skew(F, rng, 2);
      SkewPoly ab = a * b;
      for (int k = 0; k < 10; ++k) {
        Elem x = static_cast<Elem>(rng() % F->size());
        CHECK(ab.apply(x) == a.apply(b.apply(x)));
        Poly P = a.additive_poly();
        CHECK(P(x) == a.apply(x));
      }
    }
  }

  TEST_CASE("degree and valuation are additive") {
    auto F = make_field(5, 2);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
      SkewPoly a = random_skew(F, rng, 4), b = random_skew(F, rng, 4);
      if (a.is_zero() || b.is_zero()) continue;
      SkewPoly ab = a * b;
      CHECK(ab.degree() == a.degree() + b.degree());
      CHECK(ab.valuation() == a.valuation() + b.valuation());
    }
  }

  TEST_CASE("left division round trip") {
    auto F = make_field(7, 2);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
      SkewPoly f = random_skew(F, rng, 6), g = random_skew(F, rng, 3);
      if (g.is_zero()) {
        CHECK_THROWS(skew_left_divmod(f, g));
        continue;
      }
      auto [q, r] = skew_left_divmod(f, g);
      CHECK(q * g + r == f);
      CHECK(r.degree() < g.degree());
    }
  }

  TEST_CASE("left common multiple") {
    auto F = make_field(3, 2);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
      SkewPoly a = random_skew(F, rng, 3), b = random_skew(F, rng, 3);
      if (a.is_zero() || b.is_zero()) continue;
      auto [u, v] = left_common_multiple(a, b);
      CHECK(u * a == v * b);
      CHECK_FALSE(u.is_zero());
      CHECK(u.degree() <= b.degree());
    }
  }

  TEST_CASE("Dieudonne degrees") {
    auto F = make_field(3, 1);
    SkewMatrix D(F, 2);
    D(0, 0) = SkewPoly::phi_power(F, 2);
    D(1, 1) = SkewPoly::phi_power(F, 1);
    D(0, 1) = D(1, 0) = SkewPoly(F);
    CHECK(ddet_degree(D) == 3);

    CHECK(ddet_degree(example_5_8_matrix()) == 2);
    CHECK(commutative_det(example_5_8_matrix()).degree() == 2);

    SkewMatrix U = SkewMatrix::identity(F, 2);
    U(0, 1) = SkewPoly::from_ints(F, {1, 2, 1});
    CHECK(ddet_degree(U) == 0);

    SkewMatrix Z(F, 2);
    Z(0, 0) = Z(0, 1) = Z(1, 0) = Z(1, 1) = SkewPoly::phi_power(F, 1);
    CHECK_FALSE(ddet_degree(Z).has_value());
  }

  TEST_CASE("Dieudonne degree matches the commutative determinant") {
    auto F = make_field(3, 1);
    std::mt19937_64 rng(4);
    int compared = 0;
    for (int t = 0; t < 300; ++t) {
      SkewMatrix M(F, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) M(i, j) = random_skew(F, rng, 2);
      Poly det = commutative_det(M);
      auto dd = ddet_degree(M);
      CHECK(det.is_zero() == !dd.has_value());
      if (dd) {
        CHECK(*dd == det.degree());
        ++compared;
      }
    }
    CHECK(compared > 50);
  }

  TEST_CASE("example degree sequence") {
    CHECK(example_5_8_deg(1) == 9);
    CHECK(example_5_8_deg(2) == 9);
    CHECK(example_5_8_deg(6) == 729);
    for (unsigned n = 1; n <= 12; ++n) CHECK(example_5_8_deg(n) == example_oracle(n));
  }

  TEST_CASE("degree bound") {
    for (unsigned n = 1; n <= 6; ++n) CHECK(degree_bound_check(example_5_8_matrix(), n, 2));
    auto F = make_field(3, 1);
    SkewMatrix D(F, 2);
    D(0, 0) = D(1, 1) = SkewPoly::phi_power(F, 1);
    D(0, 1) = D(1, 0) = SkewPoly(F);
    // diagonal phi: deg(phi^n - 1) = n on each entry, so the bound is tight
    for (unsigned n = 1; n <= 5; ++n) {
      CHECK(degree_bound_check(D, n, 1));
      CHECK(ddet_degree(matrix_pow(D, n) - SkewMatrix::identity(F, 2)) == static_cast<long>(2 * n));
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
      SkewMatrix M(F, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) M(i, j) = random_skew(F, rng, 1);
      bool ok = true;
      try {
        ok = degree_bound_check(M, 1 + static_cast<unsigned>(rng() % 4), 1);
      } catch (const std::domain_error&) {
        // singular sigma^n - 1, nothing to bound
      }
      CHECK(ok);
    }
  }
}
