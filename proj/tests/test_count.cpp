#include "doctest.h"
#include "dynzeta/arith.hpp"
#include "dynzeta/count.hpp"
#include "dynzeta/dynmap.hpp"

using namespace dynzeta;

namespace {

mpz_class pw(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

// prime-to-p part of |k|, computed without the library
mpz_class strip(mpz_class k, std::uint32_t p) {
  k = abs(k);
  while (k % p == 0) k /= p;
  return k;
}

}  // namespace

TEST_SUITE("count") {
  TEST_CASE("multiplicative kernels") {
    CHECK(kernel_size_gm(7, 7) == 1);
    CHECK(kernel_size_gm(63, 7) == 9);
    CHECK(kernel_size_gm(3, 7) == 3);
    CHECK(kernel_size_gm(-9, 7) == 9);
    CHECK_THROWS(kernel_size_gm(0, 7));
  }

  TEST_CASE("elliptic kernels") {
    CHECK(kernel_size_elliptic(3, 5, 1) == 9);
    CHECK(kernel_size_elliptic(5, 5, 1) == 5);
    CHECK(kernel_size_elliptic(5, 5, 2) == 1);
    CHECK(kernel_size_elliptic(10, 5, 1) == 20);
    CHECK_THROWS(kernel_size_elliptic(0, 5, 1));
    CHECK_THROWS(kernel_size_elliptic(3, 5, 3));
  }

  TEST_CASE("additive kernels") {
    auto F = make_field(3, 1);
    CHECK(kernel_size_additive(SkewPoly::from_ints(F, {0, 1})) == 1);
    CHECK(kernel_size_additive(SkewPoly::from_ints(F, {0, 2, 1})) == 3);
    CHECK(kernel_size_additive(SkewPoly::from_ints(F, {0, 0, 0, 1})) == 1);
    CHECK_THROWS(kernel_size_additive(SkewPoly(F)));
    // roots of 2X^3 + X^9 directly
    Poly P = SkewPoly::from_ints(F, {0, 2, 1}).additive_poly();
    CHECK(distinct_root_count(P) == 3);
  }

  TEST_CASE("formula examples") {
    CHECK(fixed_point_formula(MapDescriptor::power(2, 7), 6).total == 11);
    KernelReport ch = fixed_point_formula(MapDescriptor::chebyshev(2, 7), 3);
    CHECK(ch.total == 6);
    CHECK(ch.boundary == 1);
    REQUIRE(ch.terms.size() == 2);
    CHECK(ch.terms[0].kernel + ch.terms[1].kernel == 10);
    KernelReport la = fixed_point_formula(MapDescriptor::lattes(-3, 2, 0, 2, 5), 2);
    CHECK(la.total == 7);
    CHECK(la.boundary == 0);
    CHECK(la.to_json().contains("terms"));
    for (const auto& r : {ch, la})
      for (const auto& t : r.terms) CHECK(t.kernel * pw(r.n == 3 ? 7 : 5, t.v) == t.deg);
  }

  TEST_CASE("power and Chebyshev counts against valuation formulas") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u})
      for (unsigned m = 2; m <= 6; ++m) {
        auto pc = formula_counts(MapDescriptor::power(m, p), 25);
        auto cc = formula_counts(MapDescriptor::chebyshev(m, p), 25);
        for (unsigned n = 1; n <= 25; ++n) {
          mpz_class mn = pw(m, n);
          if (m % p == 0) {
            CHECK(pc[n - 1] == mn + 1);
            CHECK(cc[n - 1] == mn + 1);
            continue;
          }
          CHECK(pc[n - 1] == 2 + strip(mn - 1, p));
          mpz_class twice = strip(mn - 1, p) + strip(mn + 1, p);
          CHECK(cc[n - 1] * 2 == 2 + twice);
        }
      }
  }

  TEST_CASE("Lattes counts against torsion sizes") {
    for (auto [p, c] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {11, 2}})
      for (unsigned m : {2u, 3u}) {
        auto d = MapDescriptor::lattes(-3, 2, 0, m, p);
        auto f = formula_counts(d, 15);
        for (unsigned n = 1; n <= 15; ++n) {
          mpz_class mn = pw(m, n), a = mn - 1, b = mn + 1;
          // #E[k] = (prime-to-p part of k)^2 * p^(v(k) (2 - c))
          auto tors = [&](mpz_class k) {
            mpz_class s = strip(k, p), q = k / s;
            mpz_class out = s * s;
            if (c == 1) out *= q;
            return out;
          };
          CHECK(f[n - 1] * 2 == tors(a) + tors(b));
        }
      }
  }

  TEST_CASE("formula agrees with brute force") {
    std::vector<MapDescriptor> ds = {
        MapDescriptor::power(2, 7),      MapDescriptor::power(3, 5),
        MapDescriptor::chebyshev(2, 7),  MapDescriptor::chebyshev(3, 5),
        MapDescriptor::lattes(-3, 2, 0, 2, 5), MapDescriptor::lattes(-3, 2, 0, 2, 11),
        MapDescriptor::additive({1, 1}, 3), MapDescriptor::additive({1, 2}, 3),
        MapDescriptor::additive({2, 1}, 5)};
    for (const auto& d : ds) {
      auto brute = brute_fixed_point_sequence(build_map(d), 20, 20000);
      auto f = formula_counts(d, static_cast<unsigned>(brute.size()));
      REQUIRE(brute.size() >= 2);
      for (std::size_t i = 0; i < brute.size(); ++i) CHECK(f[i] == brute[i]);
    }
  }

  TEST_CASE("subadditive quotient of X + X^3 by +-1") {
    // (X + X^3)^2 = Y (1 + Y)^2 with Y = X^2
    auto d = MapDescriptor::subadditive({1, 1}, 2, {0, 1, 2, 1}, 3);
    auto brute = brute_fixed_point_sequence(build_map(d), 6);
    auto f = formula_counts(d, 6);
    REQUIRE(brute.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(f[i] == brute[i]);
    // mu_2 does not sit inside F_3 only when d does not divide q - 1
    CHECK_THROWS(MapDescriptor::subadditive({1, 1}, 4, {}, 3));
  }

  TEST_CASE("coseparable dichotomy") {
    CHECK(is_coseparable(MapDescriptor::power(5, 5)));
    CHECK_FALSE(is_coseparable(MapDescriptor::power(2, 7)));
    CHECK_FALSE(is_coseparable(MapDescriptor::additive({1, 1}, 3)));
    CHECK(is_coseparable(MapDescriptor::additive({0, 1}, 3)));
    CHECK(is_coseparable(MapDescriptor::chebyshev(6, 3)));
    auto pf = formula_counts(MapDescriptor::power(5, 5), 20);
    auto af = formula_counts(MapDescriptor::additive({0, 1, 1}, 3), 12);
    for (unsigned n = 1; n <= 20; ++n) CHECK(pf[n - 1] == pw(5, n) + 1);
    for (unsigned n = 1; n <= 12; ++n) CHECK(af[n - 1] == pw(9, n) + 1);
    // non-coseparable maps fall short of the maximum somewhere
    auto nf = formula_counts(MapDescriptor::additive({1, 1}, 3), 12);
    bool short_somewhere = false;
    for (unsigned n = 1; n <= 12; ++n) short_somewhere |= nf[n - 1] < pw(3, n) + 1;
    CHECK(short_somewhere);
  }

  TEST_CASE("growth bound") {
    GrowthReport g = growth_bound(MapDescriptor::power(2, 7));
    CHECK(g.c == 3);
    CHECK(g.bound_ok);
    CHECK(g.ratios.size() == 20);
    GrowthReport cs = growth_bound(MapDescriptor::power(5, 5));
    CHECK(cs.c == 6);
    CHECK(cs.bound_ok);
    CHECK(cs.ratios.back() == doctest::Approx(1.0).epsilon(0.01));
    GrowthReport bad = growth_bound(std::vector<mpz_class>{1, 100}, 2);
    CHECK_FALSE(bad.bound_ok);
  }
}
