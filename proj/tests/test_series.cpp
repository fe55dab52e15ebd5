#include <random>

#include "doctest.h"
#include "dynzeta/count.hpp"
#include "dynzeta/dynmap.hpp"
#include "dynzeta/series.hpp"
#include "dynzeta/verify.hpp"

using namespace dynzeta;

namespace {

std::vector<mpz_class> power_counts(unsigned m, std::uint32_t p, unsigned T) {
  return formula_counts(MapDescriptor::power(m, p), T);
}

// exact expansion of 1 / prod (1 - r_i z)
TruncSeries geometric_product(const std::vector<long>& rs, std::size_t T) {
  TruncSeries s = TruncSeries::one(T);
  for (long r : rs) {
    TruncSeries g(T);
    mpq_class x = 1;
    for (std::size_t i = 0; i <= T; ++i, x *= r) g[i] = x;
    s = s * g;
  }
  return s;
}

TruncSeries random_series(std::mt19937_64& rng, std::size_t T, long c0) {
  TruncSeries s(T);
  s[0] = c0;
  for (std::size_t i = 1; i <= T; ++i)
    s[i] = mpq_class(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6));
  for (std::size_t i = 1; i <= T; ++i) s[i].canonicalize();
  return s;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("exp of z") {
    TruncSeries z(4);
    z[1] = 1;
    TruncSeries e = exp_series(z);
    CHECK(e == TruncSeries({1, 1, mpq_class(1, 2), mpq_class(1, 6), mpq_class(1, 24)}));
    TruncSeries bad = TruncSeries::one(4);
    CHECK_THROWS(exp_series(bad));
    CHECK_THROWS(log_series(z));
  }

  TEST_CASE("generalized binomial") {
    TruncSeries a = TruncSeries::from_poly(QPoly::from_ints({1, 0, 0, -1}), 6);
    TruncSeries r = pow_series(a, mpq_class(1, 3));
    CHECK(r == TruncSeries({1, 0, 0, mpq_class(-1, 3), 0, 0, mpq_class(-1, 9)}));
    // binomial coefficients of (1 + z)^(-5/2) by the product formula
    TruncSeries b = TruncSeries::from_poly(QPoly::from_ints({1, 1}), 12);
    mpq_class e(-5, 2), c = 1;
    TruncSeries pb = pow_series(b, e);
    for (std::size_t k = 0; k <= 12; ++k) {
      CHECK(pb[k] == c);
      c = c * (e - static_cast<long>(k)) / static_cast<long>(k + 1);
    }
  }

  TEST_CASE("round trips") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 20; ++t) {
      TruncSeries a = random_series(rng, 15, 0);
      CHECK(log_series(exp_series(a)) == a);
      TruncSeries u = random_series(rng, 15, 1);
      CHECK(exp_series(log_series(u)) == u);
      mpq_class e(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5));
      e.canonicalize();
      CHECK(pow_series(u, e) * pow_series(u, -e) == TruncSeries::one(15));
      if (e != 0) CHECK(pow_series(pow_series(u, e), 1 / e) == u);
      CHECK(pow_series(u, 3) == u * u * u);
      CHECK(u * u.inverse() == TruncSeries::one(15));
      // the log-derivative helpers invert each other
      CHECK(exp_of_logderiv(log_derivative_coeffs(u), 15) == u);
    }
  }

  TEST_CASE("zeta functions from counts") {
    std::vector<mpz_class> ones(10, 1);
    TruncSeries z = zeta_from_counts(ones, 10);
    for (std::size_t i = 0; i <= 10; ++i) CHECK(z[i] == 1);
    TruncSeries t = tame_from_counts(ones, 3, 3);
    CHECK(t == TruncSeries({1, 1, 1, mpq_class(2, 3)}));
    // 5^n + 1 is the zeta of 1/((1-5z)(1-z))
    std::vector<mpz_class> c;
    mpz_class x = 1;
    for (int n = 1; n <= 20; ++n) c.push_back((x *= 5) + 1);
    CHECK(zeta_from_counts(c, 20) == geometric_product({5, 1}, 20));
    CHECK(zeta_from_counts(c, 20).to_json()[1] == "6/1");
  }

  TEST_CASE("Euler product matches digraph counts") {
    RationalMap f = build_map(MapDescriptor::chebyshev(2, 7));
    auto ext = make_field(7, 2);
    Digraph g = restrict_digraph(extend_scalars(f, ext), ext);
    CycleCensus cen = cycle_census(g);
    std::vector<mpz_class> counts;
    for (unsigned n = 1; n <= 20; ++n) counts.push_back(restricted_fixed_points(g, n));
    CHECK(euler_product(cen.cycles, 20) == zeta_from_counts(counts, 20));
  }

  TEST_CASE("recurrences") {
    std::vector<mpz_class> fib{0, 1};
    while (fib.size() < 40) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    RecurrenceReport r = recurrence_detect(fib, 12, 40);
    REQUIRE(r.found);
    CHECK(r.order == 2);
    CHECK(r.charpoly == QPoly::from_ints({-1, -1, 1}));

    std::vector<mpz_class> c;
    mpz_class x = 1;
    for (int n = 1; n <= 60; ++n) c.push_back((x *= 5) + 1);
    RecurrenceReport q = recurrence_detect(c, 12, 60);
    REQUIRE(q.found);
    CHECK(q.charpoly == QPoly::from_ints({5, -6, 1}));

    RecurrenceReport no = recurrence_detect(power_counts(2, 7, 60), 12, 60);
    CHECK_FALSE(no.found);
    CHECK(no.max_order == 12);
    CHECK(no.window == 60);
    CHECK(no.describe().find("12") != std::string::npos);
    CHECK_THROWS(recurrence_detect(c, 12, 20));
  }

  TEST_CASE("exact and modular Berlekamp-Massey agree") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 15; ++t) {
      // random recurrence of order L with rational coefficients
      std::size_t L = 1 + rng() % 8;
      std::vector<mpq_class> C(L), seq;
      for (auto& v : C) {
        v = mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
        v.canonicalize();
      }
      if (C.back() == 0) C.back() = 1;
      for (std::size_t i = 0; i < L; ++i) seq.push_back(mpq_class(static_cast<long>(rng() % 7) - 3));
      while (seq.size() < 4 * L + 10) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < L; ++i) s += C[i] * seq[seq.size() - 1 - i];
        seq.push_back(s);
      }
      auto e = bm_exact(seq, 20);
      auto m = bm_modular(seq, 20);
      REQUIRE(e.has_value());
      REQUIRE(m.has_value());
      CHECK(*e == *m);
      // the connection polynomial annihilates the sequence
      for (std::size_t n = e->size() - 1; n < seq.size(); ++n) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < e->size(); ++i) s += (*e)[i] * seq[n - i];
        CHECK(s == 0);
      }
    }
  }

  TEST_CASE("Pade certificates") {
    TruncSeries g = geometric_product({5, 1}, 40);
    auto pr = pade_certify(g, 4);
    REQUIRE(pr.has_value());
    CHECK(pr->den == QPoly::from_ints({1, -6, 5}));
    CHECK(pr->num == QPoly::from_ints({1}));
    CHECK(pr->horizon == 40);
    CHECK_THROWS(pade_certify(g, 17));

    TruncSeries tame = tame_from_counts(power_counts(2, 7, 60), 7, 60);
    CHECK_FALSE(pade_certify(tame, 20).has_value());
  }

  TEST_CASE("root-rational certificates") {
    TruncSeries cube = pow_series(TruncSeries::from_poly(QPoly::from_ints({1, -1}), 60), mpq_class(1, 3));
    RootRationalCertificate c = root_rational_certificate(cube, 3);
    CHECK(c.certified);
    CHECK(c.logderiv_rational);
    CHECK(c.power_rational);
    CHECK(c.literal_pade_run);
    CHECK(c.literal_pade_ok);
    CHECK(c.R_den == QPoly::from_ints({1, -1}));
    CHECK(c.to_json()["certified"] == true);

    // exp(sum |n|_3 z^n / n): no recurrence of order 12 on 60 terms
    std::vector<mpq_class> g;
    for (long n = 1; n <= 60; ++n) {
      long q = 1;
      while (n % (3 * q) == 0) q *= 3;
      g.push_back(mpq_class(1, q));
    }
    CertificateOptions desk;
    desk.max_order = 12;
    RootRationalCertificate no = root_rational_certificate_logderiv(g, 9, desk);
    CHECK_FALSE(no.certified);
    CHECK_FALSE(no.logderiv_rational);
    // on 200 terms the profile is still periodic with period 81
    std::vector<mpq_class> more;
    for (long n = 1; n <= 200; ++n) {
      long q = 1;
      while (n % (3 * q) == 0) q *= 3;
      more.push_back(mpq_class(1, q));
    }
    CHECK(root_rational_certificate_logderiv(more, 9).logderiv.order <= 81);
  }

  TEST_CASE("tame zeta of x^2 at p = 7 is root-rational with t = 147") {
    auto d = MapDescriptor::power(2, 7);
    FiltrationReport rep = descriptor_filtration(d);
    CHECK(rep.t == 147);
    RootRationalCertificate c = tame_certificate(d, rep.t);
    CHECK(c.certified);
    CHECK(c.power_rational);
    CHECK_FALSE(c.literal_pade_run);
  }

  TEST_CASE("union formula") {
    std::mt19937_64 rng(3);
    TruncSeries a = random_series(rng, 12, 1), b = random_series(rng, 12, 1);
    CHECK(zeta_union(a, b, b) == a);
    CHECK(zeta_union(a, b, TruncSeries::one(12)) == a * b);
    // four lines in a cycle through four fixed points
    std::vector<mpz_class> g, u;
    mpz_class x = 1;
    for (int n = 1; n <= 20; ++n) {
      g.push_back((x *= 3) + 1);
      u.push_back(4 * g.back() - 4);
    }
    TruncSeries L = zeta_from_counts(g, 20), pt = geometric_product({1}, 20);
    TruncSeries two = zeta_union(L, L, pt);
    TruncSeries three = zeta_union(two, L, pt);
    TruncSeries four = zeta_union(three, L, pt * pt);
    TruncSeries expect = L * L * L * L * pow_series(pt, -4);
    CHECK(four == expect);
    CHECK(four == zeta_from_counts(u, 20));
  }

  TEST_CASE("tame identity") {
    std::vector<mpz_class> ones(30, 1);
    CHECK(tame_identity_check(ones, 5, 30).holds);
    auto counts = power_counts(2, 7, 30);
    std::vector<std::vector<mpz_class>> it;
    for (std::uint64_t q = 1; q <= 30; q *= 7) {
      std::vector<mpz_class> c;
      for (std::uint64_t n = 1; n * q <= 30; ++n) c.push_back(counts[n * q - 1]);
      it.push_back(c);
    }
    CHECK(tame_identity_check(counts, it, 7, 30).holds);
    auto bad = counts;
    bad[6] += 1;
    IdentityReport r = tame_identity_check(bad, it, 7, 30);
    CHECK_FALSE(r.holds);
    CHECK(r.first_failure == 7);
    CHECK(r.which == "tame-full");
    CHECK_THROWS(tame_identity_check(std::vector<mpz_class>(10, 1), 3, 30));
  }

  TEST_CASE("pair ODE") {
    const std::size_t T = 30;
    for (auto d : {MapDescriptor::power(2, 7), MapDescriptor::power(5, 5)}) {
      const std::uint32_t p = d.p;
      auto counts = formula_counts(d, static_cast<unsigned>(T * p));
      std::vector<mpz_class> iter;
      for (std::size_t n = 1; n <= T / p; ++n) iter.push_back(counts[n * p - 1]);
      FiltrationReport rep = descriptor_filtration(d);
      RootRationalCertificate c = tame_certificate(d, rep.t, 200);
      REQUIRE(c.logderiv_rational);
      TruncSeries F1 = zeta_from_counts(counts, T), F2 = zeta_from_counts(iter, T / p);
      CHECK(pair_ode_check(F1, F2, c.R_num, c.R_den, p, T).holds);
      QPoly off = c.R_num + QPoly::monomial(mpq_class(1, 7), 2);
      CHECK_FALSE(pair_ode_check(F1, F2, off, c.R_den, p, T).holds);
      CHECK_THROWS(pair_ode_check(F1, F2, c.R_num, QPoly(), p, T));
    }
  }
}
