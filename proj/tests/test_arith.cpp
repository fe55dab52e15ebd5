#include <functional>
#include <random>

#include "doctest.h"
#include "dynzeta/arith.hpp"

using namespace dynzeta;

namespace {

long naive_v(mpz_class n, std::uint32_t p) {
  long v = 0;
  n = abs(n);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// det(M^n - I) for a 4x4 integer matrix by cofactor expansion
mpz_class det4(const std::vector<std::vector<mpz_class>>& A) {
  std::function<mpz_class(const std::vector<std::vector<mpz_class>>&)> det =
      [&](const std::vector<std::vector<mpz_class>>& B) -> mpz_class {
    if (B.size() == 1) return B[0][0];
    mpz_class s = 0;
    for (std::size_t j = 0; j < B.size(); ++j) {
      std::vector<std::vector<mpz_class>> C;
      for (std::size_t i = 1; i < B.size(); ++i) {
        std::vector<mpz_class> row;
        for (std::size_t k = 0; k < B.size(); ++k)
          if (k != j) row.push_back(B[i][k]);
        C.push_back(row);
      }
      mpz_class t = B[0][j] * det(C);
      s += (j % 2 ? -t : t);
    }
    return s;
  };
  return det(A);
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("valuations") {
    CHECK(v_p(7775, 5) == 2);
    CHECK(v_p(-49, 7) == 2);
    CHECK(v_p(10, 3) == 0);
    CHECK(abs_p(63, 7) == mpq_class(1, 7));
    CHECK(prime_to_p(-63, 7) == 9);
    CHECK_THROWS(v_p(0, 5));
    CHECK(ipow(3, 40) == mpz_class("12157665459056928801"));
  }

  TEST_CASE("multiplicative order") {
    CHECK(mult_order(2, 7) == 3);
    CHECK(mult_order(1, 7) == 1);
    CHECK(mult_order(2, 11) == 10);
    CHECK(mult_order(-1, 5) == 2);
    CHECK_THROWS(mult_order(14, 7));
    for (std::uint32_t p : {3u, 5u, 7u, 13u, 101u})
      for (long long m = 1; m < 40; ++m) {
        if (m % p == 0) continue;
        std::uint64_t s = 1, x = m % p;
        while (x != 1) {
          x = x * m % p;
          ++s;
        }
        CHECK(mult_order(m, p) == s);
      }
  }

  TEST_CASE("lifting the exponent") {
    CHECK(v_power_diff(6, 1, 5, 5) == 2);
    CHECK(v_power_diff(6, 1, 3, 5) == 1);
    CHECK_THROWS(v_power_diff(4, 4, 3, 5));
    CHECK_THROWS(v_power_diff(3, 1, 3, 5));  // p does not divide x - y
    std::mt19937_64 rng(42);
    const std::uint32_t primes[] = {3, 5, 7, 11, 13};
    for (int t = 0; t < 1000; ++t) {
      std::uint32_t p = primes[rng() % 5];
      long long y = 1 + static_cast<long long>(rng() % 50);
      if (y % p == 0) ++y;
      long long x = y + p * (1 + static_cast<long long>(rng() % 30));
      unsigned n = 1 + static_cast<unsigned>(rng() % 30);
      mpz_class xn, yn;
      mpz_ui_pow_ui(xn.get_mpz_t(), static_cast<unsigned long>(x), n);
      mpz_ui_pow_ui(yn.get_mpz_t(), static_cast<unsigned long>(y), n);
      long direct = naive_v(xn - yn, p);
      CHECK(v_power_diff(x, y, n, p) == direct);
      CHECK(direct == naive_v(mpz_class(static_cast<long>(x - y)), p) + naive_v(n, p));
      if (n % p) CHECK(direct == naive_v(mpz_class(static_cast<long>(x - y)), p));
    }
  }

  TEST_CASE("filtration of m = 2 at p = 7") {
    FiltrationReport pm = sm_filtration(2, {1, -1}, 7, 1);
    CHECK(pm.N == 1);
    CHECK_FALSE(pm.coseparable);
    REQUIRE(pm.levels.size() >= 2);
    REQUIRE(pm.levels[1].s.has_value());
    CHECK(*pm.levels[1].s == 3);
    CHECK(pm.levels[1].gamma == "1");
    CHECK(pm.C == 1);
    CHECK(pm.t == 147);
    CHECK(pm.lemma_ok());

    FiltrationReport one = sm_filtration(2, {1}, 7, 1, 1, 30);
    CHECK(*one.levels[1].s == 3);
    CHECK(one.levels[1].multiples_ok);
    // the set S_1 in [1, 30], by hand
    for (unsigned n = 1; n <= 30; ++n) CHECK(((1u << n) % 7 == 1) == (n % 3 == 0));
  }

  TEST_CASE("coseparable filtration") {
    for (auto G : {std::vector<long long>{1}, std::vector<long long>{1, -1}}) {
      FiltrationReport r = sm_filtration(5, G, 5, 3);
      CHECK(r.coseparable);
      for (std::size_t m = 1; m < r.levels.size(); ++m) CHECK_FALSE(r.levels[m].s.has_value());
      CHECK(r.t == 5);
    }
  }

  TEST_CASE("filtration divisibility and nesting") {
    for (std::uint32_t p : {3u, 5u, 7u})
      for (long long m : {2LL, 3LL, 4LL, 6LL}) {
        if (m % p == 0) continue;
        FiltrationReport r = sm_filtration(m, {1, -1}, p, 3, 1, 3ULL * p * p * (p - 1));
        CHECK(r.lemma_ok());
        for (std::size_t k = 1; k + 1 < r.levels.size(); ++k) {
          REQUIRE(r.levels[k].s.has_value());
          REQUIRE(r.levels[k + 1].s.has_value());
          CHECK(*r.levels[k + 1].s % *r.levels[k].s == 0);
          CHECK(r.levels[k + 1].subgroup.size() <= r.levels[k].subgroup.size());
        }
        // s_1 is the least n with m^n = +-1 mod p
        std::uint64_t s = 1;
        long long x = m % p;
        while (x != 1 && x != static_cast<long long>(p) - 1) {
          x = x * m % p;
          ++s;
        }
        CHECK(*r.levels[1].s == s);
        CHECK(r.to_json().contains("t"));
      }
  }

  TEST_CASE("H4 verdicts") {
    CHECK(h4_check_integers({2, 2}, false).verdict == H4Verdict::Holds);
    CHECK(h4_check_integers({5, 5}, true).verdict == H4Verdict::FailsCoseparable);
    CHECK(h4_check_integers({3, -1}, false).verdict == H4Verdict::FailsUnitRoot);
    std::vector<mpz_class> salem{1, -3, 3, -3, 1};
    H4Report r = h4_check(salem, false);
    CHECK(r.verdict == H4Verdict::FailsUnitRoot);
    CHECK(r.unit_roots == 2);
    // x^2 - 3x + 1 has real roots off the circle
    CHECK(h4_check({1, -3, 1}, false).verdict == H4Verdict::Holds);
    CHECK(unit_circle_roots({1, 0, 1}) == 2);
    CHECK(unit_circle_roots({1, 1, 1}) == 2);
    CHECK(unit_circle_roots({-2, 1}) == 0);
  }

  TEST_CASE("torus degrees") {
    IntMatrix M = companion_matrix({1, -3, 3, -3, 1});
    CHECK(torus_deg(M, 1) == 1);
    CHECK(torus_deg(M, 2) == 11);
    IntMatrix D{{2, 0}, {0, 2}};
    CHECK(torus_deg(D, 1) == 1);
    CHECK(torus_deg(D, 3) == 49);
    IntMatrix I{{1, 0}, {0, 1}};
    CHECK_THROWS(torus_deg(I, 1));
    // against cofactor expansion of M^n - I
    IntMatrix P = M;
    for (unsigned n = 1; n <= 8; ++n) {
      IntMatrix A = P;
      for (std::size_t i = 0; i < 4; ++i) A[i][i] -= 1;
      CHECK(torus_deg(M, n) == abs(det4(A)));
      CHECK(bareiss_det(A) == det4(A));
      IntMatrix Q(4, std::vector<mpz_class>(4, 0));
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          for (std::size_t k = 0; k < 4; ++k) Q[i][j] += P[i][k] * M[k][j];
      P = Q;
    }
  }

  TEST_CASE("dominant roots of the Salem polynomial") {
    DominantRoots d = dominant_roots({1, -3, 3, -3, 1});
    CHECK(d.count >= 1);
    CHECK(d.modulus == doctest::Approx(2.1537).epsilon(1e-4));
    auto roots = certified_roots({1, -3, 3, -3, 1});
    CHECK(roots.size() == 4);
    int on_circle = 0;
    for (const auto& r : roots)
      if (std::abs(std::abs(r.approx) - 1) < 1e-9) ++on_circle;
    CHECK(on_circle == 2);
  }
}
