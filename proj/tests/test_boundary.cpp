#include <cmath>

#include "doctest.h"
#include "dynzeta/boundary.hpp"

using namespace dynzeta;

namespace {

long ppart(long n, long p) {
  long q = 1;
  while (n % (q * p) == 0) q *= p;
  return q;
}

// sum_{n <= terms} |n|_p^h z^n, computed here without the library
cplx g_direct(long p, unsigned h, cplx z, long terms) {
  cplx s = 0, zn = 1;
  for (long n = 1; n <= terms; ++n) {
    zn *= z;
    s += std::pow(static_cast<double>(ppart(n, p)), -static_cast<double>(h)) * zn;
  }
  return s;
}

cplx h_direct(long p, double beta, cplx z, long terms) {
  cplx s = 0, zn = 1;
  for (long n = 1; n <= terms; ++n) {
    zn *= z;
    s += std::pow(beta, static_cast<double>(ppart(n, p))) * zn;
  }
  return s;
}

}  // namespace

TEST_SUITE("boundary") {
  TEST_CASE("value at the origin") {
    CHECK(std::abs(eval(BoundaryFunc::G(3, 1), 0)) == 0);
    CHECK(std::abs(eval(BoundaryFunc::H(5, mpq_class(1, 4)), 0)) == 0);
  }

  TEST_CASE("exact coefficients") {
    auto H = BoundaryFunc::H(3, mpq_class(1, 9));
    CHECK(coefficient(H, 1) == mpq_class(1, 9));
    CHECK(coefficient(H, 3) == mpq_class(1, 729));
    CHECK(coefficient(H, 18) == mpq_class(1, 387420489));
    auto G = BoundaryFunc::G(5, 2);
    CHECK(coefficient(G, 50) == mpq_class(1, 625));
    CHECK(coefficient(G, 7) == 1);
  }

  TEST_CASE("functional equation against direct sums") {
    CHECK(std::abs(eval(BoundaryFunc::G(3, 1), 0.5) - g_direct(3, 1, 0.5, 2000)) < 1e-8);
    for (std::uint32_t p : {3u, 5u, 7u})
      for (cplx z : {cplx(0.3, 0.4), cplx(-0.8, 0.1), cplx(0.9, 0), cplx(0, -0.95)}) {
        CHECK(std::abs(eval(BoundaryFunc::G(p, 2), z) - g_direct(p, 2, z, 4000)) < 1e-8);
        CHECK(std::abs(eval(BoundaryFunc::H(p, mpq_class(1, 3)), z) - h_direct(p, 1.0 / 3, z, 4000)) < 1e-8);
        CHECK(std::abs(eval(BoundaryFunc::G(p, 1), z) - eval_direct(BoundaryFunc::G(p, 1), z, 4000)) < 1e-8);
      }
  }

  TEST_CASE("depth does not change the value") {
    for (cplx z : {cplx(0.99, 0), cplx(0.5, 0.85), cplx(-0.97, 0.0)})
      for (unsigned d = 1; d < 8; ++d) {
        CHECK(std::abs(eval(BoundaryFunc::G(3, 1, d), z) - eval(BoundaryFunc::G(3, 1, d + 1), z)) < 1e-9);
        CHECK(std::abs(eval(BoundaryFunc::H(3, mpq_class(1, 9), d), z) -
                       eval(BoundaryFunc::H(3, mpq_class(1, 9), d + 1), z)) < 1e-9);
      }
  }

  TEST_CASE("coefficients recovered numerically") {
    for (auto f : {BoundaryFunc::G(3, 1), BoundaryFunc::G(5, 2), BoundaryFunc::H(3, mpq_class(1, 9))}) {
      auto c = numeric_coefficients(f, 30);
      REQUIRE(c.size() == 30);
      for (std::size_t n = 1; n <= 30; ++n) CHECK(std::abs(c[n - 1] - coefficient(f, n).get_d()) < 1e-6);
    }
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS(eval(BoundaryFunc::G(3, 1), 0.99995));
    CHECK_THROWS(BoundaryFunc::H(3, mpq_class(3, 2)).validate());
    CHECK_THROWS(BoundaryFunc::H(3, 0).validate());
    CHECK_THROWS(BoundaryFunc::G(4, 1).validate());
    CHECK_THROWS(BoundaryFunc::G(3, 0).validate());
  }

  TEST_CASE("scans") {
    std::vector<double> lam{0.5, 0.9, 0.99, 0.999};
    auto v = radial_scan(BoundaryFunc::G(3, 1), 0, lam);
    REQUIRE(v.size() == 4);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(v[i + 1].real() > v[i].real());
    CHECK_FALSE(strictly_decreasing_real(v));
    std::vector<cplx> neg(v.rbegin(), v.rend());
    CHECK(strictly_decreasing_real(neg));
    // k = 1 points at the cube roots of unity
    auto w = radial_scan(BoundaryFunc::G(3, 1), 1, {0.5});
    cplx omega = std::polar(0.5, 2 * M_PI / 3);
    CHECK(std::abs(w[0] - g_direct(3, 1, omega, 2000)) < 1e-8);
    std::string csv = scan_csv(lam, v);
    CHECK(csv.rfind("lambda,re,im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK(BoundaryFunc::H(3, mpq_class(1, 9)).label().find("1/9") != std::string::npos);
  }
}
