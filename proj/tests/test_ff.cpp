#include <random>
#include <set>

#include "doctest.h"
#include "dynzeta/ff.hpp"
#include "dynzeta/poly.hpp"

using namespace dynzeta;

namespace {

// naive root count over the enumerated field
std::size_t roots_in(const Poly& P, const Field& F) {
  std::size_t c = 0;
  for (Elem x : enumerate_field(F))
    if (P(x) == 0) ++c;
  return c;
}

// x^(q) - x over F_p, coefficients as ints
Poly frob_poly(const FieldPtr& F, std::uint64_t q) {
  std::vector<long long> c(q + 1, 0);
  c[q] = 1;
  c[1] = -1;
  return Poly::from_ints(F, c);
}

}  // namespace

TEST_SUITE("ff") {
  TEST_CASE("prime field arithmetic matches integers mod p") {
    auto F = make_field(7, 1);
    CHECK(F->size() == 7);
    for (Elem a = 0; a < 7; ++a)
      for (Elem b = 0; b < 7; ++b) {
        CHECK(F->add(a, b) == (a + b) % 7);
        CHECK(F->mul(a, b) == (a * b) % 7);
        if (b) CHECK(F->mul(F->div(a, b), b) == a);
      }
  }

  TEST_CASE("non-prime characteristic is rejected") {
    CHECK_THROWS(make_field(4, 2));
    CHECK_THROWS(make_field(9, 1));
    CHECK_THROWS(make_field(2, 1));
  }

  TEST_CASE("extension modulus is the first irreducible") {
    auto F = make_field(7, 3);
    CHECK(F->size() == 343);
    const auto& mod = F->modulus();
    REQUIRE(mod.size() == 4);
    CHECK(mod[3] == 1);
    // a cubic is irreducible iff it has no root in F_7
    auto rootless = [&](const std::vector<std::uint32_t>& c) {
      for (long long x = 0; x < 7; ++x)
        if ((c[0] + c[1] * x + c[2] * x * x + x * x * x) % 7 == 0) return false;
      return true;
    };
    CHECK(rootless(mod));
    std::uint64_t key = mod[0] + 7ULL * mod[1] + 49ULL * mod[2];
    for (std::uint64_t k = 0; k < key; ++k)
      CHECK_FALSE(rootless({static_cast<std::uint32_t>(k % 7), static_cast<std::uint32_t>(k / 7 % 7),
                            static_cast<std::uint32_t>(k / 49)}));
  }

  TEST_CASE("enumeration has no repeats") {
    for (auto [p, N] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {3, 2}, {7, 3}, {5, 4}}) {
      auto F = make_field(p, N);
      auto xs = enumerate_field(*F);
      std::set<Elem> s(xs.begin(), xs.end());
      CHECK(xs.size() == F->size());
      CHECK(s.size() == F->size());
    }
    auto F3 = make_field(3, 1);
    CHECK(enumerate_field(*F3) == std::vector<Elem>{0, 1, 2});
  }

  TEST_CASE("field axioms and Frobenius on random pairs") {
    std::mt19937_64 rng(42);
    for (auto [p, N] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 4}, {5, 3}, {7, 2}, {13, 2}}) {
      auto F = make_field(p, N);
      for (int i = 0; i < 200; ++i) {
        Elem x = rng() % F->size(), y = rng() % F->size(), z = rng() % F->size();
        CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
        CHECK(F->frob(F->add(x, y)) == F->add(F->frob(x), F->frob(y)));
        CHECK(F->frob(x) == F->pow(x, p));
        CHECK(F->frob_inv(F->frob(x)) == x);
        if (x) CHECK(F->mul(x, F->inv(x)) == 1);
        CHECK(F->pow(x, F->size()) == x);
      }
      // generator has full order
      Elem g = F->generator();
      std::uint64_t ord = 1;
      for (Elem a = g; a != 1; a = F->mul(a, g)) ++ord;
      CHECK(ord == F->size() - 1);
    }
  }

  TEST_CASE("embedding is a ring homomorphism") {
    auto sub = make_field(3, 2), ext = make_field(3, 4);
    Embedding e(sub, ext);
    for (Elem a = 0; a < 9; ++a)
      for (Elem b = 0; b < 9; ++b) {
        CHECK(e(sub->add(a, b)) == ext->add(e(a), e(b)));
        CHECK(e(sub->mul(a, b)) == ext->mul(e(a), e(b)));
      }
  }

  TEST_CASE("radical and distinct roots") {
    auto F7 = make_field(7, 1), F3 = make_field(3, 1);
    Poly xm1 = Poly::from_ints(F7, {-1, 1});
    CHECK(poly_radical(pow(xm1, 7)) == xm1);
    CHECK(distinct_root_count(pow(xm1, 7)) == 1);
    Poly x6 = Poly::from_ints(F3, {2, 0, 0, 0, 0, 0, 1});
    CHECK(poly_radical(x6) == Poly::from_ints(F3, {-1, 0, 1}));
    CHECK(distinct_root_count(x6) == 2);
    Poly x3 = Poly::from_ints(F3, {0, -1, 0, 1});
    CHECK(poly_radical(x3) == x3);
    CHECK(distinct_root_count(frob_poly(F3, 9)) == 9);
    CHECK(distinct_root_count(frob_poly(F3, 27)) == 27);
  }

  TEST_CASE("distinct roots agree with enumeration on split products") {
    std::mt19937_64 rng(7);
    auto F = make_field(5, 2);
    auto xs = enumerate_field(*F);
    for (int t = 0; t < 30; ++t) {
      Poly P = Poly::constant(F, 1);
      std::set<Elem> used;
      int k = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < k; ++i) {
        Elem r = xs[rng() % xs.size()];
        used.insert(r);
        unsigned mult = 1 + static_cast<unsigned>(rng() % 3);
        for (unsigned j = 0; j < mult; ++j) P *= Poly(F, {F->neg(r), 1});
      }
      CHECK(distinct_root_count(P) == used.size());
      CHECK(roots_in(P, *F) == used.size());
      Poly R = poly_radical(P);
      CHECK((P % R).is_zero());
      CHECK(gcd(R, derivative(R)).degree() == 0);
    }
  }

  TEST_CASE("distinct roots are additive on coprime pairs") {
    auto F = make_field(7, 1);
    std::mt19937_64 rng(3);
    int tested = 0;
    while (tested < 40) {
      std::vector<long long> a(2 + rng() % 5), b(2 + rng() % 5);
      for (auto& v : a) v = static_cast<long long>(rng() % 7);
      for (auto& v : b) v = static_cast<long long>(rng() % 7);
      a.back() = b.back() = 1;
      Poly A = Poly::from_ints(F, a), B = Poly::from_ints(F, b);
      if (gcd(A, B).degree() != 0) continue;
      ++tested;
      CHECK(distinct_root_count(A * B) == distinct_root_count(A) + distinct_root_count(B));
    }
  }

  TEST_CASE("polynomial division round trip") {
    auto F = make_field(11, 1);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
      std::vector<long long> a(1 + rng() % 12), b(1 + rng() % 6);
      for (auto& v : a) v = static_cast<long long>(rng() % 11);
      for (auto& v : b) v = static_cast<long long>(rng() % 11);
      b.back() = 1 + static_cast<long long>(rng() % 10);
      Poly A = Poly::from_ints(F, a), B = Poly::from_ints(F, b);
      auto [q, r] = divmod(A, B);
      CHECK(q * B + r == A);
      CHECK(r.degree() < B.degree());
    }
  }
}
