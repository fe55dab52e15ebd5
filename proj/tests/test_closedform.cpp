#include <algorithm>

#include "doctest.h"
#include "dynzeta/closedform.hpp"
#include "dynzeta/count.hpp"

using namespace dynzeta;

namespace {

// (1 - w^p)^(1/p) / (1 - w), w = a z^b, by the binomial series
TruncSeries atom_oracle(long a, unsigned b, std::uint32_t p, std::size_t T) {
  std::vector<mpq_class> root(T + 1, 0);
  mpq_class e(1, p), c = 1;
  for (std::size_t k = 0; k * p <= T; ++k) {
    root[k * p] = (k % 2 ? -c : c);
    c = c * (e - static_cast<long>(k)) / static_cast<long>(k + 1);
  }
  std::vector<mpq_class> w(T + 1, 0);  // in the variable w
  mpq_class acc = 0;
  for (std::size_t i = 0; i <= T; ++i) w[i] = (acc += root[i]);
  TruncSeries out(T);
  mpq_class ap = 1;
  for (std::size_t k = 0; k * b <= T; ++k, ap *= a) out[k * b] = w[k] * ap;
  return out;
}

bool same_factors(std::vector<Atom> a, std::vector<Atom> b) {
  auto key = [](const Atom& x) { return std::make_tuple(x.a.get_str(), x.b, x.beta.get_str()); };
  auto less = [&](const Atom& x, const Atom& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (key(a[i]) != key(b[i])) return false;
  return true;
}

TruncSeries tame_counts(const MapDescriptor& d, std::size_t T) {
  return tame_from_counts(formula_counts(d, static_cast<unsigned>(T)), d.p, T);
}

}  // namespace

TEST_SUITE("closedform") {
  TEST_CASE("point atom") {
    CHECK(zeta_pt_atom(1, 1, 3, 3) == TruncSeries({1, 1, 1, mpq_class(2, 3)}));
    CHECK_THROWS(zeta_pt_atom(0, 1, 3, 3));
    for (std::uint32_t p : {3u, 5u, 7u})
      for (long a : {1L, 2L, 8L})
        for (unsigned b : {1u, 2u, 3u}) CHECK(zeta_pt_atom(a, b, p, 25) == atom_oracle(a, b, p, 25));
    std::vector<mpz_class> ones(20, 1);
    CHECK(zeta_pt_atom(4, 2, 5, 20) == tame_from_counts(ones, 5, 10).substitute(4, 2, 20));
  }

  TEST_CASE("power maps") {
    AtomProduct a = power_map_closed_form(2, 7);
    CHECK(a.s == 3);
    CHECK(a.beta == mpq_class(-2, 7));
    CHECK(same_factors(a.factors, {{2, 1, 1}, {1, 1, 1}, {8, 3, mpq_class(-2, 7)}, {1, 3, mpq_class(2, 7)}}));
    CHECK(a.to_string().find("^(-2/7)") != std::string::npos);
    CHECK(a.to_json().size() == 4);

    AtomProduct b = power_map_closed_form(3, 5);
    CHECK(b.s == 4);
    CHECK(b.beta == mpq_class(-1, 5));

    AtomProduct c = power_map_closed_form(5, 5);
    CHECK(c.s == 0);
    CHECK(same_factors(c.factors, {{5, 1, 1}, {1, 1, 1}}));
    CHECK(expand(c, 20) == tame_counts(MapDescriptor::power(5, 5), 20));

    for (std::uint32_t p : {3u, 5u, 7u, 11u})
      for (unsigned m = 2; m <= 6; ++m)
        CHECK(expand(power_map_closed_form(m, p), 30) == tame_counts(MapDescriptor::power(m, p), 30));
  }

  TEST_CASE("Chebyshev rows") {
    AtomProduct odd = chebyshev_closed_form(2, 7);
    CHECK(odd.s == 3);
    CHECK(same_factors(odd.factors,
                       {{2, 1, 1}, {1, 1, 1}, {8, 3, mpq_class(-1, 7)}, {1, 3, mpq_class(1, 7)}}));
    AtomProduct even = chebyshev_closed_form(2, 5);
    CHECK(even.s == 4);
    // atoms at (2z)^2, z^2 and z^4
    bool at2 = false, at1 = false, at4 = false;
    for (const auto& f : even.factors) {
      at2 |= f.a == 4 && f.b == 2;
      at1 |= f.a == 1 && f.b == 2;
      at4 |= f.a == 1 && f.b == 4;
    }
    CHECK((at2 && at1 && at4));
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
      for (unsigned m = 2; m <= 6; ++m)
        CHECK(expand(chebyshev_closed_form(m, p), 30) == tame_counts(MapDescriptor::chebyshev(m, p), 30));
  }

  TEST_CASE("Lattes rows") {
    AtomProduct l = lattes_closed_form(2, 5, 1);
    CHECK(l.s == 4);
    CHECK(l.beta == mpq_class(-1, 5));
    CHECK_THROWS(lattes_closed_form(2, 5, 3));
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{5, 2}, {5, 3}, {11, 2}, {11, 3}}) {
      auto d = MapDescriptor::lattes(-3, 2, 0, m, p);
      CHECK(expand(closed_form(d), 30) == tame_counts(d, 30));
    }
    AtomProduct coseparable = lattes_closed_form(5, 5, 1);
    CHECK(same_factors(coseparable.factors, {{25, 1, 1}, {1, 1, 1}}));
  }

  TEST_CASE("additive maps") {
    auto d = MapDescriptor::additive({1, 1}, 3);
    AtomProduct a = closed_form(d);
    CHECK(a.s == 1);
    CHECK(a.beta == mpq_class(-2, 3));
    // the two atoms at 3z combine to exponent 1/3
    AtomProduct merged;
    merged.p = 3;
    merged.factors = {{3, 1, mpq_class(1, 3)}, {1, 1, 1}};
    CHECK(expand(a, 30) == expand(merged, 30));
    CHECK(expand(a, 30) == tame_counts(d, 30));

    auto d2 = MapDescriptor::additive({1, 2}, 3);
    CHECK(closed_form(d2).s == 1);
    CHECK(expand(closed_form(d2), 30) == tame_counts(d2, 30));

    auto d5 = MapDescriptor::additive({2, 1}, 5);
    CHECK(closed_form(d5).s == 4);
    CHECK(expand(closed_form(d5), 30) == tame_counts(d5, 30));

    auto cos = MapDescriptor::additive({0, 1}, 3);
    CHECK(closed_form(cos).factors.size() == 2);
    CHECK(expand(closed_form(cos), 20) == tame_counts(cos, 20));

    CHECK_THROWS(closed_form(MapDescriptor::subadditive({1, 1}, 2, {0, 1, 2, 1}, 3)));
  }

  TEST_CASE("expansion basics") {
    AtomProduct empty;
    CHECK(expand(empty, 10) == TruncSeries::one(10));
    AtomProduct pm;
    pm.p = 7;
    pm.factors = {{8, 3, mpq_class(-2, 7)}, {8, 3, mpq_class(2, 7)}};
    CHECK(expand(pm, 30) == TruncSeries::one(30));
  }

  TEST_CASE("coefficient denominators") {
    // only p and primes dividing s appear
    AtomProduct a = power_map_closed_form(2, 7);
    TruncSeries e = expand(a, 30);
    for (std::size_t i = 0; i <= 30; ++i) {
      mpz_class den = e[i].get_den();
      for (unsigned q : {7u, 3u})
        while (den % q == 0) den /= q;
      CHECK(den == 1);
    }
  }
}
