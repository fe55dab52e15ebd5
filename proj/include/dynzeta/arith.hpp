#pragma once
// p-adic valuations, multiplicative orders, the filtration Gamma_m / s_m and
// the unit-circle test for dominant roots.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynzeta/skewdeg.hpp"
#include "json.hpp"

namespace dynzeta {

// v_p(n); n != 0.
long v_p(const mpz_class& n, std::uint32_t p);
// |n|_p = p^(-v_p(n)) exactly.
mpq_class abs_p(const mpz_class& n, std::uint32_t p);
// |n| * |n|_p, the part of n prime to p.
mpz_class prime_to_p(const mpz_class& n, std::uint32_t p);
// b^e as an integer.
mpz_class ipow(std::uint64_t b, std::uint64_t e);

std::uint64_t mult_order(long long m, std::uint32_t p);

// v_p(x^n - y^n) = v_p(x - y) + v_p(n); checked against the direct value.
long v_power_diff(long long x, long long y, unsigned n, std::uint32_t p);

struct FiltrationLevel {
  unsigned m = 0;
  std::optional<std::uint64_t> s;  // s_m
  std::string gamma;               // gamma_m
  std::vector<std::string> subgroup;  // Gamma_m
  bool multiples_ok = true;   // S_m = s_m Z>0 on the window
  bool cosets_ok = true;      // witnesses form Gamma_m gamma_m^n on the window
};

struct FiltrationReport {
  std::string flavor;  // "integer" or "skew"
  std::uint32_t p = 0;
  unsigned N = 0;
  unsigned M = 0;
  std::uint64_t window = 0;
  bool coseparable = false;
  std::vector<FiltrationLevel> levels;  // m = 0..depth
  std::optional<std::uint64_t> s;       // s_N
  std::string gamma_tilde;              // gamma_N
  std::optional<std::uint64_t> r;       // s_M
  long C = -1;                          // v(sigma^r gamma_M^-1 - 1)
  mpz_class t;                          // p^(C+1) r, or p when coseparable

  bool lemma_ok() const;
  nlohmann::json to_json() const;
};

// sigma = m in Z with v = c * v_p and Gamma a subgroup of {1, -1}.
FiltrationReport sm_filtration(long long m, const std::vector<long long>& Gamma, std::uint32_t p, unsigned depth,
                               int c = 1, std::uint64_t window = 0);
// sigma in K<phi>, v = v_phi, Gamma = mu_d in the coefficient field.
FiltrationReport sm_filtration_skew(const SkewPoly& sigma, unsigned d, unsigned depth, std::uint64_t window = 0);

enum class H4Verdict { Holds, FailsUnitRoot, FailsCoseparable };
std::string verdict_name(H4Verdict v);

struct CertifiedRoot {
  std::complex<double> approx;
  std::string re, im;  // 40 significant digits
  double radius = 0;   // inclusion disk radius
};

// Roots of an integer polynomial with disjoint inclusion disks.  Throws when
// the disks cannot be separated at the working precision.
std::vector<CertifiedRoot> certified_roots(const std::vector<mpz_class>& coeffs);

struct DominantRoots {
  std::size_t count = 0;
  double modulus = 0;
  double gap = 0;  // distance from the next modulus, lower bound
  std::vector<CertifiedRoot> roots;
};
// Roots of maximal modulus; ties are accepted when the certified modulus
// intervals overlap, others must be separated by more than 1e-20.
DominantRoots dominant_roots(const std::vector<mpz_class>& coeffs);

struct H4Report {
  H4Verdict verdict = H4Verdict::Holds;
  long unit_roots = 0;  // exact count of distinct roots with |x| = 1
};

// Characteristic polynomial with integer coefficients, ascending.
H4Report h4_check(const std::vector<mpz_class>& charpoly, bool coseparable);
// Eigenvalues given exactly as integers.
H4Report h4_check_integers(const std::vector<long long>& eigenvalues, bool coseparable);
// Exact number of distinct roots on the unit circle.
long unit_circle_roots(const std::vector<mpz_class>& coeffs);

using IntMatrix = std::vector<std::vector<mpz_class>>;
IntMatrix companion_matrix(const std::vector<long long>& monic_coeffs);
mpz_class bareiss_det(IntMatrix A);
mpz_class torus_deg(const IntMatrix& M, unsigned n);

}  // namespace dynzeta
