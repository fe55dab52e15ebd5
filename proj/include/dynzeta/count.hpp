#pragma once
// Fixed point counts from kernel sizes: f_n = (f|_C)_n + |Gamma|^-1 sum_gamma #ker(sigma^n - gamma).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dynzeta/dynmap.hpp"
#include "dynzeta/skewdeg.hpp"
#include "json.hpp"

namespace dynzeta {

// Solutions of x^k = 1: |k| |k|_p.
mpz_class kernel_size_gm(const mpz_class& k, std::uint32_t p);
// #E[k] = k^2 |k|_p^c.
mpz_class kernel_size_elliptic(const mpz_class& k, std::uint32_t p, int c);
// p^(deg_phi - v_phi).
mpz_class kernel_size_additive(const SkewPoly& tau);

struct KernelTerm {
  std::string gamma;
  mpz_class deg;
  long v = 0;
  mpz_class kernel;  // deg / p^v
};

struct KernelReport {
  unsigned n = 0;
  std::vector<KernelTerm> terms;
  unsigned boundary = 0;  // (f|_C)_n
  mpz_class total;
  nlohmann::json to_json() const;
};

KernelReport fixed_point_formula(const MapDescriptor& d, unsigned n);
// f_1..f_nmax from the formula.
std::vector<mpz_class> formula_counts(const MapDescriptor& d, unsigned nmax);

bool is_coseparable(const MapDescriptor& d);

struct GrowthReport {
  mpq_class c;                 // deg f + 1
  bool bound_ok = true;        // f_n <= c^n for every computed n
  std::vector<double> ratios;  // f_n^(1/n) / deg f, n = 1..nmax
};
GrowthReport growth_bound(const MapDescriptor& d, unsigned nmax = 20);
GrowthReport growth_bound(const std::vector<mpz_class>& counts, std::uint64_t degree);

}  // namespace dynzeta
