#pragma once
// G_h(z) = sum |n|_p^h z^n and H_beta(z) = sum beta^(|n|_p^-1) z^n, evaluated
// numerically through their functional equations.  Numeric evidence only.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace dynzeta {

struct BoundaryFunc {
  enum class Kind { G, H };
  Kind kind = Kind::G;
  std::uint32_t p = 3;
  unsigned h = 1;        // G only
  mpq_class beta{1, 9};  // H only, 0 < beta < 1
  unsigned depth = 8;

  static BoundaryFunc G(std::uint32_t p, unsigned h, unsigned depth = 8);
  static BoundaryFunc H(std::uint32_t p, const mpq_class& beta, unsigned depth = 8);
  void validate() const;
  std::string label() const;
};

using cplx = std::complex<double>;

// Functional equation for `depth` levels, then a direct tail sum.
cplx eval(const BoundaryFunc& f, cplx z);
// Plain partial sum of the first `terms` coefficients.
cplx eval_direct(const BoundaryFunc& f, cplx z, std::size_t terms);
// Exact Taylor coefficient, n >= 1.
mpq_class coefficient(const BoundaryFunc& f, std::uint64_t n);
// Coefficients 1..nmax recovered from values on the circle |z| = radius.
std::vector<double> numeric_coefficients(const BoundaryFunc& f, std::size_t nmax, double radius = 0.5);

// f(lambda omega), omega = exp(2 pi i / p^k); k = 0 scans the real axis.
std::vector<cplx> radial_scan(const BoundaryFunc& f, unsigned k, const std::vector<double>& lambdas);
bool strictly_decreasing_real(const std::vector<cplx>& v);
std::string scan_csv(const std::vector<double>& lambdas, const std::vector<cplx>& values);

}  // namespace dynzeta
