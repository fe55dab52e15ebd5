#pragma once
// Skew polynomials K<phi> with phi a = a^p phi, and matrices over them.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynzeta/ff.hpp"
#include "dynzeta/poly.hpp"

namespace dynzeta {

class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(FieldPtr F) : F_(std::move(F)) {}
  SkewPoly(FieldPtr F, std::vector<Elem> c);
  static SkewPoly constant(FieldPtr F, Elem c);
  static SkewPoly phi_power(FieldPtr F, std::size_t k);
  static SkewPoly from_ints(FieldPtr F, const std::vector<long long>& c);

  const FieldPtr& field() const { return F_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  // Index of the lowest nonzero coefficient; -1 for zero.
  long valuation() const;
  bool is_zero() const { return c_.empty(); }
  Elem coef(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return c_; }

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator-() const;
  SkewPoly operator*(const SkewPoly& o) const;
  bool operator==(const SkewPoly& o) const { return c_ == o.c_; }
  bool operator!=(const SkewPoly& o) const { return c_ != o.c_; }

  // The additive polynomial sum a_i X^(p^i), as a map and as a polynomial.
  Elem apply(Elem x) const;
  Poly additive_poly() const;

  std::string to_string() const;

 private:
  void trim();
  FieldPtr F_;
  std::vector<Elem> c_;
};

// f = q*g + r with deg r < deg g.
std::pair<SkewPoly, SkewPoly> skew_left_divmod(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_pow(const SkewPoly& a, unsigned n);
// u*a = v*b with u, v of minimal degree (left common multiple).
std::pair<SkewPoly, SkewPoly> left_common_multiple(const SkewPoly& a, const SkewPoly& b);

class SkewMatrix {
 public:
  SkewMatrix(FieldPtr F, std::size_t r);
  static SkewMatrix identity(FieldPtr F, std::size_t r);
  std::size_t size() const { return r_; }
  const FieldPtr& field() const { return F_; }
  SkewPoly& operator()(std::size_t i, std::size_t j) { return e_[i * r_ + j]; }
  const SkewPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * r_ + j]; }
  SkewMatrix operator*(const SkewMatrix& o) const;
  SkewMatrix operator-(const SkewMatrix& o) const;
  long max_entry_degree() const;

 private:
  FieldPtr F_;
  std::size_t r_;
  std::vector<SkewPoly> e_;
};

SkewMatrix matrix_pow(const SkewMatrix& M, unsigned n);

struct DdetInfo {
  long degree = 0;     // phi-degree of the Dieudonne determinant
  long valuation = 0;  // phi-adic valuation of the Dieudonne determinant
};

// Degree-tracked triangularization; nullopt when singular.
std::optional<DdetInfo> ddet_info(const SkewMatrix& M);
std::optional<long> ddet_degree(const SkewMatrix& M);
// Determinant over the commutative ring F_p[phi]; entries must have
// coefficients in the prime field.
Poly commutative_det(const SkewMatrix& M);

// The 2x2 matrix [[phi^2, phi], [phi, 0]] over F_3.
SkewMatrix example_5_8_matrix();
// deg(sigma^n - 1) = 3^(ddet degree) for that matrix.
mpz_class example_5_8_deg(unsigned n);

// ddet_degree(M^n - gamma I) <= r n d.
bool degree_bound_check(const SkewMatrix& M, unsigned n, long d, Elem gamma = 1);

}  // namespace dynzeta
