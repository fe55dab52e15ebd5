#pragma once
// Dense univariate polynomials over a Field.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dynzeta/ff.hpp"

namespace dynzeta {

class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr F) : F_(std::move(F)) {}
  Poly(FieldPtr F, std::vector<Elem> c);

  static Poly constant(FieldPtr F, Elem c);
  static Poly x(FieldPtr F);
  static Poly monomial(FieldPtr F, Elem c, std::size_t d);
  // Integer coefficients in ascending degree, reduced into the prime field.
  static Poly from_ints(FieldPtr F, const std::vector<long long>& c);

  const FieldPtr& field() const { return F_; }
  const Field& F() const { return *F_; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem coef(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return c_; }
  std::size_t term_count() const;

  Elem operator()(Elem x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem s) const;
  Poly shifted(std::size_t k) const;  // times x^k
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  FieldPtr F_;
  std::vector<Elem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

Poly monic(const Poly& a);
Poly derivative(const Poly& a);
Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0
Poly pow(const Poly& a, std::uint64_t e);
// a^(p^j): coefficients raised to p^j, exponents multiplied by p^j.
Poly frobenius_power(const Poly& a, unsigned j);
// Inverse of a -> a^p on polynomials whose derivative vanishes.
Poly pth_root(const Poly& a);

// Squarefree part over the algebraic closure.
Poly poly_radical(const Poly& P);
// Number of distinct roots in the algebraic closure.
std::size_t distinct_root_count(const Poly& P);

}  // namespace dynzeta
