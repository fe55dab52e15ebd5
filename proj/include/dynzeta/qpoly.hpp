#pragma once
// Dense polynomials over Q.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace dynzeta {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> c);
  static QPoly from_ints(const std::vector<long long>& c);
  static QPoly constant(const mpq_class& a);
  static QPoly monomial(const mpq_class& a, std::size_t d);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpq_class& lead() const { return c_.back(); }
  mpq_class coef(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  mpq_class operator()(const mpq_class& x) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const mpq_class& s) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly derivative(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic
// x^deg P(1/x)
QPoly reversed(const QPoly& a);
// Scale to a primitive integer polynomial with positive leading coefficient.
std::vector<mpz_class> primitive_part(const QPoly& a);

// Distinct real roots in (a, b], by a Sturm sequence.
long sturm_count(const QPoly& P, const mpq_class& a, const mpq_class& b);

}  // namespace dynzeta
