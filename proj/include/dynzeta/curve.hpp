#pragma once
// Elliptic curves y^2 = x^3 + a2 x^2 + a4 x + a6 over F_q, p > 2.

#include <cstdint>
#include <vector>

#include "dynzeta/ff.hpp"
#include "dynzeta/poly.hpp"
#include "dynzeta/ratmap.hpp"

namespace dynzeta {

struct Point {
  bool inf = true;
  Elem x = 0, y = 0;
  static Point infinity() { return {}; }
  static Point affine(Elem x, Elem y) { return {false, x, y}; }
  bool operator==(const Point& o) const { return inf == o.inf && (inf || (x == o.x && y == o.y)); }
};

class Curve {
 public:
  Curve(FieldPtr F, Elem a2, Elem a4, Elem a6);
  static Curve from_ints(FieldPtr F, long long a2, long long a4, long long a6);

  const FieldPtr& field() const { return F_; }
  Elem a2() const { return a2_; }
  Elem a4() const { return a4_; }
  Elem a6() const { return a6_; }
  Elem discriminant() const;
  Elem rhs(Elem x) const;  // x^3 + a2 x^2 + a4 x + a6
  bool on_curve(const Point& P) const;

 private:
  FieldPtr F_;
  Elem a2_, a4_, a6_;
};

Point neg(const Point& P, const Curve& E);
Point add(const Point& P, const Point& Q, const Curve& E);
Point mul(long long m, const Point& P, const Curve& E);

std::uint64_t point_count(const Curve& E, std::uint64_t bound = enumeration_bound());
std::vector<Point> all_points(const Curve& E, std::uint64_t bound = enumeration_bound());
bool is_supersingular(const Curve& E);
int inseparable_exponent(const Curve& E);  // 1 ordinary, 2 supersingular

// Reduced division polynomials f_1..f_n in x alone: psi_n = f_n for odd n,
// psi_n = 2y f_n for even n.
std::vector<Poly> division_polynomials(const Curve& E, unsigned n);
// x([m]P) as a rational function of x(P).
RationalMap mult_x_map(const Curve& E, unsigned m);

}  // namespace dynzeta
