#pragma once
// Self-maps of the projective line as reduced fractions num/den.

#include <optional>
#include <string>

#include "dynzeta/poly.hpp"

namespace dynzeta {

// A point of P^1 over a field: an element, or infinity.
struct P1Point {
  bool inf = false;
  Elem x = 0;
  bool operator==(const P1Point& o) const { return inf == o.inf && (inf || x == o.x); }
};

class RationalMap {
 public:
  // Reduces by the gcd and makes the denominator monic.  Rejects constant maps.
  RationalMap(Poly num, Poly den);
  static RationalMap polynomial(Poly P);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  std::uint64_t degree() const;
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_identity() const;

  // Image of a point over the field of the map.
  P1Point operator()(const P1Point& pt) const;
  // Image of infinity.
  P1Point at_infinity() const;

  bool operator==(const RationalMap& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::string to_string() const;

 private:
  Poly num_, den_;
};

}  // namespace dynzeta
