#include "dynzeta/curve.hpp"

#include <stdexcept>

namespace dynzeta {

Curve::Curve(FieldPtr F, Elem a2, Elem a4, Elem a6) : F_(std::move(F)), a2_(a2), a4_(a4), a6_(a6) {
  if (discriminant() == 0) throw std::invalid_argument("singular curve");
}

Curve Curve::from_ints(FieldPtr F, long long a2, long long a4, long long a6) {
  Elem b2 = F->from_int(a2), b4 = F->from_int(a4), b6 = F->from_int(a6);
  return Curve(std::move(F), b2, b4, b6);
}

Elem Curve::discriminant() const {
  const Field& F = *F_;
  auto c = [&](long long v) { return F.from_int(v); };
  Elem a2s = F.mul(a2_, a2_), a4s = F.mul(a4_, a4_);
  Elem t1 = F.mul(a2s, a4s);
  Elem t2 = F.mul(c(4), F.mul(a4s, a4_));
  Elem t3 = F.mul(c(4), F.mul(F.mul(a2s, a2_), a6_));
  Elem t4 = F.mul(c(18), F.mul(F.mul(a2_, a4_), a6_));
  Elem t5 = F.mul(c(27), F.mul(a6_, a6_));
  return F.sub(F.add(F.sub(F.sub(t1, t2), t3), t4), t5);
}

Elem Curve::rhs(Elem x) const {
  const Field& F = *F_;
  Elem v = F.add(x, a2_);
  v = F.add(F.mul(v, x), a4_);
  return F.add(F.mul(v, x), a6_);
}

bool Curve::on_curve(const Point& P) const {
  if (P.inf) return true;
  return F_->mul(P.y, P.y) == rhs(P.x);
}

Point neg(const Point& P, const Curve& E) {
  if (P.inf) return P;
  return Point::affine(P.x, E.field()->neg(P.y));
}

Point add(const Point& P, const Point& Q, const Curve& E) {
  if (!E.on_curve(P) || !E.on_curve(Q)) throw std::invalid_argument("point not on curve");
  if (P.inf) return Q;
  if (Q.inf) return P;
  const Field& F = *E.field();
  Elem lambda;
  if (P.x == Q.x) {
    if (F.add(P.y, Q.y) == 0) return Point::infinity();
    // tangent: (3x^2 + 2 a2 x + a4) / (2y)
    Elem num = F.add(F.add(F.mul(F.from_int(3), F.mul(P.x, P.x)), F.mul(F.from_int(2), F.mul(E.a2(), P.x))), E.a4());
    lambda = F.div(num, F.mul(F.from_int(2), P.y));
  } else {
    lambda = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x));
  }
  Elem x3 = F.sub(F.sub(F.sub(F.mul(lambda, lambda), E.a2()), P.x), Q.x);
  Elem y3 = F.sub(F.mul(lambda, F.sub(P.x, x3)), P.y);
  return Point::affine(x3, y3);
}

Point mul(long long m, const Point& P, const Curve& E) {
  if (!E.on_curve(P)) throw std::invalid_argument("point not on curve");
  if (m < 0) return neg(mul(-m, P, E), E);
  Point acc = Point::infinity(), base = P;
  unsigned long long k = static_cast<unsigned long long>(m);
  while (k) {
    if (k & 1) acc = add(acc, base, E);
    base = add(base, base, E);
    k >>= 1;
  }
  return acc;
}

namespace {
std::vector<char> square_table(const Field& F) {
  std::vector<char> sq(F.size(), 0);
  for (Elem y = 0; y < F.size(); ++y) sq[F.mul(y, y)] = 1;
  return sq;
}
}  // namespace

std::uint64_t point_count(const Curve& E, std::uint64_t bound) {
  const Field& F = *E.field();
  if (F.size() > bound) throw std::out_of_range("curve base field exceeds the enumeration bound");
  auto sq = square_table(F);
  std::uint64_t n = 1;
  for (Elem x = 0; x < F.size(); ++x) {
    Elem r = E.rhs(x);
    if (r == 0)
      n += 1;
    else if (sq[r])
      n += 2;
  }
  return n;
}

std::vector<Point> all_points(const Curve& E, std::uint64_t bound) {
  const Field& F = *E.field();
  if (F.size() > bound) throw std::out_of_range("curve base field exceeds the enumeration bound");
  std::vector<std::vector<Elem>> roots(F.size());
  for (Elem y = 0; y < F.size(); ++y) roots[F.mul(y, y)].push_back(y);
  std::vector<Point> pts{Point::infinity()};
  for (Elem x = 0; x < F.size(); ++x)
    for (Elem y : roots[E.rhs(x)]) pts.push_back(Point::affine(x, y));
  return pts;
}

bool is_supersingular(const Curve& E) {
  const Field& F = *E.field();
  if (!F.is_prime_field()) throw std::invalid_argument("supersingularity test needs a curve over the prime field");
  long long p = F.p();
  long long a = p + 1 - static_cast<long long>(point_count(E));
  return a % p == 0;
}

int inseparable_exponent(const Curve& E) { return is_supersingular(E) ? 2 : 1; }

std::vector<Poly> division_polynomials(const Curve& E, unsigned n) {
  const FieldPtr& Fp = E.field();
  const Field& F = *Fp;
  auto c = [&](long long v) { return F.from_int(v); };
  Elem b2 = F.mul(c(4), E.a2());
  Elem b4 = F.mul(c(2), E.a4());
  Elem b6 = F.mul(c(4), E.a6());
  Elem b8 = F.sub(F.mul(c(4), F.mul(E.a2(), E.a6())), F.mul(E.a4(), E.a4()));
  std::vector<Poly> f(std::max(n + 1, 5u), Poly(Fp));
  f[1] = Poly::constant(Fp, 1);
  f[2] = Poly::constant(Fp, 1);
  f[3] = Poly(Fp, {b8, F.mul(c(3), b6), F.mul(c(3), b4), b2, c(3)});
  f[4] = Poly(Fp, {F.sub(F.mul(b4, b8), F.mul(b6, b6)), F.sub(F.mul(b2, b8), F.mul(b4, b6)), F.mul(c(10), b8),
                   F.mul(c(10), b6), F.mul(c(5), b4), b2, c(2)});
  Poly g(Fp, {b6, F.mul(c(2), b4), b2, c(4)});  // 4 x^3 + b2 x^2 + 2 b4 x + b6 = psi_2^2
  Poly g2 = g * g;
  for (unsigned k = 5; k <= n; ++k) {
    if (k % 2 == 1) {
      unsigned j = (k - 1) / 2;
      Poly a = f[j + 2] * f[j] * f[j] * f[j];
      Poly b = f[j - 1] * f[j + 1] * f[j + 1] * f[j + 1];
      f[k] = (j % 2 == 0) ? g2 * a - b : a - g2 * b;
    } else {
      unsigned j = k / 2;
      f[k] = f[j] * (f[j + 2] * f[j - 1] * f[j - 1] - f[j - 2] * f[j + 1] * f[j + 1]);
    }
  }
  f.resize(n + 1);
  return f;
}

RationalMap mult_x_map(const Curve& E, unsigned m) {
  if (m < 2) throw std::invalid_argument("multiplier must be at least 2");
  const FieldPtr& Fp = E.field();
  const Field& F = *Fp;
  auto f = division_polynomials(E, m + 1);
  Poly g(Fp, {F.mul(F.from_int(4), E.a6()), F.mul(F.from_int(4), E.a4()), F.mul(F.from_int(4), E.a2()), F.from_int(4)});
  Poly psi2 = f[m] * f[m];
  Poly adj = f[m - 1] * f[m + 1];
  if (m % 2 == 0)
    psi2 = psi2 * g;
  else
    adj = adj * g;
  Poly phi = Poly::x(Fp) * psi2 - adj;
  RationalMap L(phi, psi2);
  if (L.degree() != static_cast<std::uint64_t>(m) * m) throw std::logic_error("multiplication map has unexpected degree");
  return L;
}

}  // namespace dynzeta
