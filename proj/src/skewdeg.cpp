#include "dynzeta/skewdeg.hpp"

#include <numeric>
#include <stdexcept>

namespace dynzeta {

namespace {
void require_same(const SkewPoly& a, const SkewPoly& b) {
  if (!a.field() || !b.field()) throw std::invalid_argument("skew polynomial without a field");
  if (a.field()->p() != b.field()->p() || a.field()->modulus() != b.field()->modulus())
    throw std::invalid_argument("skew polynomials over different fields");
}
}  // namespace

SkewPoly::SkewPoly(FieldPtr F, std::vector<Elem> c) : F_(std::move(F)), c_(std::move(c)) { trim(); }

void SkewPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

SkewPoly SkewPoly::constant(FieldPtr F, Elem c) { return SkewPoly(std::move(F), {c}); }

SkewPoly SkewPoly::phi_power(FieldPtr F, std::size_t k) {
  std::vector<Elem> c(k + 1, 0);
  c[k] = 1;
  return SkewPoly(std::move(F), std::move(c));
}

SkewPoly SkewPoly::from_ints(FieldPtr F, const std::vector<long long>& c) {
  std::vector<Elem> e;
  for (long long v : c) e.push_back(F->from_int(v));
  return SkewPoly(std::move(F), std::move(e));
}

long SkewPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return static_cast<long>(i);
  return -1;
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  require_same(*this, o);
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->add(coef(i), o.coef(i));
  return SkewPoly(F_, std::move(r));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
  require_same(*this, o);
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->sub(coef(i), o.coef(i));
  return SkewPoly(F_, std::move(r));
}

SkewPoly SkewPoly::operator-() const {
  std::vector<Elem> r(c_);
  for (Elem& a : r) a = F_->neg(a);
  return SkewPoly(F_, std::move(r));
}

// (a_i phi^i)(b_j phi^j) = a_i b_j^(p^i) phi^(i+j)
SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  require_same(*this, o);
  if (is_zero() || o.is_zero()) return SkewPoly(F_);
  const Field& F = *F_;
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  std::vector<Elem> tw(o.c_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) for (Elem& b : tw) b = F.frob(b);
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < tw.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(c_[i], tw[j]));
  }
  return SkewPoly(F_, std::move(r));
}

Elem SkewPoly::apply(Elem x) const {
  const Field& F = *F_;
  Elem acc = 0, xp = x;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) xp = F.frob(xp);
    acc = F.add(acc, F.mul(c_[i], xp));
  }
  return acc;
}

Poly SkewPoly::additive_poly() const {
  if (is_zero()) return Poly(F_);
  std::size_t deg = 1;
  for (long i = 0; i < degree(); ++i) deg *= F_->p();
  std::vector<Elem> c(deg + 1, 0);
  std::size_t e = 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c[e] = c_[i];
    e *= F_->p();
  }
  return Poly(F_, std::move(c));
}

std::string SkewPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    if (!s.empty()) s += " + ";
    std::string cs = F_->to_string(c_[i]);
    if (i == 0) {
      s += cs;
      continue;
    }
    if (c_[i] != 1) s += cs + "*";
    s += "phi";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

std::pair<SkewPoly, SkewPoly> skew_left_divmod(const SkewPoly& f, const SkewPoly& g) {
  require_same(f, g);
  if (g.is_zero()) throw std::domain_error("division by zero skew polynomial");
  const FieldPtr& Fp = f.field();
  const Field& F = *Fp;
  long d = g.degree();
  SkewPoly r = f;
  std::vector<Elem> q(r.degree() >= d ? static_cast<std::size_t>(r.degree() - d + 1) : 0, 0);
  while (r.degree() >= d) {
    long k = r.degree() - d;
    Elem lead = F.frob_pow(g.coef(static_cast<std::size_t>(d)), static_cast<unsigned>(k % F.degree()));
    Elem c = F.div(r.coef(static_cast<std::size_t>(r.degree())), lead);
    q[static_cast<std::size_t>(k)] = c;
    std::vector<Elem> mono(static_cast<std::size_t>(k) + 1, 0);
    mono.back() = c;
    r = r - SkewPoly(Fp, std::move(mono)) * g;
  }
  return {SkewPoly(Fp, std::move(q)), r};
}

SkewPoly skew_pow(const SkewPoly& a, unsigned n) {
  SkewPoly r = SkewPoly::constant(a.field(), 1), b = a;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

std::pair<SkewPoly, SkewPoly> left_common_multiple(const SkewPoly& a, const SkewPoly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) throw std::domain_error("common multiple of zero");
  const FieldPtr& F = a.field();
  // r_i = s_i a + t_i b
  SkewPoly r0 = a, r1 = b;
  SkewPoly s0 = SkewPoly::constant(F, 1), s1(F);
  SkewPoly t0(F), t1 = SkewPoly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = skew_left_divmod(r0, r1);
    SkewPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // s1 a + t1 b = 0
  return {s1, -t1};
}

// ---- matrices --------------------------------------------------------------

SkewMatrix::SkewMatrix(FieldPtr F, std::size_t r) : F_(std::move(F)), r_(r), e_(r * r, SkewPoly(F_)) {}

SkewMatrix SkewMatrix::identity(FieldPtr F, std::size_t r) {
  SkewMatrix I(F, r);
  for (std::size_t i = 0; i < r; ++i) I(i, i) = SkewPoly::constant(F, 1);
  return I;
}

SkewMatrix SkewMatrix::operator*(const SkewMatrix& o) const {
  if (r_ != o.r_) throw std::invalid_argument("matrix size mismatch");
  SkewMatrix out(F_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < r_; ++j) {
      SkewPoly acc(F_);
      for (std::size_t k = 0; k < r_; ++k) acc = acc + (*this)(i, k) * o(k, j);
      out(i, j) = acc;
    }
  return out;
}

SkewMatrix SkewMatrix::operator-(const SkewMatrix& o) const {
  if (r_ != o.r_) throw std::invalid_argument("matrix size mismatch");
  SkewMatrix out(F_, r_);
  for (std::size_t i = 0; i < r_ * r_; ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

long SkewMatrix::max_entry_degree() const {
  long d = -1;
  for (const auto& a : e_) d = std::max(d, a.degree());
  return d;
}

SkewMatrix matrix_pow(const SkewMatrix& M, unsigned n) {
  SkewMatrix r = SkewMatrix::identity(M.field(), M.size()), b = M;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

// Row reduction to upper triangular form.  Replacing row i by u*row_i - v*row_j
// multiplies the determinant by u, so deg and v_phi of u are subtracted.
std::optional<DdetInfo> ddet_info(const SkewMatrix& M0) {
  SkewMatrix M = M0;
  const std::size_t r = M.size();
  DdetInfo info;
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t piv = r;
    for (std::size_t i = j; i < r; ++i) {
      if (M(i, j).is_zero()) continue;
      if (piv == r || M(i, j).degree() < M(piv, j).degree()) piv = i;
    }
    if (piv == r) return std::nullopt;
    if (piv != j)
      for (std::size_t k = 0; k < r; ++k) std::swap(M(j, k), M(piv, k));
    for (std::size_t i = j + 1; i < r; ++i) {
      if (M(i, j).is_zero()) continue;
      auto [u, v] = left_common_multiple(M(i, j), M(j, j));
      for (std::size_t k = j; k < r; ++k) M(i, k) = u * M(i, k) - v * M(j, k);
      info.degree -= u.degree();
      info.valuation -= u.valuation();
    }
  }
  for (std::size_t j = 0; j < r; ++j) {
    info.degree += M(j, j).degree();
    info.valuation += M(j, j).valuation();
  }
  return info;
}

std::optional<long> ddet_degree(const SkewMatrix& M) {
  auto info = ddet_info(M);
  if (!info) return std::nullopt;
  return info->degree;
}

namespace {
Poly as_commutative(const SkewPoly& a) {
  for (Elem c : a.coeffs())
    if (!a.field()->in_prime_field(c)) throw std::invalid_argument("entry has coefficients outside the prime field");
  return Poly(a.field(), a.coeffs());
}

Poly det_rec(const std::vector<std::vector<Poly>>& A) {
  const std::size_t n = A.size();
  if (n == 1) return A[0][0];
  Poly acc(A[0][0].field());
  for (std::size_t c = 0; c < n; ++c) {
    if (A[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(A[i][k]);
      minor.push_back(std::move(row));
    }
    Poly t = A[0][c] * det_rec(minor);
    acc = (c % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}
}  // namespace

Poly commutative_det(const SkewMatrix& M) {
  std::vector<std::vector<Poly>> A(M.size());
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j) A[i].push_back(as_commutative(M(i, j)));
  return det_rec(A);
}

SkewMatrix example_5_8_matrix() {
  FieldPtr F = make_field(3, 1);
  SkewMatrix S(F, 2);
  S(0, 0) = SkewPoly::phi_power(F, 2);
  S(0, 1) = SkewPoly::phi_power(F, 1);
  S(1, 0) = SkewPoly::phi_power(F, 1);
  return S;
}

mpz_class example_5_8_deg(unsigned n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  SkewMatrix S = example_5_8_matrix();
  SkewMatrix T = matrix_pow(S, n) - SkewMatrix::identity(S.field(), 2);
  auto d = ddet_degree(T);
  if (!d) throw std::domain_error("sigma^n - 1 is singular");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, static_cast<unsigned long>(*d));
  return out;
}

bool degree_bound_check(const SkewMatrix& M, unsigned n, long d, Elem gamma) {
  if (M.max_entry_degree() > d) throw std::invalid_argument("entries exceed the stated degree");
  SkewMatrix G(M.field(), M.size());
  for (std::size_t i = 0; i < M.size(); ++i) G(i, i) = SkewPoly::constant(M.field(), gamma);
  auto deg = ddet_degree(matrix_pow(M, n) - G);
  if (!deg) throw std::domain_error("sigma^n - gamma is singular");
  return *deg <= static_cast<long>(M.size()) * static_cast<long>(n) * d;
}

}  // namespace dynzeta
