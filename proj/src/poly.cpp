#include "dynzeta/poly.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dynzeta {

namespace {

using Vec = std::vector<Elem>;

void trim_vec(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::uint32_t inv_prime(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// ---- prime field kernels ----

Vec mul_school_prime(const Vec& a, const Vec& b, std::uint32_t p) {
  Vec out(a.size() + b.size() - 1);
  if (p < (1u << 16)) {
    std::vector<std::uint64_t> acc(out.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t ai = a[i];
      if (!ai) continue;
      std::uint64_t* dst = acc.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) dst[j] += ai * b[j];
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<Elem>(acc[k] % p);
  } else {
    std::vector<std::uint64_t> acc(out.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t ai = a[i];
      if (!ai) continue;
      for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + ai * b[j] % p) % p;
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<Elem>(acc[k]);
  }
  trim_vec(out);
  return out;
}

void kron_pack(mpz_t z, const Vec& a, unsigned bytes) {
  std::vector<unsigned char> buf(a.size() * bytes, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t v = a[i];
    unsigned char* d = buf.data() + i * bytes;
    for (unsigned k = 0; k < bytes; ++k) d[k] = static_cast<unsigned char>(v >> (8 * k));
  }
  mpz_import(z, buf.size(), -1, 1, 0, 0, buf.data());
}

// Kronecker substitution: evaluate at 2^(8*bytes), multiply with GMP, unpack.
Vec mul_kronecker_prime(const Vec& a, const Vec& b, std::uint32_t p) {
  std::size_t n = std::min(a.size(), b.size());
  long double maxc = static_cast<long double>(p - 1) * (p - 1) * n;
  unsigned bits = 1;
  while (bits < 80 && std::ldexp(1.0L, static_cast<int>(bits)) <= maxc) ++bits;
  unsigned bytes = (bits + 7) / 8;
  if (bytes > 8) return mul_school_prime(a, b, p);
  mpz_t x, y;
  mpz_init(x);
  mpz_init(y);
  kron_pack(x, a, bytes);
  if (&a == &b) {
    mpz_mul(x, x, x);
  } else {
    kron_pack(y, b, bytes);
    mpz_mul(x, x, y);
  }
  std::size_t nout = a.size() + b.size() - 1;
  std::vector<unsigned char> buf(nout * bytes + 16, 0);
  std::size_t cnt = 0;
  mpz_export(buf.data(), &cnt, -1, 1, 0, 0, x);
  mpz_clear(x);
  mpz_clear(y);
  Vec out(nout);
  for (std::size_t i = 0; i < nout; ++i) {
    const unsigned char* s = buf.data() + i * bytes;
    std::uint64_t v = 0;
    for (unsigned k = 0; k < bytes; ++k) v |= static_cast<std::uint64_t>(s[k]) << (8 * k);
    out[i] = static_cast<Elem>(v % p);
  }
  trim_vec(out);
  return out;
}

Vec mul_prime(const Vec& a, const Vec& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < 40) return mul_school_prime(a, b, p);
  return mul_kronecker_prime(a, b, p);
}

// Division with lazily reduced accumulators.  The inner update is a plain
// multiply-add over contiguous arrays so the compiler can vectorize it.
template <class Acc>
void divrem_lazy(Vec& a, const Vec& b, std::uint32_t p, Vec* quot) {
  std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    if (quot) quot->clear();
    return;
  }
  std::size_t da = a.size() - 1;
  std::uint32_t il = inv_prime(b.back(), p);
  std::vector<Acc> bm(db);
  for (std::size_t j = 0; j < db; ++j) bm[j] = static_cast<Acc>(static_cast<std::uint64_t>(b[j]) * il % p);
  std::vector<Acc> r(a.begin(), a.end());
  if (quot) quot->assign(da - db + 1, 0);
  const Acc sq = static_cast<Acc>(p - 1) * static_cast<Acc>(p - 1);
  const std::uint64_t limit =
      sq == 0 ? std::numeric_limits<std::uint64_t>::max()
              : (static_cast<std::uint64_t>(std::numeric_limits<Acc>::max()) - p) / static_cast<std::uint64_t>(sq);
  std::uint64_t steps = 0;
  for (std::size_t i = da + 1; i-- > db;) {
    Acc c = r[i] % p;
    r[i] = 0;
    if (c == 0) continue;
    if (quot) (*quot)[i - db] = static_cast<Elem>(static_cast<std::uint64_t>(c) * il % p);
    const Acc t = static_cast<Acc>(p - c);
    Acc* __restrict dst = r.data() + (i - db);
    const Acc* __restrict src = bm.data();
    for (std::size_t j = 0; j < db; ++j) dst[j] += t * src[j];
    if (++steps >= limit) {
      for (std::size_t k = 0; k < i; ++k) r[k] %= p;
      steps = 0;
    }
  }
  a.resize(db);
  for (std::size_t k = 0; k < db; ++k) a[k] = static_cast<Elem>(r[k] % p);
  trim_vec(a);
}

void divrem_prime(Vec& a, const Vec& b, std::uint32_t p, Vec* quot) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (p < 2048)
    divrem_lazy<std::uint32_t>(a, b, p, quot);
  else
    divrem_lazy<std::uint64_t>(a, b, p, quot);
  if (quot) trim_vec(*quot);
}

// ---- generic field kernels ----

Vec mul_generic(const Field& F, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim_vec(out);
  return out;
}

void divrem_generic(const Field& F, Vec& a, const Vec& b, Vec* quot) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    if (quot) quot->clear();
    return;
  }
  Elem il = F.inv(b.back());
  if (quot) quot->assign(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Elem c = a[i];
    if (!c) continue;
    Elem qc = F.mul(c, il);
    if (quot) (*quot)[i - db] = qc;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = F.sub(a[i - db + j], F.mul(qc, b[j]));
  }
  a.resize(db);
  trim_vec(a);
  if (quot) trim_vec(*quot);
}

void divrem(const Field& F, Vec& a, const Vec& b, Vec* quot) {
  if (F.is_prime_field())
    divrem_prime(a, b, F.p(), quot);
  else
    divrem_generic(F, a, b, quot);
}

void check_same(const Poly& a, const Poly& b) {
  if (!a.field() || !b.field()) throw std::invalid_argument("polynomial without a field");
  if (a.field() != b.field() && (a.F().p() != b.F().p() || a.F().modulus() != b.F().modulus()))
    throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldPtr F, std::vector<Elem> c) : F_(std::move(F)), c_(std::move(c)) {
  for (Elem e : c_)
    if (e >= F_->size()) throw std::invalid_argument("coefficient outside the field");
  trim();
}

void Poly::trim() { trim_vec(c_); }

Poly Poly::constant(FieldPtr F, Elem c) { return Poly(std::move(F), Vec{c}); }
Poly Poly::x(FieldPtr F) { return Poly(std::move(F), Vec{0, 1}); }
Poly Poly::monomial(FieldPtr F, Elem c, std::size_t d) {
  Vec v(d + 1, 0);
  v[d] = c;
  return Poly(std::move(F), std::move(v));
}
Poly Poly::from_ints(FieldPtr F, const std::vector<long long>& c) {
  Vec v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = F->from_int(c[i]);
  return Poly(std::move(F), std::move(v));
}

std::size_t Poly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Elem e) { return e != 0; }));
}

Elem Poly::operator()(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  check_same(*this, o);
  Vec r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->add(coef(i), o.coef(i));
  Poly out(F_);
  out.c_ = std::move(r);
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  check_same(*this, o);
  Vec r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->sub(coef(i), o.coef(i));
  Poly out(F_);
  out.c_ = std::move(r);
  out.trim();
  return out;
}

Poly Poly::operator-() const {
  Poly out(F_);
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = F_->neg(c_[i]);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  check_same(*this, o);
  Poly out(F_);
  if (F_->is_prime_field())
    out.c_ = mul_prime(c_, o.c_, F_->p());
  else
    out.c_ = mul_generic(*F_, c_, o.c_);
  return out;
}

Poly Poly::scaled(Elem s) const {
  Poly out(F_);
  if (s == 0) return out;
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = F_->mul(c_[i], s);
  out.trim();
  return out;
}

Poly Poly::shifted(std::size_t k) const {
  Poly out(F_);
  if (c_.empty()) return out;
  out.c_.assign(k, 0);
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!s.empty()) s += " + ";
    std::string cs = F_->to_string(c_[i]);
    if (i == 0) {
      s += cs;
    } else {
      if (c_[i] != 1) s += cs + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Vec r = a.coeffs(), q;
  divrem(a.F(), r, b.coeffs(), &q);
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly operator%(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Vec r = a.coeffs();
  divrem(a.F(), r, b.coeffs(), nullptr);
  return Poly(a.field(), std::move(r));
}

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.F().inv(a.lead()));
}

Poly derivative(const Poly& a) {
  const Field& F = a.F();
  if (a.degree() < 1) return Poly(a.field());
  Vec d(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) d[i - 1] = F.mul(F.from_int(static_cast<long long>(i % F.p())), a.coef(i));
  return Poly(a.field(), std::move(d));
}

Poly gcd(const Poly& a0, const Poly& b0) {
  check_same(a0, b0);
  const Field& F = a0.F();
  Vec a = a0.coeffs(), b = b0.coeffs();
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    divrem(F, a, b, nullptr);
    std::swap(a, b);
  }
  return monic(Poly(a0.field(), std::move(a)));
}

Poly pow(const Poly& a, std::uint64_t e) {
  Poly r = Poly::constant(a.field(), 1);
  Poly b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly frobenius_power(const Poly& a, unsigned j) {
  const Field& F = a.F();
  if (a.is_zero()) return a;
  std::uint64_t pj = 1;
  for (unsigned i = 0; i < j; ++i) pj *= F.p();
  std::uint64_t nd = static_cast<std::uint64_t>(a.degree()) * pj;
  if (nd > (1ULL << 32)) throw std::length_error("frobenius power too large");
  Vec c(nd + 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i * pj] = F.frob_pow(a.coef(i), j);
  return Poly(a.field(), std::move(c));
}

Poly pth_root(const Poly& a) {
  const Field& F = a.F();
  std::uint32_t p = F.p();
  Vec c;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i % p == 0)
      c.push_back(F.frob_inv(a.coef(i)));
    else if (a.coef(i) != 0)
      throw std::invalid_argument("pth_root of a polynomial that is not a p-th power");
  }
  return Poly(a.field(), std::move(c));
}

Poly poly_radical(const Poly& P) {
  if (P.is_zero()) throw std::invalid_argument("radical of the zero polynomial");
  if (P.degree() == 0) return Poly::constant(P.field(), 1);
  Poly d = derivative(P);
  if (d.is_zero()) return poly_radical(pth_root(P));
  Poly g = gcd(P, d);
  Poly w = monic(P / g);  // every root of P, multiplicity one unless p | multiplicity
  // Strip from g every root that w already carries; what remains is a p-th power.
  Poly c = g;
  Poly y = gcd(c, w);
  while (y.degree() > 0) {
    c = c / y;
    y = gcd(c, y);
  }
  if (c.degree() <= 0) return w;
  return monic(w * poly_radical(c));
}

std::size_t distinct_root_count(const Poly& P) {
  return static_cast<std::size_t>(poly_radical(P).degree());
}

}  // namespace dynzeta
