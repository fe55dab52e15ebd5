#include "dynzeta/series.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "dynzeta/arith.hpp"
#include "dynzeta/ff.hpp"

namespace dynzeta {

// ---- TruncSeries -----------------------------------------------------------

TruncSeries::TruncSeries(std::vector<mpq_class> c) : c_(std::move(c)) {
  if (c_.empty()) c_.resize(1);
  for (auto& a : c_) a.canonicalize();
}

TruncSeries TruncSeries::one(std::size_t T) {
  TruncSeries s(T);
  s.c_[0] = 1;
  return s;
}

TruncSeries TruncSeries::from_poly(const QPoly& P, std::size_t T) {
  TruncSeries s(T);
  for (std::size_t i = 0; i < P.coeffs().size() && i <= T; ++i) s.c_[i] = P.coeffs()[i];
  return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  std::size_t T = std::min(order(), o.order());
  TruncSeries r(T);
  for (std::size_t i = 0; i <= T; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= T; ++j)
      if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  TruncSeries r(order());
  mpq_class inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (std::size_t n = 1; n <= order(); ++n) {
    mpq_class acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (c_[k] != 0) acc += c_[k] * r.c_[n - k];
    r.c_[n] = -acc * inv0;
  }
  return r;
}

TruncSeries TruncSeries::operator/(const TruncSeries& o) const { return *this * o.inverse(); }

TruncSeries TruncSeries::scaled(const mpq_class& s) const {
  TruncSeries r(*this);
  for (auto& a : r.c_) a *= s;
  return r;
}

TruncSeries TruncSeries::truncated(std::size_t T) const {
  if (T > order()) throw std::invalid_argument("cannot extend a truncated series");
  return TruncSeries(std::vector<mpq_class>(c_.begin(), c_.begin() + static_cast<long>(T) + 1));
}

TruncSeries TruncSeries::derivative() const {
  if (order() == 0) return TruncSeries(std::size_t{0});
  TruncSeries r(order() - 1);
  for (std::size_t i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return r;
}

TruncSeries TruncSeries::substitute(const mpq_class& a, std::size_t b, std::size_t T) const {
  if (b == 0) throw std::invalid_argument("substitution power must be positive");
  if (T / b > order()) throw std::invalid_argument("series too short for the substitution");
  TruncSeries r(T);
  mpq_class ap = 1;
  for (std::size_t i = 0; i * b <= T; ++i) {
    r.c_[i * b] = c_[i] * ap;
    ap *= a;
  }
  return r;
}

std::string rational_string(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

nlohmann::json TruncSeries::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& a : c_) j.push_back(rational_string(a));
  return j;
}

std::string TruncSeries::to_string(std::size_t terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  for (std::size_t i = 0; i <= order() && shown < terms; ++i) {
    if (c_[i] == 0) continue;
    if (shown) os << " + ";
    os << c_[i].get_str();
    if (i) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
    ++shown;
  }
  if (!shown) os << "0";
  os << " + O(z^" << order() + 1 << ")";
  return os.str();
}

// ---- exp / log / pow -------------------------------------------------------

TruncSeries exp_series(const TruncSeries& a) {
  if (a[0] != 0) throw std::domain_error("exp needs a zero constant term");
  const std::size_t T = a.order();
  TruncSeries b(T);
  b[0] = 1;
  // n b_n = sum k a_k b_(n-k)
  for (std::size_t n = 1; n <= T; ++n) {
    mpq_class acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (a[k] != 0) acc += a[k] * b[n - k] * static_cast<unsigned long>(k);
    b[n] = acc / static_cast<unsigned long>(n);
  }
  return b;
}

TruncSeries log_series(const TruncSeries& a) {
  if (a[0] != 1) throw std::domain_error("log needs constant term 1");
  const std::size_t T = a.order();
  TruncSeries l(T);
  // n a_n = sum k l_k a_(n-k)
  for (std::size_t n = 1; n <= T; ++n) {
    mpq_class acc = a[n] * static_cast<unsigned long>(n);
    for (std::size_t k = 1; k < n; ++k)
      if (l[k] != 0) acc -= l[k] * a[n - k] * static_cast<unsigned long>(k);
    l[n] = acc / static_cast<unsigned long>(n);
  }
  return l;
}

TruncSeries pow_series(const TruncSeries& a, const mpq_class& e) {
  if (a[0] != 1) throw std::domain_error("power needs constant term 1");
  const std::size_t T = a.order();
  TruncSeries y(T);
  y[0] = 1;
  // a y' = e a' y  =>  n y_n = sum_k (e k - (n - k)) a_k y_(n-k)
  for (std::size_t n = 1; n <= T; ++n) {
    mpq_class acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] == 0) continue;
      mpq_class w = e * static_cast<unsigned long>(k) - static_cast<long>(n - k);
      acc += w * a[k] * y[n - k];
    }
    y[n] = acc / static_cast<unsigned long>(n);
  }
  return y;
}

TruncSeries exp_of_logderiv(const std::vector<mpq_class>& g, std::size_t T) {
  if (g.size() < T) throw std::invalid_argument("not enough log-derivative coefficients");
  TruncSeries s(T);
  s[0] = 1;
  for (std::size_t n = 1; n <= T; ++n) {
    mpq_class acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (g[k - 1] != 0) acc += g[k - 1] * s[n - k];
    s[n] = acc / static_cast<unsigned long>(n);
  }
  return s;
}

std::vector<mpq_class> log_derivative_coeffs(const TruncSeries& s) {
  if (s[0] != 1) throw std::domain_error("log-derivative needs constant term 1");
  // n s_n = sum_k g_k s_(n-k)
  std::vector<mpq_class> g;
  for (std::size_t n = 1; n <= s.order(); ++n) {
    mpq_class acc = s[n] * static_cast<unsigned long>(n);
    for (std::size_t k = 1; k < n; ++k)
      if (g[k - 1] != 0) acc -= g[k - 1] * s[n - k];
    g.push_back(acc);
  }
  return g;
}

TruncSeries zeta_from_counts(const std::vector<mpz_class>& counts, std::size_t T) {
  if (counts.size() < T) throw std::invalid_argument("not enough counts");
  for (std::size_t i = 0; i < T; ++i)
    if (counts[i] < 0) throw std::invalid_argument("negative count");
  std::vector<mpq_class> g(counts.begin(), counts.begin() + static_cast<long>(T));
  return exp_of_logderiv(g, T);
}

TruncSeries tame_from_counts(const std::vector<mpz_class>& counts, std::uint32_t p, std::size_t T) {
  if (counts.size() < T) throw std::invalid_argument("not enough counts");
  std::vector<mpq_class> g(T);
  for (std::size_t n = 1; n <= T; ++n) {
    if (counts[n - 1] < 0) throw std::invalid_argument("negative count");
    if (n % p != 0) g[n - 1] = counts[n - 1];
  }
  return exp_of_logderiv(g, T);
}

TruncSeries euler_product(const std::map<std::uint64_t, std::uint64_t>& cycles, std::size_t T) {
  TruncSeries r = TruncSeries::one(T);
  for (auto [len, cnt] : cycles) {
    if (len > T || cnt == 0) continue;
    TruncSeries f = TruncSeries::one(T);
    f[len] = -1;
    r = r * pow_series(f, -mpq_class(static_cast<unsigned long>(cnt)));
  }
  return r;
}

TruncSeries zeta_union(const TruncSeries& zS1, const TruncSeries& zS2, const TruncSeries& zS12) {
  if (zS1.order() != zS2.order() || zS1.order() != zS12.order())
    throw std::invalid_argument("incompatible truncations");
  return zS1 * zS2 / zS12;
}

// ---- tame identities -------------------------------------------------------

namespace {
IdentityReport compare(const TruncSeries& a, const TruncSeries& b, const std::string& which, std::size_t upto) {
  IdentityReport r;
  r.which = which;
  for (std::size_t i = 0; i <= upto; ++i)
    if (a[i] != b[i]) {
      r.holds = false;
      r.first_failure = static_cast<long>(i);
      return r;
    }
  return r;
}
}  // namespace

IdentityReport tame_identity_check(const std::vector<mpz_class>& counts,
                                   const std::vector<std::vector<mpz_class>>& iterates, std::uint32_t p,
                                   std::size_t T) {
  if (counts.size() < T) throw std::invalid_argument("insufficient counts");
  std::size_t levels = 0;
  for (std::uint64_t q = 1; q <= T; q *= p) ++levels;
  if (iterates.size() < levels) throw std::invalid_argument("insufficient iterate counts");
  {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < levels; ++i, q *= p)
      if (iterates[i].size() < T / q) throw std::invalid_argument("insufficient iterate counts");
  }
  TruncSeries Z = zeta_from_counts(counts, T);
  TruncSeries Zs = tame_from_counts(counts, p, T);
  // first identity
  std::size_t Tp = T / p;
  TruncSeries F2 = zeta_from_counts(iterates[1], Tp).substitute(1, p, T);
  TruncSeries lhs = Zs * pow_series(F2, mpq_class(1, p));
  IdentityReport r1 = compare(lhs, Z, "tame-full", T);
  if (!r1.holds) return r1;
  // product over iterates
  TruncSeries prod = TruncSeries::one(T);
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < levels; ++i, q *= p) {
    std::size_t Ti = T / q;
    TruncSeries Zi = tame_from_counts(iterates[i], p, Ti).substitute(1, q, T);
    prod = prod * pow_series(Zi, mpq_class(1, static_cast<unsigned long>(q)));
  }
  return compare(prod, Z, "product", T);
}

IdentityReport tame_identity_check(const std::vector<mpz_class>& counts, std::uint32_t p, std::size_t T) {
  std::vector<std::vector<mpz_class>> it;
  for (std::uint64_t q = 1; q <= T; q *= p) {
    std::vector<mpz_class> c;
    for (std::uint64_t n = 1; n * q <= counts.size() && n <= T; ++n) c.push_back(counts[n * q - 1]);
    it.push_back(std::move(c));
  }
  return tame_identity_check(counts, it, p, T);
}

// ---- modular machinery -----------------------------------------------------

namespace {

using u64 = std::uint64_t;
using UVec = std::vector<u64>;

u64 mulm(u64 a, u64 b, u64 P) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % P); }
u64 addm(u64 a, u64 b, u64 P) {
  u64 s = a + b;
  return s >= P ? s - P : s;
}
u64 subm(u64 a, u64 b, u64 P) { return a >= b ? a - b : a + P - b; }
u64 powm(u64 a, u64 e, u64 P) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a, P);
    a = mulm(a, a, P);
    e >>= 1;
  }
  return r;
}
u64 invm(u64 a, u64 P) {
  if (a == 0) throw std::domain_error("inverse of zero mod P");
  return powm(a, P - 2, P);
}

u64 big_prime(std::size_t i) {
  static std::vector<u64> primes;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  u64 c = primes.empty() ? (1ULL << 61) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    while (!is_prime_u64(c)) c -= 2;
    primes.push_back(c);
    c -= 2;
  }
  return primes[i];
}

bool reduce(const mpq_class& q, u64 P, u64& out) {
  u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), P);
  if (d == 0) return false;
  u64 n = mpz_fdiv_ui(q.get_num_mpz_t(), P);
  out = mulm(n, invm(d, P), P);
  return true;
}

bool reduce_vec(const std::vector<mpq_class>& v, u64 P, UVec& out) {
  out.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!reduce(v[i], P, out[i])) return false;
  return true;
}

// Connection polynomial mod P; returns L, aborting once L > limit.
std::size_t bm_mod(const UVec& s, u64 P, std::size_t limit, UVec& C) {
  C.assign(1, 1);
  UVec B{1};
  std::size_t L = 0, m = 1;
  u64 b = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    u64 d = s[n];
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) d = addm(d, mulm(C[i], s[n - i], P), P);
    if (d == 0) {
      ++m;
      continue;
    }
    u64 coef = mulm(d, invm(b, P), P);
    UVec Tm = C;
    if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
    for (std::size_t i = 0; i < B.size(); ++i) C[i + m] = subm(C[i + m], mulm(coef, B[i], P), P);
    if (2 * L <= n) {
      L = n + 1 - L;
      B = std::move(Tm);
      b = d;
      m = 1;
      if (L > limit) return L;
    } else {
      ++m;
    }
  }
  C.resize(L + 1, 0);
  return L;
}

bool rational_reconstruct(const mpz_class& a, const mpz_class& M, mpq_class& out) {
  mpz_class bound;
  mpz_class half = M / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = M, r1 = a % M;
  if (r1 < 0) r1 += M;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

// Chinese remaindering of coefficient vectors, with reconstruction.
struct CrtAccumulator {
  std::vector<mpz_class> X;
  mpz_class M = 1;
  void add(const UVec& r, u64 P) {
    if (X.empty()) X.assign(r.size(), 0);
    if (r.size() != X.size()) throw std::logic_error("CRT length mismatch");
    mpz_class Pm;
    mpz_set_ui(Pm.get_mpz_t(), P);
    u64 Minv = invm(mpz_fdiv_ui(M.get_mpz_t(), P), P);
    for (std::size_t i = 0; i < r.size(); ++i) {
      u64 x = mpz_fdiv_ui(X[i].get_mpz_t(), P);
      u64 k = mulm(subm(r[i], x, P), Minv, P);
      mpz_class kk;
      mpz_set_ui(kk.get_mpz_t(), k);
      X[i] += M * kk;
    }
    M *= Pm;
  }
  bool reconstruct(std::vector<mpq_class>& out) const {
    out.resize(X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
      if (!rational_reconstruct(X[i], M, out[i])) return false;
    return true;
  }
};

bool verify_connection(const std::vector<mpq_class>& seq, const std::vector<mpq_class>& C) {
  const std::size_t L = C.size() - 1;
  // integer form when possible
  bool ints = std::all_of(seq.begin(), seq.end(), [](const mpq_class& q) { return q.get_den() == 1; });
  if (ints) {
    mpz_class D = 1;
    for (const auto& c : C) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> Ci;
    for (const auto& c : C) Ci.push_back(mpq_class(c * D).get_num());
    for (std::size_t n = L; n < seq.size(); ++n) {
      mpz_class acc = 0;
      for (std::size_t i = 0; i <= L; ++i)
        if (Ci[i] != 0) acc += Ci[i] * seq[n - i].get_num();
      if (acc != 0) return false;
    }
    return true;
  }
  for (std::size_t n = L; n < seq.size(); ++n) {
    mpq_class acc = 0;
    for (std::size_t i = 0; i <= L; ++i)
      if (C[i] != 0) acc += C[i] * seq[n - i];
    if (acc != 0) return false;
  }
  return true;
}

// polynomials over F_P, ascending, trimmed
void utrim(UVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
UVec umul(const UVec& a, const UVec& b, u64 P) {
  if (a.empty() || b.empty()) return {};
  UVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j], P), P);
  }
  utrim(r);
  return r;
}
UVec usub(const UVec& a, const UVec& b, u64 P) {
  UVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = subm(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, P);
  utrim(r);
  return r;
}
void udivmod(const UVec& a, const UVec& b, u64 P, UVec* q, UVec& r) {
  r = a;
  utrim(r);
  if (b.empty()) throw std::domain_error("division by zero polynomial mod P");
  std::size_t db = b.size() - 1;
  u64 il = invm(b.back(), P);
  if (q) q->assign(r.size() >= b.size() ? r.size() - db : 0, 0);
  while (r.size() >= b.size()) {
    std::size_t k = r.size() - 1 - db;
    u64 c = mulm(r.back(), il, P);
    if (q) (*q)[k] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = subm(r[k + j], mulm(c, b[j], P), P);
    utrim(r);
  }
  if (q) utrim(*q);
}
UVec umonic(UVec a, u64 P) {
  if (a.empty()) return a;
  u64 il = invm(a.back(), P);
  for (auto& x : a) x = mulm(x, il, P);
  return a;
}
UVec ugcd(UVec a, UVec b, u64 P) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UVec r;
    udivmod(a, b, P, nullptr, r);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(a, P);
}
UVec uderiv(const UVec& a, u64 P) {
  if (a.size() < 2) return {};
  UVec r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulm(a[i], i % P, P);
  utrim(r);
  return r;
}
// a^-1 mod m, or empty when not invertible
UVec uinvmod(const UVec& a, const UVec& m, u64 P) {
  UVec r0 = m, r1;
  udivmod(a, m, P, nullptr, r1);
  UVec s0, s1{1};
  while (!r1.empty()) {
    UVec q, r;
    udivmod(r0, r1, P, &q, r);
    UVec s2 = usub(s0, umul(q, s1, P), P);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return {};
  u64 il = invm(r0[0], P);
  for (auto& x : s0) x = mulm(x, il, P);
  UVec out;
  udivmod(s0, m, P, nullptr, out);
  return out;
}

// Minimal polynomial of multiplication by E in F_P[z]/(B), monic.
UVec minpoly_mod(const UVec& E, const UVec& B, u64 P) {
  const std::size_t d = B.size() - 1;
  struct Row {
    UVec v, combo;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  UVec cur{1};
  for (std::size_t k = 0; k <= d; ++k) {
    UVec v(d, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) v[i] = cur[i];
    UVec combo(k + 1, 0);
    combo[k] = 1;
    for (const auto& row : basis) {
      u64 f = v[row.pivot];
      if (!f) continue;
      for (std::size_t i = 0; i < d; ++i) v[i] = subm(v[i], mulm(f, row.v[i], P), P);
      for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] = subm(combo[i], mulm(f, row.combo[i], P), P);
    }
    std::size_t piv = d;
    for (std::size_t i = 0; i < d; ++i)
      if (v[i]) {
        piv = i;
        break;
      }
    if (piv == d) return combo;  // combo[k] = 1
    u64 il = invm(v[piv], P);
    for (auto& x : v) x = mulm(x, il, P);
    for (auto& x : combo) x = mulm(x, il, P);
    basis.push_back({std::move(v), std::move(combo), piv});
    UVec next;
    udivmod(umul(cur, E, P), B, P, nullptr, next);
    cur = std::move(next);
  }
  throw std::logic_error("minimal polynomial search overflowed");
}

}  // namespace

// ---- Berlekamp-Massey over Q -------------------------------------------------

std::optional<std::vector<mpq_class>> bm_exact(const std::vector<mpq_class>& s, std::size_t limit) {
  std::vector<mpq_class> C{1}, B{1};
  std::size_t L = 0, m = 1;
  mpq_class b = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    mpq_class d = s[n];
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) d += C[i] * s[n - i];
    if (d == 0) {
      ++m;
      continue;
    }
    mpq_class coef = d / b;
    std::vector<mpq_class> Tm = C;
    if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
    for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
    if (2 * L <= n) {
      L = n + 1 - L;
      B = std::move(Tm);
      b = d;
      m = 1;
      if (L > limit) return std::nullopt;
    } else {
      ++m;
    }
  }
  C.resize(L + 1, 0);
  return C;
}

std::optional<std::vector<mpq_class>> bm_modular(const std::vector<mpq_class>& s, std::size_t limit) {
  CrtAccumulator acc;
  std::size_t curL = 0;
  bool have = false;
  std::vector<mpq_class> prev;
  bool prev_ok = false;
  int over = 0;
  for (std::size_t pi = 0; pi < 400; ++pi) {
    u64 P = big_prime(pi);
    UVec sp;
    if (!reduce_vec(s, P, sp)) continue;
    UVec C;
    std::size_t L = bm_mod(sp, P, limit, C);
    if (L > limit) {
      if (++over >= 2) return std::nullopt;
      continue;
    }
    if (!have || L > curL) {
      acc = CrtAccumulator();
      curL = L;
      have = true;
      prev_ok = false;
    } else if (L < curL) {
      continue;  // unlucky prime
    }
    acc.add(C, P);
    std::vector<mpq_class> rec;
    bool ok = acc.reconstruct(rec);
    if (ok && prev_ok && rec == prev) {
      if (verify_connection(s, rec)) return rec;
    }
    prev = std::move(rec);
    prev_ok = ok;
  }
  throw std::runtime_error("modular recurrence reconstruction did not stabilise");
}

std::string RecurrenceReport::describe() const {
  std::ostringstream os;
  if (found)
    os << "order " << order << ", characteristic polynomial " << charpoly.to_string() << " (window " << window
       << ", " << method << ")";
  else
    os << "no recurrence up to order " << max_order << " on window " << window << " (" << method << ")";
  return os.str();
}

RecurrenceReport recurrence_detect(const std::vector<mpq_class>& seq, std::size_t maxOrder, std::size_t window) {
  if (window < 2 * maxOrder + 4) throw std::invalid_argument("window must be at least 2*maxOrder + 4");
  if (seq.size() < window) throw std::invalid_argument("sequence shorter than the window");
  std::vector<mpq_class> w(seq.begin(), seq.begin() + static_cast<long>(window));
  RecurrenceReport r;
  r.window = window;
  r.max_order = maxOrder;
  r.method = window <= 160 ? "exact" : "modular";
  auto C = window <= 160 ? bm_exact(w, maxOrder) : bm_modular(w, maxOrder);
  if (!C) return r;
  if (window <= 160 && !verify_connection(w, *C)) throw std::logic_error("recurrence does not reproduce its window");
  r.found = true;
  r.order = C->size() - 1;
  r.connection = *C;
  std::vector<mpq_class> cp(C->rbegin(), C->rend());
  r.charpoly = QPoly(cp);
  return r;
}

RecurrenceReport recurrence_detect(const std::vector<mpz_class>& seq, std::size_t maxOrder, std::size_t window) {
  std::vector<mpq_class> q(seq.begin(), seq.end());
  return recurrence_detect(q, maxOrder, window);
}

// ---- Pade ------------------------------------------------------------------

namespace {
// numerator (C s) mod z^L; empty optional when the residual is nonzero
std::optional<QPoly> numerator_of(const std::vector<mpq_class>& s, const std::vector<mpq_class>& C) {
  const std::size_t L = C.size() - 1;
  std::vector<mpq_class> A(L);
  for (std::size_t n = 0; n < s.size(); ++n) {
    mpq_class acc = 0;
    for (std::size_t i = 0; i <= std::min(n, L); ++i)
      if (C[i] != 0) acc += C[i] * s[n - i];
    if (n < L)
      A[n] = acc;
    else if (acc != 0)
      return std::nullopt;
  }
  return QPoly(A);
}
}  // namespace

std::optional<PadeResult> pade_certify(const TruncSeries& s, std::size_t dmax) {
  const std::size_t T = s.order();
  if (T < 2 * dmax + 8) throw std::invalid_argument("truncation order must be at least 2*dmax + 8");
  const auto& c = s.coeffs();
  auto C = c.size() <= 160 ? bm_exact(c, dmax + 1) : bm_modular(c, dmax + 1);
  if (!C) return std::nullopt;
  auto A = numerator_of(c, *C);
  if (!A) return std::nullopt;
  QPoly B(*C);
  if (A->degree() > static_cast<long>(dmax) || B.degree() > static_cast<long>(dmax)) return std::nullopt;
  return PadeResult{*A, B, T};
}

// ---- root-rationality --------------------------------------------------------

nlohmann::json RootRationalCertificate::to_json() const {
  nlohmann::json j;
  j["certified"] = certified;
  j["t"] = t.get_str();
  if (!reason.empty()) j["reason"] = reason;
  j["logderiv_rational"] = logderiv_rational;
  j["logderiv"] = logderiv.describe();
  if (logderiv_rational) {
    j["R_num_degree"] = R_num.degree();
    j["R_den_degree"] = R_den.degree();
  }
  j["power_rational"] = power_rational;
  if (power_rational) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : factors) fs.push_back({{"residue", rational_string(f.c)}, {"degree", f.G.degree()}});
    j["factors"] = fs;
    j["power_numerator_degree"] = power_num_deg;
    j["power_denominator_degree"] = power_den_deg;
  }
  j["literal_pade"] = literal_pade_run ? nlohmann::json(literal_pade_ok) : nlohmann::json(nullptr);
  return j;
}

namespace {

QPoly qpow(const QPoly& a, unsigned long e) {
  QPoly r = QPoly::constant(1), b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

// s'/s = A/B with B(0) = 1 squarefree: split the poles by residue.  Returns
// false with a reason when some residue is not in (1/t)Z.
bool residue_partition(const QPoly& A, const QPoly& B, const mpz_class& t, std::vector<ResidueFactor>& out,
                       std::string& reason) {
  out.clear();
  if (A.is_zero()) return true;
  if (B.degree() < 1) {
    reason = "log-derivative is a nonzero polynomial";
    return false;
  }
  const std::size_t d = static_cast<std::size_t>(B.degree());
  std::vector<mpq_class> Bc(B.coeffs()), Ac(A.coeffs());
  // minimal polynomial of the residue function E = A / B' mod B
  CrtAccumulator acc;
  std::size_t curk = 0;
  std::vector<mpq_class> prev;
  bool prev_ok = false, done = false;
  std::vector<mpq_class> mu;
  int bad = 0;
  for (std::size_t pi = 0; pi < 200 && !done; ++pi) {
    u64 P = big_prime(pi);
    UVec Bp, Ap;
    if (!reduce_vec(Bc, P, Bp) || !reduce_vec(Ac, P, Ap)) continue;
    utrim(Bp);
    utrim(Ap);
    if (Bp.size() != d + 1) continue;
    UVec dB = uderiv(Bp, P);
    if (ugcd(Bp, dB, P).size() != 1 || ugcd(Bp, Ap, P).size() != 1) {
      if (++bad >= 3) {
        reason = "log-derivative has repeated poles or is not reduced";
        return false;
      }
      continue;
    }
    UVec inv = uinvmod(dB, Bp, P);
    UVec E;
    udivmod(umul(Ap, inv, P), Bp, P, nullptr, E);
    UVec m = minpoly_mod(E, Bp, P);
    std::size_t k = m.size() - 1;
    if (acc.X.empty() || k > curk) {
      acc = CrtAccumulator();
      curk = k;
      prev_ok = false;
    } else if (k < curk) {
      continue;
    }
    acc.add(m, P);
    std::vector<mpq_class> rec;
    bool ok = acc.reconstruct(rec);
    if (ok && prev_ok && rec == prev) {
      mu = rec;
      done = true;
    }
    prev = std::move(rec);
    prev_ok = ok;
  }
  if (!done) throw std::runtime_error("residue minimal polynomial did not stabilise");
  // nu(Y) = t^k mu(Y/t); its roots must be integers
  const std::size_t k = mu.size() - 1;
  std::vector<mpq_class> nu(k + 1);
  mpz_class tp = 1;
  for (std::size_t i = k + 1; i-- > 0;) {
    nu[i] = mu[i] * tp;
    tp *= t;
  }
  std::vector<mpz_class> nz = primitive_part(QPoly(nu));
  std::vector<mpz_class> roots;
  if (k == 1) {
    mpq_class r(-nz[0], nz[1]);
    r.canonicalize();
    if (r.get_den() != 1) {
      reason = "residue " + rational_string(r / mpq_class(t)) + " is not in (1/t)Z";
      return false;
    }
    roots.push_back(r.get_num());
  } else {
    auto approx = certified_roots(nz);
    for (const auto& a : approx) {
      mpz_class y;
      double re = a.approx.real();
      if (std::abs(a.approx.imag()) > 1e-6) {
        reason = "a residue of the log-derivative is not real";
        return false;
      }
      mpz_set_d(y.get_mpz_t(), std::nearbyint(re));
      mpz_class val = 0;
      for (std::size_t i = nz.size(); i-- > 0;) val = val * y + nz[i];
      if (val != 0) {
        reason = "a residue of the log-derivative is not in (1/t)Z";
        return false;
      }
      roots.push_back(y);
    }
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) throw std::logic_error("repeated residue root");
  }
  // G_c = gcd(B, A - c B') for every residue c
  QPoly dBq = derivative(B);
  for (const auto& y : roots) {
    mpq_class c(y, t);
    c.canonicalize();
    QPoly H = A - dBq.scaled(c);
    std::vector<mpq_class> Hc(H.coeffs());
    CrtAccumulator gacc;
    std::size_t curdeg = 0;
    std::vector<mpq_class> gprev;
    bool gprev_ok = false, gdone = false;
    std::vector<mpq_class> G;
    for (std::size_t pi = 0; pi < 200 && !gdone; ++pi) {
      u64 P = big_prime(pi);
      UVec Bp, Hp;
      if (!reduce_vec(Bc, P, Bp) || !reduce_vec(Hc, P, Hp)) continue;
      utrim(Bp);
      utrim(Hp);
      if (Bp.size() != d + 1) continue;
      UVec g = ugcd(Bp, Hp, P);
      // normalise g(0) = 1
      if (g.empty() || g[0] == 0) continue;
      u64 i0 = invm(g[0], P);
      for (auto& x : g) x = mulm(x, i0, P);
      std::size_t gd = g.size() - 1;
      if (gacc.X.empty() || gd < curdeg) {
        gacc = CrtAccumulator();
        curdeg = gd;
        gprev_ok = false;
      } else if (gd > curdeg) {
        continue;
      }
      gacc.add(g, P);
      std::vector<mpq_class> rec;
      bool ok = gacc.reconstruct(rec);
      if (ok && gprev_ok && rec == gprev) {
        G = rec;
        gdone = true;
      }
      gprev = std::move(rec);
      gprev_ok = ok;
    }
    if (!gdone) throw std::runtime_error("residue factor did not stabilise");
    out.push_back({c, QPoly(G)});
  }
  // exact identity: B = prod G_c and A = sum c G_c' prod_(others) G
  QPoly prod = QPoly::constant(1);
  for (const auto& f : out) prod = prod * f.G;
  if (prod != B) {
    reason = "residue factors do not multiply to the denominator";
    return false;
  }
  QPoly sum;
  for (std::size_t i = 0; i < out.size(); ++i) {
    QPoly term = derivative(out[i].G).scaled(out[i].c);
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) term = term * out[j].G;
    sum = sum + term;
  }
  if (sum != A) {
    reason = "residue decomposition does not reproduce the numerator";
    return false;
  }
  return true;
}

void power_degrees(RootRationalCertificate& cert) {
  cert.power_num_deg = cert.power_den_deg = 0;
  for (const auto& f : cert.factors) {
    mpq_class e = f.c * cert.t;
    long ex = e.get_num().get_si();
    if (ex > 0)
      cert.power_num_deg += ex * f.G.degree();
    else
      cert.power_den_deg += -ex * f.G.degree();
  }
}

void literal_cross_check(RootRationalCertificate& cert, const std::vector<mpq_class>& g,
                         const CertificateOptions& opt) {
  std::size_t D = static_cast<std::size_t>(std::max(cert.power_num_deg, cert.power_den_deg));
  if (D > opt.literal_budget || !cert.t.fits_ulong_p()) return;
  std::size_t T = 2 * D + 8;
  if (g.size() < T) return;
  TruncSeries s = exp_of_logderiv(g, T);
  TruncSeries st = pow_series(s, mpq_class(cert.t));
  auto pr = pade_certify(st, D);
  cert.literal_pade_run = true;
  cert.literal_pade_ok = pr.has_value();
  if (!pr) throw std::logic_error("inconsistent prongs: literal Pade refused a certified power");
  QPoly num = QPoly::constant(1), den = QPoly::constant(1);
  for (const auto& f : cert.factors) {
    mpq_class e = f.c * cert.t;
    long ex = e.get_num().get_si();
    if (ex > 0)
      num = num * qpow(f.G, static_cast<unsigned long>(ex));
    else
      den = den * qpow(f.G, static_cast<unsigned long>(-ex));
  }
  if (num != pr->num || den != pr->den) throw std::logic_error("inconsistent prongs: Pade and residue forms differ");
}

}  // namespace

RootRationalCertificate root_rational_certificate_logderiv(const std::vector<mpq_class>& g, const mpz_class& t,
                                                           const CertificateOptions& opt) {
  if (t <= 0) throw std::invalid_argument("t must be positive");
  RootRationalCertificate cert;
  cert.t = t;
  // u_n = [z^n] s'/s
  std::vector<mpq_class> u(g.begin(), g.end());
  // orders 12, 24, 48, ... capped by the available terms
  RecurrenceReport rep;
  for (std::size_t order = opt.start_order;; order *= 2) {
    std::size_t eff = std::min(order, u.size() >= 10 ? (u.size() - 8) / 2 : 0);
    if (eff < 1) break;
    rep = recurrence_detect(u, eff, 2 * eff + 8);
    // the window was verified already; check the remaining terms
    if (rep.found && (rep.window == u.size() || verify_connection(u, rep.connection))) break;
    rep.found = false;
    if (eff < order || order >= opt.max_order) break;
  }
  cert.logderiv = rep;
  if (rep.found) {
    auto A = numerator_of(u, rep.connection);
    if (!A) throw std::logic_error("verified recurrence without a numerator");
    cert.logderiv_rational = true;
    cert.R_num = *A;
    cert.R_den = QPoly(rep.connection);
    std::string why;
    std::vector<ResidueFactor> fs;
    if (residue_partition(cert.R_num, cert.R_den, t, fs, why)) {
      cert.power_rational = true;
      cert.factors = std::move(fs);
      power_degrees(cert);
      literal_cross_check(cert, g, opt);
      cert.certified = true;
    } else {
      cert.reason = why;
    }
    return cert;
  }
  cert.reason = "log-derivative coefficients satisfy no recurrence: " + rep.describe();
  // the literal power must refuse as well
  std::size_t T = g.size();
  if (T >= 16 && t.fits_ulong_p()) {
    std::size_t dmax = std::min<std::size_t>((T - 8) / 2, opt.literal_budget);
    std::size_t Tuse = 2 * dmax + 8;
    TruncSeries st = pow_series(exp_of_logderiv(g, Tuse), mpq_class(t));
    cert.literal_pade_run = true;
    cert.literal_pade_ok = pade_certify(st, dmax).has_value();
    if (cert.literal_pade_ok) throw std::logic_error("inconsistent prongs: power is rational but log-derivative is not");
  }
  return cert;
}

RootRationalCertificate root_rational_certificate(const TruncSeries& s, const mpz_class& t,
                                                  const CertificateOptions& opt) {
  if (s[0] != 1) throw std::invalid_argument("series must have constant term 1");
  // [z^n] s'/s = g_(n+1)
  std::vector<mpq_class> g = log_derivative_coeffs(s);
  return root_rational_certificate_logderiv(g, t, opt);
}

// ---- pair ODE --------------------------------------------------------------

IdentityReport pair_ode_check(const TruncSeries& F1, const TruncSeries& F2, const QPoly& R_num, const QPoly& R_den,
                              std::uint32_t p, std::size_t T) {
  if (R_den.is_zero()) throw std::invalid_argument("missing certificate");
  if (F1.order() < T || F2.order() < T / p) throw std::invalid_argument("series too short for the pair identity");
  const std::size_t K = T - 1;
  TruncSeries d1 = F1.derivative().truncated(K);
  TruncSeries f1 = F1.truncated(K);
  TruncSeries F2p = F2.substitute(1, p, K);
  TruncSeries dF2 = F2.derivative();
  // z^(p-1) F2'(z^p)
  TruncSeries zF2p(K);
  for (std::size_t i = 0; i <= dF2.order() && i * p + p - 1 <= K; ++i) zF2p[i * p + p - 1] = dF2[i];
  TruncSeries lhs = TruncSeries::from_poly(R_den, K) * (d1 * F2p - f1 * zF2p);
  TruncSeries rhs = TruncSeries::from_poly(R_num, K) * f1 * F2p;
  return compare(lhs, rhs, "pair-ode", K);
}

}  // namespace dynzeta
