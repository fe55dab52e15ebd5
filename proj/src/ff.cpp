#include "dynzeta/ff.hpp"

#include <cstdlib>
#include <stdexcept>

namespace dynzeta {

namespace {

std::uint64_t env_bound(const char* name, std::uint64_t dflt) {
  const char* s = std::getenv(name);
  if (!s || !*s) return dflt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0) return dflt;
  return v;
}

using RawPoly = std::vector<std::uint64_t>;  // ascending, entries < p

void raw_trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime, a != 0 mod p
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

RawPoly raw_mod(RawPoly a, const RawPoly& f, std::uint64_t p) {
  raw_trim(a);
  std::size_t df = f.size() - 1;
  std::uint64_t il = inv_mod(f.back(), p);
  while (a.size() > df) {
    std::uint64_t c = a.back() * il % p;
    std::size_t sh = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[sh + j] = (a[sh + j] + (p - c) * f[j]) % p;
    raw_trim(a);
  }
  return a;
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return raw_mod(std::move(c), f, p);
}

RawPoly raw_powmod(RawPoly base, std::uint64_t e, const RawPoly& f, std::uint64_t p) {
  RawPoly r{1};
  base = raw_mod(base, f, p);
  while (e) {
    if (e & 1) r = raw_mulmod(r, base, f, p);
    base = raw_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint64_t p) {
  raw_trim(a);
  raw_trim(b);
  while (!b.empty()) {
    a = raw_mod(a, b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's irreducibility test for a monic f of degree N over F_p.
bool rabin_irreducible(const RawPoly& f, std::uint64_t p) {
  std::size_t N = f.size() - 1;
  if (N == 1) return true;
  auto frob_iter = [&](std::size_t k) {
    RawPoly x{0, 1};
    for (std::size_t i = 0; i < k; ++i) x = raw_powmod(x, p, f, p);
    return x;
  };
  RawPoly xq = frob_iter(N);
  RawPoly xr = raw_mod(RawPoly{0, 1}, f, p);
  if (xq != xr) return false;
  for (std::uint64_t r : prime_factors(N)) {
    RawPoly h = frob_iter(N / r);
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    raw_trim(h);
    RawPoly g = raw_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::uint64_t enumeration_bound() { return env_bound("DYNZETA_ENUM_BOUND", 1000000ULL); }
std::uint64_t degree_bound() { return env_bound("DYNZETA_DEGREE_BOUND", 32768ULL); }

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  auto mulm = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powm = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulm(r, a);
      a = mulm(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powm(a, d);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulm(x, x);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, unsigned N) : p_(p), n_(N) {
  if (N < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (!is_prime_u64(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < N; ++i) {
    ppow_.push_back(static_cast<std::uint32_t>(q));
    q *= p;
    if (q >= (1ULL << 31)) throw std::invalid_argument("field size must stay below 2^31");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (N == 1) {
    mod_ = {0, 1};
  } else {
    // scan k = sum c_i p^i upward
    for (std::uint64_t k = 0; k < q; ++k) {
      RawPoly f(N + 1, 0);
      std::uint64_t t = k;
      for (unsigned i = 0; i < N; ++i) {
        f[i] = t % p;
        t /= p;
      }
      f[N] = 1;
      if (f[0] == 0) continue;
      if (rabin_irreducible(f, p)) {
        mod_.assign(f.begin(), f.end());
        break;
      }
    }
    if (mod_.empty()) throw std::logic_error("no irreducible polynomial found");
  }

  // multiplicative generator
  auto factors = prime_factors(q_ - 1);
  for (std::uint64_t g = 2; g < q_; ++g) {
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (pow(static_cast<Elem>(g), (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = static_cast<Elem>(g);
      break;
    }
  }
  if (q_ == 2) gen_ = 1;

  if (N > 1 && q_ <= (1u << 20)) {
    exp_.resize(2 * static_cast<std::size_t>(q_ - 1));
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      exp_[i + q_ - 1] = x;
      log_[x] = i;
      x = mul_school(x, gen_);
    }
  }
}

Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::add(Elem a, Elem b) const {
  if (n_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem r = 0;
  for (unsigned i = n_; i-- > 0;) {
    std::uint32_t da = (a / ppow_[i]) % p_, db = (b / ppow_[i]) % p_;
    std::uint32_t s = da + db;
    if (s >= p_) s -= p_;
    r += s * ppow_[i];
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (n_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    std::uint32_t d = (a / ppow_[i]) % p_;
    r += (d == 0 ? 0 : p_ - d) * ppow_[i];
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_school(Elem a, Elem b) const {
  std::vector<std::uint64_t> da(n_), db(n_), c(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    da[i] = (a / ppow_[i]) % p_;
    db[i] = (b / ppow_[i]) % p_;
  }
  for (unsigned i = 0; i < n_; ++i)
    if (da[i])
      for (unsigned j = 0; j < n_; ++j) c[i + j] = (c[i + j] + da[i] * db[j]) % p_;
  for (unsigned k = 2 * n_ - 1; k-- > n_;) {
    std::uint64_t t = c[k];
    if (!t) continue;
    c[k] = 0;
    for (unsigned j = 0; j < n_; ++j) c[k - n_ + j] = (c[k - n_ + j] + (p_ - t) * mod_[j]) % p_;
  }
  Elem r = 0;
  for (unsigned i = 0; i < n_; ++i) r += static_cast<Elem>(c[i]) * ppow_[i];
  return r;
}

Elem Field::mul(Elem a, Elem b) const {
  if (n_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return exp_[log_[a] + log_[b]];
  return mul_school(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (n_ == 1) return static_cast<Elem>(inv_mod(a, p_));
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (n_ > 1 && !log_.empty()) {
    std::uint64_t k = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[k];
  }
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = (n_ == 1) ? mul(r, b) : mul_school(r, b);
    b = (n_ == 1) ? mul(b, b) : mul_school(b, b);
    e >>= 1;
  }
  return r;
}

Elem Field::frob(Elem a) const { return n_ == 1 ? a : pow(a, p_); }

Elem Field::frob_inv(Elem a) const { return n_ == 1 ? a : pow(a, q_ / p_); }

Elem Field::frob_pow(Elem a, unsigned j) const {
  j %= n_;
  for (unsigned i = 0; i < j; ++i) a = frob(a);
  return a;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(n_);
  for (unsigned i = 0; i < n_; ++i) d[i] = (a / ppow_[i]) % p_;
  return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() > n_) throw std::invalid_argument("too many coordinates");
  Elem r = 0;
  for (std::size_t i = 0; i < d.size(); ++i) r += (d[i] % p_) * ppow_[i];
  return r;
}

std::string Field::to_string(Elem a) const {
  if (n_ == 1) return std::to_string(a);
  auto d = digits(a);
  std::string s = "[";
  for (unsigned i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

FieldPtr make_field(std::uint32_t p, unsigned N) { return std::make_shared<const Field>(p, N); }

std::vector<Elem> enumerate_field(const Field& F, std::uint64_t bound) {
  if (F.size() > bound)
    throw std::out_of_range("field of size " + std::to_string(F.size()) + " exceeds the enumeration bound " +
                            std::to_string(bound));
  std::vector<Elem> out(F.size());
  for (std::uint32_t i = 0; i < F.size(); ++i) out[i] = i;
  return out;
}

Embedding::Embedding(FieldPtr sub, FieldPtr ext) : sub_(std::move(sub)), ext_(std::move(ext)) {
  if (sub_->p() != ext_->p()) throw std::invalid_argument("embedding between different characteristics");
  if (ext_->degree() % sub_->degree() != 0) throw std::invalid_argument("subfield degree does not divide");
  unsigned k = sub_->degree();
  Elem theta = 0;
  if (k == 1) {
    theta = 0;  // unused
  } else {
    const auto& m = sub_->modulus();
    bool found = false;
    for (std::uint32_t x = 0; x < ext_->size() && !found; ++x) {
      Elem acc = 0;
      for (std::size_t i = m.size(); i-- > 0;) acc = ext_->add(ext_->mul(acc, x), ext_->from_int(m[i]));
      if (acc == 0) {
        theta = x;
        found = true;
      }
    }
    if (!found) throw std::logic_error("subfield modulus has no root in the extension");
  }
  tpow_.resize(k);
  Elem t = 1;
  for (unsigned i = 0; i < k; ++i) {
    tpow_[i] = t;
    if (k > 1) t = ext_->mul(t, theta);
  }
}

Elem Embedding::operator()(Elem a) const {
  if (sub_->degree() == 1) return ext_->from_int(a);
  auto d = sub_->digits(a);
  Elem r = 0;
  for (std::size_t i = 0; i < d.size(); ++i) r = ext_->add(r, ext_->mul(ext_->from_int(d[i]), tpow_[i]));
  return r;
}

}  // namespace dynzeta
