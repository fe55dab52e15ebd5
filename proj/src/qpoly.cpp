#include "dynzeta/qpoly.hpp"

#include <stdexcept>

namespace dynzeta {

QPoly::QPoly(std::vector<mpq_class> c) : c_(std::move(c)) {
  for (auto& a : c_) a.canonicalize();
  trim();
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::from_ints(const std::vector<long long>& c) {
  std::vector<mpq_class> q;
  for (long long v : c) q.emplace_back(static_cast<long>(v));
  return QPoly(std::move(q));
}

QPoly QPoly::constant(const mpq_class& a) { return QPoly({a}); }

QPoly QPoly::monomial(const mpq_class& a, std::size_t d) {
  std::vector<mpq_class> c(d + 1);
  c[d] = a;
  return QPoly(std::move(c));
}

mpq_class QPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coef(i) + o.coef(i);
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coef(i) - o.coef(i);
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
  std::vector<mpq_class> r(c_);
  for (auto& a : r) a = -a;
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> r(c_);
  for (auto& a : r) a *= s;
  return QPoly(std::move(r));
}

std::string QPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    mpq_class a = c_[i];
    bool neg = a < 0;
    if (neg) a = -a;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (i == 0 || a != 1) s += a.get_str() + (i ? "*" : "");
    if (i) s += var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<mpq_class> r = a.coeffs();
  long db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<mpq_class> q(static_cast<std::size_t>(a.degree() - db + 1));
  mpq_class il = 1 / b.lead();
  for (long k = a.degree(); k >= db; --k) {
    mpq_class c = r[static_cast<std::size_t>(k)] * il;
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly monic(const QPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(1 / a.lead());
}

QPoly derivative(const QPoly& a) {
  if (a.degree() < 1) return QPoly();
  std::vector<mpq_class> r(static_cast<std::size_t>(a.degree()));
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) r[i - 1] = a.coeffs()[i] * static_cast<unsigned long>(i);
  return QPoly(std::move(r));
}

QPoly gcd(const QPoly& a0, const QPoly& b0) {
  QPoly a = a0, b = b0;
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    // keep sizes down
    b = monic(r);
  }
  return monic(a);
}

QPoly reversed(const QPoly& a) {
  std::vector<mpq_class> r(a.coeffs().rbegin(), a.coeffs().rend());
  return QPoly(std::move(r));
}

std::vector<mpz_class> primitive_part(const QPoly& a) {
  mpz_class L = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& c : a.coeffs()) {
    mpq_class t = c * L;
    z.push_back(t.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g == 0) return z;
  if (a.lead() < 0) g = -g;
  for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return z;
}

namespace {
long sign_changes(const std::vector<QPoly>& seq, const mpq_class& x) {
  long changes = 0;
  int last = 0;
  for (const auto& P : seq) {
    int s = sgn(P(x));
    if (s == 0) continue;
    if (last && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace

long sturm_count(const QPoly& P, const mpq_class& a, const mpq_class& b) {
  if (P.is_zero()) throw std::domain_error("Sturm count of the zero polynomial");
  std::vector<QPoly> seq{P, derivative(P)};
  while (!seq.back().is_zero()) {
    QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // keep the sign pattern of -r, rescaled by a positive factor
    QPoly nr = -r;
    mpq_class s = nr.lead() > 0 ? 1 / nr.lead() : -1 / nr.lead();
    seq.push_back(nr.scaled(s));
  }
  return sign_changes(seq, a) - sign_changes(seq, b);
}

}  // namespace dynzeta
