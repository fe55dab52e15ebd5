#include "dynzeta/closedform.hpp"

#include <sstream>
#include <stdexcept>

#include "dynzeta/arith.hpp"
#include "dynzeta/curve.hpp"

namespace dynzeta {

nlohmann::json AtomProduct::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : factors) j.push_back({f.a.get_str(), f.b, rational_string(f.beta)});
  return j;
}

std::string AtomProduct::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << " * ";
    first = false;
    os << "zeta*_pt(";
    if (f.a != 1) os << f.a.get_str();
    os << "z";
    if (f.b != 1) os << "^" << f.b;
    os << ")";
    if (f.beta != 1) os << "^(" << f.beta.get_str() << ")";
  }
  if (first) os << "1";
  return os.str();
}

TruncSeries zeta_pt_atom(const mpz_class& a, unsigned b, std::uint32_t p, std::size_t T) {
  if (a <= 0) throw std::invalid_argument("atom scale must be positive");
  if (b == 0) throw std::invalid_argument("atom power must be positive");
  if (T < 1) throw std::invalid_argument("order must be positive");
  std::size_t Tw = T / b;
  std::vector<mpz_class> ones(Tw, 1);
  TruncSeries w = Tw ? tame_from_counts(ones, p, Tw) : TruncSeries::one(0);
  return w.substitute(mpq_class(a), b, T);
}

namespace {

void push(AtomProduct& ap, const mpz_class& a, unsigned b, const mpq_class& beta) {
  if (beta != 0) ap.factors.push_back({a, b, beta});
}

mpz_class zpow(unsigned m, unsigned e) { return ipow(m, e); }

// (|m^s - 1|_p^h - 1) / s
mpq_class beta_of(unsigned m, std::uint32_t p, unsigned s, int h) {
  mpz_class x = zpow(m, s) - 1;
  long v = v_p(x, p);
  mpq_class absp(1, ipow(p, static_cast<std::uint64_t>(h * v)));
  absp.canonicalize();
  return (absp - 1) / s;
}

}  // namespace

AtomProduct power_map_closed_form(unsigned m, std::uint32_t p) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  AtomProduct ap;
  ap.p = p;
  push(ap, m, 1, 1);
  push(ap, 1, 1, 1);
  if (m % p == 0) return ap;
  unsigned s = static_cast<unsigned>(mult_order(m, p));
  mpq_class beta = beta_of(m, p, s, 1);
  ap.s = s;
  ap.beta = beta;
  push(ap, zpow(m, s), s, beta);
  push(ap, 1, s, -beta);
  return ap;
}

AtomProduct chebyshev_closed_form(unsigned m, std::uint32_t p) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  AtomProduct ap;
  ap.p = p;
  push(ap, m, 1, 1);
  push(ap, 1, 1, 1);
  if (m % p == 0) return ap;
  unsigned s = static_cast<unsigned>(mult_order(m, p));
  mpq_class beta = beta_of(m, p, s, 1);
  ap.s = s;
  ap.beta = beta;
  if (s % 2) {
    push(ap, zpow(m, s), s, beta / 2);
    push(ap, 1, s, -beta / 2);
  } else {
    unsigned t = s / 2;
    push(ap, zpow(m, t), t, beta);
    push(ap, 1, t, beta);
    push(ap, 1, s, -beta);
  }
  return ap;
}

AtomProduct lattes_closed_form(unsigned m, std::uint32_t p, int c) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (c != 1 && c != 2) throw std::invalid_argument("inseparable exponent must be 1 or 2");
  AtomProduct ap;
  ap.p = p;
  push(ap, zpow(m, 2), 1, 1);
  push(ap, 1, 1, 1);
  if (m % p == 0) return ap;
  unsigned s = static_cast<unsigned>(mult_order(m, p));
  mpq_class beta = beta_of(m, p, s, c);
  ap.s = s;
  ap.beta = beta;
  if (s % 2) {
    push(ap, zpow(m, 2 * s), s, beta / 2);
    push(ap, 1, s, beta / 2);
    push(ap, zpow(m, s), s, -beta);
  } else {
    unsigned t = s / 2;
    push(ap, zpow(m, 2 * t), t, beta);
    push(ap, 1, t, beta);
    push(ap, zpow(m, t), t, 2 * beta);
    push(ap, zpow(m, 2 * t), 2 * t, -2 * beta);
  }
  return ap;
}

AtomProduct additive_closed_form(const SkewPoly& sigma) {
  const FieldPtr& F = sigma.field();
  if (sigma.degree() < 1) throw std::invalid_argument("additive map must have degree at least p");
  const std::uint32_t p = F->p();
  mpz_class m = ipow(p, static_cast<std::uint64_t>(sigma.degree()));
  AtomProduct ap;
  ap.p = p;
  push(ap, m, 1, 1);
  push(ap, 1, 1, 1);
  if (sigma.coef(0) == 0) return ap;
  // least s with sigma^s = 1 + a phi^t + ...
  SkewPoly one = SkewPoly::constant(F, 1);
  SkewPoly sn = sigma;
  unsigned s = 1;
  while (sn.coef(0) != 1) {
    sn = sn * sigma;
    ++s;
    if (s > F->size()) throw std::logic_error("constant term has no finite order");
  }
  SkewPoly diff = sn - one;
  if (diff.is_zero()) throw std::domain_error("iterate is the identity");
  long t = diff.valuation();
  mpq_class beta(1, ipow(p, static_cast<std::uint64_t>(t)));
  beta.canonicalize();
  beta = (beta - 1) / s;
  ap.s = s;
  ap.beta = beta;
  mpz_class ms = 1;
  for (unsigned i = 0; i < s; ++i) ms *= m;
  push(ap, ms, s, beta);
  return ap;
}

AtomProduct closed_form(const MapDescriptor& d) {
  d.validate();
  switch (d.kind) {
    case MapKind::Power: return power_map_closed_form(d.m, d.p);
    case MapKind::Chebyshev: return chebyshev_closed_form(d.m, d.p);
    case MapKind::Lattes: return lattes_closed_form(d.m, d.p, inseparable_exponent(d.make_curve()));
    case MapKind::Additive: return additive_closed_form(d.sigma());
    case MapKind::Subadditive: break;
  }
  throw std::invalid_argument("no closed form for subadditive maps");
}

TruncSeries expand(const AtomProduct& ap, std::size_t T) {
  if (T < 1) throw std::invalid_argument("order must be positive");
  TruncSeries r = TruncSeries::one(T);
  for (const auto& f : ap.factors) {
    TruncSeries a = zeta_pt_atom(f.a, f.b, ap.p, T);
    r = r * (f.beta == 1 ? a : pow_series(a, f.beta));
  }
  return r;
}

}  // namespace dynzeta
