#include "dynzeta/count.hpp"

#include <cmath>
#include <stdexcept>

#include "dynzeta/arith.hpp"

namespace dynzeta {

mpz_class kernel_size_gm(const mpz_class& k, std::uint32_t p) {
  if (k == 0) throw std::domain_error("x^0 = 1 has infinitely many solutions");
  return prime_to_p(k, p);
}

mpz_class kernel_size_elliptic(const mpz_class& k, std::uint32_t p, int c) {
  if (k == 0) throw std::domain_error("[0] is not an isogeny");
  if (c != 1 && c != 2) throw std::invalid_argument("inseparable exponent must be 1 or 2");
  mpz_class a = abs(k);
  mpz_class deg = a * a;
  mpz_class pv = ipow(p, static_cast<std::uint64_t>(c * v_p(a, p)));
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), deg.get_mpz_t(), pv.get_mpz_t());
  return out;
}

mpz_class kernel_size_additive(const SkewPoly& tau) {
  if (tau.is_zero()) throw std::domain_error("zero endomorphism");
  return ipow(tau.field()->p(), static_cast<std::uint64_t>(tau.degree() - tau.valuation()));
}

nlohmann::json KernelReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["boundary"] = boundary;
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : terms)
    ts.push_back({{"gamma", t.gamma}, {"deg", t.deg.get_str()}, {"v", t.v}, {"kernel", t.kernel.get_str()}});
  j["terms"] = ts;
  j["f_n"] = total.get_str();
  return j;
}

namespace {

KernelTerm gm_term(const mpz_class& mn, long gamma, std::uint32_t p) {
  KernelTerm t;
  t.gamma = std::to_string(gamma);
  mpz_class k = mn - gamma;
  if (k == 0) throw std::domain_error("sigma^n equals gamma; map is not confined");
  t.deg = abs(k);
  t.v = v_p(k, p);
  t.kernel = kernel_size_gm(k, p);
  return t;
}

KernelTerm ell_term(const mpz_class& mn, long gamma, std::uint32_t p, int c) {
  KernelTerm t;
  t.gamma = std::to_string(gamma);
  mpz_class k = mn - gamma;
  if (k == 0) throw std::domain_error("sigma^n equals gamma; map is not confined");
  t.deg = k * k;
  t.v = c * v_p(k, p);
  t.kernel = kernel_size_elliptic(k, p, c);
  return t;
}

KernelTerm add_term(const SkewPoly& sn, Elem gamma) {
  const FieldPtr& F = sn.field();
  KernelTerm t;
  t.gamma = F->to_string(gamma);
  SkewPoly tau = sn - SkewPoly::constant(F, gamma);
  if (tau.is_zero()) throw std::domain_error("sigma^n equals gamma; map is not confined");
  t.deg = ipow(F->p(), static_cast<std::uint64_t>(tau.degree()));
  t.v = tau.valuation();
  t.kernel = kernel_size_additive(tau);
  return t;
}

// Gamma average plus boundary, with exact division.
void settle(KernelReport& r, unsigned order) {
  mpz_class sum = 0;
  for (const auto& t : r.terms) sum += t.kernel;
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), order)) throw std::logic_error("kernel sizes do not average to an integer");
  mpz_divexact_ui(sum.get_mpz_t(), sum.get_mpz_t(), order);
  r.total = sum + r.boundary;
}

KernelReport formula_with_power(const MapDescriptor& d, unsigned n, const SkewPoly* sn, int c) {
  KernelReport r;
  r.n = n;
  mpz_class mn;
  if (d.kind == MapKind::Power || d.kind == MapKind::Chebyshev || d.kind == MapKind::Lattes)
    mn = ipow(d.m, n);
  switch (d.kind) {
    case MapKind::Power:
      r.boundary = 2;
      r.terms.push_back(gm_term(mn, 1, d.p));
      settle(r, 1);
      break;
    case MapKind::Chebyshev:
      r.boundary = 1;
      r.terms.push_back(gm_term(mn, 1, d.p));
      r.terms.push_back(gm_term(mn, -1, d.p));
      settle(r, 2);
      break;
    case MapKind::Lattes:
      r.boundary = 0;
      r.terms.push_back(ell_term(mn, 1, d.p, c));
      r.terms.push_back(ell_term(mn, -1, d.p, c));
      settle(r, 2);
      break;
    case MapKind::Additive:
      r.boundary = 1;
      r.terms.push_back(add_term(*sn, 1));
      settle(r, 1);
      break;
    case MapKind::Subadditive: {
      r.boundary = 1;
      FieldPtr F = d.field();
      Elem zeta = F->pow(F->generator(), (F->size() - 1) / d.d);
      Elem g = 1;
      for (unsigned k = 0; k < d.d; ++k) {
        r.terms.push_back(add_term(*sn, g));
        g = F->mul(g, zeta);
      }
      settle(r, d.d);
      break;
    }
  }
  // deg = kernel * p^v, term by term
  for (const auto& t : r.terms)
    if (t.kernel * ipow(d.p, static_cast<std::uint64_t>(t.v)) != t.deg) throw std::logic_error("kernel identity failed");
  return r;
}

int curve_exponent(const MapDescriptor& d) {
  return d.kind == MapKind::Lattes ? inseparable_exponent(d.make_curve()) : 1;
}

}  // namespace

KernelReport fixed_point_formula(const MapDescriptor& d, unsigned n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  d.validate();
  if (d.kind == MapKind::Additive || d.kind == MapKind::Subadditive) {
    SkewPoly sn = skew_pow(d.sigma(), n);
    return formula_with_power(d, n, &sn, 1);
  }
  return formula_with_power(d, n, nullptr, curve_exponent(d));
}

std::vector<mpz_class> formula_counts(const MapDescriptor& d, unsigned nmax) {
  d.validate();
  std::vector<mpz_class> out;
  int c = curve_exponent(d);
  bool skew = d.kind == MapKind::Additive || d.kind == MapKind::Subadditive;
  SkewPoly sigma = skew ? d.sigma() : SkewPoly();
  SkewPoly sn = skew ? SkewPoly::constant(sigma.field(), 1) : SkewPoly();
  for (unsigned n = 1; n <= nmax; ++n) {
    if (skew) sn = sn * sigma;
    out.push_back(formula_with_power(d, n, skew ? &sn : nullptr, c).total);
  }
  return out;
}

bool is_coseparable(const MapDescriptor& d) {
  d.validate();
  switch (d.kind) {
    case MapKind::Power:
    case MapKind::Chebyshev:
    case MapKind::Lattes: return d.m % d.p == 0;
    case MapKind::Additive:
    case MapKind::Subadditive: return d.sigma().coef(0) == 0;
  }
  return false;
}

GrowthReport growth_bound(const std::vector<mpz_class>& counts, std::uint64_t degree) {
  GrowthReport g;
  g.c = mpq_class(static_cast<unsigned long>(degree + 1));
  mpz_class cn = 1;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    cn *= static_cast<unsigned long>(degree + 1);
    if (counts[i] > cn) g.bound_ok = false;
    double n = static_cast<double>(i + 1);
    // log via mpz to avoid overflow
    long e = 0;
    double mant = mpz_get_d_2exp(&e, counts[i].get_mpz_t());
    double lg = std::log(mant) + static_cast<double>(e) * std::log(2.0);
    g.ratios.push_back(std::exp(lg / n) / static_cast<double>(degree));
  }
  return g;
}

GrowthReport growth_bound(const MapDescriptor& d, unsigned nmax) {
  return growth_bound(formula_counts(d, nmax), d.map_degree());
}

}  // namespace dynzeta
