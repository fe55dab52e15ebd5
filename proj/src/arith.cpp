#include "dynzeta/arith.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dynzeta/qpoly.hpp"

namespace dynzeta {

long v_p(const mpz_class& n, std::uint32_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  mpz_class t = n;
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

mpz_class ipow(std::uint64_t b, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

mpq_class abs_p(const mpz_class& n, std::uint32_t p) {
  mpq_class r(1);
  r /= mpq_class(ipow(p, static_cast<std::uint64_t>(v_p(n, p))));
  return r;
}

mpz_class prime_to_p(const mpz_class& n, std::uint32_t p) {
  if (n == 0) throw std::domain_error("prime-to-p part of zero");
  mpz_class t = abs(n);
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
  return t;
}

std::uint64_t mult_order(long long m, std::uint32_t p) {
  long long r = m % static_cast<long long>(p);
  if (r < 0) r += p;
  if (r == 0) throw std::domain_error("p divides m; no multiplicative order");
  std::uint64_t s = 1, x = static_cast<std::uint64_t>(r);
  while (x != 1) {
    x = x * static_cast<std::uint64_t>(r) % p;
    ++s;
  }
  return s;
}

long v_power_diff(long long x, long long y, unsigned n, std::uint32_t p) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (x == y) throw std::invalid_argument("x = y");
  mpz_class X(static_cast<long>(x)), Y(static_cast<long>(y));
  if (!mpz_divisible_ui_p(mpz_class(X - Y).get_mpz_t(), p)) throw std::invalid_argument("p does not divide x - y");
  if (mpz_divisible_ui_p(X.get_mpz_t(), p)) throw std::invalid_argument("p divides x");
  long predicted = v_p(X - Y, p) + v_p(mpz_class(n), p);
  mpz_class xn, yn;
  mpz_pow_ui(xn.get_mpz_t(), X.get_mpz_t(), n);
  mpz_pow_ui(yn.get_mpz_t(), Y.get_mpz_t(), n);
  long direct = v_p(xn - yn, p);
  if (direct != predicted) throw std::logic_error("lifting-the-exponent mismatch");
  return predicted;
}

// ---- filtration ------------------------------------------------------------

namespace {

constexpr long kInf = std::numeric_limits<long>::max();

// Shared scan.  vals[n][g] = v(sigma^n - gamma_g) for n = 1..W; element 0 of
// the group is the identity and mul gives the group law on indices.
struct GroupData {
  std::size_t order;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<long> v_minus_one;  // v(gamma - 1), kInf for the identity
  std::vector<std::string> names;
};

std::size_t gpow(const GroupData& G, std::size_t g, std::uint64_t n) {
  std::size_t r = 0;
  for (std::uint64_t i = 0; i < n % G.order; ++i) r = G.mul[r][g];
  return r;
}

void fill_levels(FiltrationReport& rep, const GroupData& G, const std::vector<std::vector<long>>& vals,
                 unsigned L) {
  const std::uint64_t W = vals.size() - 1;
  for (unsigned m0 = 0; m0 <= L; ++m0) {
    FiltrationLevel lev;
    lev.m = m0;
    std::vector<std::size_t> sub;
    for (std::size_t g = 0; g < G.order; ++g)
      if (G.v_minus_one[g] >= static_cast<long>(m0)) {
        sub.push_back(g);
        lev.subgroup.push_back(G.names[g]);
      }
    auto witnesses = [&](std::uint64_t n) {
      std::vector<std::size_t> w;
      for (std::size_t g = 0; g < G.order; ++g)
        if (vals[n][g] >= static_cast<long>(m0)) w.push_back(g);
      return w;
    };
    for (std::uint64_t n = 1; n <= W && !lev.s; ++n) {
      auto w = witnesses(n);
      if (!w.empty()) {
        lev.s = n;
        lev.gamma = G.names[w.front()];
      }
    }
    if (lev.s) {
      std::uint64_t s = *lev.s;
      std::size_t gm = 0;
      for (std::size_t g = 0; g < G.order; ++g)
        if (G.names[g] == lev.gamma) gm = g;
      for (std::uint64_t n = 1; n <= W; ++n) {
        bool in_s = !witnesses(n).empty();
        if (in_s != (n % s == 0)) lev.multiples_ok = false;
      }
      for (std::uint64_t k = 1; k * s <= W; ++k) {
        auto w = witnesses(k * s);
        std::size_t gk = gpow(G, gm, k);
        std::vector<std::size_t> coset;
        for (std::size_t h : sub) coset.push_back(G.mul[h][gk]);
        std::sort(coset.begin(), coset.end());
        if (w != coset) lev.cosets_ok = false;
      }
    }
    rep.levels.push_back(std::move(lev));
  }
}

void finish(FiltrationReport& rep, const GroupData& G, const std::vector<std::vector<long>>& vals) {
  const FiltrationLevel& atN = rep.levels[rep.N];
  const FiltrationLevel& atM = rep.levels[rep.M];
  if (rep.coseparable) {
    for (std::size_t m0 = 1; m0 < rep.levels.size(); ++m0)
      if (rep.levels[m0].s) throw std::logic_error("coseparable map with a finite s_m");
    rep.t = rep.p;
    return;
  }
  for (std::size_t m0 = 0; m0 < rep.levels.size(); ++m0)
    if (!rep.levels[m0].s)
      throw std::runtime_error("scan window " + std::to_string(rep.window) + " exhausted before s_" +
                               std::to_string(m0) + " was found");
  rep.s = atN.s;
  rep.gamma_tilde = atN.gamma;
  rep.r = atM.s;
  std::size_t gM = 0;
  for (std::size_t g = 0; g < G.order; ++g)
    if (G.names[g] == atM.gamma) gM = g;
  rep.C = vals[*rep.r][gM];
  if (rep.C == kInf) throw std::domain_error("sigma^r equals an element of Gamma; map is not confined");
  rep.t = ipow(rep.p, static_cast<std::uint64_t>(rep.C + 1)) * mpz_class(static_cast<unsigned long>(*rep.r));
}

}  // namespace

bool FiltrationReport::lemma_ok() const {
  for (const auto& l : levels)
    if (!l.multiples_ok || !l.cosets_ok) return false;
  return true;
}

nlohmann::json FiltrationReport::to_json() const {
  nlohmann::json j;
  j["flavor"] = flavor;
  j["p"] = p;
  j["N"] = N;
  j["M"] = M;
  j["window"] = window;
  j["coseparable"] = coseparable;
  nlohmann::json lv = nlohmann::json::array();
  for (const auto& l : levels) {
    nlohmann::json e;
    e["m"] = l.m;
    if (l.s)
      e["s"] = *l.s;
    else
      e["s"] = nullptr;
    e["gamma"] = l.s ? nlohmann::json(l.gamma) : nlohmann::json(nullptr);
    e["Gamma_m"] = l.subgroup;
    lv.push_back(e);
  }
  j["levels"] = lv;
  j["s"] = s ? nlohmann::json(*s) : nlohmann::json(nullptr);
  j["gamma_tilde"] = s ? nlohmann::json(gamma_tilde) : nlohmann::json(nullptr);
  j["r"] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
  j["C"] = coseparable ? nlohmann::json(nullptr) : nlohmann::json(C);
  j["t"] = t.get_str();
  return j;
}

FiltrationReport sm_filtration(long long m, const std::vector<long long>& Gamma, std::uint32_t p, unsigned depth,
                               int c, std::uint64_t window) {
  if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("p must be an odd prime");
  if (c < 1) throw std::invalid_argument("valuation scale must be positive");
  if (m == 0 || m == 1 || m == -1) throw std::invalid_argument("sigma must not be 0 or a unit");
  GroupData G;
  G.names.push_back("1");
  G.v_minus_one.push_back(kInf);
  bool has_minus = false;
  for (long long g : Gamma) {
    if (g == -1)
      has_minus = true;
    else if (g != 1)
      throw std::invalid_argument("Gamma must be a subgroup of {1, -1}");
  }
  if (has_minus) {
    G.names.push_back("-1");
    G.v_minus_one.push_back(c * v_p(mpz_class(-2), p));
    G.order = 2;
    G.mul = {{0, 1}, {1, 0}};
  } else {
    G.order = 1;
    G.mul = {{0}};
  }

  FiltrationReport rep;
  rep.flavor = "integer";
  rep.p = p;
  long maxv = 0;
  for (std::size_t g = 1; g < G.order; ++g) maxv = std::max(maxv, G.v_minus_one[g] + 1);
  rep.N = static_cast<unsigned>(std::max(1L, maxv));
  rep.M = std::max(rep.N, static_cast<unsigned>(c / static_cast<int>(p - 1) + 1));
  rep.coseparable = (m % static_cast<long long>(p)) == 0;
  unsigned L = std::max(depth, rep.M);
  rep.window = window ? window : 10ULL * p * L;

  std::vector<std::vector<long>> vals(rep.window + 1, std::vector<long>(G.order, 0));
  mpz_class mm(static_cast<long>(m)), pw = 1;
  for (std::uint64_t n = 1; n <= rep.window; ++n) {
    pw *= mm;
    for (std::size_t g = 0; g < G.order; ++g) {
      mpz_class diff = pw - (g == 0 ? 1 : -1);
      vals[n][g] = diff == 0 ? kInf : c * v_p(diff, p);
    }
  }
  fill_levels(rep, G, vals, L);
  finish(rep, G, vals);
  return rep;
}

FiltrationReport sm_filtration_skew(const SkewPoly& sigma, unsigned d, unsigned depth, std::uint64_t window) {
  const FieldPtr& Fp = sigma.field();
  const Field& F = *Fp;
  if (sigma.degree() < 1) throw std::invalid_argument("sigma must have positive phi-degree");
  if (d < 1 || (F.size() - 1) % d != 0) throw std::invalid_argument("mu_d is not contained in the field");
  GroupData G;
  G.order = d;
  Elem zeta = F.pow(F.generator(), (F.size() - 1) / d);
  std::vector<Elem> el(d);
  el[0] = 1;
  for (unsigned k = 1; k < d; ++k) el[k] = F.mul(el[k - 1], zeta);
  G.mul.assign(d, std::vector<std::size_t>(d));
  for (unsigned a = 0; a < d; ++a)
    for (unsigned b = 0; b < d; ++b) G.mul[a][b] = (a + b) % d;
  for (unsigned k = 0; k < d; ++k) {
    G.names.push_back(F.to_string(el[k]));
    G.v_minus_one.push_back(k == 0 ? kInf : 0);  // a nonzero constant has v_phi = 0
  }

  FiltrationReport rep;
  rep.flavor = "skew";
  rep.p = F.p();
  rep.N = 1;
  rep.M = std::max(rep.N, 1u);
  rep.coseparable = sigma.coef(0) == 0;
  unsigned L = std::max(depth, rep.M);
  rep.window = window ? window : 10ULL * F.p() * L;

  std::vector<std::vector<long>> vals(rep.window + 1, std::vector<long>(d, 0));
  SkewPoly pw = SkewPoly::constant(Fp, 1);
  for (std::uint64_t n = 1; n <= rep.window; ++n) {
    pw = pw * sigma;
    for (unsigned k = 0; k < d; ++k) {
      SkewPoly diff = pw - SkewPoly::constant(Fp, el[k]);
      vals[n][k] = diff.is_zero() ? kInf : diff.valuation();
    }
  }
  fill_levels(rep, G, vals, L);
  finish(rep, G, vals);
  return rep;
}

// ---- H4 --------------------------------------------------------------------

std::string verdict_name(H4Verdict v) {
  switch (v) {
    case H4Verdict::Holds: return "holds";
    case H4Verdict::FailsUnitRoot: return "fails: unit-modulus root";
    case H4Verdict::FailsCoseparable: return "fails: coseparable";
  }
  return "?";
}

long unit_circle_roots(const std::vector<mpz_class>& coeffs) {
  std::vector<mpq_class> q;
  for (const auto& a : coeffs) q.emplace_back(a);
  QPoly g(q);
  if (g.degree() < 1) return 0;
  // drop roots at zero
  std::size_t k0 = 0;
  while (g.coeffs()[k0] == 0) ++k0;
  g = QPoly(std::vector<mpq_class>(g.coeffs().begin() + static_cast<long>(k0), g.coeffs().end()));
  QPoly r = gcd(g, reversed(g));
  long count = 0;
  for (int eps : {1, -1}) {
    QPoly lin = QPoly::from_ints({-eps, 1});
    if (r.degree() >= 1 && r(mpq_class(eps)) == 0) {
      ++count;
      while (r.degree() >= 1 && r(mpq_class(eps)) == 0) r = divmod(r, lin).first;
    }
  }
  if (r.degree() < 1) return count;
  r = monic(r);
  if (r.degree() % 2 != 0 || reversed(r) != r) throw std::logic_error("reciprocal part is not palindromic");
  // r(x) = x^k H(x + 1/x) with x^j + x^-j = V_j(y)
  long k = r.degree() / 2;
  QPoly V0 = QPoly::from_ints({2}), V1 = QPoly::from_ints({0, 1}), y = V1;
  QPoly H = QPoly::constant(r.coef(static_cast<std::size_t>(k)));
  for (long j = 1; j <= k; ++j) {
    H = H + V1.scaled(r.coef(static_cast<std::size_t>(k + j)));
    QPoly V2 = y * V1 - V0;
    V0 = V1;
    V1 = V2;
  }
  return count + 2 * sturm_count(H, mpq_class(-2), mpq_class(2));
}

H4Report h4_check(const std::vector<mpz_class>& charpoly, bool coseparable) {
  H4Report rep;
  rep.unit_roots = unit_circle_roots(charpoly);
  if (coseparable)
    rep.verdict = H4Verdict::FailsCoseparable;
  else if (rep.unit_roots > 0)
    rep.verdict = H4Verdict::FailsUnitRoot;
  return rep;
}

H4Report h4_check_integers(const std::vector<long long>& eigenvalues, bool coseparable) {
  H4Report rep;
  bool plus = false, minus = false;
  for (long long e : eigenvalues) {
    if (e == 1) plus = true;
    if (e == -1) minus = true;
  }
  rep.unit_roots = plus + minus;
  if (coseparable)
    rep.verdict = H4Verdict::FailsCoseparable;
  else if (rep.unit_roots > 0)
    rep.verdict = H4Verdict::FailsUnitRoot;
  return rep;
}

namespace {
namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_100;
using Cplx = mp::cpp_complex_100;

Cplx horner(const std::vector<Real>& c, const Cplx& z) {
  Cplx acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + Cplx(c[i]);
  return acc;
}
}  // namespace

std::vector<CertifiedRoot> certified_roots(const std::vector<mpz_class>& coeffs0) {
  std::vector<mpz_class> coeffs = coeffs0;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() < 2) return {};
  const std::size_t n = coeffs.size() - 1;
  std::vector<Real> c, dc;
  for (const auto& a : coeffs) c.emplace_back(a.get_str());
  for (std::size_t i = 1; i <= n; ++i) dc.push_back(c[i] * static_cast<unsigned>(i));
  // Cauchy bound for the starting circle
  Real R = 0;
  for (std::size_t i = 0; i < n; ++i) R = std::max(R, Real(abs(c[i] / c[n])));
  R += 1;
  std::vector<Cplx> z(n);
  const Real pi = boost::math::constants::pi<Real>();
  for (std::size_t i = 0; i < n; ++i) {
    Real ang = 2 * pi * Real(i) / Real(n) + Real("0.4");
    z[i] = Cplx(R * cos(ang), R * sin(ang));
  }
  const Real tol("1e-90");
  for (int it = 0; it < 2000; ++it) {
    Real worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Cplx pz = horner(c, z[i]), dz = horner(dc, z[i]);
      if (abs(pz) == 0) continue;
      Cplx w = pz / dz, s(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += Cplx(1) / (z[i] - z[j]);
      Cplx step = w / (Cplx(1) - w * s);
      z[i] -= step;
      worst = std::max(worst, Real(abs(step)));
    }
    if (worst < tol) break;
  }
  std::vector<CertifiedRoot> out(n);
  std::vector<Real> rad(n);
  for (std::size_t i = 0; i < n; ++i) {
    Cplx den(c[n]);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den *= z[i] - z[j];
    rad[i] = Real(n) * abs(horner(c, z[i]) / den);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (abs(z[i] - z[j]) <= rad[i] + rad[j]) throw std::runtime_error("root inclusion disks overlap");
  for (std::size_t i = 0; i < n; ++i) {
    out[i].approx = {static_cast<double>(z[i].real()), static_cast<double>(z[i].imag())};
    out[i].re = z[i].real().str(40);
    out[i].im = z[i].imag().str(40);
    out[i].radius = std::max(static_cast<double>(rad[i]), std::numeric_limits<double>::denorm_min());
  }
  return out;
}

DominantRoots dominant_roots(const std::vector<mpz_class>& coeffs) {
  auto roots = certified_roots(coeffs);
  DominantRoots d;
  if (roots.empty()) return d;
  // recompute moduli at full precision from the decimal strings
  std::vector<Real> mod;
  for (const auto& r : roots) mod.push_back(sqrt(Real(r.re) * Real(r.re) + Real(r.im) * Real(r.im)));
  std::size_t top = 0;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (mod[i] > mod[top]) top = i;
  const Real tie("1e-35");  // the strings carry 40 digits
  const Real sep("1e-20");
  Real gap = -1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Real diff = abs(mod[top] - mod[i]);
    Real slack = Real(roots[i].radius) + Real(roots[top].radius) + tie;
    if (diff <= slack) {
      d.roots.push_back(roots[i]);
    } else if (diff > sep + slack) {
      if (gap < 0 || diff - slack < gap) gap = diff - slack;
    } else {
      throw std::runtime_error("dominant root comparison undecidable at working precision");
    }
  }
  d.count = d.roots.size();
  d.modulus = static_cast<double>(mod[top]);
  d.gap = gap < 0 ? std::numeric_limits<double>::infinity() : static_cast<double>(gap);
  return d;
}

IntMatrix companion_matrix(const std::vector<long long>& c) {
  // c = a_0..a_{n-1}, 1 (monic, ascending)
  if (c.size() < 2 || c.back() != 1) throw std::invalid_argument("companion matrix needs a monic polynomial");
  std::size_t n = c.size() - 1;
  IntMatrix M(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 1; i < n; ++i) M[i][i - 1] = 1;
  for (std::size_t i = 0; i < n; ++i) M[i][n - 1] = -static_cast<long>(c[i]);
  return M;
}

mpz_class bareiss_det(IntMatrix A) {
  const std::size_t n = A.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && A[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(A[k], A[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        A[i][j] = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

mpz_class torus_deg(const IntMatrix& M, unsigned n) {
  const std::size_t r = M.size();
  IntMatrix P(r, std::vector<mpz_class>(r, 0)), B = M;
  for (std::size_t i = 0; i < r; ++i) P[i][i] = 1;
  auto mul = [r](const IntMatrix& X, const IntMatrix& Y) {
    IntMatrix Z(r, std::vector<mpz_class>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < r; ++j) Z[i][j] += X[i][k] * Y[k][j];
    return Z;
  };
  for (unsigned e = n; e; e >>= 1) {
    if (e & 1) P = mul(P, B);
    B = mul(B, B);
  }
  for (std::size_t i = 0; i < r; ++i) P[i][i] -= 1;
  mpz_class d = bareiss_det(P);
  if (d == 0) throw std::domain_error("det(M^n - I) = 0; not confined");
  return abs(d);
}

}  // namespace dynzeta
