#include "dynzeta/dynmap.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dynzeta {

// ---- RationalMap -----------------------------------------------------------

RationalMap::RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (!num_.field() || !den_.field()) throw std::invalid_argument("polynomial without a field");
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Elem s = den_.F().inv(den_.lead());
  num_ = num_.scaled(s);
  den_ = den_.scaled(s);
  if (degree() < 1) throw std::invalid_argument("constant map");
}

RationalMap RationalMap::polynomial(Poly P) {
  Poly one = Poly::constant(P.field(), 1);
  return RationalMap(std::move(P), std::move(one));
}

std::uint64_t RationalMap::degree() const {
  return static_cast<std::uint64_t>(std::max(num_.degree(), den_.degree()));
}

bool RationalMap::is_identity() const { return den_.is_one() && num_ == Poly::x(num_.field()); }

P1Point RationalMap::at_infinity() const {
  long a = num_.degree(), b = den_.degree();
  if (a > b) return {true, 0};
  if (a < b) return {false, 0};
  return {false, num_.F().div(num_.lead(), den_.lead())};
}

P1Point RationalMap::operator()(const P1Point& pt) const {
  if (pt.inf) return at_infinity();
  Elem d = den_(pt.x);
  if (d == 0) return {true, 0};
  return {false, num_.F().div(num_(pt.x), d)};
}

std::string RationalMap::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---- descriptors -----------------------------------------------------------

std::string kind_name(MapKind k) {
  switch (k) {
    case MapKind::Power: return "power";
    case MapKind::Chebyshev: return "chebyshev";
    case MapKind::Lattes: return "lattes";
    case MapKind::Additive: return "additive";
    case MapKind::Subadditive: return "subadditive";
  }
  return "?";
}

MapDescriptor MapDescriptor::power(unsigned m, std::uint32_t p) {
  MapDescriptor d;
  d.kind = MapKind::Power;
  d.m = m;
  d.p = p;
  d.validate();
  return d;
}

MapDescriptor MapDescriptor::chebyshev(unsigned m, std::uint32_t p) {
  MapDescriptor d = power(m, p);
  d.kind = MapKind::Chebyshev;
  return d;
}

MapDescriptor MapDescriptor::lattes(long long a2, long long a4, long long a6, unsigned m, std::uint32_t p) {
  MapDescriptor d;
  d.kind = MapKind::Lattes;
  d.curve = {a2, a4, a6};
  d.m = m;
  d.p = p;
  d.validate();
  return d;
}

MapDescriptor MapDescriptor::additive(std::vector<Elem> coeffs, std::uint32_t p, unsigned N) {
  MapDescriptor d;
  d.kind = MapKind::Additive;
  d.coeffs = std::move(coeffs);
  d.p = p;
  d.N = N;
  d.m = 0;
  d.validate();
  return d;
}

MapDescriptor MapDescriptor::subadditive(std::vector<Elem> coeffs, unsigned dd, std::vector<Elem> poly,
                                         std::uint32_t p, unsigned N) {
  MapDescriptor d;
  d.kind = MapKind::Subadditive;
  d.coeffs = std::move(coeffs);
  d.d = dd;
  d.poly = std::move(poly);
  d.p = p;
  d.N = N;
  d.m = 0;
  d.validate();
  return d;
}

FieldPtr MapDescriptor::field() const { return make_field(p, N); }

void MapDescriptor::validate() const {
  if (p == 2 || !is_prime_u64(p)) throw std::invalid_argument("p must be an odd prime");
  switch (kind) {
    case MapKind::Power:
    case MapKind::Chebyshev:
    case MapKind::Lattes:
      if (m < 2) throw std::invalid_argument("m must be at least 2");
      if (N != 1) throw std::invalid_argument("this map kind is defined over the prime field");
      if (kind == MapKind::Lattes) (void)make_curve();
      break;
    case MapKind::Additive:
    case MapKind::Subadditive: {
      SkewPoly s = sigma();
      if (s.degree() < 1) throw std::invalid_argument("additive map needs a nonzero coefficient beyond phi^0");
      if (kind == MapKind::Subadditive) {
        if (d < 2) throw std::invalid_argument("subadditive map needs d >= 2");
        std::uint64_t q = field()->size();
        if ((q - 1) % d != 0) throw std::invalid_argument("mu_d is not contained in the coefficient field");
        // sigma gamma = gamma^(p^k) sigma for all gamma in mu_d
        long k = s.valuation();
        std::uint64_t pk = 1;
        for (long i = 0; i < k; ++i) pk = pk * p % d;
        std::uint64_t pi = 1;
        for (long i = 0; i <= s.degree(); ++i) {
          if (s.coef(i) != 0 && pi != pk) throw std::invalid_argument("sigma does not normalize mu_d");
          pi = pi * p % d;
        }
      }
      break;
    }
  }
}

Curve MapDescriptor::make_curve() const {
  if (kind != MapKind::Lattes) throw std::logic_error("not a Lattes descriptor");
  return Curve::from_ints(field(), curve[0], curve[1], curve[2]);
}

SkewPoly MapDescriptor::sigma() const {
  if (kind != MapKind::Additive && kind != MapKind::Subadditive) throw std::logic_error("not an additive descriptor");
  FieldPtr F = field();
  for (Elem a : coeffs)
    if (a >= F->size()) throw std::invalid_argument("coefficient outside the field");
  return SkewPoly(F, coeffs);
}

std::uint64_t MapDescriptor::map_degree() const {
  switch (kind) {
    case MapKind::Power:
    case MapKind::Chebyshev: return m;
    case MapKind::Lattes: return static_cast<std::uint64_t>(m) * m;
    case MapKind::Additive:
    case MapKind::Subadditive: {
      std::uint64_t deg = 1;
      for (long i = 0; i < sigma().degree(); ++i) deg *= p;
      return deg;
    }
  }
  return 0;
}

std::string MapDescriptor::label() const {
  std::ostringstream os;
  os << kind_name(kind);
  switch (kind) {
    case MapKind::Power:
    case MapKind::Chebyshev: os << " m=" << m; break;
    case MapKind::Lattes: os << " E=[" << curve[0] << "," << curve[1] << "," << curve[2] << "] m=" << m; break;
    case MapKind::Additive:
    case MapKind::Subadditive: {
      os << " sigma=" << sigma().to_string();
      if (kind == MapKind::Subadditive) os << " d=" << d;
      break;
    }
  }
  os << " p=" << p;
  if (N > 1) os << " N=" << N;
  return os.str();
}

RationalMap build_map(const MapDescriptor& d) {
  d.validate();
  FieldPtr F = d.field();
  switch (d.kind) {
    case MapKind::Power: return RationalMap::polynomial(Poly::monomial(F, 1, d.m));
    case MapKind::Chebyshev: {
      Poly t0 = Poly::constant(F, F->from_int(2)), t1 = Poly::x(F);
      for (unsigned k = 1; k < d.m; ++k) {
        Poly t2 = Poly::x(F) * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
      }
      return RationalMap::polynomial(t1);
    }
    case MapKind::Lattes: return mult_x_map(d.make_curve(), d.m);
    case MapKind::Additive: return RationalMap::polynomial(d.sigma().additive_poly());
    case MapKind::Subadditive: {
      if (d.poly.empty()) throw std::invalid_argument("subadditive maps need an explicit polynomial");
      Poly P(F, d.poly);
      if (static_cast<std::uint64_t>(P.degree()) != d.map_degree())
        throw std::invalid_argument("subadditive polynomial has the wrong degree");
      return RationalMap::polynomial(P);
    }
  }
  throw std::logic_error("unknown map kind");
}

// ---- iteration -------------------------------------------------------------

namespace {

// sum_i a_i C^i D^(d-i), d = deg of the outer map
Poly homogeneous_eval(const Poly& A, long d, const Poly& C, const std::vector<Poly>& Dpow) {
  const FieldPtr& F = C.field();
  Poly r(F);
  for (long i = d; i >= 0; --i) {
    r = r * C;
    Elem a = A.coef(static_cast<std::size_t>(i));
    if (a != 0) r += Dpow[static_cast<std::size_t>(d - i)].scaled(a);
  }
  return r;
}

std::uint64_t checked_power(std::uint64_t base, unsigned n, std::uint64_t bound) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > bound / base) throw std::out_of_range("iterate degree exceeds the degree bound");
    r *= base;
  }
  if (r > bound) throw std::out_of_range("iterate degree exceeds the degree bound");
  return r;
}

}  // namespace

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  long d = static_cast<long>(f.degree());
  if (g.is_polynomial()) {
    // Horner, no denominators
    Poly one = Poly::constant(g.field(), 1);
    std::vector<Poly> ones(static_cast<std::size_t>(d) + 1, one);
    Poly num = homogeneous_eval(f.num(), f.num().degree(), g.num(), ones);
    Poly den = homogeneous_eval(f.den(), f.den().degree(), g.num(), ones);
    return RationalMap(std::move(num), std::move(den));
  }
  std::vector<Poly> Dpow{Poly::constant(g.field(), 1)};
  for (long i = 1; i <= d; ++i) Dpow.push_back(Dpow.back() * g.den());
  Poly num = homogeneous_eval(f.num(), d, g.num(), Dpow);
  Poly den = homogeneous_eval(f.den(), d, g.num(), Dpow);
  return RationalMap(std::move(num), std::move(den));
}

RationalMap iterate(const RationalMap& f, unsigned n, std::uint64_t bound) {
  if (n < 1) throw std::invalid_argument("iterate index must be positive");
  checked_power(f.degree(), n, bound);
  RationalMap g = f;
  for (unsigned i = 1; i < n; ++i) g = compose(f, g);
  return g;
}

std::uint64_t fixed_point_count(const RationalMap& g) {
  if (g.is_identity()) throw std::domain_error("iterate is the identity; infinitely many fixed points");
  Poly E = g.num() - g.den() * Poly::x(g.field());
  if (E.is_zero()) throw std::domain_error("iterate is the identity; infinitely many fixed points");
  std::uint64_t c = distinct_root_count(E);
  if (g.num().degree() > g.den().degree()) ++c;
  return c;
}

std::uint64_t brute_fixed_points(const RationalMap& f, unsigned n, std::uint64_t bound) {
  return fixed_point_count(iterate(f, n, bound));
}

std::vector<std::uint64_t> brute_fixed_point_sequence(const RationalMap& f, unsigned nmax, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (nmax == 0 || f.degree() > bound) return out;
  RationalMap g = f;
  std::uint64_t deg = f.degree();
  for (unsigned n = 1; n <= nmax; ++n) {
    if (n > 1) {
      if (deg > bound / f.degree()) break;
      deg *= f.degree();
      g = compose(f, g);
    }
    out.push_back(fixed_point_count(g));
  }
  return out;
}

RationalMap extend_scalars(const RationalMap& f, const FieldPtr& ext) {
  const FieldPtr& sub = f.field();
  if (sub->p() == ext->p() && sub->modulus() == ext->modulus()) return f;
  if (ext->degree() % sub->degree() != 0) throw std::invalid_argument("map is not defined over a subfield");
  Embedding emb(sub, ext);
  auto lift = [&](const Poly& P) {
    std::vector<Elem> c;
    c.reserve(P.coeffs().size());
    for (Elem a : P.coeffs()) c.push_back(emb(a));
    return Poly(ext, std::move(c));
  };
  return RationalMap(lift(f.num()), lift(f.den()));
}

// ---- digraphs --------------------------------------------------------------

Digraph restrict_digraph(const RationalMap& f0, const FieldPtr& ext, std::uint64_t bound) {
  if (ext->size() > bound) throw std::out_of_range("field exceeds the enumeration bound");
  RationalMap f = extend_scalars(f0, ext);
  const std::uint32_t q = ext->size();
  Digraph g{ext, std::vector<std::uint32_t>(static_cast<std::size_t>(q) + 1)};
  for (Elem x = 0; x < q; ++x) {
    P1Point y = f(P1Point{false, x});
    g.succ[x] = y.inf ? q : y.x;
  }
  P1Point yi = f.at_infinity();
  g.succ[q] = yi.inf ? q : yi.x;
  return g;
}

CycleCensus cycle_census(const Digraph& g) {
  const std::size_t V = g.size();
  CycleCensus c;
  c.vertices = V;
  // 0 unvisited, 1 on the current walk, 2 done
  std::vector<std::uint8_t> state(V, 0);
  std::vector<std::uint8_t> periodic(V, 0);
  std::vector<std::uint32_t> walk;
  for (std::size_t s = 0; s < V; ++s) {
    if (state[s]) continue;
    walk.clear();
    std::uint32_t v = static_cast<std::uint32_t>(s);
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = g.succ[v];
    }
    if (state[v] == 1) {
      std::uint64_t len = 0;
      std::uint32_t w = v;
      do {
        periodic[w] = 1;
        ++len;
        w = g.succ[w];
      } while (w != v);
      c.cycles[len] += 1;
      c.periodic += len;
    }
    for (std::uint32_t w : walk) state[w] = 2;
  }
  // entry point into the cycle for every vertex
  std::vector<std::uint32_t> entry(V, UINT32_MAX);
  for (std::size_t v = 0; v < V; ++v)
    if (periodic[v]) entry[v] = static_cast<std::uint32_t>(v);
  for (std::size_t s = 0; s < V; ++s) {
    if (entry[s] != UINT32_MAX) continue;
    walk.clear();
    std::uint32_t v = static_cast<std::uint32_t>(s);
    while (entry[v] == UINT32_MAX) {
      walk.push_back(v);
      v = g.succ[v];
    }
    for (std::uint32_t w : walk) entry[w] = entry[v];
  }
  for (std::size_t v = 0; v < V; ++v) c.tree_sizes[entry[v]] += 1;
  c.density = V ? static_cast<double>(c.periodic) / static_cast<double>(V) : 0.0;
  return c;
}

std::uint64_t restricted_fixed_points(const Digraph& g, unsigned n) {
  std::uint64_t c = 0;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    std::uint32_t w = v;
    for (unsigned i = 0; i < n; ++i) w = g.succ[w];
    if (w == v) ++c;
  }
  return c;
}

std::string dot_export(const Digraph& g) {
  auto name = [&](std::uint32_t v) { return v == g.infinity() ? std::string("inf") : std::to_string(v); };
  std::string out = "digraph f {\n";
  for (std::uint32_t v = 0; v < g.size(); ++v) out += "  " + name(v) + " -> " + name(g.succ[v]) + ";\n";
  out += "}\n";
  return out;
}

std::string census_csv(const CycleCensus& c) {
  std::string out = "length,count\n";
  for (auto [len, cnt] : c.cycles) out += std::to_string(len) + "," + std::to_string(cnt) + "\n";
  return out;
}

}  // namespace dynzeta
