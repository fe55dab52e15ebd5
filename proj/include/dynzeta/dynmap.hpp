#pragma once
// Catalog of dynamically affine maps on P^1, iteration, brute-force fixed
// point counts and functional digraphs.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynzeta/curve.hpp"
#include "dynzeta/ff.hpp"
#include "dynzeta/ratmap.hpp"
#include "dynzeta/skewdeg.hpp"

namespace dynzeta {

enum class MapKind { Power, Chebyshev, Lattes, Additive, Subadditive };

std::string kind_name(MapKind k);

// Translation part is always 0.
struct MapDescriptor {
  MapKind kind = MapKind::Power;
  std::uint32_t p = 3;
  unsigned N = 1;  // coefficients live in F_{p^N}
  unsigned m = 2;  // Power, Chebyshev, Lattes
  std::array<long long, 3> curve{0, 0, 0};  // a2, a4, a6 for Lattes
  std::vector<Elem> coeffs;  // sigma = sum a_i phi^i for Additive/Subadditive
  unsigned d = 1;            // Subadditive: Gamma = mu_d
  std::vector<Elem> poly;    // Subadditive: caller-supplied f_c, ascending

  static MapDescriptor power(unsigned m, std::uint32_t p);
  static MapDescriptor chebyshev(unsigned m, std::uint32_t p);
  static MapDescriptor lattes(long long a2, long long a4, long long a6, unsigned m, std::uint32_t p);
  static MapDescriptor additive(std::vector<Elem> coeffs, std::uint32_t p, unsigned N = 1);
  static MapDescriptor subadditive(std::vector<Elem> coeffs, unsigned d, std::vector<Elem> poly, std::uint32_t p,
                                   unsigned N = 1);

  // Throws std::invalid_argument when the invariants fail.
  void validate() const;
  FieldPtr field() const;
  Curve make_curve() const;  // Lattes only
  SkewPoly sigma() const;    // Additive/Subadditive only
  std::uint64_t map_degree() const;
  std::string label() const;
};

RationalMap build_map(const MapDescriptor& d);

// f o g
RationalMap compose(const RationalMap& f, const RationalMap& g);
RationalMap iterate(const RationalMap& f, unsigned n, std::uint64_t bound = degree_bound());

// Distinct fixed points of a map in P^1 over the algebraic closure.
std::uint64_t fixed_point_count(const RationalMap& g);
std::uint64_t brute_fixed_points(const RationalMap& f, unsigned n, std::uint64_t bound = degree_bound());
// Counts for n = 1..nmax, reusing iterates; stops early at the degree bound.
std::vector<std::uint64_t> brute_fixed_point_sequence(const RationalMap& f, unsigned nmax,
                                                      std::uint64_t bound = degree_bound());

// Same map with coefficients pushed into a larger field.
RationalMap extend_scalars(const RationalMap& f, const FieldPtr& ext);

struct Digraph {
  FieldPtr field;
  std::vector<std::uint32_t> succ;  // vertex q stands for infinity
  std::size_t size() const { return succ.size(); }
  std::uint32_t infinity() const { return static_cast<std::uint32_t>(succ.size() - 1); }
};

Digraph restrict_digraph(const RationalMap& f, const FieldPtr& ext, std::uint64_t bound = enumeration_bound());

struct CycleCensus {
  std::map<std::uint64_t, std::uint64_t> cycles;  // length -> number of cycles P_l
  std::uint64_t periodic = 0;
  std::uint64_t vertices = 0;
  double density = 0;
  // For every periodic vertex: itself plus the tree hanging off it.
  std::map<std::uint32_t, std::uint64_t> tree_sizes;
};

CycleCensus cycle_census(const Digraph& g);
// Number of vertices with f^n(x) = x, by walking the successor array.
std::uint64_t restricted_fixed_points(const Digraph& g, unsigned n);
std::string dot_export(const Digraph& g);
std::string census_csv(const CycleCensus& c);

}  // namespace dynzeta
