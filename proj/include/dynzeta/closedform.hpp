#pragma once
// Tame zeta functions written as products of point atoms zeta*_pt(a z^b)^beta.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "dynzeta/dynmap.hpp"
#include "dynzeta/series.hpp"
#include "dynzeta/skewdeg.hpp"
#include "json.hpp"

namespace dynzeta {

struct Atom {
  mpz_class a;     // scale, > 0
  unsigned b = 1;  // power of z
  mpq_class beta;  // exponent
};

struct AtomProduct {
  std::uint32_t p = 3;
  std::vector<Atom> factors;
  // parameters behind the product, for reporting
  unsigned s = 0;  // 0 when coseparable
  mpq_class beta;
  nlohmann::json to_json() const;
  std::string to_string() const;
};

// (1 - (a z^b)^p)^(1/p) / (1 - a z^b) to order T.
TruncSeries zeta_pt_atom(const mpz_class& a, unsigned b, std::uint32_t p, std::size_t T);

AtomProduct power_map_closed_form(unsigned m, std::uint32_t p);
AtomProduct chebyshev_closed_form(unsigned m, std::uint32_t p);
// c is the inseparable exponent of the curve: 1 ordinary, 2 supersingular.
AtomProduct lattes_closed_form(unsigned m, std::uint32_t p, int c);
// sigma = sum a_i phi^i with a_0 algebraic over F_p.
AtomProduct additive_closed_form(const SkewPoly& sigma);
// Dispatch on the descriptor; subadditive maps have no closed form here.
AtomProduct closed_form(const MapDescriptor& d);

TruncSeries expand(const AtomProduct& ap, std::size_t T);

}  // namespace dynzeta
