#include "dynzeta/boundary.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dynzeta/arith.hpp"
#include "dynzeta/ff.hpp"

namespace dynzeta {

BoundaryFunc BoundaryFunc::G(std::uint32_t p, unsigned h, unsigned depth) {
  BoundaryFunc f;
  f.kind = Kind::G;
  f.p = p;
  f.h = h;
  f.depth = depth;
  f.validate();
  return f;
}

BoundaryFunc BoundaryFunc::H(std::uint32_t p, const mpq_class& beta, unsigned depth) {
  BoundaryFunc f;
  f.kind = Kind::H;
  f.p = p;
  f.beta = beta;
  f.depth = depth;
  f.validate();
  return f;
}

void BoundaryFunc::validate() const {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  if (kind == Kind::G && h == 0) throw std::invalid_argument("h must be positive");
  if (kind == Kind::H && (beta <= 0 || beta >= 1)) throw std::invalid_argument("beta must lie in (0, 1)");
}

std::string BoundaryFunc::label() const {
  std::ostringstream os;
  if (kind == Kind::G)
    os << "G_" << h;
  else
    os << "H_" << beta.get_str();
  os << " (p=" << p << ")";
  return os.str();
}

namespace {

// |n|_p^-1
std::uint64_t p_part(std::uint64_t n, std::uint32_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

// coefficient of z^n for G_h, or of H_gamma
double coef_d(const BoundaryFunc& f, double gamma, std::uint64_t n) {
  double pp = static_cast<double>(p_part(n, f.p));
  if (f.kind == BoundaryFunc::Kind::G) return std::pow(pp, -static_cast<double>(f.h));
  return std::pow(gamma, pp);
}

cplx tail(const BoundaryFunc& f, double gamma, cplx w) {
  double r = std::abs(w);
  if (r >= 1) throw std::domain_error("argument outside the unit disk");
  if (r == 0) return 0;
  // terms needed for r^(N+1)/(1-r) < 1e-12
  double need = std::log(1e-12 * (1 - r)) / std::log(r);
  if (!(need < 5e6)) throw std::domain_error("|z| too close to 1 for the tail bound at this depth");
  std::size_t N = static_cast<std::size_t>(need) + 1;
  cplx acc = 0, wn = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    wn *= w;
    acc += coef_d(f, gamma, n) * wn;
  }
  return acc;
}

}  // namespace

cplx eval(const BoundaryFunc& f, cplx z) {
  f.validate();
  if (std::abs(z) > 0.9999 + 1e-15) throw std::domain_error("|z| must be at most 0.9999");
  const double p = f.p;
  double scale = 1;                 // G: p^(-h i)
  double gamma = f.beta.get_d();    // H: beta^(p^i)
  const double ph = std::pow(p, -static_cast<double>(f.h));
  cplx w = z, acc = 0;
  for (unsigned i = 0; i < f.depth; ++i) {
    cplx wp = std::pow(w, static_cast<int>(f.p));
    cplx main = w / (1.0 - w) - wp / (1.0 - wp);
    if (f.kind == BoundaryFunc::Kind::G) {
      acc += scale * main;
      scale *= ph;
    } else {
      acc += gamma * main;
      gamma = std::pow(gamma, p);
    }
    w = wp;
  }
  return acc + (f.kind == BoundaryFunc::Kind::G ? scale * tail(f, gamma, w) : tail(f, gamma, w));
}

cplx eval_direct(const BoundaryFunc& f, cplx z, std::size_t terms) {
  f.validate();
  double gamma = f.beta.get_d();
  cplx acc = 0, zn = 1;
  for (std::size_t n = 1; n <= terms; ++n) {
    zn *= z;
    acc += coef_d(f, gamma, n) * zn;
  }
  return acc;
}

mpq_class coefficient(const BoundaryFunc& f, std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t pp = p_part(n, f.p);
  mpq_class out;
  if (f.kind == BoundaryFunc::Kind::G) {
    out = mpq_class(1, ipow(pp, f.h));
  } else {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), f.beta.get_num_mpz_t(), pp);
    mpz_pow_ui(den.get_mpz_t(), f.beta.get_den_mpz_t(), pp);
    out = mpq_class(num, den);
  }
  out.canonicalize();
  return out;
}

std::vector<double> numeric_coefficients(const BoundaryFunc& f, std::size_t nmax, double radius) {
  const std::size_t K = 256;
  if (nmax >= K / 2) throw std::invalid_argument("too many coefficients for the sampling grid");
  std::vector<cplx> vals(K);
  for (std::size_t j = 0; j < K; ++j)
    vals[j] = eval(f, std::polar(radius, 2 * std::numbers::pi * static_cast<double>(j) / K));
  std::vector<double> out;
  for (std::size_t n = 1; n <= nmax; ++n) {
    cplx acc = 0;
    for (std::size_t j = 0; j < K; ++j)
      acc += vals[j] * std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(j * n % K) / K);
    out.push_back(acc.real() / (K * std::pow(radius, static_cast<double>(n))));
  }
  return out;
}

std::vector<cplx> radial_scan(const BoundaryFunc& f, unsigned k, const std::vector<double>& lambdas) {
  for (std::size_t i = 1; i < lambdas.size(); ++i)
    if (!(lambdas[i] > lambdas[i - 1])) throw std::invalid_argument("lambdas must ascend");
  double order = std::pow(static_cast<double>(f.p), k);
  cplx omega = std::polar(1.0, 2 * std::numbers::pi / order);
  std::vector<cplx> out;
  for (double l : lambdas) {
    if (!(l > 0 && l < 1)) throw std::invalid_argument("lambda must lie in (0, 1)");
    out.push_back(eval(f, l * omega));
  }
  return out;
}

bool strictly_decreasing_real(const std::vector<cplx>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i].real() < v[i - 1].real())) return false;
  return true;
}

std::string scan_csv(const std::vector<double>& lambdas, const std::vector<cplx>& values) {
  std::ostringstream os;
  os << "lambda,re,im\n" << std::setprecision(12);
  for (std::size_t i = 0; i < lambdas.size() && i < values.size(); ++i)
    os << lambdas[i] << "," << values[i].real() << "," << values[i].imag() << "\n";
  return os.str();
}

}  // namespace dynzeta
