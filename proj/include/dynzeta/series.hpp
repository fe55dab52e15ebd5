#pragma once
// Truncated power series over Q, zeta functions built from counts,
// recurrence detection and rationality certificates.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynzeta/qpoly.hpp"
#include "json.hpp"

namespace dynzeta {

class TruncSeries {
 public:
  TruncSeries() = default;
  // zero series with coefficients c_0..c_T
  explicit TruncSeries(std::size_t T) : c_(T + 1) {}
  explicit TruncSeries(std::vector<mpq_class> c);
  static TruncSeries one(std::size_t T);
  static TruncSeries from_poly(const QPoly& P, std::size_t T);

  std::size_t order() const { return c_.size() - 1; }
  mpq_class& operator[](std::size_t i) { return c_[i]; }
  const mpq_class& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator/(const TruncSeries& o) const;
  TruncSeries scaled(const mpq_class& s) const;
  TruncSeries truncated(std::size_t T) const;
  // d/dz, order drops by one
  TruncSeries derivative() const;
  // s(a z^b) to order T
  TruncSeries substitute(const mpq_class& a, std::size_t b, std::size_t T) const;
  TruncSeries inverse() const;
  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
  bool operator!=(const TruncSeries& o) const { return c_ != o.c_; }

  nlohmann::json to_json() const;
  std::string to_string(std::size_t terms = 8) const;

 private:
  std::vector<mpq_class> c_;
};

std::string rational_string(const mpq_class& q);  // always "num/den"

TruncSeries exp_series(const TruncSeries& a);
TruncSeries log_series(const TruncSeries& a);
TruncSeries pow_series(const TruncSeries& a, const mpq_class& e);
// exp(sum_{n>=1} g_n z^n / n); g[0] is g_1
TruncSeries exp_of_logderiv(const std::vector<mpq_class>& g, std::size_t T);
// coefficients of z s'/s for n = 1..T
std::vector<mpq_class> log_derivative_coeffs(const TruncSeries& s);

// counts[0] = f_1
TruncSeries zeta_from_counts(const std::vector<mpz_class>& counts, std::size_t T);
TruncSeries tame_from_counts(const std::vector<mpz_class>& counts, std::uint32_t p, std::size_t T);
// prod_l (1 - z^l)^(-P_l)
TruncSeries euler_product(const std::map<std::uint64_t, std::uint64_t>& cycles, std::size_t T);

TruncSeries zeta_union(const TruncSeries& zS1, const TruncSeries& zS2, const TruncSeries& zS12);

struct IdentityReport {
  bool holds = true;
  long first_failure = -1;  // lowest mismatching z-power
  std::string which;
};

// zeta*_f(z) zeta_{f^p}(z^p)^(1/p) = zeta_f(z), and the product over iterates
// f^(p^i).  iterates[i][n-1] = (f^(p^i))_n; iterates[0] must equal counts.
IdentityReport tame_identity_check(const std::vector<mpz_class>& counts,
                                   const std::vector<std::vector<mpz_class>>& iterates, std::uint32_t p,
                                   std::size_t T);
// Iterate counts read off the same sequence: (f^(p^i))_n = f_(p^i n).
IdentityReport tame_identity_check(const std::vector<mpz_class>& counts, std::uint32_t p, std::size_t T);

struct RecurrenceReport {
  bool found = false;
  std::size_t order = 0;
  std::vector<mpq_class> connection;  // C_0 = 1, sum_i C_i a_(n-i) = 0
  QPoly charpoly;                     // x^L C(1/x)
  std::size_t window = 0;
  std::size_t max_order = 0;
  std::string method;  // "exact" or "modular"
  std::string describe() const;
};

// Smallest recurrence of order <= maxOrder that reproduces seq[0..window).
RecurrenceReport recurrence_detect(const std::vector<mpq_class>& seq, std::size_t maxOrder, std::size_t window);
RecurrenceReport recurrence_detect(const std::vector<mpz_class>& seq, std::size_t maxOrder, std::size_t window);

// Connection polynomial of the whole sequence; both paths are exposed so they
// can be compared.  nullopt when the linear complexity exceeds limit.
std::optional<std::vector<mpq_class>> bm_exact(const std::vector<mpq_class>& seq, std::size_t limit);
std::optional<std::vector<mpq_class>> bm_modular(const std::vector<mpq_class>& seq, std::size_t limit);

struct PadeResult {
  QPoly num, den;  // den(0) = 1
  std::size_t horizon = 0;
};
std::optional<PadeResult> pade_certify(const TruncSeries& s, std::size_t dmax);

struct ResidueFactor {
  mpq_class c;  // residue of s'/s along the roots of G
  QPoly G;      // G(0) = 1
};

struct RootRationalCertificate {
  bool certified = false;
  std::string reason;
  mpz_class t;
  // log-derivative prong
  bool logderiv_rational = false;
  RecurrenceReport logderiv;
  QPoly R_num, R_den;  // s'/s = R_num / R_den, R_den(0) = 1
  // power prong: s^t = prod G_c^(t c)
  bool power_rational = false;
  std::vector<ResidueFactor> factors;
  long power_num_deg = 0, power_den_deg = 0;
  bool literal_pade_run = false;
  bool literal_pade_ok = false;
  nlohmann::json to_json() const;
};

struct CertificateOptions {
  std::size_t start_order = 12;
  std::size_t max_order = 1024;
  std::size_t literal_budget = 120;  // literal Pade on s^t when deg(s^t) is at most this
};

// s(0) = 1.  Throws std::logic_error when the prongs contradict each other.
RootRationalCertificate root_rational_certificate(const TruncSeries& s, const mpz_class& t,
                                                  const CertificateOptions& opt = {});
// Same, from g_1, g_2, ... with z s'/s = sum g_n z^n.
RootRationalCertificate root_rational_certificate_logderiv(const std::vector<mpq_class>& g, const mpz_class& t,
                                                           const CertificateOptions& opt = {});

// R_den (F1' F2(z^p) - z^(p-1) F1 F2'(z^p)) = R_num F1 F2(z^p) to order T-1.
IdentityReport pair_ode_check(const TruncSeries& F1, const TruncSeries& F2, const QPoly& R_num, const QPoly& R_den,
                              std::uint32_t p, std::size_t T);

}  // namespace dynzeta
