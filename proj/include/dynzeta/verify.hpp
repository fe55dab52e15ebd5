#pragma once
// The verification suites shared by the command line tool and the
// acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include "dynzeta/arith.hpp"
#include "dynzeta/dynmap.hpp"
#include "dynzeta/series.hpp"
#include "json.hpp"

namespace dynzeta {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;  // first few only
  std::size_t checks = 0;
  double seconds = 0;
  nlohmann::json data;

  void require(bool ok, const std::string& what);
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  unsigned trials = 1000;
};

// Catalog grids used by the acceptance criteria.
std::vector<MapDescriptor> grid_power_chebyshev();
std::vector<MapDescriptor> grid_lattes();
std::vector<MapDescriptor> grid_additive();
std::vector<MapDescriptor> grid_all();

// Filtration of the descriptor's sigma with its group Gamma, scanned to level M.
FiltrationReport descriptor_filtration(const MapDescriptor& d);
// Root-rationality of the tame zeta function from `terms` formula counts.
RootRationalCertificate tame_certificate(const MapDescriptor& d, const mpz_class& t, std::size_t terms = 1040);

// Degree bound used for brute-force counts of a grid descriptor.
std::uint64_t brute_bound(const MapDescriptor& d);

CheckResult check_key_lemma(const std::vector<MapDescriptor>& ds, const std::string& name);
CheckResult check_key_lemma_power_chebyshev();
CheckResult check_lattes();
CheckResult check_additive();
CheckResult check_closed_forms();
CheckResult check_certificates();
CheckResult check_non_recurrence();
CheckResult check_example_5_8();
CheckResult check_tame_identity();
CheckResult check_euler_product();
CheckResult check_lte(const VerifyOptions& opt);
CheckResult check_filtration();
CheckResult check_salem_h4();
CheckResult check_growth();
CheckResult check_boundary();

// Acceptance criterion 1..12.
CheckResult criterion(int n, const VerifyOptions& opt = {});

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown suite.
CheckResult run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace dynzeta
