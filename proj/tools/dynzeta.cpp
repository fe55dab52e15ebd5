// dynzeta: counting, tame zeta functions, verification suites, digraphs and
// boundary scans from the command line.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynzeta/arith.hpp"
#include "dynzeta/boundary.hpp"
#include "dynzeta/closedform.hpp"
#include "dynzeta/count.hpp"
#include "dynzeta/dynmap.hpp"
#include "dynzeta/series.hpp"
#include "dynzeta/verify.hpp"

using namespace dynzeta;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MapArgs {
  std::string map = "power";
  unsigned m = 2;
  std::uint32_t p = 0;
  unsigned N = 1;
  std::string curve = "-3,2,0";
  std::string coeffs;

  void add_to(CLI::App* app) {
    app->add_option("--map", map, "power | chebyshev | lattes | additive")
        ->check(CLI::IsMember({"power", "chebyshev", "lattes", "additive"}));
    app->add_option("--m", m, "degree parameter for power, chebyshev and lattes maps");
    app->add_option("--p", p, "characteristic")->required();
    app->add_option("--N", N, "coefficient field F_{p^N} for additive maps");
    app->add_option("--curve", curve, "a2,a4,a6 of y^2 = x^3 + a2 x^2 + a4 x + a6");
    app->add_option("--coeffs", coeffs, "additive map coefficients, indexed by the power of Frobenius");
  }
};

std::vector<long long> int_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + s + "'");
    }
  }
  return out;
}

std::vector<double> double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("not a number list: '" + s + "'");
    }
  }
  return out;
}

std::pair<unsigned, unsigned> range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      unsigned v = static_cast<unsigned>(std::stoul(s));
      return {v, v};
    }
    unsigned a = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
    unsigned b = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
    if (a < 1 || b < a) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + s + "', expected a..b");
  }
}

MapDescriptor descriptor(const MapArgs& a) {
  MapDescriptor d;
  if (a.map == "power") {
    d = MapDescriptor::power(a.m, a.p);
  } else if (a.map == "chebyshev") {
    d = MapDescriptor::chebyshev(a.m, a.p);
  } else if (a.map == "lattes") {
    auto c = int_list(a.curve);
    if (c.size() != 3) throw UsageError("--curve needs three coefficients a2,a4,a6");
    d = MapDescriptor::lattes(c[0], c[1], c[2], a.m, a.p);
  } else {
    if (a.coeffs.empty()) throw UsageError("--coeffs is required for additive maps");
    std::vector<Elem> c;
    for (long long v : int_list(a.coeffs)) {
      if (v < 0) throw UsageError("additive coefficients are field elements in canonical form, not negative");
      c.push_back(static_cast<Elem>(v));
    }
    d = MapDescriptor::additive(c, a.p, a.N);
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return d;
}

nlohmann::json certificate_json(const MapDescriptor& d, RootRationalCertificate* out = nullptr) {
  FiltrationReport rep = descriptor_filtration(d);
  RootRationalCertificate cert = tame_certificate(d, rep.t);
  nlohmann::json j;
  j["filtration"] = rep.to_json();
  j["certificate"] = cert.to_json();
  if (out) *out = cert;
  return j;
}

int cmd_count(const MapArgs& a, const std::string& nrange, const std::string& method, const std::string& format) {
  MapDescriptor d = descriptor(a);
  auto [n0, n1] = range(nrange);
  bool want_formula = method != "brute", want_brute = method != "formula";
  std::vector<mpz_class> formula;
  if (want_formula) formula = formula_counts(d, n1);
  std::vector<std::uint64_t> brute;
  if (want_brute) {
    std::uint64_t bound = degree_bound();
    brute = brute_fixed_point_sequence(build_map(d), n1, bound);
  }
  bool ok = true;
  if (format == "csv") std::cout << "n,formula,brute,match\n";
  for (unsigned n = n0; n <= n1; ++n) {
    bool have_b = want_brute && n <= brute.size();
    bool match = !(want_formula && have_b) || formula[n - 1] == brute[n - 1];
    ok = ok && match;
    if (format == "csv") {
      std::cout << n << "," << (want_formula ? formula[n - 1].get_str() : "") << ","
                << (have_b ? std::to_string(brute[n - 1]) : "") << "," << (match ? "true" : "false") << "\n";
    } else {
      nlohmann::json row;
      row["map"] = d.label();
      row["p"] = d.p;
      row["n"] = n;
      row["formula"] = want_formula ? nlohmann::json(formula[n - 1].get_str()) : nlohmann::json(nullptr);
      row["brute"] = have_b ? nlohmann::json(brute[n - 1]) : nlohmann::json(nullptr);
      if (want_formula) row["kernel"] = fixed_point_formula(d, n).to_json();
      row["match"] = match;
      std::cout << row.dump() << "\n";
    }
  }
  if (want_brute && brute.size() < n1)
    std::cerr << "note: brute force stopped at n=" << brute.size() << " (degree bound " << degree_bound() << ")\n";
  return ok ? 0 : 1;
}

int cmd_tame(const MapArgs& a, std::size_t T) {
  MapDescriptor d = descriptor(a);
  auto counts = formula_counts(d, static_cast<unsigned>(T));
  TruncSeries tame = tame_from_counts(counts, d.p, T);
  nlohmann::json out;
  out["map"] = d.label();
  out["p"] = d.p;
  out["T"] = T;
  out["coseparable"] = is_coseparable(d);
  out["tame_series"] = tame.to_json();
  bool equal = true;
  AtomProduct ap = closed_form(d);
  TruncSeries cf = expand(ap, T);
  equal = cf == tame;
  out["closed_form"] = ap.to_string();
  out["closed_form_atoms"] = ap.to_json();
  out["closed_form_equal"] = equal;
  RootRationalCertificate cert;
  nlohmann::json cj = certificate_json(d, &cert);
  out["filtration"] = cj["filtration"];
  out["certificate"] = cj["certificate"];
  std::cout << out.dump(2) << "\n";
  return equal && cert.certified ? 0 : 1;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  for (const auto& name : names) {
    CheckResult r;
    try {
      r = run_suite(name, opt);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::cout << name << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.summary << "\n";
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

int cmd_digraph(const std::string& poly, std::uint32_t p, unsigned N, const std::string& dot_file, bool census) {
  auto c = int_list(poly);
  if (c.size() < 2) throw UsageError("--poly needs at least two coefficients");
  FieldPtr base = make_field(p, 1);
  FieldPtr ext = N == 1 ? base : make_field(p, N);
  RationalMap f = RationalMap::polynomial(Poly::from_ints(base, c));
  Digraph g = restrict_digraph(f, ext);
  CycleCensus cen = cycle_census(g);
  if (!dot_file.empty()) {
    std::ofstream os(dot_file);
    if (!os) throw std::runtime_error("cannot write " + dot_file);
    os << dot_export(g);
  }
  if (census) std::cout << census_csv(cen);
  std::cout << "vertices " << cen.vertices << ", periodic " << cen.periodic << ", cyclic density " << cen.density
            << "\n";
  return 0;
}

int cmd_scan(const std::string& func, std::uint32_t p, unsigned h, const std::string& beta, unsigned k,
             const std::string& lambdas) {
  BoundaryFunc f;
  try {
    if (func == "G") {
      f = BoundaryFunc::G(p, h);
    } else {
      mpq_class b(beta);
      b.canonicalize();
      f = BoundaryFunc::H(p, b);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto ls = double_list(lambdas);
  auto v = radial_scan(f, k, ls);
  std::cout << scan_csv(ls, v);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynzeta: dynamical zeta functions of dynamically affine maps"};
  app.require_subcommand(1);

  MapArgs count_args, tame_args;
  std::string nrange = "1..8", method = "formula", format = "json";
  auto* count = app.add_subcommand("count", "fixed point counts from the kernel formula and by brute force");
  count_args.add_to(count);
  count->add_option("--n", nrange, "range a..b");
  count->add_option("--method", method)->check(CLI::IsMember({"formula", "brute", "both"}));
  count->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  std::size_t T = 40;
  auto* tame = app.add_subcommand("tame", "tame zeta function, closed form and root-rationality certificate");
  tame_args.add_to(tame);
  tame->add_option("--T", T, "truncation order");

  std::string suite;
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run a named verification suite (or 'all')");
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", vopt.seed);
  verify->add_option("--trials", vopt.trials);

  std::string poly, dot_file;
  std::uint32_t dp = 0;
  unsigned dN = 1;
  bool census = false;
  auto* digraph = app.add_subcommand("digraph", "functional graph of a polynomial on P^1(F_{p^N})");
  digraph->add_option("--poly", poly, "coefficients over F_p, ascending")->required();
  digraph->add_option("--p", dp)->required();
  digraph->add_option("--N", dN);
  digraph->add_option("--dot", dot_file, "write the graph in DOT format");
  digraph->add_flag("--census", census, "print the cycle census as CSV");

  std::string func = "G", beta = "1/9", lambdas = "0.5,0.9,0.99,0.999";
  std::uint32_t sp = 3;
  unsigned h = 1, k = 1;
  auto* scan = app.add_subcommand("scan", "radial scan of G_h or H_beta towards a p^k-th root of unity");
  scan->set_help_flag("--help", "print this help message and exit");
  scan->add_option("--func", func)->check(CLI::IsMember({"G", "H"}));
  scan->add_option("--p", sp);
  scan->add_option("--h", h);
  scan->add_option("--beta", beta);
  scan->add_option("--k", k);
  scan->add_option("--lambdas", lambdas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) return cmd_count(count_args, nrange, method, format);
    if (*tame) return cmd_tame(tame_args, T);
    if (*verify) return cmd_verify(suite, vopt);
    if (*digraph) return cmd_digraph(poly, dp, dN, dot_file, census);
    if (*scan) return cmd_scan(func, sp, h, beta, k, lambdas);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
