// Acceptance runner: `acceptance` runs every criterion, `acceptance 4` one of them.
// One PASS/FAIL line per criterion, failures listed underneath.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include "dynzeta/verify.hpp"

namespace {

bool run(int n) {
  dynzeta::CheckResult r;
  try {
    r = dynzeta::criterion(n);
  } catch (const std::exception& e) {
    r.pass = false;
    r.summary = std::string("aborted: ") + e.what();
  }
  std::printf("criterion %d: %s  %s [%.1f s]\n", n, r.pass ? "PASS" : "FAIL", r.summary.c_str(), r.seconds);
  for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return r.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::fprintf(stderr, "usage: acceptance [criterion 1-12]\n");
    return 2;
  }
  if (argc == 2) {
    int n = std::atoi(argv[1]);
    if (n < 1 || n > 12) {
      std::fprintf(stderr, "criterion must be 1..12\n");
      return 2;
    }
    return run(n) ? 0 : 1;
  }
  bool all = true;
  for (int n = 1; n <= 12; ++n) all = run(n) && all;
  return all ? 0 : 1;
}
