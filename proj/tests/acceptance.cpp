// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "gloc/cech.hpp"
#include "gloc/laws.hpp"

using namespace gloc;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

bool report(int n, const std::string& what, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << n << " " << what << ": " << detail << std::endl;
  return ok;
}

bool suite(int n, const std::string& what, const std::string& name, std::size_t count, std::uint64_t seed,
           long long budget_ms = 0) {
  const auto t0 = Clock::now();
  const SuiteResult r = run_suite(name, seed, count);
  const long long ms = ms_since(t0);
  for (const auto& line : r.lines)
    if (line.find(" FAIL ") != std::string::npos) std::cout << "  " << line << "\n";
  bool ok = r.ok() && r.total == count;
  std::string detail = std::to_string(r.passed) + "/" + std::to_string(r.total) + " in " + std::to_string(ms) + " ms";
  if (budget_ms) {
    ok = ok && ms < budget_ms;
    detail += " (budget " + std::to_string(budget_ms) + " ms)";
  }
  return report(n, what, ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  bool all = true;
  all &= suite(1, "weak-equivalence calculus", "we", 500, seed, 30000);
  all &= suite(2, "weak pullback", "pullback", 200, seed);
  all &= suite(3, "anafunctisation coherence", "coherence", 200, seed);
  all &= suite(4, "bibundle bicategory laws", "bicategory", 200, seed);
  all &= suite(5, "canonical 2-cells", "canonical", 100, seed);
  all &= suite(6, "three-bicategory equivalence", "equivalence", 100, seed);
  all &= suite(7, "quasi-inverse characterisations", "quasi-inverse", 100, seed);
  {
    // 50 fuzzed biprincipal bibundles, each case also checks one of the
    // hand-built negative pairs.
    const SuiteResult r = run_suite("morita", seed, 50);
    std::size_t negatives = 0;
    for (const auto& line : r.lines)
      if (line.find(" negative ") != std::string::npos) ++negatives;
    for (const auto& line : r.lines)
      if (line.find(" FAIL ") != std::string::npos) std::cout << "  " << line << "\n";
    const bool ok = r.ok() && r.total == 50 && negatives == morita_negatives().size();
    all &= report(8, "Morita invariants", ok,
                  std::to_string(r.passed) + "/" + std::to_string(r.total) + " positive, " +
                      std::to_string(negatives) + "/" + std::to_string(morita_negatives().size()) +
                      " negative pairs checked");
  }
  {
    const auto t0 = Clock::now();
    const SuiteResult r = run_suite("cech", seed, 0);
    const long long ms = ms_since(t0);
    for (const auto& line : r.lines)
      if (line.find(" FAIL ") != std::string::npos) std::cout << "  " << line << "\n";
    all &= report(9, "Cech classification", r.ok() && r.total > 0 && ms < 10000,
                  std::to_string(r.passed) + "/" + std::to_string(r.total) + " covers in " + std::to_string(ms) +
                      " ms (budget 10000 ms)");
  }
  {
    bool same = true;
    std::size_t compared = 0;
    for (const auto& s : suite_names()) {
      const std::size_t n = s == "cech" ? 0 : std::min<std::size_t>(default_count(s), 20);
      const std::string a = run_suite(s, seed + 7, n).transcript();
      const std::string b = run_suite(s, seed + 7, n).transcript();
      same = same && a == b;
      ++compared;
    }
    all &= report(10, "determinism", same, std::to_string(compared) + " suites replayed byte-identically");
  }
  return all ? 0 : 1;
}
