#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gloc/bibundle.hpp"

namespace gloc {

struct SuiteResult {
  std::string suite;
  std::size_t passed = 0, total = 0;
  std::vector<std::string> lines;  // one per case, then the summary
  bool ok() const { return passed == total; }
  std::string transcript() const;
};

// we, pullback, coherence, bicategory, canonical, equivalence, quasi-inverse,
// morita, cech.
const std::vector<std::string>& suite_names();
std::size_t default_count(const std::string& suite);

// Case i draws from its own generator seeded by (seed, i), so transcripts
// depend only on the seed and the case index.  The cech suite is exhaustive
// and ignores count.
SuiteResult run_suite(const std::string& suite, std::uint64_t seed, std::size_t count);

// Pairs of groupoids that are not Morita equivalent.
struct NegativePair {
  std::string name;
  Groupoid g, h;
};
const std::vector<NegativePair>& morita_negatives();

}  // namespace gloc
