#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relcm/resolution.hpp"

namespace relcm {

/// Where an expected value comes from: stated in the published literature,
/// evident by inspection, or derived by hand or from a smaller computation
/// (for tensor products, from the factors over K[x] and K[y]).
enum class Provenance { Published, ByInspection, Derived };

const char* provenanceName(Provenance p);

/// One expected invariant. Quantities: dim, depth, grade_P, grade_Q, cd_P,
/// cd_Q, rdim_P, rdim_Q, rcm_P, rcm_Q, cm (booleans as 0/1).
struct Expectation {
  std::string quantity;
  int value = 0;
  Provenance source = Provenance::Derived;
};

struct CorpusEntry {
  std::string name;
  std::string description;
  PresentedModule module;
  std::vector<Expectation> expected;
};

/// S/(I + J) for I generated in K[x] and J in K[y], given as polynomial
/// text over the ring. Throws MixedVariables if a generator of I involves a y
/// or a generator of J involves an x. Expected values are derived from the
/// factors: the module is rcm with respect to Q iff K[y]/J is Cohen–Macaulay,
/// then with rdim(Q) = dim K[y]/J; symmetrically for P with K[x]/I.
CorpusEntry tensorModule(const std::string& name, const Ring& ring, const std::vector<std::string>& xIdeal,
                         const std::vector<std::string>& yIdeal);

/// "ex35" is K[x1,x2,y1,y2]/(x1^2, x1 x2); "ex36_<m>" is
/// K[x1..xm,y1]/(x1 y1, ..., xm y1, y1^2). Throws InputError for other names.
CorpusEntry namedExample(const std::string& name);

struct RandomSizes {
  int m = 2;
  int n = 2;
  int rank = 1;
  int relations = 2;
  BiDegree maxDegree{2, 2};
};

/// Deterministic in (seed, sizes): ambient twists, then relation bidegrees,
/// then supports and coefficients, all drawn from std::mt19937_64(seed).
CorpusEntry randomModule(std::uint64_t seed, const RandomSizes& sizes);

/// The fixed corpus used by the test suites and the CLI.
std::vector<CorpusEntry> standardCorpus();
std::vector<std::string> corpusNames();

/// Entry of the standard corpus by name; "random_<seed>" builds a random
/// module with default sizes and 1 + seed % 3 relations. Throws InputError for
/// unknown names.
CorpusEntry corpusEntry(const std::string& name);

}  // namespace relcm
