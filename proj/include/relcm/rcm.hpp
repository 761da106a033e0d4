#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relcm/invariants.hpp"
#include "relcm/resolution.hpp"

namespace relcm {

/// grade and cohomological dimension of M with respect to one irrelevant
/// ideal. M is relative Cohen–Macaulay with respect to it iff the two agree;
/// the common value is the relative dimension.
struct IdealVerdict {
  int grade = 0;
  int cd = 0;
  bool isRCM = false;
  std::optional<int> rdim;
};

/// A named identity between invariants. When the hypothesis of the identity
/// does not hold for the module, applicable is false and holds is true.
struct IdentityCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  std::string witness;
};

struct RCMReport {
  IdealVerdict p;
  IdealVerdict q;
  int dim = 0;
  int depth = 0;
  bool isCM = false;
  std::vector<IdentityCheck> checks;

  bool allChecksHold() const;
  const IdentityCheck& check(const std::string& name) const;
};

/// Throws ZeroModule.
RCMReport rcmReport(const PresentedModule& m);

/// A linear form z = Σ c_l y_l that is a nonzerodivisor on M and drops
/// dim M/(P + z)M to cd(Q, M) - 1.
struct RegularElementCertificate {
  Polynomial z;
  std::vector<std::int64_t> coefficients;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::size_t annihilatorGeneratorsChecked = 0;  // generators of (0 :_F z mod relations), all in the relations
  int quotientDimension = 0;                      // dim M/(P + z)M
};

inline constexpr int kRegularElementBudget = 32;

/// Random linear forms in y drawn from std::mt19937_64(seed); throws
/// PreconditionViolation unless M is relative Cohen–Macaulay with respect to Q
/// with positive relative dimension, and SearchExhausted after `budget`
/// unsuccessful candidates.
RegularElementCertificate findRegularElement(const PresentedModule& m, std::uint64_t seed,
                                             int budget = kRegularElementBudget);

/// M / zM for z bihomogeneous of degree (0, 1). Throws InputError otherwise.
PresentedModule quotientByElement(const PresentedModule& m, const Polynomial& z);

struct DescentStep {
  RCMReport report;
  std::optional<RegularElementCertificate> element;  // the element dividing out to reach the next step
};

/// Divides out regular linear forms until the relative dimension with respect
/// to Q reaches zero. Each step is checked to lower rdim(Q), dim and grade(Q)
/// by exactly one and to keep cd(P); a violation raises InternalError. Step s
/// searches with seed + s. Throws NotRelativeCM for non-rcm input.
std::vector<DescentStep> descentChain(const PresentedModule& m, std::uint64_t seed);

struct MaximalRCMVerdict {
  bool maximalQ = false;   // rcm with respect to Q with rdim n
  bool ySequence = false;  // y_1..y_n is an M-sequence, checked directly
  bool maximalP = false;   // rcm with respect to P with rdim m
  bool free = false;       // projective dimension zero
  bool consistent() const { return maximalQ == ySequence && (maximalQ && maximalP) == free; }
};

/// Throws ZeroModule.
MaximalRCMVerdict maximalRcmCheck(const PresentedModule& m);

/// (0 :_M z) = 0 for a bihomogeneous z, decided by a kernel computation.
bool isNonZeroDivisor(const PresentedModule& m, const Polynomial& z);

/// Ext^(m+n-s)_S(M, S(-m, -n)) for Cohen–Macaulay M of dimension s, read
/// off the minimal free resolution as the cokernel of the transposed last
/// differential. Throws NotCohenMacaulay.
PresentedModule canonicalDual(const PresentedModule& m);

}  // namespace relcm
