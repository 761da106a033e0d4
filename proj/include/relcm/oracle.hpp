#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "relcm/local_cohomology.hpp"

namespace relcm {

/// The x-degree k strand M_k = ⊕_j M_(k,j) as a graded module over
/// K[y] = Ring(p, 0, n). Generators are the x-monomials of degree k - a_i on
/// each ambient summand (summand order, then lexicographically descending),
/// with y-twist b_i; relations are all x-monomial multiples of the relation
/// columns that land in x-degree k.
KyModule strandModule(const PresentedModule& m, int k);

struct StrandInvariants {
  bool zero = true;  // remaining fields are meaningful only for a nonzero strand
  int dim = kNegInfinity;
  int depth = 0;
};
StrandInvariants strandInvariants(const PresentedModule& m, int k);

/// dim_K H^i_Q(M_k)_j computed as dim_K Ext^(n-i)_{K[y]}(M_k, K[y](-n))_(-j)
/// from the minimal free resolution of the strand and dense ranks of the
/// dualized differentials in the single degree -j. Strands and their
/// resolutions are memoized per k.
class DualityOracle {
 public:
  explicit DualityOracle(PresentedModule m) : module_(std::move(m)) {}

  std::size_t dimension(int k, int j, int i);
  const KyModule& strand(int k);

 private:
  PresentedModule module_;
  std::map<int, KyModule> strands_;
};

std::size_t lcPieceViaDuality(const PresentedModule& m, int k, int j, int i);

struct Mismatch {
  int k = 0;
  int j = 0;
  int i = 0;
  std::size_t pipelineDim = 0;
  std::size_t oracleDim = 0;

  friend auto operator<=>(const Mismatch&, const Mismatch&) = default;
};

struct CrossCheckReport {
  Window kWindow;
  Window jWindow;
  std::size_t comparisons = 0;
  std::vector<Mismatch> mismatches;  // sorted by (k, j, i)
};

/// Compares dim_K H^i_Q(M)_(k,j) from the component complexes with the
/// duality oracle for every i in [0, n] and (k, j) in the windows.
CrossCheckReport crossCheck(const PresentedModule& m, Window kWindow, Window jWindow);

}  // namespace relcm
