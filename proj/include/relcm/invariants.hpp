#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "relcm/resolution.hpp"

namespace relcm {

// Sentinels for the zero module: its dimension and regularity are -inf and
// every grade is +inf.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();
inline constexpr int kPosInfinity = std::numeric_limits<int>::max();

/// Hilbert series in the total grading, numerator(t) / (1 - t)^denominatorExponent.
/// The numerator is a Laurent polynomial: numerator[k] is the coefficient of
/// t^(offset + k).
struct HilbertSeries {
  int offset = 0;
  std::vector<std::int64_t> numerator;
  int denominatorExponent = 0;

  bool isZero() const;
  std::int64_t numeratorAtOne() const;
  // Cancels every factor (1 - t) shared by numerator and denominator.
  HilbertSeries reduced() const;
  // Coefficient of t^degree in the power series expansion.
  std::int64_t coefficient(int degree) const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Alternating sum of the twists of the minimal free resolution over
/// (1 - t)^(m + n), not yet reduced.
HilbertSeries hilbertSeries(const PresentedModule& m);

/// Krull dimension; kNegInfinity for the zero module.
int dimension(const PresentedModule& m);
/// Length of the minimal free resolution; kNegInfinity for the zero module.
int projectiveDimension(const PresentedModule& m);
/// m + n - pd(M). Throws ZeroModule.
int depth(const PresentedModule& m);

/// Length of a maximal M-sequence in the ideal, read from Koszul homology on
/// its variables: t - max{i : H_i(g; M) != 0}. kPosInfinity for the zero module.
int grade(Irrelevant ideal, const PresentedModule& m);

/// cd(Q, M) = dim M/PM and cd(P, M) = dim M/QM. Throws ZeroModule.
int cohomologicalDimension(Irrelevant ideal, const PresentedModule& m);

/// max_i (largest total twist of F_i) - i over the minimal free resolution;
/// kNegInfinity for the zero module. For modules over K[x] this is the
/// Castelnuovo–Mumford regularity.
int regularity(const PresentedModule& m);

/// Rank of F_0 in a minimal presentation.
std::size_t minimalGeneratorCount(const PresentedModule& m);

/// Reduced Hilbert numerator at t = 1. Throws ZeroModule.
std::int64_t multiplicity(const PresentedModule& m);

struct InvariantReport {
  int dim = 0;
  int depth = 0;
  int gradeP = 0;
  int gradeQ = 0;
  int cdP = 0;
  int cdQ = 0;
  bool isCM = false;
};

/// Throws ZeroModule.
InvariantReport invariantReport(const PresentedModule& m);

/// The Koszul complex on the generators of the ideal tensored with the free
/// ambient module: koszulDifferential(.., i) maps Λ^i ⊗ F to Λ^(i-1) ⊗ F, and
/// koszulRelations(.., i) is Λ^i ⊗ (relations of M). Basis elements of Λ^i ⊗ F
/// are ordered by subset (lexicographic on sorted index lists), then by
/// ambient component.
Matrix koszulDifferential(Irrelevant ideal, const PresentedModule& m, int i);
Matrix koszulRelations(Irrelevant ideal, const PresentedModule& m, int i);

}  // namespace relcm
