#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "relcm/invariants.hpp"
#include "relcm/resolution.hpp"

namespace relcm {

/// Finitely presented graded modules over the single-block subrings
/// K[x] = Ring(p, m, 0) and K[y] = Ring(p, 0, n).
using KxModule = PresentedModule;
using KyModule = PresentedModule;

/// The formal symbol z^a, a in N^n, standing for the Čech class y^(-a-1) in
/// the top local cohomology H^n_Q(S).
struct ZMonomial {
  std::vector<int> a;

  int total() const;
  friend auto operator<=>(const ZMonomial&, const ZMonomial&) = default;
};

/// H^n_Q(F)_j for a free bigraded F = ⊕ S(-a_i, -b_i): the free K[x]-module
/// ⊕_i ⊕_{|a| = -n - j + b_i} K[x](-a_i) z^a. Basis elements are ordered by
/// summand, then by a lexicographically descending.
struct LCFreeComponent {
  struct Element {
    std::size_t summand;
    ZMonomial z;
  };
  std::vector<Element> basis;
  FreeModule twists;  // over K[x]; twist (a_i, 0) for an element of summand i

  std::size_t rank() const { return basis.size(); }
};

LCFreeComponent topComponentFree(const Ring& ring, const FreeModule& f, int j);

/// The map H^n_Q(phi)_j over K[x]: a term c x^α y^β of an entry sends z^a to
/// c x^α z^(a-β) when a - β >= 0 and to zero otherwise.
Matrix inducedComponentMap(const Matrix& phi, int j);

/// H^n_Q(F_•)_j for a free resolution F_•; maps[i - 1] is ψ_i : C_i -> C_(i-1).
struct LCComponentComplex {
  int j = 0;
  Ring kx;
  std::vector<LCFreeComponent> components;
  std::vector<Matrix> maps;

  const Matrix& psi(std::size_t i) const { return maps.at(i - 1); }
};

/// Throws InternalError if two consecutive maps do not compose to zero.
LCComponentComplex componentComplex(const FreeResolution& res, int j);

/// ker ψ_i / im ψ_(i+1), presented on minimal generators of ker ψ_i.
KxModule componentHomology(const LCComponentComplex& c, std::size_t i);

/// H^i_Q(M)_j as a graded K[x]-module; zero for i outside [0, n].
KxModule lcComponent(const PresentedModule& m, int i, int j);

/// The resolution 0 -> C_(m+n-q) -> ... -> C_(n-q+1) -> Ker ψ_(n-q) -> H^q_Q(M)_j
/// of a module that is relative Cohen–Macaulay with respect to Q with
/// relative dimension q. maps[0] is C_(n-q+1) -> Ker ψ_(n-q) and maps[i] is
/// ψ_(n-q+1+i). The kernel is certified free by checking that its minimal
/// generators have no syzygies.
struct ComponentResolution {
  int q = 0;
  int j = 0;
  Matrix kernelInclusion;            // Ker ψ_(n-q) -> C_(n-q), minimal generators
  bool kernelFree = false;
  std::vector<FreeModule> modules;   // modules[0] = Ker ψ_(n-q)
  std::vector<Matrix> maps;

  std::size_t length() const;
  // H^q_Q(M)_j as the cokernel of maps[0] (or the kernel itself when there is no map).
  KxModule presented() const;
};

/// Throws NotRelativeCM unless grade(Q, M) = cd(Q, M) = q; ZeroModule for M = 0.
ComponentResolution componentResolution(const PresentedModule& m, int q, int j);

/// max{a_ik - i} over the twists of the minimal free resolution.
int regularityBound(const PresentedModule& m);

struct RegularityPoint {
  int j = 0;
  int reg = kNegInfinity;
  int bound = 0;
};
/// reg H^q_Q(M)_j for j in [jMin, jMax] together with regularityBound(M).
/// Throws NotRelativeCM unless M is relative Cohen–Macaulay of relative dimension q.
std::vector<RegularityPoint> regularityProfile(const PresentedModule& m, int q, int jMin, int jMax);

/// Summary of one component H^i_Q(M)_j.
struct ComponentSummary {
  int i = 0;
  int j = 0;
  bool isZero = true;
  std::size_t generators = 0;   // generators of the computed presentation
  std::size_t relations = 0;    // relation columns of the computed presentation
  int reg = kNegInfinity;
  std::size_t mu = 0;           // minimal number of generators
  std::int64_t multiplicity = 0;  // 0 for the zero module
  int dim = kNegInfinity;
};
ComponentSummary summarize(const KxModule& component, int i, int j);

struct Window {
  int lo = 0;
  int hi = 0;
};
/// [-n - B - 6, B + 2] with B the largest |b_ik| over the minimal resolution twists.
Window defaultJWindow(const PresentedModule& m);
/// [min a_ik - 1, max a_ik + 5] over the minimal resolution twists.
Window defaultKWindow(const PresentedModule& m);

/// True iff values (taken at consecutive integers) agree with one polynomial
/// of degree <= degree, i.e. their (degree + 1)-th finite differences vanish.
bool fitsPolynomial(const std::vector<std::int64_t>& values, int degree);

/// Tameness on a window of consecutive j, ordered ascending: below the largest
/// j with a nonzero entry every entry is nonzero. An all-zero window is tame.
bool isTameOnWindow(const std::vector<bool>& nonzeroAscending);

/// Memoizes component complexes and components of one module.
class LocalCohomology {
 public:
  explicit LocalCohomology(PresentedModule m) : module_(std::move(m)) {}

  const PresentedModule& module() const { return module_; }
  const LCComponentComplex& complex(int j);
  const KxModule& component(int i, int j);

 private:
  PresentedModule module_;
  std::map<int, LCComponentComplex> complexes_;
  std::map<std::pair<int, int>, KxModule> components_;
};

}  // namespace relcm
