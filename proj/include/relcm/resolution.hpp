#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "relcm/groebner.hpp"
#include "relcm/module.hpp"

namespace relcm {

/// Bigraded free resolution 0 -> F_L -> ... -> F_1 -> F_0; maps[i - 1] is
/// φ_i : F_i -> F_{i-1}. The resolutions built here are minimal: no entry of
/// any φ_i has a nonzero constant term.
struct FreeResolution {
  Ring ring;
  std::vector<FreeModule> modules;
  std::vector<Matrix> maps;
  bool minimal = true;

  std::size_t length() const { return maps.size(); }
  const Matrix& map(std::size_t i) const { return maps.at(i - 1); }
};

/// M = coker(relations : G -> F) for a bihomogeneous relation matrix. Values
/// are immutable; the Gröbner basis of the relations and the minimal free
/// resolution are computed once on first use and shared between copies.
class PresentedModule {
 public:
  explicit PresentedModule(Matrix relations);
  static PresentedModule free(const Ring& ring, const FreeModule& ambient);

  const Ring& ring() const { return relations_.ring(); }
  const FreeModule& ambient() const { return relations_.target(); }
  const Matrix& relations() const { return relations_; }

  const GroebnerBasis& relationBasis() const;
  const FreeResolution& resolution() const;

  bool isZero() const;
  // dim_K M_(d.x, d.y).
  std::size_t hilbertFunction(BiDegree d) const;

  // M / (extra columns): the same ambient with further relations appended.
  PresentedModule withRelations(const std::vector<ModuleVector>& extra) const;

  friend bool operator==(const PresentedModule& a, const PresentedModule& b) {
    return a.relations_ == b.relations_;
  }

 private:
  struct Cache;

  Matrix relations_;
  std::shared_ptr<Cache> cache_;
};

/// An isomorphic presentation with minimal generators and minimal relations,
/// obtained by eliminating generators against unit entries (lowest row first,
/// then lowest column).
PresentedModule minimalPresentation(const PresentedModule& m);

/// Minimal bigraded free resolution of M. Its length never exceeds the number
/// of variables; a longer one raises InternalError.
FreeResolution freeResolution(const PresentedModule& m);

/// The irrelevant bigraded ideals P = (x_1..x_m) and Q = (y_1..y_n).
enum class Irrelevant { P, Q };

/// M / IM, presented by appending the columns v e_r for every generator v of
/// I and every ambient basis element e_r.
PresentedModule quotientByIdeal(const PresentedModule& m, Irrelevant ideal);

}  // namespace relcm
