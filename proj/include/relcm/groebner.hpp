#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "relcm/module.hpp"

namespace relcm {

namespace detail {
class GbEngine;
}

/// Reduced Gröbner basis of a submodule of a free bigraded module.
///
/// Monomials are ordered by graded reverse lexicographic order; the module
/// order is term-over-position where the degree of a term includes the twist
/// of its basis element, ties broken by revlex and then by lower component
/// index. The reduced basis is monic and unique, so it does not depend on the
/// order in which the generators were supplied.
class GroebnerBasis {
 public:
  const Ring& ring() const { return ring_; }
  const FreeModule& ambient() const { return ambient_; }
  // Reduced basis, sorted by leading term ascending.
  const std::vector<ModuleVector>& generators() const { return gens_; }
  std::vector<VecTerm> leadingTerms() const;

  // Remainder with no term divisible by a leading term; zero iff v is in the submodule.
  ModuleVector normalForm(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return normalForm(v).isZero(); }

  // dim_K (ambient / submodule) in bidegree d, by counting standard monomials.
  std::size_t quotientDimension(BiDegree d) const;

 private:
  friend GroebnerBasis buchberger(const Ring&, const FreeModule&, const std::vector<ModuleVector>&);

  GroebnerBasis(Ring ring, FreeModule ambient) : ring_(std::move(ring)), ambient_(std::move(ambient)) {}

  Ring ring_;
  FreeModule ambient_;
  std::vector<ModuleVector> gens_;
  std::shared_ptr<const detail::GbEngine> engine_;
};

// Generators must be bihomogeneous vectors of the ambient module.
GroebnerBasis buchberger(const Ring& ring, const FreeModule& ambient, const std::vector<ModuleVector>& gens);
GroebnerBasis imageBasis(const Matrix& m);

/// A minimal homogeneous generating subset of the given generators, in input
/// order. Graded Nakayama makes its size an invariant of the submodule.
std::vector<ModuleVector> minimalGenerators(const Ring& ring, const FreeModule& ambient,
                                            const std::vector<ModuleVector>& gens);
Matrix minimalGenerators(const Matrix& m);

/// Minimal generators of the syzygy module of the basis elements, as columns
/// of a matrix into the free module on those elements.
Matrix syzygyBasis(const GroebnerBasis& gb);

/// Columns generate {v in f.source : f(v) in image(modulo)}; with no modulo,
/// the kernel of f. The generators returned are minimal.
Matrix kernelOfMap(const Matrix& f, const Matrix* modulo = nullptr);

/// Some u with gens(u) = v, or nullopt when v is not in the image.
std::optional<ModuleVector> lift(const Matrix& gens, const ModuleVector& v);

/// h with gens ∘ h = f. Throws InternalError if some column of f is not in
/// the image of gens.
Matrix factorThrough(const Matrix& gens, const Matrix& f);

}  // namespace relcm
