#include "relcm/resolution.hpp"

#include <mutex>
#include <optional>
#include <string>

#include "relcm/errors.hpp"

namespace relcm {

struct PresentedModule::Cache {
  std::once_flag gbOnce;
  std::optional<GroebnerBasis> gb;
  std::once_flag resolutionOnce;
  std::optional<FreeResolution> resolution;
};

PresentedModule::PresentedModule(Matrix relations)
    : relations_(std::move(relations)), cache_(std::make_shared<Cache>()) {}

PresentedModule PresentedModule::free(const Ring& ring, const FreeModule& ambient) {
  return PresentedModule(Matrix(ring, FreeModule(), ambient, {}));
}

const GroebnerBasis& PresentedModule::relationBasis() const {
  std::call_once(cache_->gbOnce, [this] { cache_->gb.emplace(imageBasis(relations_)); });
  return *cache_->gb;
}

const FreeResolution& PresentedModule::resolution() const {
  std::call_once(cache_->resolutionOnce, [this] {
    PresentedModule mp = minimalPresentation(*this);
    FreeResolution r{ring(), {mp.ambient()}, {}, true};
    const std::size_t cap = static_cast<std::size_t>(ring().variables());
    Matrix phi = mp.relations();
    while (phi.numColumns() > 0) {
      if (r.maps.size() >= cap)
        throw InternalError("free resolution longer than the number of variables (" + std::to_string(cap) + ")");
      r.modules.push_back(phi.source());
      r.maps.push_back(phi);
      phi = kernelOfMap(phi);
    }
    cache_->resolution.emplace(std::move(r));
  });
  return *cache_->resolution;
}

bool PresentedModule::isZero() const {
  const GroebnerBasis& gb = relationBasis();
  for (std::size_t i = 0; i < ambient().rank(); ++i)
    if (!gb.contains(ModuleVector::basis(i))) return false;
  return true;
}

std::size_t PresentedModule::hilbertFunction(BiDegree d) const { return relationBasis().quotientDimension(d); }

PresentedModule PresentedModule::withRelations(const std::vector<ModuleVector>& extra) const {
  std::vector<ModuleVector> cols = relations_.columns();
  std::vector<BiDegree> twists = relations_.source().twists();
  for (const auto& v : extra) {
    auto d = bidegreeOf(ring(), ambient(), v);
    if (!d) continue;
    cols.push_back(v);
    twists.push_back(*d);
  }
  return PresentedModule(Matrix(ring(), FreeModule(std::move(twists)), ambient(), std::move(cols)));
}

namespace {

std::optional<Coeff> constantCoefficient(const ModuleVector& v, std::size_t row) {
  for (const auto& t : v.terms())
    if (t.comp == row && t.mono.isOne()) return t.coeff;
  return std::nullopt;
}

ModuleVector dropComponent(const ModuleVector& v, std::size_t row, std::size_t rank) {
  ModuleVector below = restrictComponents(v, 0, row);
  ModuleVector above = shiftComponents(restrictComponents(v, row + 1, rank - row - 1), static_cast<std::int64_t>(row));
  return ModuleVector::fromCanonical([&] {
    std::vector<VecTerm> t = below.terms();
    t.insert(t.end(), above.terms().begin(), above.terms().end());
    return t;
  }());
}

}  // namespace

PresentedModule minimalPresentation(const PresentedModule& m) {
  const Ring& ring = m.ring();
  const PrimeField& field = ring.field();
  std::vector<BiDegree> twists = m.ambient().twists();
  std::vector<ModuleVector> cols = minimalGenerators(ring, m.ambient(), m.relations().columns());

  for (;;) {
    std::size_t pivotRow = twists.size(), pivotCol = 0;
    Coeff unit = 0;
    for (std::size_t r = 0; r < twists.size() && pivotRow == twists.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (auto u = constantCoefficient(cols[c], r)) {
          pivotRow = r;
          pivotCol = c;
          unit = *u;
          break;
        }
    if (pivotRow == twists.size()) break;

    const ModuleVector pivot = cols[pivotCol];
    const Coeff factor = field.neg(field.inv(unit));
    std::vector<ModuleVector> next;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == pivotCol) continue;
      Polynomial a = cols[c].entry(pivotRow);
      ModuleVector v = add(field, cols[c], multiply(field, ring.scale(a, factor), pivot));
      v = dropComponent(v, pivotRow, twists.size());
      if (!v.isZero()) next.push_back(std::move(v));
    }
    cols = std::move(next);
    twists.erase(twists.begin() + static_cast<std::ptrdiff_t>(pivotRow));
  }

  FreeModule ambient(std::move(twists));
  cols = minimalGenerators(ring, ambient, cols);
  std::vector<BiDegree> sourceTwists;
  for (const auto& c : cols) sourceTwists.push_back(*bidegreeOf(ring, ambient, c));
  return PresentedModule(Matrix(ring, FreeModule(std::move(sourceTwists)), ambient, std::move(cols)));
}

FreeResolution freeResolution(const PresentedModule& m) { return m.resolution(); }

PresentedModule quotientByIdeal(const PresentedModule& m, Irrelevant ideal) {
  const Ring& ring = m.ring();
  int first = ideal == Irrelevant::P ? 0 : ring.m();
  int count = ideal == Irrelevant::P ? ring.m() : ring.n();
  std::vector<ModuleVector> extra;
  for (std::size_t r = 0; r < m.ambient().rank(); ++r)
    for (int l = 0; l < count; ++l)
      extra.push_back(ModuleVector::fromCanonical({{static_cast<std::uint32_t>(r), Monomial::variable(first + l), 1}}));
  return m.withRelations(extra);
}

}  // namespace relcm
