#include "relcm/local_cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "relcm/errors.hpp"

namespace relcm {

int ZMonomial::total() const { return std::accumulate(a.begin(), a.end(), 0); }

LCFreeComponent topComponentFree(const Ring& ring, const FreeModule& f, int j) {
  const int n = ring.n();
  LCFreeComponent c;
  std::vector<BiDegree> twists;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    int size = -n - j + f.twist(i).y;
    if (size < 0) continue;
    for (const auto& mono : monomialsOfDegree(0, n, size)) {
      ZMonomial z;
      for (int v = 0; v < n; ++v) z.a.push_back(mono.exponent(v));
      c.basis.push_back({i, std::move(z)});
      twists.push_back({f.twist(i).x, 0});
    }
  }
  c.twists = FreeModule(std::move(twists));
  return c;
}

Matrix inducedComponentMap(const Matrix& phi, int j) {
  const Ring& ring = phi.ring();
  const Ring kx = ring.xRing();
  const int m = ring.m(), n = ring.n();
  LCFreeComponent source = topComponentFree(ring, phi.source(), j);
  LCFreeComponent target = topComponentFree(ring, phi.target(), j);
  std::map<std::pair<std::size_t, ZMonomial>, std::size_t> targetIndex;
  for (std::size_t k = 0; k < target.basis.size(); ++k)
    targetIndex[{target.basis[k].summand, target.basis[k].z}] = k;

  std::vector<ModuleVector> cols;
  for (const auto& element : source.basis) {
    std::vector<VecTerm> terms;
    for (const auto& t : phi.column(element.summand).terms()) {
      ZMonomial shifted = element.z;
      bool survives = true;
      for (int v = 0; v < n; ++v) {
        shifted.a[static_cast<std::size_t>(v)] -= t.mono.exponent(m + v);
        if (shifted.a[static_cast<std::size_t>(v)] < 0) survives = false;
      }
      if (!survives) continue;
      std::vector<int> xs(static_cast<std::size_t>(m));
      for (int v = 0; v < m; ++v) xs[static_cast<std::size_t>(v)] = t.mono.exponent(v);
      auto it = targetIndex.find({t.comp, shifted});
      if (it == targetIndex.end()) throw InternalError("induced component map leaves the target component");
      terms.push_back({static_cast<std::uint32_t>(it->second), Monomial(xs), t.coeff});
    }
    cols.push_back(ModuleVector::fromTerms(kx.field(), std::move(terms)));
  }
  return Matrix(kx, source.twists, target.twists, std::move(cols));
}

LCComponentComplex componentComplex(const FreeResolution& res, int j) {
  LCComponentComplex c{j, res.ring.xRing(), {}, {}};
  for (const auto& f : res.modules) c.components.push_back(topComponentFree(res.ring, f, j));
  for (const auto& phi : res.maps) c.maps.push_back(inducedComponentMap(phi, j));
  for (std::size_t i = 1; i < c.maps.size(); ++i)
    if (!compose(c.maps[i - 1], c.maps[i]).isZero())
      throw InternalError("component complex is not a complex at degree " + std::to_string(i));
  return c;
}

namespace {

FreeModule componentAt(const LCComponentComplex& c, std::size_t i) {
  return i < c.components.size() ? c.components[i].twists : FreeModule();
}

// ψ_i with zero maps outside the resolution's range.
Matrix psiAt(const LCComponentComplex& c, std::size_t i) {
  if (i >= 1 && i <= c.maps.size()) return c.psi(i);
  return Matrix::zero(c.kx, componentAt(c, i), i == 0 ? FreeModule() : componentAt(c, i - 1));
}

void requireRelativeCM(const PresentedModule& m, int q) {
  if (m.isZero()) throw ZeroModule("module is zero, so it has no relative dimension");
  int g = grade(Irrelevant::Q, m);
  int cd = cohomologicalDimension(Irrelevant::Q, m);
  if (g != cd || g != q)
    throw NotRelativeCM("module is not relative Cohen-Macaulay with respect to Q of relative dimension " +
                        std::to_string(q) + " (grade " + std::to_string(g) + ", cd " + std::to_string(cd) + ")");
}

}  // namespace

KxModule componentHomology(const LCComponentComplex& c, std::size_t i) {
  Matrix cycles = kernelOfMap(psiAt(c, i));
  Matrix boundaries = psiAt(c, i + 1);
  Matrix relations = kernelOfMap(cycles, &boundaries);
  return PresentedModule(relations);
}

KxModule lcComponent(const PresentedModule& m, int i, int j) {
  const int n = m.ring().n();
  if (i < 0 || i > n) return PresentedModule::free(m.ring().xRing(), FreeModule());
  LCComponentComplex c = componentComplex(m.resolution(), j);
  return componentHomology(c, static_cast<std::size_t>(n - i));
}

std::size_t ComponentResolution::length() const { return maps.size(); }

KxModule ComponentResolution::presented() const {
  if (maps.empty()) return PresentedModule::free(kernelInclusion.ring(), modules.front());
  return PresentedModule(maps.front());
}

ComponentResolution componentResolution(const PresentedModule& m, int q, int j) {
  requireRelativeCM(m, q);
  const int n = m.ring().n(), vars = m.ring().variables();
  LCComponentComplex c = componentComplex(m.resolution(), j);
  const std::size_t base = static_cast<std::size_t>(n - q);

  Matrix kernel = kernelOfMap(psiAt(c, base));
  bool free = kernelOfMap(kernel).numColumns() == 0;
  if (!free) throw InternalError("Ker psi_" + std::to_string(base) + " is not free at j = " + std::to_string(j));

  std::vector<FreeModule> modules{kernel.source()};
  std::vector<Matrix> maps;
  const std::size_t top = static_cast<std::size_t>(vars - q);
  for (std::size_t i = base + 1; i <= top; ++i) {
    FreeModule ci = componentAt(c, i);
    if (ci.rank() == 0) break;
    modules.push_back(ci);
    if (i == base + 1)
      maps.push_back(factorThrough(kernel, psiAt(c, i)));
    else
      maps.push_back(psiAt(c, i));
  }
  if (maps.size() > static_cast<std::size_t>(m.ring().m()))
    throw InternalError("component resolution longer than m at j = " + std::to_string(j));
  return ComponentResolution{q, j, kernel, free, std::move(modules), std::move(maps)};
}

int regularityBound(const PresentedModule& m) {
  const FreeResolution& res = m.resolution();
  int c = kNegInfinity;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (const auto& t : res.modules[i].twists()) c = std::max(c, t.x - static_cast<int>(i));
  return c;
}

std::vector<RegularityPoint> regularityProfile(const PresentedModule& m, int q, int jMin, int jMax) {
  requireRelativeCM(m, q);
  int bound = regularityBound(m);
  LocalCohomology lc(m);
  std::vector<RegularityPoint> out;
  for (int j = jMin; j <= jMax; ++j) out.push_back({j, regularity(lc.component(q, j)), bound});
  return out;
}

ComponentSummary summarize(const KxModule& component, int i, int j) {
  ComponentSummary s;
  s.i = i;
  s.j = j;
  s.generators = component.ambient().rank();
  s.relations = component.relations().numColumns();
  s.isZero = component.isZero();
  if (s.isZero) return s;
  s.reg = regularity(component);
  s.mu = minimalGeneratorCount(component);
  s.multiplicity = multiplicity(component);
  s.dim = dimension(component);
  return s;
}

Window defaultJWindow(const PresentedModule& m) {
  int b = 0;
  for (const auto& f : m.resolution().modules)
    for (const auto& t : f.twists()) b = std::max(b, std::abs(t.y));
  return {-m.ring().n() - b - 6, b + 2};
}

Window defaultKWindow(const PresentedModule& m) {
  int lo = 0, hi = 0;
  bool any = false;
  for (const auto& f : m.resolution().modules)
    for (const auto& t : f.twists()) {
      lo = any ? std::min(lo, t.x) : t.x;
      hi = any ? std::max(hi, t.x) : t.x;
      any = true;
    }
  return {lo - 1, hi + 5};
}

bool fitsPolynomial(const std::vector<std::int64_t>& values, int degree) {
  std::vector<std::int64_t> d = values;
  for (int step = 0; step <= degree && !d.empty(); ++step) {
    for (std::size_t k = 0; k + 1 < d.size(); ++k) d[k] = d[k + 1] - d[k];
    d.pop_back();
  }
  return std::all_of(d.begin(), d.end(), [](std::int64_t v) { return v == 0; });
}

bool isTameOnWindow(const std::vector<bool>& nonzeroAscending) {
  auto last = std::find(nonzeroAscending.rbegin(), nonzeroAscending.rend(), true);
  if (last == nonzeroAscending.rend()) return true;
  return std::all_of(nonzeroAscending.begin(), last.base(), [](bool b) { return b; });
}

const LCComponentComplex& LocalCohomology::complex(int j) {
  auto it = complexes_.find(j);
  if (it == complexes_.end()) it = complexes_.emplace(j, componentComplex(module_.resolution(), j)).first;
  return it->second;
}

const KxModule& LocalCohomology::component(int i, int j) {
  auto key = std::make_pair(i, j);
  auto it = components_.find(key);
  if (it != components_.end()) return it->second;
  const int n = module_.ring().n();
  KxModule value = i < 0 || i > n ? PresentedModule::free(module_.ring().xRing(), FreeModule())
                                  : componentHomology(complex(j), static_cast<std::size_t>(n - i));
  return components_.emplace(key, std::move(value)).first->second;
}

}  // namespace relcm
