#include "relcm/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "relcm/errors.hpp"

namespace relcm {

bool HilbertSeries::isZero() const {
  return std::all_of(numerator.begin(), numerator.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t HilbertSeries::numeratorAtOne() const {
  std::int64_t s = 0;
  for (auto c : numerator) s += c;
  return s;
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries h = *this;
  while (!h.numerator.empty() && h.numerator.back() == 0) h.numerator.pop_back();
  while (!h.numerator.empty() && h.numerator.front() == 0) {
    h.numerator.erase(h.numerator.begin());
    ++h.offset;
  }
  if (h.numerator.empty()) {
    h.offset = 0;
    return h;
  }
  while (h.denominatorExponent > 0 && h.numeratorAtOne() == 0) {
    // N(t) = (1 - t) Q(t) where Q's coefficients are the prefix sums of N's.
    std::vector<std::int64_t> q(h.numerator.size() - 1);
    std::int64_t running = 0;
    for (std::size_t k = 0; k + 1 < h.numerator.size(); ++k) {
      running += h.numerator[k];
      q[k] = running;
    }
    h.numerator = std::move(q);
    --h.denominatorExponent;
  }
  return h;
}

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::int64_t HilbertSeries::coefficient(int degree) const {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    int rest = degree - offset - static_cast<int>(k);
    if (rest < 0) continue;
    std::int64_t ways = denominatorExponent == 0 ? (rest == 0 ? 1 : 0)
                                                 : binomial(rest + denominatorExponent - 1, denominatorExponent - 1);
    total += numerator[k] * ways;
  }
  return total;
}

HilbertSeries hilbertSeries(const PresentedModule& m) {
  const FreeResolution& res = m.resolution();
  std::map<int, std::int64_t> terms;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (const auto& t : res.modules[i].twists()) terms[t.total()] += (i % 2 == 0) ? 1 : -1;
  HilbertSeries h;
  h.denominatorExponent = m.ring().variables();
  if (terms.empty()) return h;
  h.offset = terms.begin()->first;
  h.numerator.assign(static_cast<std::size_t>(terms.rbegin()->first - h.offset + 1), 0);
  for (const auto& [deg, c] : terms) h.numerator[static_cast<std::size_t>(deg - h.offset)] += c;
  return h;
}

int dimension(const PresentedModule& m) {
  HilbertSeries h = hilbertSeries(m).reduced();
  if (h.isZero()) return kNegInfinity;
  return h.denominatorExponent;
}

int projectiveDimension(const PresentedModule& m) {
  const FreeResolution& res = m.resolution();
  if (res.modules.front().rank() == 0) return kNegInfinity;
  return static_cast<int>(res.length());
}

int depth(const PresentedModule& m) {
  int pd = projectiveDimension(m);
  if (pd == kNegInfinity) throw ZeroModule("depth of the zero module");
  return m.ring().variables() - pd;
}

namespace {

struct KoszulShape {
  BiDegree step;
  int first = 0;
  int count = 0;
};

KoszulShape koszulShape(Irrelevant ideal, const Ring& ring) {
  if (ideal == Irrelevant::P) return {{1, 0}, 0, ring.m()};
  return {{0, 1}, ring.m(), ring.n()};
}

std::vector<unsigned> subsetsOfSize(int count, int size) {
  std::vector<unsigned> masks;
  for (unsigned mask = 0; mask < (1u << count); ++mask)
    if (std::popcount(mask) == size) masks.push_back(mask);
  // Lexicographic order on sorted index lists.
  auto indices = [](unsigned mask) {
    std::vector<int> out;
    for (int b = 0; mask >> b; ++b)
      if (mask >> b & 1u) out.push_back(b);
    return out;
  };
  std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) { return indices(a) < indices(b); });
  return masks;
}

FreeModule exteriorTensor(const KoszulShape& shape, const FreeModule& f, int i) {
  std::vector<BiDegree> twists;
  BiDegree shift{shape.step.x * i, shape.step.y * i};
  for (std::size_t s = 0; s < subsetsOfSize(shape.count, i).size(); ++s)
    for (const auto& t : f.twists()) twists.push_back(t + shift);
  return FreeModule(std::move(twists));
}

}  // namespace

Matrix koszulDifferential(Irrelevant ideal, const PresentedModule& m, int i) {
  const Ring& ring = m.ring();
  KoszulShape shape = koszulShape(ideal, ring);
  const FreeModule& f = m.ambient();
  const std::size_t r = f.rank();
  FreeModule source = i >= 0 && i <= shape.count ? exteriorTensor(shape, f, i) : FreeModule();
  FreeModule target = i >= 1 && i <= shape.count + 1 ? exteriorTensor(shape, f, i - 1) : FreeModule();
  if (i < 1 || i > shape.count) return Matrix::zero(ring, source, target);

  auto targetSubsets = subsetsOfSize(shape.count, i - 1);
  std::map<unsigned, std::size_t> targetIndex;
  for (std::size_t s = 0; s < targetSubsets.size(); ++s) targetIndex[targetSubsets[s]] = s;

  std::vector<ModuleVector> cols;
  for (unsigned mask : subsetsOfSize(shape.count, i)) {
    for (std::size_t comp = 0; comp < r; ++comp) {
      std::vector<VecTerm> terms;
      int position = 0;
      for (int b = 0; b < shape.count; ++b) {
        if (!(mask >> b & 1u)) continue;
        Coeff sign = position % 2 == 0 ? 1 : ring.field().neg(1);
        std::size_t row = targetIndex.at(mask & ~(1u << b)) * r + comp;
        terms.push_back({static_cast<std::uint32_t>(row), Monomial::variable(shape.first + b), sign});
        ++position;
      }
      cols.push_back(ModuleVector::fromTerms(ring.field(), std::move(terms)));
    }
  }
  return Matrix(ring, source, target, std::move(cols));
}

Matrix koszulRelations(Irrelevant ideal, const PresentedModule& m, int i) {
  const Ring& ring = m.ring();
  KoszulShape shape = koszulShape(ideal, ring);
  FreeModule target = i >= 0 && i <= shape.count ? exteriorTensor(shape, m.ambient(), i) : FreeModule();
  std::size_t blocks = i >= 0 && i <= shape.count ? subsetsOfSize(shape.count, i).size() : 0;
  BiDegree shift{shape.step.x * i, shape.step.y * i};
  std::vector<ModuleVector> cols;
  std::vector<BiDegree> twists;
  for (std::size_t s = 0; s < blocks; ++s)
    for (std::size_t c = 0; c < m.relations().numColumns(); ++c) {
      cols.push_back(shiftComponents(m.relations().column(c), static_cast<std::int64_t>(s * m.ambient().rank())));
      twists.push_back(m.relations().source().twist(c) + shift);
    }
  return Matrix(ring, FreeModule(std::move(twists)), target, std::move(cols));
}

int grade(Irrelevant ideal, const PresentedModule& m) {
  if (m.isZero()) return kPosInfinity;
  const int t = koszulShape(ideal, m.ring()).count;
  for (int i = t; i >= 1; --i) {
    Matrix relBelow = koszulRelations(ideal, m, i - 1);
    Matrix cycles = kernelOfMap(koszulDifferential(ideal, m, i), &relBelow);
    if (cycles.numColumns() == 0) continue;
    std::vector<ModuleVector> boundaries = koszulRelations(ideal, m, i).columns();
    if (i < t) {
      Matrix d = koszulDifferential(ideal, m, i + 1);
      boundaries.insert(boundaries.end(), d.columns().begin(), d.columns().end());
    }
    GroebnerBasis gb = buchberger(m.ring(), cycles.target(), boundaries);
    for (const auto& z : cycles.columns())
      if (!gb.contains(z)) return t - i;
  }
  return t;
}

int cohomologicalDimension(Irrelevant ideal, const PresentedModule& m) {
  if (m.isZero()) throw ZeroModule("cohomological dimension of the zero module");
  Irrelevant other = ideal == Irrelevant::Q ? Irrelevant::P : Irrelevant::Q;
  return dimension(quotientByIdeal(m, other));
}

int regularity(const PresentedModule& m) {
  const FreeResolution& res = m.resolution();
  int reg = kNegInfinity;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (const auto& t : res.modules[i].twists()) reg = std::max(reg, t.total() - static_cast<int>(i));
  return reg;
}

std::size_t minimalGeneratorCount(const PresentedModule& m) { return m.resolution().modules.front().rank(); }

std::int64_t multiplicity(const PresentedModule& m) {
  HilbertSeries h = hilbertSeries(m).reduced();
  if (h.isZero()) throw ZeroModule("multiplicity of the zero module");
  return h.numeratorAtOne();
}

InvariantReport invariantReport(const PresentedModule& m) {
  if (m.isZero()) throw ZeroModule();
  InvariantReport r;
  r.dim = dimension(m);
  r.depth = depth(m);
  r.gradeP = grade(Irrelevant::P, m);
  r.gradeQ = grade(Irrelevant::Q, m);
  r.cdP = cohomologicalDimension(Irrelevant::P, m);
  r.cdQ = cohomologicalDimension(Irrelevant::Q, m);
  r.isCM = r.depth == r.dim;
  return r;
}

}  // namespace relcm
