#include <doctest.h>

#include <bit>

#include "relcm/errors.hpp"
#include "relcm/invariants.hpp"
#include "test_support.hpp"

using namespace relcm;
using testing::quotientRing;

namespace {

PresentedModule ex35() { return quotientRing(Ring(kDefaultPrime, 2, 2), {"x1^2", "x1*x2"}); }

PresentedModule ex36(int m) {
  Ring s(kDefaultPrime, m, 1);
  std::vector<std::string> gens;
  for (int i = 1; i <= m; ++i) gens.push_back("x" + std::to_string(i) + "*y1");
  gens.push_back("y1^2");
  return quotientRing(s, gens);
}

// min{i : Ext^i(S/I, M) != 0} from the cochain complex Hom(K(g), M), where
// K(g) is the Koszul resolution of S/I on the variables g of one block.
int gradeViaExt(Irrelevant ideal, const PresentedModule& m) {
  const Ring& ring = m.ring();
  const int first = ideal == Irrelevant::P ? 0 : ring.m();
  const int t = ideal == Irrelevant::P ? ring.m() : ring.n();
  const BiDegree step = ideal == Irrelevant::P ? BiDegree{1, 0} : BiDegree{0, 1};
  const FreeModule& f = m.ambient();
  const std::size_t r = f.rank();

  std::vector<std::vector<unsigned>> subsets(static_cast<std::size_t>(t) + 1);
  for (unsigned mask = 0; mask < (1u << t); ++mask) subsets[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  auto index = [&](int size, unsigned mask) {
    const auto& v = subsets[static_cast<std::size_t>(size)];
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), mask) - v.begin());
  };
  auto homModule = [&](int i) {
    std::vector<BiDegree> tw;
    if (i < 0 || i > t) return FreeModule();
    for (std::size_t s = 0; s < subsets[static_cast<std::size_t>(i)].size(); ++s)
      for (const auto& x : f.twists()) tw.push_back({x.x - i * step.x, x.y - i * step.y});
    return FreeModule(tw);
  };
  // δ^i : Hom(K_i, F) -> Hom(K_{i+1}, F).
  auto coboundary = [&](int i) {
    FreeModule source = homModule(i), target = homModule(i + 1);
    std::vector<ModuleVector> cols;
    if (i >= 0 && i <= t)
      for (unsigned mask : subsets[static_cast<std::size_t>(i)])
        for (std::size_t comp = 0; comp < r; ++comp) {
          std::vector<VecTerm> terms;
          for (int b = 0; b < t; ++b) {
            if (mask >> b & 1u) continue;
            unsigned bigger = mask | (1u << b);
            int position = std::popcount(bigger & ((1u << b) - 1));
            Coeff sign = position % 2 == 0 ? 1 : ring.field().neg(1);
            terms.push_back({static_cast<std::uint32_t>(index(i + 1, bigger) * r + comp),
                             Monomial::variable(first + b), sign});
          }
          cols.push_back(ModuleVector::fromTerms(ring.field(), terms));
        }
    return Matrix(ring, source, target, cols);
  };
  auto relations = [&](int i) {
    FreeModule target = homModule(i);
    std::vector<ModuleVector> cols;
    std::vector<BiDegree> tw;
    if (i >= 0 && i <= t)
      for (std::size_t s = 0; s < subsets[static_cast<std::size_t>(i)].size(); ++s)
        for (std::size_t c = 0; c < m.relations().numColumns(); ++c) {
          cols.push_back(shiftComponents(m.relations().column(c), static_cast<std::int64_t>(s * r)));
          BiDegree d = m.relations().source().twist(c);
          tw.push_back({d.x - i * step.x, d.y - i * step.y});
        }
    return Matrix(ring, FreeModule(tw), target, cols);
  };

  for (int i = 0; i <= t; ++i) {
    Matrix relNext = relations(i + 1);
    Matrix cocycles = kernelOfMap(coboundary(i), &relNext);
    std::vector<ModuleVector> exact = relations(i).columns();
    if (i > 0) {
      Matrix d = coboundary(i - 1);
      exact.insert(exact.end(), d.columns().begin(), d.columns().end());
    }
    GroebnerBasis gb = buchberger(ring, cocycles.target(), exact);
    for (const auto& z : cocycles.columns())
      if (!gb.contains(z)) return i;
  }
  return kPosInfinity;
}

}  // namespace

TEST_CASE("Hilbert series of small modules") {
  Ring s11(kDefaultPrime, 1, 1);
  auto h = hilbertSeries(PresentedModule::free(s11, FreeModule::ofRank(1))).reduced();
  CHECK(h.numerator == std::vector<std::int64_t>{1});
  CHECK(h.denominatorExponent == 2);
  auto hyp = hilbertSeries(quotientRing(s11, {"x1*y1"})).reduced();
  CHECK(hyp.numerator == std::vector<std::int64_t>{1, 1});
  CHECK(hyp.denominatorExponent == 1);
  for (int d = 1; d < 6; ++d) CHECK(hyp.coefficient(d) == 2);
  CHECK(hyp.coefficient(0) == 1);
  CHECK(dimension(ex35()) == 3);
}

TEST_CASE("Hilbert series agrees with standard monomial counts") {
  testing::Random rnd(31);
  for (int trial = 0; trial < 25; ++trial) {
    Ring s(kDefaultPrime, rnd.uniform(1, 2), rnd.uniform(1, 2));
    auto m = rnd.presentation(s, 3);
    HilbertSeries h = hilbertSeries(m);
    HilbertSeries hr = h.reduced();
    for (int d = 0; d <= 8; ++d) {
      std::int64_t count = 0;
      for (int a = 0; a <= d; ++a) count += static_cast<std::int64_t>(m.hilbertFunction({a, d - a}));
      CHECK(h.coefficient(d) == count);
      CHECK(hr.coefficient(d) == count);
    }
  }
}

TEST_CASE("example invariants") {
  auto m35 = ex35();
  CHECK(dimension(m35) == 3);
  CHECK(depth(m35) == 2);
  CHECK(grade(Irrelevant::P, m35) == 0);
  CHECK(grade(Irrelevant::Q, m35) == 2);
  CHECK(cohomologicalDimension(Irrelevant::P, m35) == 1);
  CHECK(cohomologicalDimension(Irrelevant::Q, m35) == 2);
  for (int m = 1; m <= 3; ++m) {
    auto r = ex36(m);
    CHECK(dimension(r) == m);
    CHECK(depth(r) == 0);
    CHECK(grade(Irrelevant::Q, r) == 0);
    CHECK(cohomologicalDimension(Irrelevant::Q, r) == 0);
    CHECK(cohomologicalDimension(Irrelevant::P, r) == m);
  }
  Ring s(kDefaultPrime, 2, 2);
  auto free = PresentedModule::free(s, FreeModule::ofRank(1));
  CHECK(dimension(free) == 4);
  CHECK(depth(free) == 4);
  CHECK(grade(Irrelevant::Q, free) == 2);
  CHECK(cohomologicalDimension(Irrelevant::Q, free) == 2);
}

TEST_CASE("regularity, generator counts and multiplicity over K[x]") {
  Ring kx2(kDefaultPrime, 2, 0);
  Ring kx1(kDefaultPrime, 1, 0);
  CHECK(regularity(PresentedModule::free(kx2, FreeModule({{3, 0}}))) == 3);
  CHECK(regularity(quotientRing(kx2, {"x1", "x2"})) == 0);
  CHECK(regularity(quotientRing(kx1, {"x1^3"})) == 2);
  CHECK(multiplicity(quotientRing(kx1, {"x1^3"})) == 3);
  CHECK(minimalGeneratorCount(PresentedModule::free(kx2, FreeModule::ofRank(2))) == 2);
  auto ideal = testing::cokernel(kx2, FreeModule({{2, 0}, {2, 0}}), {{"x2"}, {"-x1"}});
  CHECK(minimalGeneratorCount(ideal) == 2);
  CHECK(minimalGeneratorCount(testing::cokernel(kx2, FreeModule::ofRank(1), {{"1"}})) == 0);
  CHECK(multiplicity(PresentedModule::free(Ring(kDefaultPrime, 1, 1), FreeModule::ofRank(1))) == 1);
  CHECK(multiplicity(quotientRing(Ring(kDefaultPrime, 1, 1), {"x1*y1"})) == 2);
}

TEST_CASE("zero module conventions") {
  Ring s(kDefaultPrime, 1, 1);
  auto zero = testing::cokernel(s, FreeModule::ofRank(1), {{"1"}});
  CHECK(dimension(zero) == kNegInfinity);
  CHECK(regularity(zero) == kNegInfinity);
  CHECK(grade(Irrelevant::Q, zero) == kPosInfinity);
  CHECK_THROWS_AS(depth(zero), ZeroModule);
  CHECK_THROWS_AS(cohomologicalDimension(Irrelevant::P, zero), ZeroModule);
  CHECK_THROWS_AS(multiplicity(zero), ZeroModule);
}

TEST_CASE("Koszul differentials square to zero") {
  Ring s(kDefaultPrime, 3, 2);
  auto m = quotientRing(s, {"x1*y1"});
  for (Irrelevant ideal : {Irrelevant::P, Irrelevant::Q})
    for (int i = 1; i <= 3; ++i)
      CHECK(compose(koszulDifferential(ideal, m, i), koszulDifferential(ideal, m, i + 1)).isZero());
}

TEST_CASE("grade via Koszul homology equals grade via Ext and respects the standard bounds") {
  testing::Random rnd(41);
  std::vector<PresentedModule> modules = {ex35(), ex36(1), ex36(2),
                                          quotientRing(Ring(kDefaultPrime, 1, 1), {"x1*y1"})};
  for (int trial = 0; trial < 20; ++trial) modules.push_back(rnd.presentation(Ring(kDefaultPrime, 2, 2), 3));
  for (const auto& m : modules) {
    if (m.isZero()) continue;
    int dim = dimension(m);
    int dep = depth(m);
    CHECK(dep <= dim);
    for (Irrelevant ideal : {Irrelevant::P, Irrelevant::Q}) {
      int g = grade(ideal, m);
      CHECK(g == gradeViaExt(ideal, m));
      int cd = cohomologicalDimension(ideal, m);
      CHECK(g <= cd);
      CHECK(cd <= dim);
      // grade(I, M) <= dim M - dim M/IM, with equality for Cohen–Macaulay M.
      int quotientDim = dimension(quotientByIdeal(m, ideal));
      CHECK(g <= dim - quotientDim);
      if (dep == dim) CHECK(g == dim - quotientDim);
    }
  }
}
