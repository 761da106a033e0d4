#include <doctest.h>

#include "relcm/errors.hpp"
#include "relcm/groebner.hpp"
#include "test_support.hpp"

using namespace relcm;
using testing::vec;

namespace {

const Ring kS22(kDefaultPrime, 2, 2);
const FreeModule kRankOne = FreeModule::ofRank(1);

std::vector<ModuleVector> ideal(const Ring& s, std::initializer_list<const char*> gens) {
  std::vector<ModuleVector> out;
  for (const char* g : gens) out.push_back(vec(s, {g}));
  return out;
}

// Random submodule of a rank-r free module with bihomogeneous generators.
struct RandomSubmodule {
  FreeModule ambient;
  std::vector<ModuleVector> gens;
};

RandomSubmodule randomSubmodule(const Ring& s, testing::Random& rnd) {
  std::size_t rank = static_cast<std::size_t>(rnd.uniform(1, 2));
  std::vector<BiDegree> twists;
  for (std::size_t i = 0; i < rank; ++i) twists.push_back({rnd.uniform(0, 1), rnd.uniform(0, 1)});
  FreeModule f(twists);
  std::vector<ModuleVector> gens;
  int count = rnd.uniform(1, 4);
  for (int k = 0; k < count; ++k) {
    BiDegree d{rnd.uniform(1, 2), rnd.uniform(0, 2)};
    ModuleVector v = rnd.vector(s, f, d, 3);
    if (!v.isZero()) gens.push_back(v);
  }
  return {f, gens};
}

}  // namespace

TEST_CASE("S-pair produces the expected new element") {
  auto gb = buchberger(kS22, kRankOne, ideal(kS22, {"x1*y1 - x2*y2", "x1*y2"}));
  CHECK(gb.contains(vec(kS22, {"x2*y2^2"})));
  CHECK_FALSE(gb.contains(vec(kS22, {"x2*y2"})));
  CHECK(gb.generators().size() == 3);
}

TEST_CASE("normal form is zero exactly on the submodule") {
  auto gb = buchberger(kS22, kRankOne, ideal(kS22, {"x1^2 - x2^2", "x2^2"}));
  CHECK(gb.normalForm(vec(kS22, {"x1^2"})).isZero());
  CHECK(gb.normalForm(vec(kS22, {"x1*x2"})) == vec(kS22, {"x1*x2"}));
}

TEST_CASE("syzygies of two variables are the Koszul relation") {
  auto gb = buchberger(kS22, kRankOne, ideal(kS22, {"x1", "x2"}));
  Matrix syz = syzygyBasis(gb);
  REQUIRE(syz.numColumns() == 1);
  CHECK(syz.source().twist(0) == BiDegree{2, 0});
  const ModuleVector& col = syz.column(0);
  ModuleVector image = Matrix(kS22, FreeModule({{1, 0}, {1, 0}}), kRankOne, gb.generators()).apply(col);
  CHECK(image.isZero());
  CHECK(col.size() == 2);
}

TEST_CASE("reduced basis does not depend on generator order") {
  testing::Random rnd(11);
  for (int trial = 0; trial < 25; ++trial) {
    auto sub = randomSubmodule(kS22, rnd);
    auto gb1 = buchberger(kS22, sub.ambient, sub.gens);
    rnd.shuffle(sub.gens);
    auto gb2 = buchberger(kS22, sub.ambient, sub.gens);
    CHECK(gb1.generators() == gb2.generators());
  }
}

TEST_CASE("quotient dimension agrees with dense linear algebra") {
  testing::Random rnd(12);
  for (int trial = 0; trial < 20; ++trial) {
    auto sub = randomSubmodule(kS22, rnd);
    auto gb = buchberger(kS22, sub.ambient, sub.gens);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        BiDegree d{a, b};
        std::size_t total = testing::degreeBasis(kS22, sub.ambient, d).size();
        std::size_t span = testing::spanDimension(kS22, sub.ambient, sub.gens, d);
        CHECK(gb.quotientDimension(d) == total - span);
        for (const auto& g : sub.gens) CHECK(gb.contains(g));
      }
  }
}

TEST_CASE("kernel generators span the kernel in every degree") {
  testing::Random rnd(13);
  for (int trial = 0; trial < 15; ++trial) {
    auto sub = randomSubmodule(kS22, rnd);
    std::vector<BiDegree> twists;
    for (const auto& g : sub.gens) twists.push_back(*bidegreeOf(kS22, sub.ambient, g));
    Matrix f(kS22, FreeModule(twists), sub.ambient, sub.gens);
    Matrix ker = kernelOfMap(f);
    CHECK(compose(f, ker).isZero());
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 3; ++b) {
        BiDegree d{a, b};
        std::size_t source = testing::degreeBasis(kS22, f.source(), d).size();
        std::size_t image = testing::spanDimension(kS22, f.target(), f.columns(), d);
        CHECK(testing::spanDimension(kS22, f.source(), ker.columns(), d) == source - image);
      }
  }
}

TEST_CASE("kernel modulo a submodule") {
  // x1 * e : S -> S / (x1*x2) has kernel generated by x2.
  Matrix f = testing::matrixFromRows(kS22, kRankOne, {{"x1"}});
  Matrix rel = testing::matrixFromRows(kS22, kRankOne, {{"x1*x2"}});
  Matrix ker = kernelOfMap(f, &rel);
  REQUIRE(ker.numColumns() == 1);
  CHECK(ker.column(0) == vec(kS22, {"x2"}));
}

TEST_CASE("minimal generators drop redundant ones") {
  auto gens = ideal(kS22, {"x1", "x1*y1", "x2", "x1*x2 + x2^2", "y1*x2"});
  auto minimal = minimalGenerators(kS22, kRankOne, gens);
  REQUIRE(minimal.size() == 2);
  CHECK(minimal[0] == gens[0]);
  CHECK(minimal[1] == gens[2]);
  CHECK(minimalGenerators(kS22, kRankOne, {ModuleVector()}).empty());
}

TEST_CASE("lifting through a generating map") {
  testing::Random rnd(14);
  for (int trial = 0; trial < 20; ++trial) {
    auto sub = randomSubmodule(kS22, rnd);
    std::vector<BiDegree> twists;
    for (const auto& g : sub.gens) twists.push_back(*bidegreeOf(kS22, sub.ambient, g));
    Matrix gens(kS22, FreeModule(twists), sub.ambient, sub.gens);
    ModuleVector u = rnd.vector(kS22, gens.source(), {3, 2}, 2);
    ModuleVector v = gens.apply(u);
    auto lifted = lift(gens, v);
    REQUIRE(lifted.has_value());
    CHECK(gens.apply(*lifted) == v);
  }
  Matrix gens = testing::matrixFromRows(kS22, kRankOne, {{"x1", "x2"}});
  CHECK_FALSE(lift(gens, vec(kS22, {"y1"})).has_value());
  CHECK_THROWS_AS(factorThrough(gens, testing::matrixFromRows(kS22, kRankOne, {{"y1"}})), InternalError);
}

TEST_CASE("non-bihomogeneous generators are rejected") {
  CHECK_THROWS_AS(buchberger(kS22, kRankOne, ideal(kS22, {"x1 + y1"})), NotBihomogeneous);
}
