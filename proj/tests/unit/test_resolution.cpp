#include <doctest.h>

#include "relcm/errors.hpp"
#include "relcm/resolution.hpp"
#include "test_support.hpp"

using namespace relcm;
using testing::quotientRing;

namespace {

std::vector<BiDegree> twists(const FreeResolution& r, std::size_t i) { return r.modules.at(i).twists(); }

void checkResolution(const PresentedModule& m) {
  const FreeResolution& res = m.resolution();
  const Ring& ring = m.ring();
  CHECK(res.length() <= static_cast<std::size_t>(ring.variables()));
  for (std::size_t i = 1; i <= res.length(); ++i) {
    const Matrix& phi = res.map(i);
    CHECK(phi.source() == res.modules[i]);
    CHECK(phi.target() == res.modules[i - 1]);
    for (const auto& col : phi.columns()) {
      CHECK_FALSE(col.isZero());
      for (const auto& t : col.terms()) CHECK_FALSE(t.mono.isOne());
    }
    if (i < res.length()) CHECK(compose(phi, res.map(i + 1)).isZero());
    // Exactness at F_i: every syzygy of φ_i lies in the image of φ_{i+1}.
    Matrix syz = kernelOfMap(phi);
    if (i == res.length()) {
      CHECK(syz.numColumns() == 0);
    } else {
      GroebnerBasis image = imageBasis(res.map(i + 1));
      for (const auto& z : syz.columns()) CHECK(image.contains(z));
    }
  }
}

}  // namespace

TEST_CASE("resolution of the ring itself") {
  Ring s(kDefaultPrime, 1, 1);
  auto m = PresentedModule::free(s, FreeModule::ofRank(1));
  CHECK(m.resolution().length() == 0);
  CHECK(twists(m.resolution(), 0) == std::vector<BiDegree>{{0, 0}});
}

TEST_CASE("hypersurface resolution") {
  Ring s(kDefaultPrime, 1, 1);
  auto m = quotientRing(s, {"x1*y1"});
  const auto& res = m.resolution();
  REQUIRE(res.length() == 1);
  CHECK(twists(res, 1) == std::vector<BiDegree>{{1, 1}});
}

TEST_CASE("resolution of S/(x1*y1, y1^2)") {
  Ring s(kDefaultPrime, 1, 1);
  auto m = quotientRing(s, {"x1*y1", "y1^2"});
  const auto& res = m.resolution();
  REQUIRE(res.length() == 2);
  CHECK(twists(res, 1) == std::vector<BiDegree>{{1, 1}, {0, 2}});
  CHECK(twists(res, 2) == std::vector<BiDegree>{{1, 2}});
  checkResolution(m);
}

TEST_CASE("resolution of S/(x1^2, x1*x2)") {
  Ring s(kDefaultPrime, 2, 2);
  auto m = quotientRing(s, {"x1^2", "x1*x2"});
  const auto& res = m.resolution();
  REQUIRE(res.length() == 2);
  CHECK(twists(res, 1) == std::vector<BiDegree>{{2, 0}, {2, 0}});
  CHECK(twists(res, 2) == std::vector<BiDegree>{{3, 0}});
  checkResolution(m);
}

TEST_CASE("minimal presentation removes generators killed by unit relations") {
  Ring s(kDefaultPrime, 1, 1);
  // e1 = x1 e2 and y1 e2 = 0, so M = S/(y1).
  auto m = testing::cokernel(s, FreeModule({{1, 0}, {0, 0}}), {{"1", "0"}, {"-x1", "y1"}});
  auto mp = minimalPresentation(m);
  CHECK(mp.ambient() == FreeModule({{0, 0}}));
  REQUIRE(mp.relations().numColumns() == 1);
  CHECK(mp.relations().column(0) == testing::vec(s, {"y1"}));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) CHECK(m.hilbertFunction({a, b}) == mp.hilbertFunction({a, b}));
}

TEST_CASE("presentation of the zero module") {
  Ring s(kDefaultPrime, 1, 1);
  auto m = testing::cokernel(s, FreeModule::ofRank(1), {{"1"}});
  CHECK(m.isZero());
  CHECK(m.resolution().modules.front().rank() == 0);
  CHECK(m.resolution().length() == 0);
}

TEST_CASE("random presentations resolve exactly and minimally") {
  testing::Random rnd(21);
  for (int trial = 0; trial < 30; ++trial) {
    Ring s(kDefaultPrime, rnd.uniform(1, 2), rnd.uniform(1, 2));
    auto m = rnd.presentation(s, 3);
    checkResolution(m);
    auto mp = minimalPresentation(m);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) CHECK(m.hilbertFunction({a, b}) == mp.hilbertFunction({a, b}));
  }
}

TEST_CASE("quotient by an irrelevant ideal") {
  Ring s(kDefaultPrime, 2, 1);
  auto m = PresentedModule::free(s, FreeModule::ofRank(1));
  auto mp = quotientByIdeal(m, Irrelevant::P);
  CHECK(mp.hilbertFunction({0, 3}) == 1);
  CHECK(mp.hilbertFunction({1, 0}) == 0);
  auto mq = quotientByIdeal(m, Irrelevant::Q);
  CHECK(mq.hilbertFunction({2, 0}) == 3);
  CHECK(mq.hilbertFunction({0, 1}) == 0);
}
