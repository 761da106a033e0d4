#include <doctest.h>

#include "relcm/corpus.hpp"
#include "relcm/errors.hpp"
#include "relcm/invariants.hpp"
#include "relcm/rcm.hpp"

using namespace relcm;

TEST_CASE("corpus generation is deterministic") {
  auto a = standardCorpus();
  auto b = standardCorpus();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].module == b[i].module);
  }
  RandomSizes sizes;
  CHECK(randomModule(7, sizes).module == randomModule(7, sizes).module);
  CHECK_FALSE(randomModule(7, sizes).module == randomModule(8, sizes).module);
}

TEST_CASE("random modules respect their sizes") {
  RandomSizes none;
  none.relations = 0;
  auto free = randomModule(1, none);
  CHECK(free.module.relations().numColumns() == 0);
  CHECK(projectiveDimension(free.module) == 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomSizes s;
    s.relations = 3;
    auto e = randomModule(seed, s);
    CHECK(e.module.relations().numColumns() == 3);
    for (const auto& t : e.module.relations().source().twists()) {
      CHECK(t.x <= 2);
      CHECK(t.y <= 2);
    }
  }
}

TEST_CASE("tensor entries follow the factor verdicts") {
  Ring s(kDefaultPrime, 2, 2);
  auto e = tensorModule("t", s, {"x1^2", "x1*x2"}, {});
  CHECK(e.module == namedExample("ex35").module);
  CHECK_THROWS_AS(tensorModule("bad", s, {"x1*y1"}, {}), MixedVariables);
  CHECK_THROWS_AS(tensorModule("bad", s, {}, {"x1*y1"}), MixedVariables);
  for (const auto& entry : standardCorpus()) {
    if (entry.name.rfind("tensor_", 0) != 0 && entry.name.rfind("quotient_", 0) != 0) continue;
    CAPTURE(entry.name);
    RCMReport r = rcmReport(entry.module);
    for (const auto& x : entry.expected) {
      CHECK(x.source == Provenance::Derived);
      if (x.quantity == "rcm_Q") CHECK(r.q.isRCM == (x.value == 1));
      if (x.quantity == "rdim_Q") CHECK(r.q.rdim == x.value);
      if (x.quantity == "rcm_P") CHECK(r.p.isRCM == (x.value == 1));
      if (x.quantity == "rdim_P") CHECK(r.p.rdim == x.value);
    }
  }
}

TEST_CASE("corpus lookup") {
  CHECK(corpusEntry("ex36_3").module.ring().m() == 3);
  CHECK(corpusEntry("random_4").name == "random_4");
  CHECK_THROWS_AS(corpusEntry("nope"), InputError);
  CHECK_THROWS_AS(namedExample("ex99"), InputError);
}
