#include "relcm/corpus.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "relcm/errors.hpp"
#include "relcm/invariants.hpp"

namespace relcm {

const char* provenanceName(Provenance p) {
  switch (p) {
    case Provenance::Published:
      return "published";
    case Provenance::ByInspection:
      return "by-inspection";
    case Provenance::Derived:
      return "derived";
  }
  return "derived";
}

namespace {

PresentedModule cyclic(const Ring& ring, const std::vector<Polynomial>& gens) {
  std::vector<ModuleVector> cols;
  std::vector<BiDegree> twists;
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    cols.push_back(ModuleVector::fromEntries({g}));
    twists.push_back(*ring.bidegree(g));
  }
  return PresentedModule(Matrix(ring, FreeModule(twists), FreeModule::ofRank(1), cols));
}

std::vector<Polynomial> parseAll(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(ring.parse(t));
  return out;
}

void add(CorpusEntry& e, const std::string& q, int v, Provenance p) { e.expected.push_back({q, v, p}); }

struct FactorVerdict {
  int dim;
  bool cm;
};

// Dimension and Cohen–Macaulayness of K[block]/ideal computed over the block subring.
FactorVerdict factorVerdict(const Ring& sub, const std::vector<Polynomial>& gens) {
  PresentedModule r = cyclic(sub, gens);
  return {dimension(r), depth(r) == dimension(r)};
}

// Re-index a pure-block polynomial of S into the block subring.
Polynomial toSubring(const Ring& ring, const Polynomial& p, bool yBlock) {
  std::vector<PolyTerm> terms;
  for (const auto& t : p.terms()) terms.push_back({yBlock ? ring.toYRing(t.mono) : t.mono, t.coeff});
  Ring sub = yBlock ? ring.yRing() : ring.xRing();
  return Polynomial::fromTerms(sub.field(), terms);
}

}  // namespace

CorpusEntry tensorModule(const std::string& name, const Ring& ring, const std::vector<std::string>& xIdeal,
                         const std::vector<std::string>& yIdeal) {
  std::vector<Polynomial> is = parseAll(ring, xIdeal), js = parseAll(ring, yIdeal);
  std::vector<Polynomial> xsub, ysub;
  for (const auto& f : is) {
    if (f.isZero()) continue;
    if (ring.bidegree(f)->y != 0) throw MixedVariables("generator " + ring.format(f) + " of I involves y variables");
    xsub.push_back(toSubring(ring, f, false));
  }
  for (const auto& g : js) {
    if (g.isZero()) continue;
    if (ring.bidegree(g)->x != 0) throw MixedVariables("generator " + ring.format(g) + " of J involves x variables");
    ysub.push_back(toSubring(ring, g, true));
  }
  std::vector<Polynomial> all = is;
  all.insert(all.end(), js.begin(), js.end());

  auto fmt = [&](const std::vector<Polynomial>& gens) {
    std::string s;
    for (const auto& g : gens) s += (s.empty() ? "" : ", ") + ring.format(g);
    return "(" + s + ")";
  };
  CorpusEntry e{name, "S/(I + J) with I = " + fmt(is) + ", J = " + fmt(js), cyclic(ring, all), {}};
  FactorVerdict x = factorVerdict(ring.xRing(), xsub);
  FactorVerdict y = factorVerdict(ring.yRing(), ysub);
  if (x.dim == kNegInfinity || y.dim == kNegInfinity) return e;
  add(e, "dim", x.dim + y.dim, Provenance::Derived);
  add(e, "rcm_Q", y.cm ? 1 : 0, Provenance::Derived);
  if (y.cm) add(e, "rdim_Q", y.dim, Provenance::Derived);
  add(e, "rcm_P", x.cm ? 1 : 0, Provenance::Derived);
  if (x.cm) add(e, "rdim_P", x.dim, Provenance::Derived);
  return e;
}

CorpusEntry namedExample(const std::string& name) {
  if (name == "ex35") {
    Ring s(kDefaultPrime, 2, 2);
    CorpusEntry e{name, "K[x1,x2,y1,y2]/(x1^2, x1*x2)", cyclic(s, parseAll(s, {"x1^2", "x1*x2"})), {}};
    for (auto [q, v] : std::initializer_list<std::pair<const char*, int>>{
             {"dim", 3}, {"depth", 2}, {"grade_P", 0}, {"cd_P", 1}, {"grade_Q", 2}, {"cd_Q", 2},
             {"rcm_Q", 1}, {"rdim_Q", 2}, {"rcm_P", 0}})
      add(e, q, v, Provenance::Published);
    return e;
  }
  if (name.rfind("ex36_", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(name.substr(5));
    } catch (const std::exception&) {
      throw InputError("unknown example " + name);
    }
    if (m < 1 || m + 1 > kMaxVariables) throw InputError("example " + name + " needs 1 <= m <= 7");
    Ring s(kDefaultPrime, m, 1);
    std::vector<std::string> gens;
    for (int i = 1; i <= m; ++i) gens.push_back("x" + std::to_string(i) + "*y1");
    gens.push_back("y1^2");
    CorpusEntry e{name, "K[x1..x" + std::to_string(m) + ",y1]/(x_i*y1, y1^2)", cyclic(s, parseAll(s, gens)), {}};
    for (auto [q, v] : std::initializer_list<std::pair<const char*, int>>{
             {"dim", m}, {"depth", 0}, {"grade_Q", 0}, {"cd_Q", 0}, {"cd_P", m}, {"rcm_Q", 1}, {"rdim_Q", 0},
             {"rcm_P", 0}})
      add(e, q, v, Provenance::Published);
    return e;
  }
  throw InputError("unknown example " + name);
}

CorpusEntry randomModule(std::uint64_t seed, const RandomSizes& sizes) {
  Ring ring(kDefaultPrime, sizes.m, sizes.n);
  const PrimeField& field = ring.field();
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

  std::vector<BiDegree> twists;
  for (int i = 0; i < sizes.rank; ++i) twists.push_back(i == 0 ? BiDegree{0, 0} : BiDegree{uniform(0, 1), uniform(0, 1)});
  FreeModule ambient(twists);

  std::vector<ModuleVector> cols;
  std::vector<BiDegree> degrees;
  for (int r = 0; r < sizes.relations; ++r) {
    BiDegree d{uniform(0, sizes.maxDegree.x), uniform(0, sizes.maxDegree.y)};
    if (d == BiDegree{0, 0}) d.x = 1;
    std::vector<VecTerm> terms;
    for (std::size_t i = 0; i < ambient.rank(); ++i) {
      BiDegree rest = d - ambient.twist(i);
      if (rest.x < 0 || rest.y < 0) continue;
      for (const auto& xm : monomialsOfDegree(0, ring.m(), rest.x))
        for (const auto& ym : monomialsOfDegree(ring.m(), ring.n(), rest.y))
          if (rng() % 2 == 0) terms.push_back({static_cast<std::uint32_t>(i), xm * ym, 1 + static_cast<Coeff>(rng() % (field.characteristic() - 1))});
    }
    if (terms.empty()) {
      BiDegree rest = d - ambient.twist(0);
      terms.push_back({0, monomialsOfDegree(0, ring.m(), rest.x).front() *
                              monomialsOfDegree(ring.m(), ring.n(), rest.y).front(), 1});
    }
    cols.push_back(ModuleVector::fromTerms(field, std::move(terms)));
    degrees.push_back(d);
  }
  CorpusEntry e{"random_" + std::to_string(seed), "seeded random presentation",
                PresentedModule(Matrix(ring, FreeModule(degrees), ambient, cols)), {}};
  return e;
}

namespace {

CorpusEntry freeEntry(const std::string& name, int m, int n, std::vector<BiDegree> twists) {
  Ring s(kDefaultPrime, m, n);
  CorpusEntry e{name, "free module", PresentedModule::free(s, FreeModule(std::move(twists))), {}};
  for (auto [q, v] : std::initializer_list<std::pair<const char*, int>>{
           {"dim", m + n}, {"depth", m + n}, {"rcm_Q", 1}, {"rdim_Q", n}, {"rcm_P", 1}, {"rdim_P", m}, {"cm", 1}})
    add(e, q, v, Provenance::ByInspection);
  return e;
}

CorpusEntry fromRows(const std::string& name, const std::string& description, const Ring& s, const FreeModule& ambient,
                     const std::vector<std::vector<std::string>>& rows) {
  std::vector<ModuleVector> cols;
  std::vector<BiDegree> twists;
  for (std::size_t c = 0; c < rows.front().size(); ++c) {
    std::vector<Polynomial> entries;
    for (const auto& r : rows) entries.push_back(s.parse(r[c]));
    ModuleVector v = ModuleVector::fromEntries(entries);
    cols.push_back(v);
    twists.push_back(*bidegreeOf(s, ambient, v));
  }
  return {name, description, PresentedModule(Matrix(s, FreeModule(twists), ambient, cols)), {}};
}

using Builder = std::function<CorpusEntry()>;

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"ex35", [] { return namedExample("ex35"); }},
      {"ex36_1", [] { return namedExample("ex36_1"); }},
      {"ex36_2", [] { return namedExample("ex36_2"); }},
      {"ex36_3", [] { return namedExample("ex36_3"); }},
      {"free_1_1", [] { return freeEntry("free_1_1", 1, 1, {{0, 0}}); }},
      {"free_2_2", [] { return freeEntry("free_2_2", 2, 2, {{0, 0}}); }},
      {"free_sum", [] { return freeEntry("free_sum", 2, 2, {{2, 0}, {0, 1}}); }},
      {"free_shift", [] { return freeEntry("free_shift", 1, 1, {{0, 0}, {1, 1}}); }},
      {"tensor_x1sq", [] { return tensorModule("tensor_x1sq", Ring(kDefaultPrime, 2, 1), {"x1^2"}, {}); }},
      {"tensor_y1sq", [] { return tensorModule("tensor_y1sq", Ring(kDefaultPrime, 1, 2), {}, {"y1^2"}); }},
      {"tensor_x1x2_y1y2",
       [] { return tensorModule("tensor_x1x2_y1y2", Ring(kDefaultPrime, 2, 2), {"x1*x2"}, {"y1*y2"}); }},
      {"tensor_x1sq_y1sq", [] { return tensorModule("tensor_x1sq_y1sq", Ring(kDefaultPrime, 1, 1), {"x1^2"}, {"y1^2"}); }},
      {"tensor_ex35_y1sq",
       [] { return tensorModule("tensor_ex35_y1sq", Ring(kDefaultPrime, 2, 1), {"x1^2", "x1*x2"}, {"y1^2"}); }},
      {"tensor_y_not_cm",
       [] { return tensorModule("tensor_y_not_cm", Ring(kDefaultPrime, 1, 2), {}, {"y1^2", "y1*y2"}); }},
      {"quotient_P", [] { return tensorModule("quotient_P", Ring(kDefaultPrime, 2, 2), {"x1", "x2"}, {}); }},
      {"quotient_Q", [] { return tensorModule("quotient_Q", Ring(kDefaultPrime, 1, 1), {}, {"y1"}); }},
      {"hypersurface",
       [] {
         Ring s(kDefaultPrime, 1, 1);
         CorpusEntry e{"hypersurface", "K[x1,y1]/(x1*y1)", cyclic(s, parseAll(s, {"x1*y1"})), {}};
         add(e, "cm", 1, Provenance::Published);
         add(e, "rcm_Q", 0, Provenance::Published);
         add(e, "dim", 1, Provenance::ByInspection);
         return e;
       }},
      {"hypersurface_2",
       [] {
         Ring s(kDefaultPrime, 2, 2);
         CorpusEntry e{"hypersurface_2", "K[x1,x2,y1,y2]/(x1*y1 + x2*y2)", cyclic(s, parseAll(s, {"x1*y1 + x2*y2"})), {}};
         add(e, "dim", 3, Provenance::ByInspection);
         add(e, "cm", 1, Provenance::ByInspection);
         return e;
       }},
      {"mixed_ideal",
       [] {
         Ring s(kDefaultPrime, 1, 2);
         CorpusEntry e{"mixed_ideal", "K[x1,y1,y2]/(x1*y1, x1*y2)", cyclic(s, parseAll(s, {"x1*y1", "x1*y2"})), {}};
         add(e, "dim", 2, Provenance::ByInspection);
         return e;
       }},
      {"coker_x",
       [] {
         Ring s(kDefaultPrime, 2, 1);
         CorpusEntry e = fromRows("coker_x", "S^2 / (x1*e1 + x2*e2)", s, FreeModule::ofRank(2), {{"x1"}, {"x2"}});
         add(e, "rcm_Q", 1, Provenance::Derived);
         add(e, "rdim_Q", 1, Provenance::Derived);
         return e;
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> corpusNames() {
  std::vector<std::string> names;
  for (const auto& [name, _] : builders()) names.push_back(name);
  for (int seed = 0; seed < 6; ++seed) names.push_back("random_" + std::to_string(seed));
  return names;
}

CorpusEntry corpusEntry(const std::string& name) {
  for (const auto& [n, build] : builders())
    if (n == name) return build();
  if (name.rfind("random_", 0) == 0) {
    std::uint64_t seed = 0;
    try {
      std::size_t used = 0;
      seed = std::stoull(name.substr(7), &used);
      if (used != name.size() - 7) throw InputError("bad seed");
    } catch (const std::exception&) {
      throw InputError("unknown corpus entry " + name);
    }
    RandomSizes sizes;
    sizes.relations = 1 + static_cast<int>(seed % 3);
    return randomModule(seed, sizes);
  }
  if (name.rfind("ex36_", 0) == 0) return namedExample(name);
  throw InputError("unknown corpus entry " + name);
}

std::vector<CorpusEntry> standardCorpus() {
  std::vector<CorpusEntry> out;
  for (const auto& name : corpusNames()) out.push_back(corpusEntry(name));
  return out;
}

}  // namespace relcm
