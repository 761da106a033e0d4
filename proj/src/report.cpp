#include "relcm/report.hpp"

#include "relcm/local_cohomology.hpp"
#include "relcm/rcm.hpp"

namespace relcm {

namespace {

Json extended(int v) {
  if (v == kNegInfinity) return "-inf";
  if (v == kPosInfinity) return "+inf";
  return v;
}

Json twistsJson(const FreeModule& f) {
  Json out = Json::array();
  for (const auto& t : f.twists()) out.push_back({t.x, t.y});
  return out;
}

// Row-major entries of a matrix.
Json matrixJson(const Matrix& mat, const Ring& ring) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < mat.numRows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < mat.numColumns(); ++c) row.push_back(ring.format(mat.entry(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json verdictJson(const IdealVerdict& v) {
  return {{"grade", extended(v.grade)},
          {"cd", extended(v.cd)},
          {"is_rcm", v.isRCM},
          {"rdim", v.rdim ? Json(*v.rdim) : Json(nullptr)}};
}

std::string verdictPhrase(const IdealVerdict& v) {
  return v.isRCM ? "yes, rdim " + std::to_string(*v.rdim) : "no";
}

std::string rcmSummary(const RCMReport& r) {
  return "RCM w.r.t. Q: " + verdictPhrase(r.q) + "; w.r.t. P: " + verdictPhrase(r.p);
}

Json hilbertJson(const HilbertSeries& h) {
  return {{"offset", h.offset}, {"numerator", h.numerator}, {"denominator_exponent", h.denominatorExponent}};
}

void flatten(const Json& node, const std::string& path, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (path.empty() && key == "summary") continue;
      flatten(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (node.is_array()) {
    if (node.empty()) out += path + ": []\n";
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else if (node.is_string()) {
    out += path + ": " + node.get<std::string>() + "\n";
  } else {
    out += path + ": " + node.dump() + "\n";
  }
}

}  // namespace

Json moduleJson(const PresentedModule& m) {
  const Ring& ring = m.ring();
  return {{"p", ring.prime()},
          {"m", ring.m()},
          {"n", ring.n()},
          {"twists", twistsJson(m.ambient())},
          {"relations", m.relations().numColumns()}};
}

Json analyzeReport(const PresentedModule& m, std::uint64_t seed) {
  RCMReport r = rcmReport(m);
  const FreeResolution& res = m.resolution();
  Json betti = Json::array();
  for (const auto& f : res.modules) betti.push_back(twistsJson(f));

  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}, {"witness", c.witness}});

  MaximalRCMVerdict mx = maximalRcmCheck(m);
  Json maximal = {{"maximal_Q", mx.maximalQ},
                  {"y_sequence", mx.ySequence},
                  {"maximal_P", mx.maximalP},
                  {"free", mx.free},
                  {"consistent", mx.consistent()}};

  Json descent = nullptr;
  if (r.q.isRCM && *r.q.rdim > 0) {
    descent = Json::array();
    for (const auto& step : descentChain(m, seed)) {
      Json s = {{"rdim_Q", *step.report.q.rdim},
                {"dim", step.report.dim},
                {"grade_Q", extended(step.report.q.grade)},
                {"cd_P", step.report.p.cd}};
      if (step.element) {
        s["element"] = m.ring().format(step.element->z);
        s["seed"] = step.element->seed;
        s["attempts"] = step.element->attempts;
      }
      descent.push_back(std::move(s));
    }
  }

  return {{"summary", rcmSummary(r) + (r.allChecksHold() ? "; all identities hold" : "; IDENTITY FAILURE")},
          {"module", moduleJson(m)},
          {"invariants",
           {{"dim", r.dim},
            {"depth", r.depth},
            {"projective_dimension", projectiveDimension(m)},
            {"is_cm", r.isCM},
            {"regularity", extended(regularity(m))},
            {"minimal_generators", minimalGeneratorCount(m)},
            {"multiplicity", multiplicity(m)},
            {"hilbert_series", hilbertJson(hilbertSeries(m).reduced())},
            {"betti_twists", betti}}},
          {"P", verdictJson(r.p)},
          {"Q", verdictJson(r.q)},
          {"checks", checks},
          {"maximal", maximal},
          {"descent", descent}};
}

Json rcmVerdictReport(const PresentedModule& m) {
  RCMReport r = rcmReport(m);
  return {{"summary", rcmSummary(r)}, {"Q", verdictJson(r.q)}, {"P", verdictJson(r.p)}};
}

Json lcTableReport(const PresentedModule& m, int i, int jMin, int jMax) {
  LocalCohomology lc(m);
  Json rows = Json::array();
  std::size_t nonzero = 0;
  for (int j = jMin; j <= jMax; ++j) {
    ComponentSummary s = summarize(lc.component(i, j), i, j);
    if (!s.isZero) ++nonzero;
    rows.push_back({{"j", j},
                    {"zero", s.isZero},
                    {"rank", s.generators},
                    {"relations", s.relations},
                    {"reg", extended(s.reg)},
                    {"mu", s.mu},
                    {"e", s.multiplicity},
                    {"dim", extended(s.dim)}});
  }
  return {{"summary", "H^" + std::to_string(i) + "_Q: " + std::to_string(nonzero) + " nonzero components for j in [" +
                          std::to_string(jMin) + ", " + std::to_string(jMax) + "]"},
          {"i", i},
          {"j_min", jMin},
          {"j_max", jMax},
          {"components", rows}};
}

Json resolutionReport(const PresentedModule& m) {
  const FreeResolution& res = m.resolution();
  Json modules = Json::array();
  for (const auto& f : res.modules) modules.push_back(twistsJson(f));
  Json maps = Json::array();
  for (std::size_t i = 1; i <= res.length(); ++i) maps.push_back(matrixJson(res.map(i), res.ring));
  Json ranks = Json::array();
  for (const auto& f : res.modules) ranks.push_back(f.rank());
  return {{"summary", "minimal free resolution of length " + std::to_string(res.length())},
          {"length", res.length()},
          {"ranks", ranks},
          {"twists", modules},
          {"maps", maps}};
}

Json componentResolutionReport(const PresentedModule& m, int q, int j) {
  ComponentResolution t = componentResolution(m, q, j);
  const Ring kx = m.ring().xRing();
  Json modules = Json::array();
  for (const auto& f : t.modules) modules.push_back(twistsJson(f));
  Json maps = Json::array();
  for (const auto& mat : t.maps) maps.push_back(matrixJson(mat, kx));
  KxModule h = t.presented();
  ComponentSummary s = summarize(h, q, j);
  return {{"summary", "H^" + std::to_string(q) + "_Q(M)_" + std::to_string(j) + ": resolution of length " +
                          std::to_string(t.length()) + (t.kernelFree ? ", kernel free" : ", kernel NOT free")},
          {"q", q},
          {"j", j},
          {"length", t.length()},
          {"kernel_free", t.kernelFree},
          {"kernel_inclusion", matrixJson(t.kernelInclusion, kx)},
          {"twists", modules},
          {"maps", maps},
          {"component",
           {{"zero", s.isZero}, {"mu", s.mu}, {"reg", extended(s.reg)}, {"e", s.multiplicity}, {"dim", extended(s.dim)}}}};
}

Json crossCheckJson(const CrossCheckReport& report) {
  Json mismatches = Json::array();
  for (const auto& mm : report.mismatches)
    mismatches.push_back(
        {{"k", mm.k}, {"j", mm.j}, {"i", mm.i}, {"pipelineDim", mm.pipelineDim}, {"oracleDim", mm.oracleDim}});
  return {{"summary", std::to_string(report.mismatches.size()) + " mismatches in " +
                          std::to_string(report.comparisons) + " comparisons"},
          {"k_window", {report.kWindow.lo, report.kWindow.hi}},
          {"j_window", {report.jWindow.lo, report.jWindow.hi}},
          {"comparisons", report.comparisons},
          {"mismatches", mismatches}};
}

Json corpusListReport(const std::vector<CorpusEntry>& entries) {
  Json list = Json::array();
  for (const auto& e : entries) {
    Json expected = Json::array();
    for (const auto& x : e.expected)
      expected.push_back({{"quantity", x.quantity}, {"value", x.value}, {"source", provenanceName(x.source)}});
    list.push_back({{"name", e.name},
                    {"description", e.description},
                    {"module", moduleJson(e.module)},
                    {"expected", expected}});
  }
  return {{"summary", std::to_string(entries.size()) + " corpus entries"}, {"entries", list}};
}

std::string renderJson(const Json& report) { return report.dump(2) + "\n"; }

std::string renderText(const Json& report) {
  std::string out;
  if (report.contains("summary")) out += report["summary"].get<std::string>() + "\n";
  flatten(report, "", out);
  return out;
}

}  // namespace relcm
