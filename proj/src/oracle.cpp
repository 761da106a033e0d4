#include "relcm/oracle.hpp"

#include <algorithm>
#include <utility>

#include "relcm/errors.hpp"

namespace relcm {

KyModule strandModule(const PresentedModule& m, int k) {
  const Ring& ring = m.ring();
  const Ring ky = ring.yRing();
  const int xs = ring.m();
  const FreeModule& ambient = m.ambient();

  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index;
  std::vector<BiDegree> genTwists;
  auto exponents = [&](const Monomial& mono) {
    std::vector<int> e(static_cast<std::size_t>(xs));
    for (int v = 0; v < xs; ++v) e[static_cast<std::size_t>(v)] = mono.exponent(v);
    return e;
  };
  for (std::size_t i = 0; i < ambient.rank(); ++i) {
    int d = k - ambient.twist(i).x;
    if (d < 0) continue;
    for (const auto& mu : monomialsOfDegree(0, xs, d)) {
      index[{i, exponents(mu)}] = genTwists.size();
      genTwists.push_back({0, ambient.twist(i).y});
    }
  }
  FreeModule gens(genTwists);

  std::vector<ModuleVector> cols;
  std::vector<BiDegree> relTwists;
  const Matrix& rel = m.relations();
  for (std::size_t c = 0; c < rel.numColumns(); ++c) {
    if (rel.column(c).isZero()) continue;
    int d = k - rel.source().twist(c).x;
    if (d < 0) continue;
    for (const auto& nu : monomialsOfDegree(0, xs, d)) {
      std::vector<VecTerm> terms;
      for (const auto& t : rel.column(c).terms()) {
        Monomial x = ring.xPart(t.mono) * nu;
        auto it = index.find({t.comp, exponents(x)});
        if (it == index.end()) throw InternalError("strand relation leaves the strand basis");
        terms.push_back({static_cast<std::uint32_t>(it->second), ring.toYRing(t.mono), t.coeff});
      }
      ModuleVector v = ModuleVector::fromTerms(ky.field(), std::move(terms));
      if (v.isZero()) continue;
      cols.push_back(std::move(v));
      relTwists.push_back({0, rel.source().twist(c).y});
    }
  }
  return PresentedModule(Matrix(ky, FreeModule(relTwists), gens, std::move(cols)));
}

StrandInvariants strandInvariants(const PresentedModule& m, int k) {
  KyModule s = strandModule(m, k);
  StrandInvariants out;
  if (s.isZero()) return out;
  out.zero = false;
  out.dim = dimension(s);
  out.depth = depth(s);
  return out;
}

namespace {

std::size_t denseRank(const PrimeField& f, std::vector<std::vector<Coeff>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Coeff inv = f.inv(rows[rank][c]);
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] = f.mul(rows[rank][k], inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Coeff factor = rows[r][c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// Basis of Hom(G, K[y](-n)) in degree d: a summand of twist b dualizes to a
// generator of degree n - b, so it contributes the monomials of degree d - n + b.
std::vector<std::pair<std::size_t, Monomial>> dualBasis(const FreeModule& g, int n, int d) {
  std::vector<std::pair<std::size_t, Monomial>> out;
  for (std::size_t l = 0; l < g.rank(); ++l) {
    int rest = d - n + g.twist(l).y;
    if (rest < 0) continue;
    for (const auto& mono : monomialsOfDegree(0, n, rest)) out.push_back({l, mono});
  }
  return out;
}

// Rank in degree d of the transpose of phi : G_(e+1) -> G_e, viewed as a map
// Hom(G_e, K[y](-n)) -> Hom(G_(e+1), K[y](-n)).
std::size_t dualRank(const Ring& ky, const Matrix& phi, int d) {
  const int n = ky.n();
  auto source = dualBasis(phi.target(), n, d);
  auto target = dualBasis(phi.source(), n, d);
  if (source.empty() || target.empty()) return 0;
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> targetIndex;
  auto key = [&](std::size_t comp, const Monomial& mono) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) e[static_cast<std::size_t>(v)] = mono.exponent(v);
    return std::make_pair(comp, e);
  };
  for (std::size_t r = 0; r < target.size(); ++r) targetIndex[key(target[r].first, target[r].second)] = r;

  // One row per source basis element: the image's coordinates.
  std::vector<std::vector<Coeff>> rows;
  for (const auto& [k, nu] : source) {
    std::vector<Coeff> row(target.size(), 0);
    for (std::size_t l = 0; l < phi.numColumns(); ++l)
      for (const auto& t : phi.column(l).terms()) {
        if (t.comp != k) continue;
        auto it = targetIndex.find(key(l, t.mono * nu));
        if (it == targetIndex.end()) throw InternalError("dualized differential leaves its degree");
        row[it->second] = ky.field().add(row[it->second], t.coeff);
      }
    rows.push_back(std::move(row));
  }
  return denseRank(ky.field(), std::move(rows));
}

}  // namespace

const KyModule& DualityOracle::strand(int k) {
  auto it = strands_.find(k);
  if (it == strands_.end()) it = strands_.emplace(k, strandModule(module_, k)).first;
  return it->second;
}

std::size_t DualityOracle::dimension(int k, int j, int i) {
  const int n = module_.ring().n();
  if (i < 0 || i > n) return 0;
  const KyModule& s = strand(k);
  const FreeResolution& res = s.resolution();
  const Ring& ky = res.ring;
  const int e = n - i;
  const int d = -j;
  if (static_cast<std::size_t>(e) >= res.modules.size()) return 0;
  std::size_t total = dualBasis(res.modules[static_cast<std::size_t>(e)], n, d).size();
  std::size_t outgoing = static_cast<std::size_t>(e) + 1 <= res.length() ? dualRank(ky, res.map(static_cast<std::size_t>(e) + 1), d) : 0;
  std::size_t incoming = e >= 1 ? dualRank(ky, res.map(static_cast<std::size_t>(e)), d) : 0;
  return total - outgoing - incoming;
}

std::size_t lcPieceViaDuality(const PresentedModule& m, int k, int j, int i) {
  return DualityOracle(m).dimension(k, j, i);
}

CrossCheckReport crossCheck(const PresentedModule& m, Window kWindow, Window jWindow) {
  CrossCheckReport report{kWindow, jWindow, 0, {}};
  LocalCohomology lc(m);
  DualityOracle oracle(m);
  const int n = m.ring().n();
  for (int j = jWindow.lo; j <= jWindow.hi; ++j)
    for (int i = 0; i <= n; ++i) {
      const KxModule& component = lc.component(i, j);
      for (int k = kWindow.lo; k <= kWindow.hi; ++k) {
        std::size_t pipeline = component.hilbertFunction({k, 0});
        std::size_t dual = oracle.dimension(k, j, i);
        ++report.comparisons;
        if (pipeline != dual) report.mismatches.push_back({k, j, i, pipeline, dual});
      }
    }
  std::sort(report.mismatches.begin(), report.mismatches.end());
  return report;
}

}  // namespace relcm
