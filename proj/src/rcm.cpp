#include "relcm/rcm.hpp"

#include <algorithm>
#include <random>

#include "relcm/errors.hpp"
#include "relcm/groebner.hpp"

namespace relcm {

namespace {

IdealVerdict verdict(Irrelevant ideal, const PresentedModule& m) {
  IdealVerdict v;
  v.grade = grade(ideal, m);
  v.cd = cohomologicalDimension(ideal, m);
  v.isRCM = v.grade == v.cd;
  if (v.isRCM) v.rdim = v.grade;
  return v;
}

std::string str(int v) { return std::to_string(v); }

IdentityCheck makeCheck(std::string name, bool applicable, bool holds, std::string witness) {
  return {std::move(name), applicable, applicable ? holds : true, std::move(witness)};
}

}  // namespace

bool RCMReport::allChecksHold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

const IdentityCheck& RCMReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InternalError("no identity check named " + name);
}

RCMReport rcmReport(const PresentedModule& m) {
  if (m.isZero()) throw ZeroModule("relative Cohen-Macaulay analysis of the zero module");
  RCMReport r;
  r.p = verdict(Irrelevant::P, m);
  r.q = verdict(Irrelevant::Q, m);
  r.dim = dimension(m);
  r.depth = depth(m);
  r.isCM = r.depth == r.dim;

  // cd(Q, M) = dim M/PM and cd(P, M) = dim M/QM.
  const int dimModP = r.q.cd, dimModQ = r.p.cd;

  for (auto [label, v, quotientDim] : {std::tuple{"P", r.p, dimModP}, std::tuple{"Q", r.q, dimModQ}}) {
    std::string l = label;
    bool bound = v.grade <= r.dim - quotientDim;
    bool equality = v.grade == r.dim - quotientDim;
    r.checks.push_back(makeCheck("grade_codimension_bound_" + l, true, bound && (!r.isCM || equality),
                                 "grade " + str(v.grade) + ", dim - dim M/" + l + "M = " +
                                     str(r.dim - quotientDim) + (r.isCM ? " (equality required)" : "")));
    r.checks.push_back(makeCheck("grade_cd_dim_chain_" + l, true, v.grade <= v.cd && v.cd <= r.dim,
                                 str(v.grade) + " <= " + str(v.cd) + " <= " + str(r.dim)));
  }

  {
    bool equiv = r.p.isRCM == r.q.isRCM;
    bool sum = !(r.p.isRCM && r.q.isRCM) || *r.p.rdim + *r.q.rdim == r.dim;
    r.checks.push_back(makeCheck("cm_rcm_equivalence", r.isCM, equiv && sum,
                                 std::string("rcm(P) ") + (r.p.isRCM ? "yes" : "no") + ", rcm(Q) " +
                                     (r.q.isRCM ? "yes" : "no") +
                                     (r.p.isRCM && r.q.isRCM
                                          ? ", rdim(P) + rdim(Q) = " + str(*r.p.rdim + *r.q.rdim) + " vs dim " +
                                                str(r.dim)
                                          : "")));
  }
  {
    bool either = r.p.isRCM || r.q.isRCM;
    bool sumHolds = dimModQ + dimModP == r.dim;
    r.checks.push_back(makeCheck("cm_dimension_sum", r.isCM, either == sumHolds,
                                 "dim M/QM + dim M/PM = " + str(dimModQ + dimModP) + ", dim " + str(r.dim) +
                                     ", rcm(P or Q) " + (either ? "yes" : "no")));
  }
  r.checks.push_back(makeCheck("rdim_cd_sum_Q", r.q.isRCM, r.q.isRCM && *r.q.rdim + r.p.cd == r.dim,
                               r.q.isRCM ? "rdim(Q) + cd(P) = " + str(*r.q.rdim + r.p.cd) + ", dim " + str(r.dim)
                                         : "not rcm with respect to Q"));
  r.checks.push_back(makeCheck("rdim_cd_sum_P", r.p.isRCM, r.p.isRCM && *r.p.rdim + r.q.cd == r.dim,
                               r.p.isRCM ? "rdim(P) + cd(Q) = " + str(*r.p.rdim + r.q.cd) + ", dim " + str(r.dim)
                                         : "not rcm with respect to P"));
  r.checks.push_back(makeCheck("rcm_both_implies_cm", r.p.isRCM && r.q.isRCM, r.isCM,
                               "depth " + str(r.depth) + ", dim " + str(r.dim)));
  return r;
}

bool isNonZeroDivisor(const PresentedModule& m, const Polynomial& z) {
  const Ring& ring = m.ring();
  auto d = ring.bidegree(z);
  if (!d) return false;
  std::vector<ModuleVector> cols;
  for (std::size_t i = 0; i < m.ambient().rank(); ++i) cols.push_back(multiply(ring.field(), z, ModuleVector::basis(i)));
  Matrix mult(ring, m.ambient().shifted(*d), m.ambient(), std::move(cols));
  Matrix colon = kernelOfMap(mult, &m.relations());
  const GroebnerBasis& gb = m.relationBasis();
  return std::all_of(colon.columns().begin(), colon.columns().end(),
                     [&](const ModuleVector& v) { return gb.contains(v); });
}

PresentedModule quotientByElement(const PresentedModule& m, const Polynomial& z) {
  const Ring& ring = m.ring();
  auto d = ring.bidegree(z);
  if (!d || *d != BiDegree{0, 1}) throw InputError("quotient element must be bihomogeneous of degree (0,1)");
  std::vector<ModuleVector> extra;
  for (std::size_t i = 0; i < m.ambient().rank(); ++i)
    extra.push_back(multiply(ring.field(), z, ModuleVector::basis(i)));
  return m.withRelations(extra);
}

RegularElementCertificate findRegularElement(const PresentedModule& m, std::uint64_t seed, int budget) {
  if (m.isZero()) throw ZeroModule("regular element search on the zero module");
  IdealVerdict q = verdict(Irrelevant::Q, m);
  if (!q.isRCM || *q.rdim == 0)
    throw PreconditionViolation("regular element search needs a relative Cohen-Macaulay module with respect to Q "
                                "of positive relative dimension");
  const Ring& ring = m.ring();
  const PrimeField& field = ring.field();
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= budget; ++attempt) {
    std::vector<PolyTerm> terms;
    std::vector<std::int64_t> coeffs;
    for (int l = 0; l < ring.n(); ++l) {
      Coeff c = static_cast<Coeff>(rng() % field.characteristic());
      coeffs.push_back(field.toSigned(c));
      terms.push_back({ring.y(l), c});
    }
    Polynomial z = Polynomial::fromTerms(field, terms);
    if (z.isZero() || !isNonZeroDivisor(m, z)) continue;
    int quotientDim = dimension(quotientByIdeal(quotientByElement(m, z), Irrelevant::P));
    if (quotientDim != q.cd - 1) continue;
    RegularElementCertificate cert;
    cert.z = z;
    cert.coefficients = std::move(coeffs);
    cert.seed = seed;
    cert.attempts = attempt;
    std::vector<ModuleVector> cols;
    for (std::size_t i = 0; i < m.ambient().rank(); ++i) cols.push_back(multiply(field, z, ModuleVector::basis(i)));
    Matrix mult(ring, m.ambient().shifted({0, 1}), m.ambient(), std::move(cols));
    cert.annihilatorGeneratorsChecked = kernelOfMap(mult, &m.relations()).numColumns();
    cert.quotientDimension = quotientDim;
    return cert;
  }
  throw SearchExhausted("no regular linear form in y found within " + std::to_string(budget) + " attempts (seed " +
                        std::to_string(seed) + ")");
}

std::vector<DescentStep> descentChain(const PresentedModule& m, std::uint64_t seed) {
  RCMReport report = rcmReport(m);
  if (!report.q.isRCM) throw NotRelativeCM("descent needs a relative Cohen-Macaulay module with respect to Q");
  std::vector<DescentStep> chain;
  PresentedModule current = m;
  std::uint64_t step = 0;
  while (*report.q.rdim > 0) {
    RegularElementCertificate cert = findRegularElement(current, seed + step);
    PresentedModule next = quotientByElement(current, cert.z);
    RCMReport nextReport = rcmReport(next);
    if (!nextReport.q.isRCM || *nextReport.q.rdim != *report.q.rdim - 1 || nextReport.dim != report.dim - 1 ||
        nextReport.q.grade != report.q.grade - 1 || nextReport.p.cd != report.p.cd)
      throw InternalError("descent step " + std::to_string(step) + " did not lower rdim, dim and grade by one");
    chain.push_back({std::move(report), std::move(cert)});
    report = std::move(nextReport);
    current = std::move(next);
    ++step;
  }
  chain.push_back({std::move(report), std::nullopt});
  return chain;
}

MaximalRCMVerdict maximalRcmCheck(const PresentedModule& m) {
  if (m.isZero()) throw ZeroModule("maximal relative Cohen-Macaulay check of the zero module");
  const Ring& ring = m.ring();
  MaximalRCMVerdict v;
  IdealVerdict q = verdict(Irrelevant::Q, m);
  IdealVerdict p = verdict(Irrelevant::P, m);
  v.maximalQ = q.isRCM && *q.rdim == ring.n();
  v.maximalP = p.isRCM && *p.rdim == ring.m();
  v.free = projectiveDimension(m) == 0;

  PresentedModule current = m;
  bool sequence = true;
  for (int l = 0; l < ring.n() && sequence; ++l) {
    Polynomial y = Polynomial::term(ring.y(l));
    if (!isNonZeroDivisor(current, y)) sequence = false;
    current = quotientByElement(current, y);
  }
  v.ySequence = sequence && !current.isZero();
  return v;
}

PresentedModule canonicalDual(const PresentedModule& m) {
  if (m.isZero()) throw ZeroModule("canonical dual of the zero module");
  const int dim = dimension(m);
  const int dep = depth(m);
  if (dep != dim)
    throw NotCohenMacaulay("canonical dual needs a Cohen-Macaulay module (depth " + std::to_string(dep) + ", dim " +
                           std::to_string(dim) + ")");
  const Ring& ring = m.ring();
  const FreeResolution& res = m.resolution();
  const std::size_t c = res.length();
  const BiDegree top{ring.m(), ring.n()};
  auto dual = [&](const FreeModule& f) {
    std::vector<BiDegree> t;
    for (const auto& d : f.twists()) t.push_back(top - d);
    return FreeModule(std::move(t));
  };
  FreeModule target = dual(res.modules[c]);
  if (c == 0) return PresentedModule::free(ring, target);
  const Matrix& phi = res.map(c);
  FreeModule source = dual(res.modules[c - 1]);
  std::vector<std::vector<VecTerm>> cols(source.rank());
  for (std::size_t l = 0; l < phi.numColumns(); ++l)
    for (const auto& t : phi.column(l).terms())
      cols[t.comp].push_back({static_cast<std::uint32_t>(l), t.mono, t.coeff});
  std::vector<ModuleVector> columns;
  for (auto& terms : cols) columns.push_back(ModuleVector::fromTerms(ring.field(), std::move(terms)));
  return PresentedModule(Matrix(ring, source, target, std::move(columns)));
}

}  // namespace relcm
