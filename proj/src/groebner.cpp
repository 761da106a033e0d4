#include "relcm/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gb_engine.hpp"
#include "relcm/errors.hpp"

namespace relcm {
namespace detail {

TermOrder TermOrder::forModule(const FreeModule& ambient) {
  TermOrder o;
  for (const auto& t : ambient.twists()) {
    o.weight.push_back(t.total());
    o.block.push_back(0);
  }
  return o;
}

TermOrder TermOrder::elimination(const FreeModule& ambient, std::size_t eliminated) {
  TermOrder o = forModule(ambient);
  for (std::size_t i = 0; i < eliminated; ++i) o.block[i] = 1;
  return o;
}

OrderedVec GbEngine::toOrdered(const ModuleVector& v) const {
  OrderedVec out = v.terms();
  for (const auto& t : out)
    if (t.comp >= order_.weight.size()) throw ShapeMismatch("vector component outside ambient module");
  std::sort(out.begin(), out.end(), [this](const VecTerm& a, const VecTerm& b) {
    return order_.compare(a.comp, a.mono, b.comp, b.mono) > 0;
  });
  return out;
}

ModuleVector GbEngine::toStorage(const PrimeField& f, const OrderedVec& v) {
  return ModuleVector::fromTerms(f, v);
}

OrderedVec GbEngine::addMultiple(const OrderedVec& a, std::size_t from, Coeff c, const Monomial& mono,
                                 const OrderedVec& b) const {
  OrderedVec out;
  out.reserve(a.size() - from + b.size());
  auto ia = a.begin() + static_cast<std::ptrdiff_t>(from), ea = a.end();
  auto ib = b.begin(), eb = b.end();
  while (ia != ea || ib != eb) {
    if (ib == eb) {
      out.push_back(*ia++);
      continue;
    }
    Monomial mb = ib->mono * mono;
    int cmp = ia == ea ? -1 : order_.compare(ia->comp, ia->mono, ib->comp, mb);
    if (cmp > 0) {
      out.push_back(*ia++);
    } else if (cmp < 0) {
      Coeff v = field_.mul(c, ib->coeff);
      if (v != 0) out.push_back({ib->comp, mb, v});
      ++ib;
    } else {
      Coeff v = field_.add(ia->coeff, field_.mul(c, ib->coeff));
      if (v != 0) out.push_back({ib->comp, mb, v});
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::size_t GbEngine::findReducer(const VecTerm& t, std::size_t skip) const {
  if (t.comp >= byComponent_.size()) return kNone;
  for (std::size_t idx : byComponent_[t.comp]) {
    if (idx == skip) continue;
    if (basis_[idx].front().mono.divides(t.mono)) return idx;
  }
  return kNone;
}

OrderedVec GbEngine::reduceSkipping(OrderedVec f, std::size_t skip) const {
  OrderedVec result;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const VecTerm& t = f[pos];
    std::size_t r = findReducer(t, skip);
    if (r == kNone) {
      result.push_back(t);
      ++pos;
      continue;
    }
    const OrderedVec& g = basis_[r];
    Monomial u = t.mono / g.front().mono;
    f = addMultiple(f, pos, field_.neg(t.coeff), u, g);
    pos = 0;
  }
  return result;
}

void GbEngine::makeMonic(OrderedVec& v) const {
  if (v.empty() || v.front().coeff == 1) return;
  Coeff inv = field_.inv(v.front().coeff);
  for (auto& t : v) t.coeff = field_.mul(t.coeff, inv);
}

void GbEngine::addElement(OrderedVec v) {
  if (byComponent_.size() < order_.weight.size()) byComponent_.resize(order_.weight.size());
  byComponent_[v.front().comp].push_back(basis_.size());
  basis_.push_back(std::move(v));
}

namespace {

struct Item {
  int degree;
  int kind;  // 0 = S-pair, 1 = input generator
  std::size_t i;
  std::size_t j;

  friend bool operator<(const Item& a, const Item& b) {
    return std::tie(a.degree, a.kind, a.i, a.j) < std::tie(b.degree, b.kind, b.i, b.j);
  }
};

}  // namespace

void GbEngine::run(const std::vector<OrderedVec>& inputs, std::optional<int> degreeBound,
                   std::vector<bool>* minimal) {
  if (minimal) minimal->assign(inputs.size(), false);
  if (byComponent_.size() < order_.weight.size()) byComponent_.resize(order_.weight.size());
  std::set<Item> queue;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (!inputs[i].empty()) queue.insert({order_.degree(inputs[i].front()), 1, i, 0});

  while (!queue.empty()) {
    Item item = *queue.begin();
    if (degreeBound && item.degree > *degreeBound) break;
    queue.erase(queue.begin());

    OrderedVec s;
    if (item.kind == 1) {
      s = inputs[item.i];
    } else {
      const OrderedVec& gi = basis_[item.i];
      const OrderedVec& gj = basis_[item.j];
      Monomial l = gi.front().mono.lcm(gj.front().mono);
      s = addMultiple(OrderedVec(), 0, 1, l / gi.front().mono, gi);
      s = addMultiple(s, 0, field_.neg(1), l / gj.front().mono, gj);
    }
    s = reduce(std::move(s));
    if (s.empty()) continue;
    makeMonic(s);
    if (item.kind == 1 && minimal) (*minimal)[item.i] = true;

    const VecTerm lead = s.front();
    const std::size_t k = basis_.size();

    // Gebauer–Möller chain criterion on pending pairs.
    for (auto it = queue.begin(); it != queue.end();) {
      if (it->kind == 0) {
        const VecTerm& li = basis_[it->i].front();
        if (li.comp == lead.comp) {
          const Monomial& lj = basis_[it->j].front().mono;
          Monomial lij = li.mono.lcm(lj);
          if (lead.mono.divides(lij) && li.mono.lcm(lead.mono) != lij && lj.lcm(lead.mono) != lij) {
            it = queue.erase(it);
            continue;
          }
        }
      }
      ++it;
    }

    std::vector<std::size_t> partners = byComponent_[lead.comp];
    addElement(std::move(s));
    for (std::size_t l : partners) {
      Monomial lcm = basis_[l].front().mono.lcm(lead.mono);
      queue.insert({order_.weight[lead.comp] + lcm.degree(), 0, l, k});
    }
  }
}

void GbEngine::interreduce() {
  std::vector<bool> keep(basis_.size(), true);
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    for (std::size_t b = 0; b < basis_.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      const VecTerm& la = basis_[a].front();
      const VecTerm& lb = basis_[b].front();
      if (la.comp == lb.comp && lb.mono.divides(la.mono) && (!(lb.mono == la.mono) || b < a)) keep[a] = false;
    }
  }
  std::vector<OrderedVec> kept;
  for (std::size_t a = 0; a < basis_.size(); ++a)
    if (keep[a]) kept.push_back(std::move(basis_[a]));
  basis_.clear();
  byComponent_.assign(order_.weight.size(), {});
  for (auto& v : kept) addElement(std::move(v));

  for (std::size_t a = 0; a < basis_.size(); ++a) {
    OrderedVec tail(basis_[a].begin() + 1, basis_[a].end());
    OrderedVec reduced = reduceSkipping(std::move(tail), a);
    OrderedVec full;
    full.reserve(reduced.size() + 1);
    full.push_back(basis_[a].front());
    full.insert(full.end(), reduced.begin(), reduced.end());
    basis_[a] = std::move(full);
  }

  std::sort(basis_.begin(), basis_.end(), [this](const OrderedVec& x, const OrderedVec& y) {
    return order_.compare(x.front().comp, x.front().mono, y.front().comp, y.front().mono) < 0;
  });
  byComponent_.assign(order_.weight.size(), {});
  for (std::size_t a = 0; a < basis_.size(); ++a) byComponent_[basis_[a].front().comp].push_back(a);
}

}  // namespace detail

namespace {

void checkVectors(const Ring& ring, const FreeModule& ambient, const std::vector<ModuleVector>& gens) {
  for (const auto& g : gens) (void)bidegreeOf(ring, ambient, g);
}

int degreeOf(const detail::TermOrder& order, const detail::OrderedVec& v) { return order.degree(v.front()); }

}  // namespace

std::vector<VecTerm> GroebnerBasis::leadingTerms() const {
  std::vector<VecTerm> out;
  for (const auto& v : engine_->basis()) out.push_back(v.front());
  return out;
}

ModuleVector GroebnerBasis::normalForm(const ModuleVector& v) const {
  return detail::GbEngine::toStorage(ring_.field(), engine_->reduce(engine_->toOrdered(v)));
}

std::size_t GroebnerBasis::quotientDimension(BiDegree d) const {
  std::vector<std::vector<Monomial>> leads(ambient_.rank());
  for (const auto& v : engine_->basis()) leads[v.front().comp].push_back(v.front().mono);
  std::size_t count = 0;
  for (std::size_t i = 0; i < ambient_.rank(); ++i) {
    BiDegree rest = d - ambient_.twist(i);
    if (rest.x < 0 || rest.y < 0) continue;
    auto xs = monomialsOfDegree(0, ring_.m(), rest.x);
    auto ys = monomialsOfDegree(ring_.m(), ring_.n(), rest.y);
    for (const auto& xm : xs)
      for (const auto& ym : ys) {
        Monomial mono = xm * ym;
        bool standard = std::none_of(leads[i].begin(), leads[i].end(),
                                     [&](const Monomial& l) { return l.divides(mono); });
        if (standard) ++count;
      }
  }
  return count;
}

GroebnerBasis buchberger(const Ring& ring, const FreeModule& ambient, const std::vector<ModuleVector>& gens) {
  checkVectors(ring, ambient, gens);
  auto engine = std::make_shared<detail::GbEngine>(ring.field(), detail::TermOrder::forModule(ambient));
  std::vector<detail::OrderedVec> inputs;
  inputs.reserve(gens.size());
  for (const auto& g : gens) inputs.push_back(engine->toOrdered(g));
  engine->run(inputs, std::nullopt);
  engine->interreduce();

  GroebnerBasis gb(ring, ambient);
  for (const auto& v : engine->basis()) gb.gens_.push_back(detail::GbEngine::toStorage(ring.field(), v));
  gb.engine_ = std::move(engine);
  return gb;
}

GroebnerBasis imageBasis(const Matrix& m) { return buchberger(m.ring(), m.target(), m.columns()); }

std::vector<ModuleVector> minimalGenerators(const Ring& ring, const FreeModule& ambient,
                                            const std::vector<ModuleVector>& gens) {
  checkVectors(ring, ambient, gens);
  detail::GbEngine engine(ring.field(), detail::TermOrder::forModule(ambient));
  std::vector<detail::OrderedVec> inputs;
  std::optional<int> bound;
  for (const auto& g : gens) {
    inputs.push_back(engine.toOrdered(g));
    if (!inputs.back().empty()) {
      int d = degreeOf(engine.order(), inputs.back());
      bound = bound ? std::max(*bound, d) : d;
    }
  }
  if (!bound) return {};
  std::vector<bool> minimal;
  engine.run(inputs, bound, &minimal);
  std::vector<ModuleVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (minimal[i]) out.push_back(gens[i]);
  return out;
}

Matrix minimalGenerators(const Matrix& m) {
  auto gens = minimalGenerators(m.ring(), m.target(), m.columns());
  std::vector<BiDegree> twists;
  for (const auto& g : gens) twists.push_back(*bidegreeOf(m.ring(), m.target(), g));
  return Matrix(m.ring(), FreeModule(std::move(twists)), m.target(), std::move(gens));
}

Matrix syzygyBasis(const GroebnerBasis& gb) {
  std::vector<BiDegree> twists;
  for (const auto& g : gb.generators()) twists.push_back(*bidegreeOf(gb.ring(), gb.ambient(), g));
  Matrix m(gb.ring(), FreeModule(std::move(twists)), gb.ambient(), gb.generators());
  return kernelOfMap(m);
}

Matrix kernelOfMap(const Matrix& f, const Matrix* modulo) {
  const Ring& ring = f.ring();
  const FreeModule& target = f.target();
  const FreeModule& source = f.source();
  if (modulo && modulo->target() != target)
    throw ShapeMismatch("kernel_of_map: modulo matrix has a different target");

  const std::size_t offset = target.rank();
  FreeModule combined = target.directSum(source);
  detail::GbEngine engine(ring.field(), detail::TermOrder::elimination(combined, offset));
  std::vector<detail::OrderedVec> inputs;
  for (std::size_t c = 0; c < source.rank(); ++c) {
    ModuleVector v = add(ring.field(), f.column(c), ModuleVector::basis(offset + c));
    inputs.push_back(engine.toOrdered(v));
  }
  if (modulo)
    for (const auto& col : modulo->columns()) inputs.push_back(engine.toOrdered(col));
  engine.run(inputs, std::nullopt);

  std::vector<ModuleVector> kernel;
  for (const auto& v : engine.basis())
    if (v.front().comp >= offset)
      kernel.push_back(restrictComponents(detail::GbEngine::toStorage(ring.field(), v), offset, source.rank()));

  auto gens = minimalGenerators(ring, source, kernel);
  std::vector<BiDegree> twists;
  for (const auto& g : gens) twists.push_back(*bidegreeOf(ring, source, g));
  return Matrix(ring, FreeModule(std::move(twists)), source, std::move(gens));
}

namespace {

std::vector<std::optional<ModuleVector>> liftAll(const Matrix& gens, const std::vector<ModuleVector>& targets) {
  const Ring& ring = gens.ring();
  const std::size_t offset = gens.target().rank();
  FreeModule combined = gens.target().directSum(gens.source());
  detail::GbEngine engine(ring.field(), detail::TermOrder::elimination(combined, offset));

  std::optional<int> bound;
  for (const auto& v : targets) {
    auto d = bidegreeOf(ring, gens.target(), v);
    if (d) bound = bound ? std::max(*bound, d->total()) : d->total();
  }
  std::vector<std::optional<ModuleVector>> out(targets.size());
  if (!bound) {
    for (auto& o : out) o = ModuleVector();
    return out;
  }
  std::vector<detail::OrderedVec> inputs;
  for (std::size_t c = 0; c < gens.numColumns(); ++c)
    inputs.push_back(engine.toOrdered(add(ring.field(), gens.column(c), ModuleVector::basis(offset + c))));
  engine.run(inputs, bound);

  for (std::size_t k = 0; k < targets.size(); ++k) {
    detail::OrderedVec r = engine.reduce(engine.toOrdered(targets[k]));
    bool inImage = std::all_of(r.begin(), r.end(), [&](const VecTerm& t) { return t.comp >= offset; });
    if (!inImage) continue;
    ModuleVector rest = restrictComponents(detail::GbEngine::toStorage(ring.field(), r), offset, gens.numColumns());
    out[k] = scale(ring.field(), rest, ring.field().neg(1));
  }
  return out;
}

}  // namespace

std::optional<ModuleVector> lift(const Matrix& gens, const ModuleVector& v) { return liftAll(gens, {v}).front(); }

Matrix factorThrough(const Matrix& gens, const Matrix& f) {
  if (gens.target() != f.target()) throw ShapeMismatch("factor_through: targets differ");
  auto lifted = liftAll(gens, f.columns());
  std::vector<ModuleVector> cols;
  for (std::size_t k = 0; k < lifted.size(); ++k) {
    if (!lifted[k]) throw InternalError("factor_through: column " + std::to_string(k) + " is not in the image");
    cols.push_back(std::move(*lifted[k]));
  }
  return Matrix(f.ring(), f.source(), gens.source(), std::move(cols));
}

}  // namespace relcm
