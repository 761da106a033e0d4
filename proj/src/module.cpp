#include "relcm/module.hpp"

#include <algorithm>
#include <string>

#include "relcm/errors.hpp"

namespace relcm {

FreeModule FreeModule::directSum(const FreeModule& other) const {
  std::vector<BiDegree> t = twists_;
  t.insert(t.end(), other.twists_.begin(), other.twists_.end());
  return FreeModule(std::move(t));
}

FreeModule FreeModule::shifted(BiDegree d) const {
  std::vector<BiDegree> t = twists_;
  for (auto& x : t) x = x + d;
  return FreeModule(std::move(t));
}

namespace {

// Canonical storage order: component ascending, then degrevlex descending.
bool storageBefore(const VecTerm& a, const VecTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp;
  return compareDegRevLex(a.mono, b.mono) > 0;
}

int storageCompare(const VecTerm& a, std::uint32_t comp, const Monomial& mono) {
  if (a.comp != comp) return a.comp < comp ? -1 : 1;
  return -compareDegRevLex(a.mono, mono);
}

}  // namespace

ModuleVector ModuleVector::basis(std::size_t i, Coeff c) {
  ModuleVector v;
  if (c != 0) v.terms_.push_back({static_cast<std::uint32_t>(i), Monomial(), c});
  return v;
}

ModuleVector ModuleVector::fromEntries(const std::vector<Polynomial>& entries) {
  ModuleVector v;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& t : entries[i].terms())
      v.terms_.push_back({static_cast<std::uint32_t>(i), t.mono, t.coeff});
  return v;
}

ModuleVector ModuleVector::fromTerms(const PrimeField& field, std::vector<VecTerm> terms) {
  std::sort(terms.begin(), terms.end(), storageBefore);
  ModuleVector v;
  for (const auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().comp == t.comp && v.terms_.back().mono == t.mono) {
      v.terms_.back().coeff = field.add(v.terms_.back().coeff, t.coeff);
      if (v.terms_.back().coeff == 0) v.terms_.pop_back();
    } else if (t.coeff != 0) {
      v.terms_.push_back(t);
    }
  }
  return v;
}

ModuleVector ModuleVector::fromCanonical(std::vector<VecTerm> terms) {
  ModuleVector v;
  v.terms_ = std::move(terms);
  return v;
}

Polynomial ModuleVector::entry(std::size_t comp) const {
  std::vector<PolyTerm> out;
  for (const auto& t : terms_)
    if (t.comp == comp) out.push_back({t.mono, t.coeff});
  return Polynomial::fromCanonical(std::move(out));
}

ModuleVector addMultiple(const PrimeField& f, const ModuleVector& a, Coeff c, const Monomial& mono,
                         const ModuleVector& b) {
  std::vector<VecTerm> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb) {
      out.push_back(*ia++);
      continue;
    }
    Monomial mb = ib->mono * mono;
    int cmp = ia == ea ? 1 : storageCompare(*ia, ib->comp, mb);
    if (cmp < 0) {
      out.push_back(*ia++);
    } else if (cmp > 0) {
      Coeff v = f.mul(c, ib->coeff);
      if (v != 0) out.push_back({ib->comp, mb, v});
      ++ib;
    } else {
      Coeff v = f.add(ia->coeff, f.mul(c, ib->coeff));
      if (v != 0) out.push_back({ib->comp, mb, v});
      ++ia;
      ++ib;
    }
  }
  return ModuleVector::fromCanonical(std::move(out));
}

ModuleVector add(const PrimeField& f, const ModuleVector& a, const ModuleVector& b) {
  return addMultiple(f, a, 1, Monomial(), b);
}

ModuleVector scale(const PrimeField& f, const ModuleVector& v, Coeff c) {
  return addMultiple(f, ModuleVector(), c, Monomial(), v);
}

ModuleVector multiply(const PrimeField& f, const Polynomial& p, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& t : p.terms()) out = addMultiple(f, out, t.coeff, t.mono, v);
  return out;
}

ModuleVector shiftComponents(const ModuleVector& v, std::int64_t offset) {
  std::vector<VecTerm> out = v.terms();
  for (auto& t : out) t.comp = static_cast<std::uint32_t>(static_cast<std::int64_t>(t.comp) + offset);
  return ModuleVector::fromCanonical(std::move(out));
}

ModuleVector restrictComponents(const ModuleVector& v, std::size_t first, std::size_t count) {
  std::vector<VecTerm> out;
  for (const auto& t : v.terms())
    if (t.comp >= first && t.comp < first + count)
      out.push_back({static_cast<std::uint32_t>(t.comp - first), t.mono, t.coeff});
  return ModuleVector::fromCanonical(std::move(out));
}

std::optional<BiDegree> bidegreeOf(const Ring& ring, const FreeModule& ambient, const ModuleVector& v) {
  if (v.isZero()) return std::nullopt;
  std::optional<BiDegree> d;
  for (const auto& t : v.terms()) {
    if (t.comp >= ambient.rank()) throw ShapeMismatch("vector component outside ambient module");
    BiDegree td = ring.bidegree(t.mono) + ambient.twist(t.comp);
    if (!d) {
      d = td;
    } else if (*d != td) {
      throw NotBihomogeneous("vector mixes bidegrees (" + std::to_string(d->x) + "," +
                             std::to_string(d->y) + ") and (" + std::to_string(td.x) + "," +
                             std::to_string(td.y) + ")");
    }
  }
  return d;
}

Matrix::Matrix(Ring ring, FreeModule source, FreeModule target, std::vector<ModuleVector> columns)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (columns_.size() != source_.rank())
    throw ShapeMismatch("matrix has " + std::to_string(columns_.size()) + " columns but source rank " +
                        std::to_string(source_.rank()));
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    auto d = bidegreeOf(ring_, target_, columns_[j]);
    if (d && *d != source_.twist(j))
      throw DegreeInconsistent("column " + std::to_string(j) + " has degree (" + std::to_string(d->x) + "," +
                                   std::to_string(d->y) + ") but source twist (" +
                                   std::to_string(source_.twist(j).x) + "," + std::to_string(source_.twist(j).y) +
                                   ")",
                               j);
  }
}

Matrix Matrix::zero(const Ring& ring, const FreeModule& source, const FreeModule& target) {
  return Matrix(ring, source, target, std::vector<ModuleVector>(source.rank()));
}

Matrix Matrix::identity(const Ring& ring, const FreeModule& module) {
  std::vector<ModuleVector> cols;
  for (std::size_t i = 0; i < module.rank(); ++i) cols.push_back(ModuleVector::basis(i));
  return Matrix(ring, module, module, std::move(cols));
}

bool Matrix::isZero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const ModuleVector& c) { return c.isZero(); });
}

ModuleVector Matrix::apply(const ModuleVector& v) const {
  const PrimeField& f = ring_.field();
  ModuleVector out;
  for (const auto& t : v.terms()) {
    if (t.comp >= columns_.size()) throw ShapeMismatch("vector component outside matrix source");
    out = addMultiple(f, out, t.coeff, t.mono, columns_[t.comp]);
  }
  return out;
}

Matrix compose(const Matrix& g, const Matrix& f) {
  if (f.target() != g.source()) throw ShapeMismatch("cannot compose: target of f differs from source of g");
  if (f.ring() != g.ring()) throw ShapeMismatch("cannot compose maps over different rings");
  std::vector<ModuleVector> cols;
  cols.reserve(f.numColumns());
  for (const auto& c : f.columns()) cols.push_back(g.apply(c));
  return Matrix(g.ring(), f.source(), g.target(), std::move(cols));
}

Matrix concatColumns(const Matrix& a, const Matrix& b) {
  if (a.target() != b.target()) throw ShapeMismatch("cannot concatenate maps with different targets");
  std::vector<ModuleVector> cols = a.columns();
  cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  return Matrix(a.ring(), a.source().directSum(b.source()), a.target(), std::move(cols));
}

}  // namespace relcm
