#pragma once

// Helpers shared by the unit tests: parsing shorthands, a dense linear algebra
// oracle working degree by degree, and seeded random generators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "relcm/resolution.hpp"

namespace relcm::testing {

inline ModuleVector vec(const Ring& ring, const std::vector<std::string>& entries) {
  std::vector<Polynomial> polys;
  for (const auto& e : entries) polys.push_back(ring.parse(e));
  return ModuleVector::fromEntries(polys);
}

inline Matrix matrixFromRows(const Ring& ring, const FreeModule& target,
                             const std::vector<std::vector<std::string>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<ModuleVector> columns;
  std::vector<BiDegree> twists;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<std::string> entries;
    for (const auto& r : rows) entries.push_back(r[c]);
    ModuleVector v = vec(ring, entries);
    columns.push_back(v);
    twists.push_back(*bidegreeOf(ring, target, v));
  }
  return Matrix(ring, FreeModule(twists), target, columns);
}

inline PresentedModule cokernel(const Ring& ring, const FreeModule& ambient,
                                const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty() || rows.front().empty()) return PresentedModule::free(ring, ambient);
  return PresentedModule(matrixFromRows(ring, ambient, rows));
}

// S / (gens) as a cyclic module.
inline PresentedModule quotientRing(const Ring& ring, const std::vector<std::string>& gens) {
  if (gens.empty()) return PresentedModule::free(ring, FreeModule::ofRank(1));
  return cokernel(ring, FreeModule::ofRank(1), {gens});
}

// K-basis of the degree-d part of a free module: pairs (component, monomial).
inline std::vector<std::pair<std::size_t, Monomial>> degreeBasis(const Ring& ring, const FreeModule& f,
                                                                 BiDegree d) {
  std::vector<std::pair<std::size_t, Monomial>> out;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    BiDegree r = d - f.twist(i);
    if (r.x < 0 || r.y < 0) continue;
    for (const auto& xm : monomialsOfDegree(0, ring.m(), r.x))
      for (const auto& ym : monomialsOfDegree(ring.m(), ring.n(), r.y)) out.push_back({i, xm * ym});
  }
  return out;
}

inline std::size_t rankMod(const PrimeField& f, std::vector<std::vector<Coeff>> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Coeff inv = f.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Coeff factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

inline std::vector<Coeff> coordinates(const std::vector<std::pair<std::size_t, Monomial>>& basis,
                                      const ModuleVector& v) {
  std::vector<Coeff> out(basis.size(), 0);
  for (const auto& t : v.terms()) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].first == t.comp && basis[k].second == t.mono) out[k] = t.coeff;
  }
  return out;
}

// Vectors mono * g spanning the degree-d part of the submodule generated by gens.
inline std::vector<ModuleVector> degreeSpan(const Ring& ring, const FreeModule& f,
                                            const std::vector<ModuleVector>& gens, BiDegree d) {
  std::vector<ModuleVector> out;
  for (const auto& g : gens) {
    auto gd = bidegreeOf(ring, f, g);
    if (!gd) continue;
    BiDegree r = d - *gd;
    if (r.x < 0 || r.y < 0) continue;
    for (const auto& xm : monomialsOfDegree(0, ring.m(), r.x))
      for (const auto& ym : monomialsOfDegree(ring.m(), ring.n(), r.y))
        out.push_back(addMultiple(ring.field(), ModuleVector(), 1, xm * ym, g));
  }
  return out;
}

// dim_K of the degree-d part of the submodule generated by gens.
inline std::size_t spanDimension(const Ring& ring, const FreeModule& f, const std::vector<ModuleVector>& gens,
                                 BiDegree d) {
  auto basis = degreeBasis(ring, f, d);
  std::vector<std::vector<Coeff>> rows;
  for (const auto& v : degreeSpan(ring, f, gens, d)) rows.push_back(coordinates(basis, v));
  return rankMod(ring.field(), rows);
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Coeff coeff(const PrimeField& f) { return static_cast<Coeff>(rng_() % f.characteristic()); }

  Polynomial poly(const Ring& ring, BiDegree d, int density) {
    std::vector<PolyTerm> terms;
    if (d.x < 0 || d.y < 0) return {};
    auto xs = monomialsOfDegree(0, ring.m(), d.x);
    auto ys = monomialsOfDegree(ring.m(), ring.n(), d.y);
    if (xs.empty() || ys.empty()) return {};
    for (int k = 0; k < density; ++k) {
      const Monomial& xm = xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
      const Monomial& ym = ys[static_cast<std::size_t>(uniform(0, static_cast<int>(ys.size()) - 1))];
      terms.push_back({xm * ym, coeff(ring.field())});
    }
    return Polynomial::fromTerms(ring.field(), terms);
  }

  ModuleVector vector(const Ring& ring, const FreeModule& f, BiDegree d, int density) {
    std::vector<Polynomial> entries;
    for (std::size_t i = 0; i < f.rank(); ++i) entries.push_back(poly(ring, d - f.twist(i), density));
    return ModuleVector::fromEntries(entries);
  }

  // Bihomogeneous presentation with ambient rank <= 2, at most maxRelations
  // relation columns of bidegree <= (2,2) above the ambient twists.
  PresentedModule presentation(const Ring& ring, int maxRelations) {
    std::size_t rank = static_cast<std::size_t>(uniform(1, 2));
    std::vector<BiDegree> twists;
    for (std::size_t i = 0; i < rank; ++i) twists.push_back({uniform(0, 1), uniform(0, 1)});
    FreeModule f(twists);
    std::vector<ModuleVector> cols;
    std::vector<BiDegree> degrees;
    int count = uniform(0, maxRelations);
    for (int k = 0; k < count; ++k) {
      BiDegree d{uniform(0, 2) + twists[0].x, uniform(0, 2) + twists[0].y};
      if (d == twists[0]) d.x += 1;
      ModuleVector v = vector(ring, f, d, 2);
      if (v.isZero()) continue;
      cols.push_back(v);
      degrees.push_back(d);
    }
    return PresentedModule(Matrix(ring, FreeModule(degrees), f, cols));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace relcm::testing
