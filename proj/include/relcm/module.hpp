#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "relcm/ring.hpp"

namespace relcm {

/// Bigraded free module ⊕ S(-a_i, -b_i); twist(i) = (a_i, b_i) is the degree
/// of the i-th basis element.
class FreeModule {
 public:
  FreeModule() = default;
  explicit FreeModule(std::vector<BiDegree> twists) : twists_(std::move(twists)) {}
  static FreeModule ofRank(std::size_t rank) { return FreeModule(std::vector<BiDegree>(rank)); }

  std::size_t rank() const { return twists_.size(); }
  BiDegree twist(std::size_t i) const { return twists_[i]; }
  const std::vector<BiDegree>& twists() const { return twists_; }

  FreeModule directSum(const FreeModule& other) const;
  FreeModule shifted(BiDegree d) const;

  friend bool operator==(const FreeModule&, const FreeModule&) = default;

 private:
  std::vector<BiDegree> twists_;
};

struct VecTerm {
  std::uint32_t comp = 0;
  Monomial mono;
  Coeff coeff = 0;

  friend bool operator==(const VecTerm&, const VecTerm&) = default;
};

/// Element of a free module, stored canonically: components ascending, within
/// a component monomials descending in degrevlex, no zero coefficients.
class ModuleVector {
 public:
  ModuleVector() = default;

  static ModuleVector basis(std::size_t i, Coeff c = 1);
  static ModuleVector fromEntries(const std::vector<Polynomial>& entries);
  static ModuleVector fromTerms(const PrimeField& field, std::vector<VecTerm> terms);
  static ModuleVector fromCanonical(std::vector<VecTerm> terms);

  const std::vector<VecTerm>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Polynomial entry(std::size_t comp) const;
  // One past the largest component index that occurs.
  std::size_t componentBound() const { return terms_.empty() ? 0 : terms_.back().comp + 1; }

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  std::vector<VecTerm> terms_;
};

ModuleVector add(const PrimeField& f, const ModuleVector& a, const ModuleVector& b);
// a + c * mono * b
ModuleVector addMultiple(const PrimeField& f, const ModuleVector& a, Coeff c, const Monomial& mono,
                         const ModuleVector& b);
ModuleVector scale(const PrimeField& f, const ModuleVector& v, Coeff c);
ModuleVector multiply(const PrimeField& f, const Polynomial& p, const ModuleVector& v);
// Re-indexes every component by adding offset.
ModuleVector shiftComponents(const ModuleVector& v, std::int64_t offset);
// Keeps components in [first, first + count), re-indexed from zero.
ModuleVector restrictComponents(const ModuleVector& v, std::size_t first, std::size_t count);

/// Common bidegree d of a bihomogeneous vector: every entry i has degree
/// d - twist(i). Zero vectors yield nullopt; mixed degrees throw NotBihomogeneous.
std::optional<BiDegree> bidegreeOf(const Ring& ring, const FreeModule& ambient, const ModuleVector& v);

/// Bihomogeneous matrix source -> target; column j is the image of basis
/// element j and has degree source.twist(j).
class Matrix {
 public:
  Matrix(Ring ring, FreeModule source, FreeModule target, std::vector<ModuleVector> columns);

  static Matrix zero(const Ring& ring, const FreeModule& source, const FreeModule& target);
  static Matrix identity(const Ring& ring, const FreeModule& module);

  const Ring& ring() const { return ring_; }
  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  const std::vector<ModuleVector>& columns() const { return columns_; }
  const ModuleVector& column(std::size_t j) const { return columns_[j]; }
  std::size_t numRows() const { return target_.rank(); }
  std::size_t numColumns() const { return source_.rank(); }
  Polynomial entry(std::size_t row, std::size_t col) const { return columns_[col].entry(row); }
  bool isZero() const;

  ModuleVector apply(const ModuleVector& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Ring ring_;
  FreeModule source_;
  FreeModule target_;
  std::vector<ModuleVector> columns_;
};

// g ∘ f; requires f.target() == g.source().
Matrix compose(const Matrix& g, const Matrix& f);

// [a | b] : a.source ⊕ b.source -> target.
Matrix concatColumns(const Matrix& a, const Matrix& b);

}  // namespace relcm
