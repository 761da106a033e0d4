#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relcm/field.hpp"
#include "relcm/monomial.hpp"

namespace relcm {

struct PolyTerm {
  Monomial mono;
  Coeff coeff = 0;

  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

/// Polynomial in canonical form: terms strictly decreasing in degrevlex, no
/// zero coefficients. Equality is therefore structural.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial term(const Monomial& mono, Coeff coeff = 1);
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial fromTerms(const PrimeField& field, std::vector<PolyTerm> terms);
  // Caller guarantees canonical order and nonzero coefficients.
  static Polynomial fromCanonical(std::vector<PolyTerm> terms);

  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const PolyTerm& leading() const { return terms_.front(); }
  // Nonzero constant.
  bool isUnit() const { return terms_.size() == 1 && terms_.front().mono.isOne(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<PolyTerm> terms_;
};

/// S = K[x1..xm, y1..yn] with deg xi = (1,0), deg yj = (0,1). Variable index
/// i < m is x_{i+1}; index m + j is y_{j+1}. The subrings K[x] and K[y] are
/// rings of their own with n = 0 resp. m = 0.
class Ring {
 public:
  Ring(std::uint32_t prime, int m, int n);

  const PrimeField& field() const { return field_; }
  std::uint32_t prime() const { return field_.characteristic(); }
  int m() const { return m_; }
  int n() const { return n_; }
  int variables() const { return m_ + n_; }

  Ring xRing() const { return Ring(prime(), m_, 0); }
  Ring yRing() const { return Ring(prime(), 0, n_); }

  Monomial x(int i) const { return Monomial::variable(i); }
  Monomial y(int j) const { return Monomial::variable(m_ + j); }

  BiDegree bidegree(const Monomial& mono) const {
    return {mono.partialDegree(0, m_), mono.partialDegree(m_, n_)};
  }
  // Zero polynomial has no degree; mixed degrees throw NotBihomogeneous.
  std::optional<BiDegree> bidegree(const Polynomial& p) const;
  bool isBihomogeneous(const Polynomial& p) const;

  // Split a monomial of S into its x-part and y-part (both still indexed in S).
  Monomial xPart(const Monomial& mono) const;
  Monomial yPart(const Monomial& mono) const;
  // y-exponents of an S-monomial, re-indexed for K[y] (and back).
  Monomial toYRing(const Monomial& mono) const;
  Monomial fromYRing(const Monomial& mono) const;

  Polynomial constant(std::int64_t c) const;
  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, Coeff c) const;
  Polynomial mulTerm(const Polynomial& a, Coeff c, const Monomial& mono) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;

  // Text syntax: signed integer coefficients, '*' products, '^' powers,
  // variables x1..xm, y1..yn. Whitespace is insignificant.
  Polynomial parse(std::string_view text) const;
  std::string format(const Polynomial& p) const;
  std::string formatMonomial(const Monomial& mono) const;
  std::string variableName(int var) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  PrimeField field_;
  int m_;
  int n_;
};

}  // namespace relcm
