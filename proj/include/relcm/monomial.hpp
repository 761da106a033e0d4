#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace relcm {

inline constexpr int kMaxVariables = 8;

struct BiDegree {
  int x = 0;
  int y = 0;

  int total() const { return x + y; }

  BiDegree operator+(BiDegree o) const { return {x + o.x, y + o.y}; }
  BiDegree operator-(BiDegree o) const { return {x - o.x, y - o.y}; }
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
};

/// Exponent vector over at most kMaxVariables variables. Variables beyond the
/// ring's count are always zero. The total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(int index, int power = 1);

  int exponent(int var) const { return exp_[static_cast<std::size_t>(var)]; }
  int degree() const { return degree_; }
  bool isOne() const { return degree_ == 0; }
  // Sum of exponents of variables [first, first + count).
  int partialDegree(int first, int count) const;

  Monomial operator*(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  int degree_ = 0;
};

// Pure reverse-lexicographic comparison on exponent vectors: the monomial with
// the smaller exponent in the last differing variable is larger. Returns -1/0/1.
int compareRevLex(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic order, x1 > ... > xm > y1 > ... > yn.
int compareDegRevLex(const Monomial& a, const Monomial& b);

// All monomials of the given degree in variables [first, first + count),
// lexicographically descending (x1^d first).
std::vector<Monomial> monomialsOfDegree(int first, int count, int degree);

}  // namespace relcm
