#include "relcm/monomial.hpp"

#include <algorithm>

#include "relcm/errors.hpp"

namespace relcm {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVariables))
    throw InputError("too many variables in monomial");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xffff) throw InputError("monomial exponent out of range");
    exp_[i] = static_cast<std::uint16_t>(exponents[i]);
    degree_ += exponents[i];
  }
}

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  m.exp_[static_cast<std::size_t>(index)] = static_cast<std::uint16_t>(power);
  m.degree_ = power;
  return m;
}

int Monomial::partialDegree(int first, int count) const {
  int d = 0;
  for (int i = first; i < first + count; ++i) d += exp_[static_cast<std::size_t>(i)];
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] + other.exp_[i]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
  return h;
}

int compareRevLex(const Monomial& a, const Monomial& b) {
  for (int i = kMaxVariables - 1; i >= 0; --i) {
    int ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int compareDegRevLex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  return compareRevLex(a, b);
}

namespace {

void enumerate(int var, int last, int remaining, std::array<int, kMaxVariables>& exps,
               std::vector<Monomial>& out) {
  if (var == last) {
    exps[static_cast<std::size_t>(var)] = remaining;
    out.emplace_back(std::span<const int>(exps.data(), exps.size()));
    exps[static_cast<std::size_t>(var)] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(var)] = e;
    enumerate(var + 1, last, remaining - e, exps, out);
  }
  exps[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomialsOfDegree(int first, int count, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (count == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::array<int, kMaxVariables> exps{};
  enumerate(first, first + count - 1, degree, exps, out);
  return out;
}

}  // namespace relcm
