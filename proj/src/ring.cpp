#include "relcm/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "relcm/errors.hpp"

namespace relcm {

Polynomial Polynomial::term(const Monomial& mono, Coeff coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back({mono, coeff});
  return p;
}

Polynomial Polynomial::fromTerms(const PrimeField& field, std::vector<PolyTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const PolyTerm& a, const PolyTerm& b) {
    return compareDegRevLex(a.mono, b.mono) > 0;
  });
  Polynomial p;
  for (const auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

Polynomial Polynomial::fromCanonical(std::vector<PolyTerm> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Ring::Ring(std::uint32_t prime, int m, int n) : field_(prime), m_(m), n_(n) {
  if (m < 0 || n < 0 || m + n > kMaxVariables)
    throw InputError("ring must have 0 <= m, n and m + n <= " + std::to_string(kMaxVariables));
}

std::optional<BiDegree> Ring::bidegree(const Polynomial& p) const {
  if (p.isZero()) return std::nullopt;
  BiDegree d = bidegree(p.leading().mono);
  for (const auto& t : p.terms())
    if (bidegree(t.mono) != d) throw NotBihomogeneous("polynomial " + format(p) + " is not bihomogeneous");
  return d;
}

bool Ring::isBihomogeneous(const Polynomial& p) const {
  if (p.isZero()) return true;
  BiDegree d = bidegree(p.leading().mono);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const PolyTerm& t) { return bidegree(t.mono) == d; });
}

Monomial Ring::xPart(const Monomial& mono) const {
  std::vector<int> e(static_cast<std::size_t>(variables()), 0);
  for (int i = 0; i < m_; ++i) e[static_cast<std::size_t>(i)] = mono.exponent(i);
  return Monomial(e);
}

Monomial Ring::yPart(const Monomial& mono) const {
  std::vector<int> e(static_cast<std::size_t>(variables()), 0);
  for (int i = m_; i < m_ + n_; ++i) e[static_cast<std::size_t>(i)] = mono.exponent(i);
  return Monomial(e);
}

Monomial Ring::toYRing(const Monomial& mono) const {
  std::vector<int> e(static_cast<std::size_t>(n_), 0);
  for (int j = 0; j < n_; ++j) e[static_cast<std::size_t>(j)] = mono.exponent(m_ + j);
  return Monomial(e);
}

Monomial Ring::fromYRing(const Monomial& mono) const {
  std::vector<int> e(static_cast<std::size_t>(variables()), 0);
  for (int j = 0; j < n_; ++j) e[static_cast<std::size_t>(m_ + j)] = mono.exponent(j);
  return Monomial(e);
}

Polynomial Ring::constant(std::int64_t c) const { return Polynomial::term(Monomial(), field_.fromInt(c)); }

namespace {

// a + c * mono * b, both operands canonical.
Polynomial combine(const PrimeField& f, const Polynomial& a, const Polynomial& b, Coeff c,
                   const Monomial& mono) {
  std::vector<PolyTerm> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb) {
      out.push_back(*ia++);
      continue;
    }
    Monomial mb = ib->mono * mono;
    if (ia == ea) {
      Coeff v = f.mul(c, ib->coeff);
      if (v != 0) out.push_back({mb, v});
      ++ib;
      continue;
    }
    int cmp = compareDegRevLex(ia->mono, mb);
    if (cmp > 0) {
      out.push_back(*ia++);
    } else if (cmp < 0) {
      Coeff v = f.mul(c, ib->coeff);
      if (v != 0) out.push_back({mb, v});
      ++ib;
    } else {
      Coeff v = f.add(ia->coeff, f.mul(c, ib->coeff));
      if (v != 0) out.push_back({mb, v});
      ++ia;
      ++ib;
    }
  }
  return Polynomial::fromCanonical(std::move(out));
}

}  // namespace

Polynomial Ring::add(const Polynomial& a, const Polynomial& b) const {
  return combine(field_, a, b, 1, Monomial());
}

Polynomial Ring::sub(const Polynomial& a, const Polynomial& b) const {
  return combine(field_, a, b, field_.neg(1), Monomial());
}

Polynomial Ring::neg(const Polynomial& a) const { return scale(a, field_.neg(1)); }

Polynomial Ring::scale(const Polynomial& a, Coeff c) const { return mulTerm(a, c, Monomial()); }

Polynomial Ring::mulTerm(const Polynomial& a, Coeff c, const Monomial& mono) const {
  return combine(field_, Polynomial(), a, c, mono);
}

Polynomial Ring::mul(const Polynomial& a, const Polynomial& b) const {
  std::vector<PolyTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) terms.push_back({ta.mono * tb.mono, field_.mul(ta.coeff, tb.coeff)});
  return Polynomial::fromTerms(field_, std::move(terms));
}

std::string Ring::variableName(int var) const {
  if (var < m_) return "x" + std::to_string(var + 1);
  return "y" + std::to_string(var - m_ + 1);
}

std::string Ring::formatMonomial(const Monomial& mono) const {
  std::string s;
  for (int v = 0; v < variables(); ++v) {
    int e = mono.exponent(v);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += variableName(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string Ring::format(const Polynomial& p) const {
  if (p.isZero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::int64_t c = field_.toSigned(t.coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.isOne()) {
      s += std::to_string(mag);
    } else {
      if (mag != 1) s += std::to_string(mag) + '*';
      s += formatMonomial(t.mono);
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    std::vector<PolyTerm> terms;
    skipSpace();
    if (pos_ >= text_.size()) fail("empty polynomial");
    bool firstTerm = true;
    while (true) {
      skipSpace();
      if (pos_ >= text_.size()) break;
      bool negative = false;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        negative = text_[pos_] == '-';
        ++pos_;
      } else if (!firstTerm) {
        fail("expected '+' or '-'");
      }
      firstTerm = false;
      PolyTerm t = parseTerm();
      if (negative) t.coeff = ring_.field().neg(t.coeff);
      terms.push_back(t);
    }
    return Polynomial::fromTerms(ring_.field(), std::move(terms));
  }

 private:
  PolyTerm parseTerm() {
    const PrimeField& f = ring_.field();
    Coeff coeff = 1;
    std::vector<int> exps(static_cast<std::size_t>(kMaxVariables), 0);
    while (true) {
      skipSpace();
      if (pos_ >= text_.size()) fail("expected a factor");
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = f.mul(coeff, f.fromInt(readInteger()));
      } else if (c == 'x' || c == 'y') {
        std::size_t start = pos_;
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected variable index", start);
        std::int64_t idx = readInteger();
        int limit = c == 'x' ? ring_.m() : ring_.n();
        if (idx < 1 || idx > limit)
          fail("unknown variable " + std::string(1, c) + std::to_string(idx), start);
        int var = c == 'x' ? static_cast<int>(idx - 1) : ring_.m() + static_cast<int>(idx - 1);
        int power = 1;
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skipSpace();
          if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected exponent");
          std::int64_t e = readInteger();
          if (e > 10000) fail("exponent too large");
          power = static_cast<int>(e);
        }
        exps[static_cast<std::size_t>(var)] += power;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skipSpace();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {Monomial(exps), coeff};
  }

  std::int64_t readInteger() {
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > std::numeric_limits<std::int64_t>::max() / 10 - 10) fail("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError(msg, 1, static_cast<int>(at) + 1);
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Ring::parse(std::string_view text) const { return PolyParser(*this, text).parse(); }

}  // namespace relcm
