#include "relcm/module_file.hpp"

#include <cctype>
#include <charconv>
#include <json.hpp>

#include "relcm/errors.hpp"

namespace relcm {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  ModuleFile::Position position() const { return {line_, column_}; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }
  [[noreturn]] static void failAt(const std::string& what, ModuleFile::Position p) {
    throw ParseError(what, p.line, p.column);
  }

  void skipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool atEnd() {
    skipSpace();
    return pos_ >= text_.size();
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but reached the end");
      fail(std::string("expected '") + c + "'");
    }
  }

  // A bare identifier or a quoted string.
  std::string key() {
    if (peek() == '"') return string();
    std::string out;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out += text_[pos_];
      advance();
    }
    if (out.empty()) fail("expected a key");
    return out;
  }

  std::string string() {
    skipSpace();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected a quoted string");
    advance();
    std::string out;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') fail("unterminated string");
      char c = text_[pos_];
      advance();
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= text_.size()) fail("unterminated string");
        c = text_[pos_];
        advance();
      }
      out += c;
    }
    return out;
  }

  std::int64_t integer() {
    skipSpace();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
      pos_ = start;
      fail("expected an integer");
    }
    column_ += static_cast<int>(pos_ - start);
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      fail("expected an integer");
    return value;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

int smallInt(Reader& r, const char* what) {
  auto p = r.position();
  std::int64_t v = r.integer();
  if (v < -1000000 || v > 1000000) Reader::failAt(std::string(what) + " out of range", p);
  return static_cast<int>(v);
}

void readRing(Reader& r, ModuleFile& out) {
  bool seen[3] = {false, false, false};
  r.expect('{');
  if (!r.accept('}')) {
    do {
      auto p = r.position();
      std::string k = r.key();
      r.expect(':');
      if (k == "p") {
        auto vp = r.position();
        std::int64_t v = r.integer();
        if (v < 2 || v > 2147483647) Reader::failAt("prime out of range", vp);
        out.prime = static_cast<std::uint32_t>(v);
        seen[0] = true;
      } else if (k == "m") {
        out.m = smallInt(r, "m");
        seen[1] = true;
      } else if (k == "n") {
        out.n = smallInt(r, "n");
        seen[2] = true;
      } else {
        Reader::failAt("unknown ring key '" + k + "'", p);
      }
    } while (r.accept(','));
    r.expect('}');
  }
  if (!seen[1]) r.fail("ring is missing m");
  if (!seen[2]) r.fail("ring is missing n");
}

void readModule(Reader& r, ModuleFile& out) {
  bool seenTwists = false;
  r.expect('{');
  ModuleFile::Position relationsAt{};
  if (!r.accept('}')) {
    do {
      auto p = r.position();
      std::string k = r.key();
      r.expect(':');
      if (k == "twists") {
        seenTwists = true;
        r.expect('[');
        if (!r.accept(']')) {
          do {
            r.expect('[');
            int a = smallInt(r, "twist");
            r.expect(',');
            int b = smallInt(r, "twist");
            r.expect(']');
            out.twists.push_back({a, b});
          } while (r.accept(','));
          r.expect(']');
        }
      } else if (k == "relations") {
        relationsAt = r.position();
        r.expect('[');
        if (!r.accept(']')) {
          do {
            auto rowAt = r.position();
            r.expect('[');
            std::vector<std::string> row;
            std::vector<ModuleFile::Position> where;
            if (!r.accept(']')) {
              do {
                r.skipSpace();
                where.push_back(r.position());
                row.push_back(r.string());
              } while (r.accept(','));
              r.expect(']');
            }
            if (!out.relations.empty() && row.size() != out.relations.front().size())
              Reader::failAt("relation row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(out.relations.front().size()),
                             rowAt);
            out.relations.push_back(std::move(row));
            out.entryPositions.push_back(std::move(where));
          } while (r.accept(','));
          r.expect(']');
        }
      } else {
        Reader::failAt("unknown module key '" + k + "'", p);
      }
    } while (r.accept(','));
    r.expect('}');
  }
  if (!seenTwists) r.fail("module is missing twists");
  if (!out.relations.empty() && out.relations.size() != out.twists.size())
    Reader::failAt("relations have " + std::to_string(out.relations.size()) + " rows but there are " +
                       std::to_string(out.twists.size()) + " twists",
                   relationsAt);
}

}  // namespace

ModuleFile readModuleFile(std::string_view text) {
  Reader r(text);
  ModuleFile out;
  bool seenRing = false, seenModule = false;
  bool wrapped = r.accept('{');
  bool first = true;
  while (wrapped ? r.peek() != '}' && (first || r.accept(',')) : !r.atEnd()) {
    first = false;
    auto p = r.position();
    std::string k = r.key();
    r.accept(':');
    if (k == "ring" && !seenRing) {
      readRing(r, out);
      seenRing = true;
    } else if (k == "module" && !seenModule) {
      readModule(r, out);
      seenModule = true;
    } else {
      Reader::failAt("unexpected section '" + k + "'", p);
    }
  }
  if (wrapped) {
    r.expect('}');
    if (!r.atEnd()) r.fail("unexpected text after the closing brace");
  }
  if (!seenRing) r.fail("missing ring section");
  if (!seenModule) r.fail("missing module section");
  return out;
}

PresentedModule buildModule(const ModuleFile& file, std::optional<std::uint32_t> prime) {
  Ring ring(prime.value_or(file.prime), file.m, file.n);
  FreeModule ambient(file.twists);
  const std::size_t columns = file.relations.empty() ? 0 : file.relations.front().size();
  std::vector<ModuleVector> cols;
  std::vector<BiDegree> sourceTwists;
  for (std::size_t c = 0; c < columns; ++c) {
    std::vector<Polynomial> entries;
    std::optional<BiDegree> degree;
    for (std::size_t r = 0; r < file.relations.size(); ++r) {
      Polynomial p;
      try {
        p = ring.parse(file.relations[r][c]);
      } catch (const ParseError& e) {
        auto at = file.entryPositions[r][c];
        throw ParseError("bad polynomial \"" + file.relations[r][c] + "\"", at.line, at.column + e.column());
      }
      std::optional<BiDegree> d;
      try {
        d = ring.bidegree(p);
      } catch (const NotBihomogeneous&) {
        throw DegreeInconsistent("entry \"" + file.relations[r][c] + "\" of column " + std::to_string(c) +
                                     " is not bihomogeneous",
                                 c);
      }
      if (d) {
        BiDegree total = *d + ambient.twist(r);
        if (degree && *degree != total)
          throw DegreeInconsistent("column " + std::to_string(c) + " mixes bidegrees (" + std::to_string(degree->x) +
                                       "," + std::to_string(degree->y) + ") and (" + std::to_string(total.x) + "," +
                                       std::to_string(total.y) + ")",
                                   c);
        degree = total;
      }
      entries.push_back(std::move(p));
    }
    if (!degree) continue;
    cols.push_back(ModuleVector::fromEntries(entries));
    sourceTwists.push_back(*degree);
  }
  return PresentedModule(Matrix(ring, FreeModule(sourceTwists), ambient, std::move(cols)));
}

PresentedModule parseModuleFile(std::string_view text, std::optional<std::uint32_t> prime) {
  return buildModule(readModuleFile(text), prime);
}

namespace {

std::vector<std::vector<std::string>> relationRows(const PresentedModule& m) {
  const Ring& ring = m.ring();
  const Matrix& rel = m.relations();
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < rel.numColumns(); ++c)
    if (!rel.column(c).isZero()) kept.push_back(c);
  std::vector<std::vector<std::string>> rows;
  if (kept.empty()) return rows;
  for (std::size_t r = 0; r < rel.numRows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c : kept) row.push_back(ring.format(rel.entry(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string printModuleFile(const PresentedModule& m) {
  const Ring& ring = m.ring();
  std::string out = "ring{p:" + std::to_string(ring.prime()) + ", m:" + std::to_string(ring.m()) +
                    ", n:" + std::to_string(ring.n()) + "}\nmodule{\n  twists:[";
  const auto& twists = m.ambient().twists();
  for (std::size_t i = 0; i < twists.size(); ++i) {
    if (i) out += ", ";
    out += "[" + std::to_string(twists[i].x) + "," + std::to_string(twists[i].y) + "]";
  }
  out += "],\n  relations:[";
  auto rows = relationRows(m);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += r ? ",\n    [" : "\n    [";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ", ";
      out += "\"" + rows[r][c] + "\"";
    }
    out += "]";
  }
  out += rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string printModuleJson(const PresentedModule& m) {
  const Ring& ring = m.ring();
  nlohmann::ordered_json twists = nlohmann::ordered_json::array();
  for (const auto& t : m.ambient().twists()) twists.push_back({t.x, t.y});
  nlohmann::ordered_json doc = {
      {"ring", {{"p", ring.prime()}, {"m", ring.m()}, {"n", ring.n()}}},
      {"module", {{"twists", twists}, {"relations", relationRows(m)}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace relcm
