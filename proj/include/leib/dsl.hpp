#ifndef LEIB_DSL_HPP
#define LEIB_DSL_HPP

#include "leib/algebra.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leib {

/// Text form of an algebra:
///
///     algebra h3 field Q
///     basis e f z
///     [e,f] = z
///     [f,e] = -1 z
///     end
///
/// Entries are kept in canonical form: ordered by (lhs, rhs) basis index,
/// terms merged and ordered by basis index, zero terms and empty entries
/// dropped. Two docs describing the same table therefore compare equal.
struct AlgebraDoc {
  struct Entry {
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    std::vector<std::pair<std::size_t, Scalar>> terms;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::string name;
  Field field = Field::Q;
  std::vector<std::string> labels;
  std::vector<Entry> entries;

  friend bool operator==(const AlgebraDoc&, const AlgebraDoc&) = default;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  enum Kind { word, lbrack, comma, rbrack, equals, newline, eof } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto punct = [](char c) { return c == '[' || c == ',' || c == ']' || c == '=' || c == '#'; };
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      out.push_back({Token::newline, "\n", line, col});
      ++i;
      ++line;
      col = 1;
    } else if (space(c)) {
      ++i;
      ++col;
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i, ++col;
    } else if (punct(c)) {
      const auto kind = c == '[' ? Token::lbrack : c == ',' ? Token::comma : c == ']' ? Token::rbrack : Token::equals;
      out.push_back({kind, std::string(1, c), line, col});
      ++i;
      ++col;
    } else {
      const std::size_t start = i;
      const std::size_t start_col = col;
      while (i < src.size() && src[i] != '\n' && !space(src[i]) && !punct(src[i])) ++i, ++col;
      out.push_back({Token::word, std::string(src.substr(start, i - start)), line, start_col});
    }
  }
  out.push_back({Token::eof, "", line, col});
  return out;
}

inline bool is_ident(std::string_view w) {
  if (w.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(w.front())) return false;
  for (char c : w)
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

class Parser {
public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  AlgebraDoc parse() {
    AlgebraDoc doc;
    skip_newlines();
    keyword("algebra");
    doc.name = ident("algebra name");
    keyword("field");
    const Token& f = expect(Token::word, "field name");
    if (f.text == "Q") doc.field = Field::Q;
    else if (f.text == "Qi") doc.field = Field::Qi;
    else fail(f, "unknown field '" + f.text + "' (expected Q or Qi)");
    end_of_line();

    skip_newlines();
    keyword("basis");
    while (peek().kind == Token::word) {
      const Token& t = next();
      if (!is_ident(t.text)) fail(t, "invalid label '" + t.text + "'");
      if (index_.count(t.text)) fail(t, "duplicate label '" + t.text + "'");
      index_[t.text] = doc.labels.size();
      doc.labels.push_back(t.text);
    }
    if (doc.labels.empty()) fail(peek(), "basis needs at least one label");
    end_of_line();

    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Scalar>>> table;
    for (;;) {
      skip_newlines();
      if (peek().kind == Token::word && peek().text == "end") {
        next();
        break;
      }
      const Token& open = expect(Token::lbrack, "'[' or 'end'");
      const std::size_t lhs = label();
      expect(Token::comma, "','");
      const std::size_t rhs = label();
      expect(Token::rbrack, "']'");
      expect(Token::equals, "'='");
      if (table.count({lhs, rhs}))
        fail(open, "duplicate entry [" + doc.labels[lhs] + "," + doc.labels[rhs] + "]");
      std::vector<Scalar> coeffs(doc.labels.size());
      term(coeffs, doc.field);
      while (peek().kind == Token::word && peek().text == "+") {
        next();
        term(coeffs, doc.field);
      }
      end_of_line();
      auto& terms = table[{lhs, rhs}];
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) terms.emplace_back(k, coeffs[k]);
    }
    skip_newlines();
    if (peek().kind != Token::eof) fail(peek(), "unexpected input after 'end'");
    for (auto& [key, terms] : table)
      if (!terms.empty()) doc.entries.push_back({key.first, key.second, std::move(terms)});
    return doc;
  }

private:
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  const Token& expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) fail(peek(), "expected " + what + describe(peek()));
    return next();
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
    case Token::newline: return ", found end of line";
    case Token::eof: return ", found end of input";
    default: return ", found '" + t.text + "'";
    }
  }

  void keyword(const std::string& kw) {
    if (peek().kind != Token::word || peek().text != kw) fail(peek(), "expected '" + kw + "'" + describe(peek()));
    next();
  }

  std::string ident(const std::string& what) {
    const Token& t = expect(Token::word, what);
    if (!is_ident(t.text)) fail(t, "invalid " + what + " '" + t.text + "'");
    return t.text;
  }

  std::size_t label() {
    const Token& t = expect(Token::word, "basis label");
    auto it = index_.find(t.text);
    if (it == index_.end()) fail(t, "undeclared label '" + t.text + "'");
    return it->second;
  }

  // SCALAR IDENT | IDENT, decided by one token of lookahead
  void term(std::vector<Scalar>& coeffs, Field field) {
    const Token& first = expect(Token::word, "term");
    Scalar coeff(1);
    const Token* lab = &first;
    if (peek().kind == Token::word && peek().text != "+") {
      try {
        coeff = Scalar::parse(first.text);
      } catch (const std::exception&) {
        fail(first, "malformed scalar '" + first.text + "'");
      }
      if (!coeff.fits(field)) fail(first, "scalar '" + first.text + "' is not in field " + to_string(field));
      lab = &next();
    }
    auto it = index_.find(lab->text);
    if (it == index_.end()) fail(*lab, "undeclared label '" + lab->text + "'");
    coeffs[it->second] += coeff;
  }

  void end_of_line() {
    if (peek().kind == Token::eof) return;
    expect(Token::newline, "end of line");
  }

  void skip_newlines() {
    while (peek().kind == Token::newline) next();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> index_;
};

} // namespace detail

inline AlgebraDoc parse_doc(std::string_view text) { return detail::Parser(text).parse(); }

inline std::string serialize(const AlgebraDoc& doc) {
  std::ostringstream os;
  os << "algebra " << doc.name << " field " << to_string(doc.field) << "\nbasis";
  for (const auto& l : doc.labels) os << ' ' << l;
  os << '\n';
  for (const auto& e : doc.entries) {
    os << '[' << doc.labels[e.lhs] << ',' << doc.labels[e.rhs] << "] =";
    for (std::size_t t = 0; t < e.terms.size(); ++t) {
      os << (t ? " + " : " ");
      const auto& [k, s] = e.terms[t];
      if (!s.is_one()) os << s.to_string() << ' ';
      os << doc.labels[k];
    }
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

inline Algebra to_algebra(const AlgebraDoc& doc) {
  AlgebraBuilder b(doc.field, doc.labels);
  for (const auto& e : doc.entries)
    for (const auto& [k, s] : e.terms) b.add(e.lhs, e.rhs, k, s);
  return b.build();
}

inline AlgebraDoc from_algebra(const Algebra& L, std::string name) {
  AlgebraDoc doc{std::move(name), L.field(), L.labels(), {}};
  const std::size_t d = L.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      AlgebraDoc::Entry e{i, j, {}};
      for (std::size_t k = 0; k < d; ++k)
        if (!L.c(i, j, k).is_zero()) e.terms.emplace_back(k, L.c(i, j, k));
      if (!e.terms.empty()) doc.entries.push_back(std::move(e));
    }
  return doc;
}

inline Algebra parse_algebra(std::string_view text) { return to_algebra(parse_doc(text)); }

// ---- reports ---------------------------------------------------------------

inline constexpr const char* tool_version = "0.1.0";

enum class ClaimStatus { confirmed, refuted, discrepancy, skipped };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
  case ClaimStatus::confirmed: return "confirmed";
  case ClaimStatus::refuted: return "refuted";
  case ClaimStatus::discrepancy: return "discrepancy";
  case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

struct ClaimResult {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  ClaimStatus status = ClaimStatus::skipped;
  std::string expected;
  std::string actual;
  std::string note;
  nlohmann::json detail; ///< bases behind a refutation, null otherwise
  std::optional<double> elapsed;
};

struct Report {
  std::string version = tool_version;
  std::string input;
  std::vector<nlohmann::json> analyses;
  std::vector<ClaimResult> claims;
  std::optional<double> elapsed;
};

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string digest(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline nlohmann::json to_json(const ClaimResult& c) {
  nlohmann::json j;
  j["id"] = c.id;
  j["params"] = c.params;
  j["status"] = to_string(c.status);
  j["expected"] = c.expected;
  j["actual"] = c.actual;
  if (!c.note.empty()) j["note"] = c.note;
  if (!c.detail.is_null()) j["detail"] = c.detail;
  if (c.elapsed) j["elapsed"] = *c.elapsed;
  return j;
}

/// Keys come out sorted, so equal reports serialize to identical bytes.
inline std::string report_json(const Report& r) {
  nlohmann::json j;
  j["version"] = r.version;
  j["input"] = r.input;
  j["analyses"] = nlohmann::json::array();
  for (const auto& a : r.analyses) j["analyses"].push_back(a);
  j["claims"] = nlohmann::json::array();
  for (const auto& c : r.claims) j["claims"].push_back(to_json(c));
  if (r.elapsed) j["elapsed"] = *r.elapsed;
  return j.dump(2) + "\n";
}

inline nlohmann::json scalar_json(const Scalar& s) { return s.to_string(); }

inline nlohmann::json vec_json(const Vec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

inline nlohmann::json mat_json(const Mat& m) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    a.push_back(vec_json(Vec(row.begin(), row.end())));
  }
  return a;
}

inline nlohmann::json subspace_json(const Subspace& s) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : s.basis()) a.push_back(vec_json(v));
  return a;
}

} // namespace leib

#endif
