#include "mmods/ntriples.hpp"

#include <cctype>

#include "mmods/canonical.hpp"
#include "mmods/error.hpp"

namespace mmods {

std::string writeNTriples(const Graph& graph) { return canonicalize(graph); }

namespace {

void appendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t number) : line_(line), number_(number) {}

  // Returns false for blank and comment-only lines.
  bool parse(Graph& graph) {
    skipSpace();
    if (atEnd() || peek() == '#') return false;
    const std::size_t subjectStart = pos_;
    Term subject = parseTerm();
    if (subject.isLiteral()) fail("literal not allowed as subject", subjectStart);
    skipSpace();
    const std::size_t predicateStart = pos_;
    Term predicate = parseTerm();
    if (!predicate.isIri()) fail("predicate must be an IRI", predicateStart);
    skipSpace();
    Term object = parseTerm();
    skipSpace();
    if (atEnd() || peek() != '.') fail("expected '.' at end of triple", pos_);
    ++pos_;
    skipSpace();
    if (!atEnd() && peek() != '#') fail("unexpected content after '.'", pos_);
    graph.add(std::move(subject), std::move(predicate), std::move(object));
    return true;
  }

 private:
  bool atEnd() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }
  void skipSpace() {
    while (!atEnd() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t end = at;
    while (end < line_.size() && line_[end] != ' ' && line_[end] != '\t') ++end;
    std::string token(line_.substr(at, end - at));
    if (token.empty()) token = "<end of line>";
    throw ParseError("line " + std::to_string(number_) + ": " + message + " near '" + token + "'", number_, at + 1,
                     token);
  }

  std::uint32_t parseHex(std::size_t digits, std::size_t start) {
    if (pos_ + digits > line_.size()) fail("truncated unicode escape", start);
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char c = line_[pos_++];
      if (!std::isxdigit(static_cast<unsigned char>(c))) fail("invalid unicode escape", start);
      cp = cp * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(c))
                                                    ? c - '0'
                                                    : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
    }
    return cp;
  }

  std::string parseIriBody(std::size_t start) {
    ++pos_;  // '<'
    std::string out;
    while (true) {
      if (atEnd()) fail("unterminated IRI", start);
      const char c = line_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        const std::size_t escStart = pos_;
        ++pos_;
        if (atEnd()) fail("invalid escape in IRI", escStart);
        const char kind = line_[pos_++];
        if (kind == 'u') appendUtf8(out, parseHex(4, escStart));
        else if (kind == 'U') appendUtf8(out, parseHex(8, escStart));
        else fail("invalid escape in IRI", escStart);
        continue;
      }
      if (c == ' ' || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`')
        fail("invalid character in IRI", start);
      out += c;
      ++pos_;
    }
    return out;
  }

  Term parseTerm() {
    const std::size_t start = pos_;
    if (atEnd()) fail("unexpected end of line", start);
    const char c = peek();
    if (c == '<') {
      std::string iri = parseIriBody(start);
      if (iri.empty()) fail("empty IRI", start);
      return Term::iri(std::move(iri));
    }
    if (c == '_') {
      if (pos_ + 1 >= line_.size() || line_[pos_ + 1] != ':') fail("malformed blank node", start);
      pos_ += 2;
      const std::size_t labelStart = pos_;
      while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-' ||
                          peek() == '.' || static_cast<unsigned char>(peek()) >= 0x80))
        ++pos_;
      // A label cannot end with '.'.
      while (pos_ > labelStart && line_[pos_ - 1] == '.') --pos_;
      if (pos_ == labelStart) fail("empty blank node label", start);
      return Term::blank(std::string(line_.substr(labelStart, pos_ - labelStart)));
    }
    if (c == '"') return parseLiteral(start);
    fail("unexpected token", start);
  }

  Term parseLiteral(std::size_t start) {
    ++pos_;
    std::string lexical;
    while (true) {
      if (atEnd()) fail("unterminated literal", start);
      const char c = line_[pos_];
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        const std::size_t escStart = pos_;
        ++pos_;
        if (atEnd()) fail("invalid escape", escStart);
        const char e = line_[pos_++];
        switch (e) {
          case 't': lexical += '\t'; break;
          case 'b': lexical += '\b'; break;
          case 'n': lexical += '\n'; break;
          case 'r': lexical += '\r'; break;
          case 'f': lexical += '\f'; break;
          case '"': lexical += '"'; break;
          case '\'': lexical += '\''; break;
          case '\\': lexical += '\\'; break;
          case 'u': appendUtf8(lexical, parseHex(4, escStart)); break;
          case 'U': appendUtf8(lexical, parseHex(8, escStart)); break;
          default: fail("invalid escape", escStart);
        }
        continue;
      }
      lexical += c;
      ++pos_;
    }
    if (!atEnd() && peek() == '@') {
      const std::size_t langStart = pos_;
      ++pos_;
      const std::size_t tagStart = pos_;
      while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) ++pos_;
      if (pos_ == tagStart) fail("empty language tag", langStart);
      return Term::langLiteral(std::move(lexical), std::string(line_.substr(tagStart, pos_ - tagStart)));
    }
    if (pos_ + 1 < line_.size() && peek() == '^' && line_[pos_ + 1] == '^') {
      pos_ += 2;
      const std::size_t dtStart = pos_;
      if (atEnd() || peek() != '<') fail("expected datatype IRI", dtStart);
      return Term::literal(std::move(lexical), parseIriBody(dtStart));
    }
    return Term::literal(std::move(lexical));
  }

  std::string_view line_;
  std::size_t number_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph readNTriples(std::string_view text) {
  Graph graph;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    try {
      LineParser(line, number).parse(graph);
    } catch (const StructuralError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what(), number, 0);
    }
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return graph;
}

}  // namespace mmods
