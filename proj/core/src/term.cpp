#include "mmods/term.hpp"

#include <algorithm>
#include <cstdio>

#include "mmods/error.hpp"

namespace mmods {

namespace {

bool isSpace(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace

Term Term::iri(std::string value) {
  if (value.empty()) throw StructuralError("IRI must not be empty");
  if (std::any_of(value.begin(), value.end(), [](char c) { return isSpace(static_cast<unsigned char>(c)); }))
    throw StructuralError("IRI contains whitespace: '" + value + "'");
  return Term(TermKind::Iri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
  if (label.empty()) throw StructuralError("blank node label must not be empty");
  return Term(TermKind::BlankNode, std::move(label), {}, {});
}

Term Term::literal(std::string lexical, std::string datatype) {
  if (datatype.empty()) datatype = std::string(iri::kXsdString);
  return Term(TermKind::Literal, std::move(lexical), std::move(datatype), {});
}

Term Term::langLiteral(std::string lexical, std::string language) {
  if (language.empty()) return literal(std::move(lexical));
  return Term(TermKind::Literal, std::move(lexical), std::string(iri::kRdfLangString), std::move(language));
}

Term Term::boolean(bool value) { return literal(value ? "true" : "false", std::string(iri::kXsdBoolean)); }

std::string Term::toNTriples() const {
  switch (kind_) {
    case TermKind::Iri:
      return "<" + escapeIri(value_) + ">";
    case TermKind::BlankNode:
      return "_:" + value_;
    case TermKind::Literal: {
      std::string out = "\"" + escapeLiteral(value_) + "\"";
      if (!language_.empty()) {
        out += "@" + language_;
      } else if (datatype_ != iri::kXsdString) {
        out += "^^<" + escapeIri(datatype_) + ">";
      }
      return out;
    }
  }
  return {};
}

std::string escapeLiteral(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size());
  for (char c : lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escapeIri(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char ch : value) {
    const auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
        c == '`' || c == '\\') {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04X", c);
      out += buf;
    } else {
      out += ch;
    }
  }
  return out;
}

}  // namespace mmods
