#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mmods {

namespace iri {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfLangString = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kRdfsSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kOwlClass = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view kOwlObjectProperty = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view kOwlDatatypeProperty = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view kOwlThing = "http://www.w3.org/2002/07/owl#Thing";
}  // namespace iri

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

/// An RDF term. Only string and boolean literal datatypes are interpreted;
/// any other datatype is carried through untouched.
class Term {
 public:
  /// Throws StructuralError if `value` is empty or contains whitespace.
  static Term iri(std::string value);
  /// Throws StructuralError if `label` is empty.
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = std::string(iri::kXsdString));
  static Term langLiteral(std::string lexical, std::string language);
  static Term boolean(bool value);

  TermKind kind() const noexcept { return kind_; }
  bool isIri() const noexcept { return kind_ == TermKind::Iri; }
  bool isBlank() const noexcept { return kind_ == TermKind::BlankNode; }
  bool isLiteral() const noexcept { return kind_ == TermKind::Literal; }

  /// IRI string, blank label, or literal lexical form depending on kind.
  const std::string& value() const noexcept { return value_; }
  const std::string& datatype() const noexcept { return datatype_; }
  const std::string& language() const noexcept { return language_; }

  bool hasDatatype(std::string_view dt) const noexcept { return isLiteral() && datatype_ == dt; }

  /// N-Triples rendering (`<iri>`, `_:label`, `"lex"`, `"lex"^^<dt>`, `"lex"@lang`).
  std::string toNTriples() const;

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind), value_(std::move(value)), datatype_(std::move(datatype)), language_(std::move(language)) {}

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

/// Escapes a literal lexical form for N-Triples / Turtle string syntax.
std::string escapeLiteral(std::string_view lexical);
/// Escapes characters not permitted inside an IRIREF as \uXXXX.
std::string escapeIri(std::string_view iri);

}  // namespace mmods
