#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmods::mods {

inline constexpr std::string_view kModsNamespace = "http://www.loc.gov/mods/v3";
inline constexpr std::string_view kXlinkNamespace = "http://www.w3.org/1999/xlink";
inline constexpr std::string_view kXmlNamespace = "http://www.w3.org/XML/1998/namespace";

struct QName {
  std::string ns;
  std::string local;

  friend bool operator==(const QName&, const QName&) = default;
};

struct Element {
  QName name;
  std::vector<std::pair<QName, std::string>> attributes;
  /// Concatenated character data directly inside this element.
  std::string text;
  std::vector<Element> children;
  /// False for elements the record mapper does not translate.
  bool mapped = false;
  std::size_t line = 0;

  /// MODS-namespace (or unqualified) element with the given local name.
  bool is(std::string_view local) const;
  const std::string* attribute(std::string_view ns, std::string_view local) const;
  /// Unqualified attribute.
  const std::string* attribute(std::string_view local) const { return attribute({}, local); }
  std::vector<const Element*> childrenNamed(std::string_view local) const;
  /// Text with leading and trailing whitespace removed.
  std::string trimmedText() const;
  /// This element plus all descendants.
  std::size_t elementCount() const;
};

struct ModsDocument {
  std::string source;
  Element root;

  bool isCollection() const { return root.is("modsCollection"); }
  /// The mods:mods records: the root itself, or the collection's children.
  std::vector<const Element*> records() const;
};

/// Parses a MODS 3.x document (a single mods:mods or a mods:modsCollection).
/// Elements in the MODS namespace and unqualified elements are both accepted.
/// Throws ParseError for malformed XML (with line and column) and
/// StructuralError for a foreign root element.
ModsDocument parseModsXml(std::string_view bytes, std::string source = "<memory>");

}  // namespace mmods::mods
