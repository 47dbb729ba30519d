#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmods/graph.hpp"
#include "mmods/mods_document.hpp"
#include "mmods/vocabulary.hpp"

namespace mmods {

struct MappingWarning {
  std::string source;
  std::size_t line = 0;
  std::string message;
};

struct MappingOptions {
  /// Report minted Calendar individuals as warnings.
  bool strict = false;
};

struct MappingResult {
  Graph graph;
  std::vector<MappingWarning> warnings;
  /// Unsupported elements directly under a supported one.
  std::size_t unmappedElements = 0;
  std::size_t records = 0;
};

/// State for mapping one document. Organization nodes are shared between all
/// records of the document, keyed by affiliation text.
///
/// Nodes are IRIs `<base><recordID>/<Kind><n>` when the record carries an
/// @ID, blank nodes otherwise.
class MappingContext {
 public:
  MappingContext(const VocabularyRegistry& registry, Graph& target, std::vector<MappingWarning>& warnings,
                 MappingOptions options = {}, std::string source = {});

  /// Starts a new record and returns its ModsItem node.
  Term beginRecord(const mods::Element& record);
  const Term& modsItem() const { return *item_; }

  /// Agent, Name, NameParts, roles, affiliation, and name-level attributes.
  void mapName(const mods::Element& name);
  /// DateInfo with exactly one DateAttributes, attached to `owner`. Returns
  /// nothing when the date text is empty.
  std::optional<Term> mapDate(const mods::Element& date, const Term& owner);
  /// displayLabel, link attributes (ID, href, xlink:href) and language
  /// attributes (lang, xml:lang, script, transliteration) of `element`.
  /// With `allowId` false, @ID is dropped with a warning.
  void mapCommonAttributes(const mods::Element& element, const Term& owner, bool allowId = true);

  std::size_t organizationCount() const { return organizations_.size(); }

 private:
  Term node(const std::string& kind);
  Term typed(const std::string& kind);
  Term organization(const std::string& affiliation);
  void warn(const mods::Element& element, std::string message);
  void add(const Term& s, std::string_view property, Term o);

  const VocabularyRegistry& registry_;
  Graph& graph_;
  std::vector<MappingWarning>& warnings_;
  MappingOptions options_;
  std::string source_;
  Term type_;
  std::optional<Term> item_;
  std::optional<std::string> record_id_;
  std::map<std::string, std::size_t> counters_;
  std::map<std::string, Term> organizations_;
};

/// Graph for every record of `doc`.
MappingResult mapRecord(const mods::ModsDocument& doc, const VocabularyRegistry& registry, MappingOptions options = {});

}  // namespace mmods
