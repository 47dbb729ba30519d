#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmods/term.hpp"

namespace mmods {

inline constexpr std::string_view kDefaultBaseIri = "https://example.org/mmods-o/";

enum class PropertyKind { Object, Datatype };

/// A class with a fixed list of pre-defined individuals. Open vocabularies
/// (Calendar) accept individuals minted at mapping time.
struct ControlledVocabulary {
  std::string name;
  std::vector<std::string> individuals;
  std::string description;
  bool open = false;
};

struct ModuleInfo {
  std::string name;
  /// True for modules whose classes and axioms are modelled here; the rest
  /// are registered by name only.
  bool modeled = false;
};

/// Class, property and controlled-vocabulary identifiers of the ontology.
/// Every IRI is the base IRI followed by a local name. Immutable once built.
class VocabularyRegistry {
 public:
  enum class Kind { Class, Property, VocabIndividual };

  explicit VocabularyRegistry(std::string baseIri = std::string(kDefaultBaseIri));

  const std::string& baseIri() const noexcept { return base_iri_; }

  /// Throws UnknownNameError (with the closest registered names) for an
  /// unregistered name.
  Term resolve(Kind kind, std::string_view name) const;
  Term cls(std::string_view name) const { return resolve(Kind::Class, name); }
  Term property(std::string_view name) const { return resolve(Kind::Property, name); }
  Term individual(std::string_view name) const { return resolve(Kind::VocabIndividual, name); }

  /// Throws UnknownNameError for an unknown vocabulary.
  std::vector<Term> vocabularyValues(std::string_view vocabulary) const;
  const ControlledVocabulary& vocabulary(std::string_view name) const;
  bool isVocabulary(std::string_view name) const;
  /// Name of the vocabulary listing `individual`, if any.
  std::optional<std::string> vocabularyOf(const Term& individual) const;

  /// Base IRI + local name, without checking registration.
  Term mint(std::string_view localName) const;
  /// Local name if `term` is an IRI under the base IRI.
  std::optional<std::string> localName(const Term& term) const;
  /// True when `term` is a registered class, property or individual IRI.
  bool isRegistered(const Term& term) const;

  PropertyKind propertyKind(std::string_view name) const;

  const std::vector<std::string>& classNames() const noexcept { return class_names_; }
  const std::vector<std::string>& propertyNames() const noexcept { return property_names_; }
  const std::vector<ControlledVocabulary>& vocabularies() const noexcept { return vocabularies_; }
  const std::vector<ModuleInfo>& modules() const noexcept { return modules_; }

  /// IRI used to annotate a registered module.
  Term moduleIri(const ModuleInfo& module) const;

  /// `{"baseIri", "classes", "properties", "vocabularies", "modules"}` as JSON text.
  std::string toJson() const;

 private:
  const std::vector<std::string>& namesFor(Kind kind) const;

  std::string base_iri_;
  std::vector<std::string> class_names_;
  std::vector<std::string> property_names_;
  std::map<std::string, PropertyKind, std::less<>> property_kinds_;
  std::vector<ControlledVocabulary> vocabularies_;
  std::vector<std::string> individual_names_;
  std::map<std::string, std::string, std::less<>> individual_vocab_;
  std::vector<ModuleInfo> modules_;
};

}  // namespace mmods
