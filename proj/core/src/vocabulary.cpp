#include "mmods/vocabulary.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>

#include "mmods/error.hpp"

namespace mmods {

namespace {

std::size_t editDistance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const bool same = std::tolower(static_cast<unsigned char>(a[i - 1])) ==
                        std::tolower(static_cast<unsigned char>(b[j - 1]));
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (same ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::vector<std::string> nearest(std::string_view name, const std::vector<std::string>& pool) {
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& candidate : pool) scored.emplace_back(editDistance(name, candidate), candidate);
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (std::size_t i = 0; i < scored.size() && i < 3; ++i) out.push_back(scored[i].second);
  return out;
}

[[noreturn]] void unknown(std::string_view what, std::string_view name, const std::vector<std::string>& pool) {
  auto candidates = nearest(name, pool);
  std::string message = "unknown " + std::string(what) + " '" + std::string(name) + "'";
  if (!candidates.empty()) {
    message += "; did you mean ";
    for (std::size_t i = 0; i < candidates.size(); ++i) message += (i ? ", " : "") + candidates[i];
    message += "?";
  }
  throw UnknownNameError(message, std::string(name), std::move(candidates));
}

const std::vector<std::string> kClasses = {
    "Agent", "AgentRole", "Name", "NamePart", "Organization", "ElementInfo", "LinkAttributes",
    "LanguageAttributes", "AuthorityInfo", "Identifier", "NameIdentifier", "Description", "DateInfo",
    "DateAttributes", "ModsItem",
};

const std::vector<std::pair<std::string, PropertyKind>> kProperties = {
    {"providesAgentRole", PropertyKind::Object},
    {"assumesAgentRole", PropertyKind::Object},
    {"hasRoleUnderName", PropertyKind::Object},
    {"hasName", PropertyKind::Object},
    {"hasStandardizedName", PropertyKind::Object},
    {"hasNamePart", PropertyKind::Object},
    {"hasNamePartType", PropertyKind::Object},
    {"hasNameType", PropertyKind::Object},
    {"isPrimaryInstance", PropertyKind::Object},
    {"hasDescription", PropertyKind::Object},
    {"hasAuthorityInfo", PropertyKind::Object},
    {"hasLinkAttributes", PropertyKind::Object},
    {"hasLanguageAttributes", PropertyKind::Object},
    {"hasDisplayLabel", PropertyKind::Datatype},
    {"hasID", PropertyKind::Datatype},
    {"hasDateInfo", PropertyKind::Object},
    {"hasDateAttributes", PropertyKind::Object},
    {"isOfType", PropertyKind::Object},
    {"hasValue", PropertyKind::Datatype},
    {"hasDateEncodingType", PropertyKind::Object},
    {"isKeyDate", PropertyKind::Datatype},
    {"isStartOrEndPoint", PropertyKind::Object},
    {"hasAlternativeCalendar", PropertyKind::Object},
    {"hasQualifier", PropertyKind::Object},
    // Mapping support: edges the record mapper needs that have no displayed axiom.
    {"hasAffiliation", PropertyKind::Object},
    {"hasDisplayForm", PropertyKind::Datatype},
    {"hasNameIdentifier", PropertyKind::Object},
    {"hasHref", PropertyKind::Datatype},
    {"hasLang", PropertyKind::Datatype},
    {"hasScript", PropertyKind::Datatype},
    {"hasTransliteration", PropertyKind::Datatype},
};

std::vector<ControlledVocabulary> defaultVocabularies() {
  return {
      {"NameType", {"Personal", "Corporate", "Conference", "Family"}, "Kind of entity a name denotes.", false},
      {"NamePartType", {"FirstName", "MiddleName", "LastName"}, "Role of a part within a name.", false},
      {"Usage", {"Primary"}, "Marks the primary instance among several names.", false},
      {"Qualifier", {"Approximate", "Inferred", "Questionable"}, "Certainty of a date value.", false},
      {"DateEncoding", {"W3cdtf", "Iso8601", "Edtf", "Marc", "Temper"}, "Encoding scheme of a date value.", false},
      {"DateInfoType",
       {"DateIssued", "DateCreated", "DateCaptured", "DateModified", "DateValid", "DateOther", "CopyrightDate"},
       "Which MODS date element a DateInfo stands for.",
       false},
      {"Point", {"Start", "End"}, "Start or end point of a date range.", false},
      // Members are not enumerated; individuals are minted from @calendar values.
      {"Calendar", {}, "Alternative calendar a date is expressed in.", true},
  };
}

std::vector<ModuleInfo> defaultModules() {
  return {
      {"Role-Dependent Names", true}, {"Element Information", true}, {"Organization", true},
      {"Name", true},                 {"Date Information", true},    {"Date Attributes", true},
      {"Link Attributes", true},      {"Language Attributes", true}, {"Authority Information", true},
      {"Identifier", true},           {"Name Identifier", true},     {"Description", true},
      {"MODS Item", true},            {"Title Information", false},  {"Type of Resource", false},
      {"Genre of Resource", false},   {"Origin Information", false}, {"Target Audience", false},
      {"Access Restrictions", false}, {"Subject", false},            {"Geographic Location", false},
  };
}

std::string moduleSlug(std::string_view name) {
  std::string out;
  bool upper = true;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += upper ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
      upper = false;
    } else {
      upper = true;
    }
  }
  return out;
}

}  // namespace

VocabularyRegistry::VocabularyRegistry(std::string baseIri) : base_iri_(std::move(baseIri)) {
  // Validates the base IRI up front.
  (void)Term::iri(base_iri_);
  class_names_ = kClasses;
  vocabularies_ = defaultVocabularies();
  for (const auto& v : vocabularies_) {
    class_names_.push_back(v.name);
    for (const auto& ind : v.individuals) {
      individual_names_.push_back(ind);
      individual_vocab_.emplace(ind, v.name);
    }
  }
  for (const auto& [name, kind] : kProperties) {
    property_names_.push_back(name);
    property_kinds_.emplace(name, kind);
  }
  modules_ = defaultModules();
}

const std::vector<std::string>& VocabularyRegistry::namesFor(Kind kind) const {
  switch (kind) {
    case Kind::Class: return class_names_;
    case Kind::Property: return property_names_;
    case Kind::VocabIndividual: return individual_names_;
  }
  return class_names_;
}

Term VocabularyRegistry::resolve(Kind kind, std::string_view name) const {
  const auto& names = namesFor(kind);
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    static constexpr std::string_view kWhat[] = {"class", "property", "vocabulary individual"};
    unknown(kWhat[static_cast<int>(kind)], name, names);
  }
  return mint(name);
}

std::vector<Term> VocabularyRegistry::vocabularyValues(std::string_view name) const {
  std::vector<Term> out;
  for (const auto& ind : vocabulary(name).individuals) out.push_back(mint(ind));
  return out;
}

const ControlledVocabulary& VocabularyRegistry::vocabulary(std::string_view name) const {
  auto it = std::find_if(vocabularies_.begin(), vocabularies_.end(), [&](const auto& v) { return v.name == name; });
  if (it == vocabularies_.end()) {
    std::vector<std::string> names;
    for (const auto& v : vocabularies_) names.push_back(v.name);
    unknown("vocabulary", name, names);
  }
  return *it;
}

bool VocabularyRegistry::isVocabulary(std::string_view name) const {
  return std::any_of(vocabularies_.begin(), vocabularies_.end(), [&](const auto& v) { return v.name == name; });
}

std::optional<std::string> VocabularyRegistry::vocabularyOf(const Term& individual) const {
  auto local = localName(individual);
  if (!local) return std::nullopt;
  auto it = individual_vocab_.find(*local);
  if (it == individual_vocab_.end()) return std::nullopt;
  return it->second;
}

Term VocabularyRegistry::mint(std::string_view localName) const { return Term::iri(base_iri_ + std::string(localName)); }

std::optional<std::string> VocabularyRegistry::localName(const Term& term) const {
  if (!term.isIri() || !term.value().starts_with(base_iri_)) return std::nullopt;
  return term.value().substr(base_iri_.size());
}

bool VocabularyRegistry::isRegistered(const Term& term) const {
  auto local = localName(term);
  if (!local) return false;
  auto in = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), *local) != v.end(); };
  return in(class_names_) || in(property_names_) || in(individual_names_);
}

PropertyKind VocabularyRegistry::propertyKind(std::string_view name) const {
  auto it = property_kinds_.find(name);
  if (it == property_kinds_.end()) unknown("property", name, property_names_);
  return it->second;
}

Term VocabularyRegistry::moduleIri(const ModuleInfo& module) const { return mint("module/" + moduleSlug(module.name)); }

std::string VocabularyRegistry::toJson() const {
  nlohmann::ordered_json doc;
  doc["baseIri"] = base_iri_;
  auto& classes = doc["classes"] = nlohmann::ordered_json::object();
  for (const auto& c : class_names_) classes[c] = mint(c).value();
  auto& properties = doc["properties"] = nlohmann::ordered_json::object();
  for (const auto& p : property_names_) properties[p] = mint(p).value();
  auto& vocabs = doc["vocabularies"] = nlohmann::ordered_json::object();
  for (const auto& v : vocabularies_) {
    auto& members = vocabs[v.name] = nlohmann::ordered_json::object();
    for (const auto& ind : v.individuals) members[ind] = mint(ind).value();
  }
  auto& modules = doc["modules"] = nlohmann::ordered_json::array();
  for (const auto& m : modules_)
    modules.push_back({{"name", m.name}, {"iri", moduleIri(m).value()}, {"modeled", m.modeled}});
  return doc.dump(2) + "\n";
}

}  // namespace mmods
