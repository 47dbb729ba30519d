#include "mmods/mods_mapper.hpp"

#include <algorithm>
#include <cctype>

namespace mmods {

namespace {

using mods::Element;

std::string upperCamel(std::string_view text) {
  std::string out;
  bool upper = true;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      out += upper ? static_cast<char>(std::toupper(u)) : c;
      upper = false;
    } else {
      upper = true;
    }
  }
  return out;
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool usableRecordId(const std::string& id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '-' || c == '_' || c == '.';
  });
}

// MODS attribute value -> vocabulary individual.
const std::map<std::string, std::string, std::less<>> kNameTypes = {
    {"personal", "Personal"}, {"corporate", "Corporate"}, {"conference", "Conference"}, {"family", "Family"}};
const std::map<std::string, std::string, std::less<>> kNamePartTypes = {{"given", "FirstName"},
                                                                         {"family", "LastName"}};
const std::map<std::string, std::string, std::less<>> kEncodings = {
    {"w3cdtf", "W3cdtf"}, {"iso8601", "Iso8601"}, {"edtf", "Edtf"}, {"marc", "Marc"}, {"temper", "Temper"}};
const std::map<std::string, std::string, std::less<>> kPoints = {{"start", "Start"}, {"end", "End"}};
const std::map<std::string, std::string, std::less<>> kQualifiers = {
    {"approximate", "Approximate"}, {"inferred", "Inferred"}, {"questionable", "Questionable"}};

void countUnmapped(const Element& element, const std::string& source, MappingResult& result) {
  for (const auto& child : element.children) {
    if (child.mapped) {
      countUnmapped(child, source, result);
    } else {
      ++result.unmappedElements;
      result.warnings.push_back({source, child.line, "unmapped element <" + child.name.local + ">"});
    }
  }
}

}  // namespace

MappingContext::MappingContext(const VocabularyRegistry& registry, Graph& target,
                               std::vector<MappingWarning>& warnings, MappingOptions options, std::string source)
    : registry_(registry),
      graph_(target),
      warnings_(warnings),
      options_(options),
      source_(std::move(source)),
      type_(Term::iri(std::string(iri::kRdfType))) {}

void MappingContext::warn(const Element& element, std::string message) {
  warnings_.push_back({source_, element.line, std::move(message)});
}

void MappingContext::add(const Term& s, std::string_view property, Term o) {
  graph_.add(s, registry_.property(property), std::move(o));
}

Term MappingContext::node(const std::string& kind) {
  if (!record_id_) return graph_.freshBlankNode();
  return registry_.mint(*record_id_ + "/" + kind + std::to_string(counters_[kind]++));
}

Term MappingContext::typed(const std::string& kind) {
  Term n = node(kind);
  graph_.add(n, type_, registry_.cls(kind));
  return n;
}

Term MappingContext::beginRecord(const Element& record) {
  counters_.clear();
  record_id_.reset();
  if (const auto* id = record.attribute("ID"); id && usableRecordId(*id)) record_id_ = *id;
  item_ = typed("ModsItem");
  return *item_;
}

Term MappingContext::organization(const std::string& affiliation) {
  if (auto it = organizations_.find(affiliation); it != organizations_.end()) return it->second;
  Term org = typed("Organization");
  Term name = typed("Name");
  Term part = typed("NamePart");
  add(org, "hasName", name);
  add(name, "hasNamePart", part);
  add(part, "hasValue", Term::literal(affiliation));
  organizations_.emplace(affiliation, org);
  return org;
}

void MappingContext::mapName(const Element& element) {
  Term agent = typed("Agent");
  Term name = typed("Name");
  add(agent, "hasName", name);

  if (const auto* type = element.attribute("type")) {
    if (auto it = kNameTypes.find(*type); it != kNameTypes.end())
      add(name, "hasNameType", registry_.individual(it->second));
    else
      warn(element, "unknown name type '" + *type + "'");
  }
  if (const auto* usage = element.attribute("usage")) {
    if (*usage == "primary")
      add(name, "isPrimaryInstance", registry_.individual("Primary"));
    else
      warn(element, "unknown name usage '" + *usage + "'");
  }
  if (const auto* authority = element.attribute("authority")) {
    Term info = typed("AuthorityInfo");
    add(name, "hasAuthorityInfo", info);
    add(info, "hasValue", Term::literal(*authority));
  }
  mapCommonAttributes(element, name);

  for (const auto& child : element.children) {
    if (!child.mapped) continue;
    const std::string text = child.trimmedText();
    if (child.is("namePart")) {
      if (text.empty()) {
        warn(child, "empty namePart skipped");
        continue;
      }
      Term part = typed("NamePart");
      add(name, "hasNamePart", part);
      add(part, "hasValue", Term::literal(text));
      if (const auto* partType = child.attribute("type")) {
        if (auto it = kNamePartTypes.find(*partType); it != kNamePartTypes.end())
          add(part, "hasNamePartType", registry_.individual(it->second));
        else
          warn(child, "namePart type '" + *partType + "' has no NamePartType counterpart; left untyped");
      }
      mapCommonAttributes(child, part, false);
    } else if (child.is("displayForm")) {
      if (!text.empty()) add(name, "hasDisplayForm", Term::literal(text));
    } else if (child.is("affiliation")) {
      if (text.empty()) {
        warn(child, "empty affiliation skipped");
        continue;
      }
      add(agent, "hasAffiliation", organization(text));
    } else if (child.is("role")) {
      for (const auto* roleTerm : child.childrenNamed("roleTerm")) {
        const std::string label = roleTerm->trimmedText();
        if (label.empty()) {
          warn(*roleTerm, "empty roleTerm skipped");
          continue;
        }
        Term role = typed("AgentRole");
        add(role, "hasValue", Term::literal(label));
        add(agent, "assumesAgentRole", role);
        add(role, "hasRoleUnderName", name);
        add(*item_, "providesAgentRole", role);
      }
    } else if (child.is("description")) {
      if (text.empty()) continue;
      Term description = typed("Description");
      add(description, "hasValue", Term::literal(text));
      add(name, "hasDescription", description);
    } else if (child.is("nameIdentifier")) {
      if (text.empty()) continue;
      Term identifier = typed("NameIdentifier");
      graph_.add(identifier, type_, registry_.cls("Identifier"));
      add(identifier, "hasValue", Term::literal(text));
      add(name, "hasNameIdentifier", identifier);
    }
  }
}

std::optional<Term> MappingContext::mapDate(const Element& element, const Term& owner) {
  const std::string text = element.trimmedText();
  if (text.empty()) {
    warn(element, "empty <" + element.name.local + "> skipped");
    return std::nullopt;
  }
  Term info = typed("DateInfo");
  add(owner, "hasDateInfo", info);
  add(info, "hasValue", Term::literal(text));
  add(info, "isOfType", registry_.individual(upperCamel(element.name.local)));

  Term attributes = typed("DateAttributes");
  add(info, "hasDateAttributes", attributes);

  auto lookup = [&](std::string_view attr, const auto& table, std::string_view property) {
    const auto* value = element.attribute(attr);
    if (!value) return;
    if (auto it = table.find(lower(*value)); it != table.end())
      add(attributes, property, registry_.individual(it->second));
    else
      warn(element, "unknown " + std::string(attr) + " '" + *value + "'");
  };
  lookup("encoding", kEncodings, "hasDateEncodingType");
  lookup("point", kPoints, "isStartOrEndPoint");
  lookup("qualifier", kQualifiers, "hasQualifier");
  if (const auto* keyDate = element.attribute("keyDate")) {
    if (*keyDate == "yes")
      add(attributes, "isKeyDate", Term::boolean(true));
    else
      warn(element, "keyDate value '" + *keyDate + "' ignored");
  }
  if (const auto* calendar = element.attribute("calendar")) {
    const std::string local = upperCamel(*calendar);
    if (local.empty()) {
      warn(element, "calendar value '" + *calendar + "' ignored");
    } else {
      Term individual = registry_.mint(local);
      graph_.add(individual, type_, registry_.cls("Calendar"));
      add(attributes, "hasAlternativeCalendar", individual);
      if (options_.strict) warn(element, "calendar '" + *calendar + "' minted as " + individual.toNTriples());
    }
  }
  mapCommonAttributes(element, info);
  return info;
}

void MappingContext::mapCommonAttributes(const Element& element, const Term& owner, bool allowId) {
  if (const auto* label = element.attribute("displayLabel")) add(owner, "hasDisplayLabel", Term::literal(*label));

  const auto* id = element.attribute("ID");
  if (id && !allowId) {
    warn(element, "@ID on <" + element.name.local + "> dropped: NamePart link attributes cannot carry an ID");
    id = nullptr;
  }
  const auto* xlinkHref = element.attribute(mods::kXlinkNamespace, "href");
  const auto* href = element.attribute("href");
  if (id || xlinkHref || href) {
    Term link = typed("LinkAttributes");
    add(owner, "hasLinkAttributes", link);
    if (id) add(link, "hasID", Term::literal(*id));
    if (xlinkHref) add(link, "hasHref", Term::literal(*xlinkHref));
    if (href) add(link, "hasHref", Term::literal(*href));
  }

  const auto* lang = element.attribute("lang");
  const auto* xmlLang = element.attribute(mods::kXmlNamespace, "lang");
  const auto* script = element.attribute("script");
  const auto* transliteration = element.attribute("transliteration");
  if (lang || xmlLang || script || transliteration) {
    Term language = typed("LanguageAttributes");
    add(owner, "hasLanguageAttributes", language);
    if (lang) add(language, "hasLang", Term::literal(*lang));
    if (xmlLang) add(language, "hasLang", Term::literal(*xmlLang));
    if (script) add(language, "hasScript", Term::literal(*script));
    if (transliteration) add(language, "hasTransliteration", Term::literal(*transliteration));
  }
}

MappingResult mapRecord(const mods::ModsDocument& doc, const VocabularyRegistry& registry, MappingOptions options) {
  MappingResult result;
  MappingContext ctx(registry, result.graph, result.warnings, options, doc.source);
  for (const Element* record : doc.records()) {
    ++result.records;
    const Term item = ctx.beginRecord(*record);
    for (const auto& child : record->children) {
      if (child.is("name")) {
        ctx.mapName(child);
      } else if (child.is("originInfo")) {
        for (const auto& date : child.children)
          if (date.mapped) ctx.mapDate(date, item);
      }
    }
  }
  countUnmapped(doc.root, doc.source, result);
  return result;
}

}  // namespace mmods
