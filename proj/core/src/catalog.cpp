#include "mmods/catalog.hpp"

#include <algorithm>
#include <deque>

namespace mmods {

std::string_view toString(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "error";
}

ConstraintCatalog::ConstraintCatalog(std::vector<Constraint> constraints) : constraints_(std::move(constraints)) {
  for (const auto& c : constraints_) {
    if (c.documentationOnly) continue;
    if (const auto* sc = std::get_if<SubClassOf>(&c.form)) {
      supers_[sc->sub].push_back(sc->super);
      subs_[sc->super].push_back(sc->sub);
    }
  }
}

const Constraint* ConstraintCatalog::find(std::string_view axiomId) const {
  auto it = std::find_if(constraints_.begin(), constraints_.end(), [&](const auto& c) { return c.axiomId == axiomId; });
  return it == constraints_.end() ? nullptr : &*it;
}

const std::vector<Term>& ConstraintCatalog::directSuperclasses(const Term& cls) const {
  static const std::vector<Term> kNone;
  auto it = supers_.find(cls);
  return it == supers_.end() ? kNone : it->second;
}

std::set<Term> ConstraintCatalog::subclassesOf(const Term& cls) const {
  std::set<Term> out{cls};
  std::deque<Term> queue{cls};
  while (!queue.empty()) {
    auto it = subs_.find(queue.front());
    queue.pop_front();
    if (it == subs_.end()) continue;
    for (const auto& sub : it->second)
      if (out.insert(sub).second) queue.push_back(sub);
  }
  return out;
}

namespace {

class CatalogBuilder {
 public:
  explicit CatalogBuilder(const VocabularyRegistry& registry) : r_(registry) {}

  Term c(std::string_view name) const { return r_.cls(name); }
  Term p(std::string_view name) const { return r_.property(name); }
  Filler cf(std::string_view name) const { return Filler::ofClass(c(name)); }
  Filler vf(std::string_view name) const { return Filler::ofVocabulary(c(name), std::string(name)); }

  void add(std::string id, std::string module, ConstraintForm form, std::string axiom) {
    Severity severity = std::holds_alternative<StructuralTautology>(form) ? Severity::Info : Severity::Error;
    out_.push_back({std::move(id), std::move(module), std::move(form), severity, false, std::move(axiom)});
  }

  void addDocumentation(std::string id, std::string module, ConstraintForm form, std::string axiom) {
    out_.push_back({std::move(id), std::move(module), std::move(form), Severity::Info, true, std::move(axiom)});
  }

  std::vector<Constraint> take() { return std::move(out_); }

 private:
  const VocabularyRegistry& r_;
  std::vector<Constraint> out_;
};

}  // namespace

ConstraintCatalog buildCatalog(const VocabularyRegistry& registry) {
  CatalogBuilder b(registry);
  const Filler xsdString = Filler::ofDatatype(Term::iri(std::string(iri::kXsdString)));
  const Filler xsdBoolean = Filler::ofDatatype(Term::iri(std::string(iri::kXsdBoolean)));
  const std::string_view kRole = "AGENTROLE";
  const std::string_view kElem = "ELEMENTINFO";
  const std::string_view kOrg = "ORGANIZATION";
  const std::string_view kName = "NAME";
  const std::string_view kDate = "DATEINFO";
  const std::string_view kDateAttr = "DATEATTRIBUTES";
  auto S = [](std::string_view s) { return std::string(s); };

  // Role-dependent names.
  b.add("1", S(kRole), MaxOne{Direction::Inverse, b.p("providesAgentRole"), std::nullopt, std::nullopt},
        "⊤ ⊑ ≤1 providesAgentRole⁻.⊤");
  b.add("2", S(kRole), StructuralTautology{b.c("AgentRole"), b.p("hasRoleUnderName"), b.cf("Name")},
        "AgentRole ⊑ ≥0 hasRoleUnderName.Name");
  // Encoded as printed: the subject of assumesAgentRole is constrained, not the object.
  b.add("3", S(kRole), ExistentialDomain{b.p("assumesAgentRole"), b.cf("Agent"), b.c("AgentRole")},
        "∃assumesAgentRole.Agent ⊑ AgentRole");
  b.add("4", S(kRole), MaxOne{Direction::Inverse, b.p("assumesAgentRole"), b.c("AgentRole"), b.cf("Agent")},
        "AgentRole ⊑ ≤1 assumesAgentRole⁻.Agent");
  b.add("5", S(kRole), StructuralTautology{b.c("Agent"), b.p("assumesAgentRole"), b.cf("AgentRole")},
        "Agent ⊑ ≥0 assumesAgentRole.AgentRole");
  b.add("6", S(kRole), ExistentialAtLeastOne{b.c("Agent"), b.p("hasName"), b.cf("Name")}, "Agent ⊑ ∃hasName.Name");
  b.add("7", S(kRole), RoleChain{b.p("assumesAgentRole"), b.p("hasRoleUnderName"), false, b.p("hasName")},
        "assumesAgentRole ∘ hasRoleUnderName ⊑ hasName");
  b.add("8", S(kRole), RoleChain{b.p("hasName"), b.p("hasRoleUnderName"), true, b.p("assumesAgentRole")},
        "hasName ∘ hasRoleUnderName⁻ ⊑ assumesAgentRole");

  // Element information.
  b.addDocumentation("9", S(kElem), SubClassOf{Term::iri(std::string(iri::kOwlThing)), b.c("ElementInfo")},
                     "⊤ ⊑ ElementInfo");
  b.add("10", S(kElem), MaxOne{Direction::Forward, b.p("hasLinkAttributes"), std::nullopt, std::nullopt},
        "⊤ ⊑ ≤1 hasLinkAttributes.⊤");
  b.add("11", S(kElem), StructuralTautology{b.c("ElementInfo"), b.p("hasLinkAttributes"), b.cf("LinkAttributes")},
        "ElementInfo ⊑ ≥0 hasLinkAttributes.LinkAttributes");
  b.add("12", S(kElem), UniversalRange{b.p("hasLanguageAttributes"), b.cf("LanguageAttributes")},
        "⊤ ⊑ ∀hasLanguageAttributes.LanguageAttributes");
  b.add("13", S(kElem), MaxOne{Direction::Forward, b.p("hasLanguageAttributes"), std::nullopt, std::nullopt},
        "⊤ ⊑ ≤1 hasLanguageAttributes.⊤");
  b.add("14", S(kElem),
        StructuralTautology{b.c("ElementInfo"), b.p("hasLanguageAttributes"), b.cf("LanguageAttributes")},
        "ElementInfo ⊑ ≥0 hasLanguageAttributes.LanguageAttributes");

  // Organization.
  b.add("15", S(kOrg), StructuralTautology{b.c("Organization"), b.p("providesAgentRole"), b.cf("AgentRole")},
        "Organization ⊑ ≥0 providesAgentRole.AgentRole");
  b.add("16", S(kOrg), ExistentialAtLeastOne{b.c("Organization"), b.p("hasName"), b.cf("Name")},
        "Organization ⊑ ∃hasName.Name");
  b.add("17", S(kOrg), StructuralTautology{b.c("Organization"), b.p("hasStandardizedName"), b.cf("Name")},
        "Organization ⊑ ≥0 hasStandardizedName.Name");
  b.add("18", S(kOrg), MaxOne{Direction::Forward, b.p("hasLinkAttributes"), std::nullopt, std::nullopt},
        "⊤ ⊑ ≤1 hasLinkAttributes.⊤");
  b.add("19", S(kOrg), StructuralTautology{b.c("Organization"), b.p("hasLinkAttributes"), b.cf("LinkAttributes")},
        "Organization ⊑ ≥0 hasLinkAttributes.LinkAttributes");

  // Name.
  b.add("20", S(kName), ExistentialAtLeastOne{b.c("Name"), b.p("hasNamePart"), b.cf("NamePart")},
        "Name ⊑ ∃hasNamePart.NamePart");
  b.add("21", S(kName), InverseExistential{b.c("NamePart"), b.p("hasNamePart"), b.c("Name")},
        "NamePart ⊑ ∃hasNamePart⁻.Name");
  b.add("22", S(kName), MaxOne{Direction::Inverse, b.p("hasNamePart"), std::nullopt, std::nullopt},
        "⊤ ⊑ ≤1 hasNamePart⁻.⊤");
  b.add("23", S(kName), StructuralTautology{b.c("Name"), b.p("hasNamePart"), b.cf("NamePart")},
        "Name ⊑ ≥0 hasNamePart.NamePart");
  b.add("24", S(kName), UniversalRange{b.p("hasNamePartType"), b.vf("NamePartType")},
        "⊤ ⊑ ∀hasNamePartType.NamePartType");
  b.add("25", S(kName), StructuralTautology{b.c("Name"), b.p("hasDescription"), b.cf("Description")},
        "Name ⊑ ≥0 hasDescription.Description");
  b.add("26", S(kName), StructuralTautology{b.c("Name"), b.p("hasNameType"), b.vf("NameType")},
        "Name ⊑ ≥0 hasNameType.NameType");
  b.add("27", S(kName), StructuralTautology{b.c("Name"), b.p("isPrimaryInstance"), b.vf("Usage")},
        "Name ⊑ ≥0 isPrimaryInstance.Usage");
  b.add("28", S(kName), MaxOne{Direction::Forward, b.p("hasAuthorityInfo"), std::nullopt, std::nullopt},
        "⊤ ⊑ ≤1 hasAuthorityInfo.⊤");
  b.add("29", S(kName), StructuralTautology{b.c("Name"), b.p("hasAuthorityInfo"), b.cf("AuthorityInfo")},
        "Name ⊑ ≥0 hasAuthorityInfo.AuthorityInfo");
  b.add("30", S(kName), SubClassOf{b.c("NamePart"), b.c("ElementInfo")}, "NamePart ⊑ ElementInfo");
  b.add("31", S(kName), NegatedPath{b.c("NamePart"), b.p("hasLinkAttributes"), b.p("hasID")},
        "NamePart ⊑ ¬(∃hasLinkAttributes.∃hasID.⊤)");
  b.add("32", S(kName), SubClassOf{b.c("NameIdentifier"), b.c("Identifier")}, "NameIdentifier ⊑ Identifier");

  // Date information and date attributes.
  b.add("33", S(kDate), MaxOne{Direction::Inverse, b.p("hasDateInfo"), std::nullopt, std::nullopt},
        "⊤ ⊑ ≤1 hasDateInfo⁻.⊤");
  b.add("34", S(kDate), StructuralTautology{std::nullopt, b.p("hasDateInfo"), b.cf("DateInfo")},
        "Thing ⊑ ≥0 hasDateInfo.DateInfo");
  b.add("35", S(kDate), ExistentialAtLeastOne{b.c("DateInfo"), b.p("hasDateAttributes"), b.cf("DateAttributes")},
        "DateInfo ⊑ ∃hasDateAttributes.DateAttributes");
  b.add("36", S(kDate), MaxOne{Direction::Forward, b.p("hasDateAttributes"), std::nullopt, std::nullopt},
        "⊤ ⊑ ≤1 hasDateAttributes.⊤");
  b.add("37", S(kDate), StructuralTautology{b.c("DateInfo"), b.p("hasDateAttributes"), b.cf("DateAttributes")},
        "DateInfo ⊑ ≥0 hasDateAttributes.DateAttributes");
  b.add("38", S(kDate), ExistentialAtLeastOne{b.c("DateInfo"), b.p("isOfType"), b.vf("DateInfoType")},
        "DateInfo ⊑ ∃isOfType.DateInfoType");
  b.add("39", S(kDate), ExistentialAtLeastOne{b.c("DateInfo"), b.p("hasValue"), xsdString},
        "DateInfo ⊑ ∃hasValue.xsd:string");
  b.add("40", S(kDateAttr), StructuralTautology{b.c("DateAttributes"), b.p("hasDateEncodingType"), b.vf("DateEncoding")},
        "DateAttributes ⊑ ≥0 hasDateEncodingType.DateEncoding");
  b.add("41", S(kDateAttr), StructuralTautology{b.c("DateAttributes"), b.p("isKeyDate"), xsdBoolean},
        "DateAttributes ⊑ ≥0 isKeyDate.xsd:boolean");
  b.add("42", S(kDateAttr), StructuralTautology{b.c("DateAttributes"), b.p("isStartOrEndPoint"), b.vf("Point")},
        "DateAttributes ⊑ ≥0 isStartOrEndPoint.Point");
  b.add("43", S(kDateAttr), StructuralTautology{b.c("DateAttributes"), b.p("hasAlternativeCalendar"), b.vf("Calendar")},
        "DateAttributes ⊑ ≥0 hasAlternativeCalendar.Calendar");

  // Support entries for edges the mapper produces without a displayed axiom.
  b.add("S1", S(kOrg), StructuralTautology{b.c("Agent"), b.p("hasAffiliation"), b.cf("Organization")},
        "Agent ⊑ ≥0 hasAffiliation.Organization");
  b.add("S2", S(kDateAttr), StructuralTautology{b.c("DateAttributes"), b.p("hasQualifier"), b.vf("Qualifier")},
        "DateAttributes ⊑ ≥0 hasQualifier.Qualifier");
  b.add("S3", S(kName), StructuralTautology{b.c("Name"), b.p("hasNameIdentifier"), b.cf("NameIdentifier")},
        "Name ⊑ ≥0 hasNameIdentifier.NameIdentifier");
  b.add("S4", S(kName), StructuralTautology{b.c("Name"), b.p("hasDisplayForm"), xsdString},
        "Name ⊑ ≥0 hasDisplayForm.xsd:string");

  return ConstraintCatalog(b.take());
}

namespace {

void collectTerms(const Filler& f, std::vector<const Term*>& out) {
  if (f.term && f.kind != Filler::Kind::Datatype) out.push_back(&*f.term);
}

}  // namespace

std::vector<std::string> unresolvedReferences(const ConstraintCatalog& catalog, const VocabularyRegistry& registry) {
  std::vector<std::string> missing;
  for (const auto& c : catalog) {
    std::vector<const Term*> refs;
    std::visit(
        [&](const auto& f) {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, SubClassOf>) {
            if (!c.documentationOnly) refs.push_back(&f.sub);
            refs.push_back(&f.super);
          } else if constexpr (std::is_same_v<T, ExistentialAtLeastOne>) {
            refs.insert(refs.end(), {&f.scope, &f.property});
            collectTerms(f.filler, refs);
          } else if constexpr (std::is_same_v<T, MaxOne>) {
            refs.push_back(&f.property);
            if (f.scope) refs.push_back(&*f.scope);
            if (f.filler) collectTerms(*f.filler, refs);
          } else if constexpr (std::is_same_v<T, UniversalRange>) {
            refs.push_back(&f.property);
            collectTerms(f.filler, refs);
          } else if constexpr (std::is_same_v<T, InverseExistential>) {
            refs.insert(refs.end(), {&f.scope, &f.property, &f.source});
          } else if constexpr (std::is_same_v<T, NegatedPath>) {
            refs.insert(refs.end(), {&f.scope, &f.first, &f.second});
          } else if constexpr (std::is_same_v<T, StructuralTautology>) {
            refs.push_back(&f.property);
            if (f.scope) refs.push_back(&*f.scope);
            collectTerms(f.filler, refs);
          } else if constexpr (std::is_same_v<T, ExistentialDomain>) {
            refs.insert(refs.end(), {&f.property, &f.required});
            collectTerms(f.filler, refs);
          } else if constexpr (std::is_same_v<T, RoleChain>) {
            refs.insert(refs.end(), {&f.first, &f.second, &f.implied});
          }
        },
        c.form);
    for (const Term* t : refs)
      if (!registry.isRegistered(*t)) missing.push_back(c.axiomId + ": " + t->value());
  }
  return missing;
}

std::set<Term> instancesOf(const Graph& graph, const Term& cls, const ConstraintCatalog& catalog) {
  std::set<Term> out;
  const Term type = Term::iri(std::string(iri::kRdfType));
  for (const auto& c : catalog.subclassesOf(cls))
    for (auto& s : graph.subjects(type, c)) out.insert(std::move(s));
  return out;
}

bool isInstanceOf(const Graph& graph, const Term& node, const Term& cls, const ConstraintCatalog& catalog) {
  if (node.isLiteral()) return false;
  const Term type = Term::iri(std::string(iri::kRdfType));
  for (const auto& c : catalog.subclassesOf(cls))
    if (graph.contains({node, type, c})) return true;
  return false;
}

}  // namespace mmods
