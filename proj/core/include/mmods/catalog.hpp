#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mmods/graph.hpp"
#include "mmods/vocabulary.hpp"

namespace mmods {

enum class Severity { Error, Warning, Info };

std::string_view toString(Severity severity);

/// What an edge's object has to be for an axiom to count it.
struct Filler {
  enum class Kind { Any, Class, Vocabulary, Datatype };

  Kind kind = Kind::Any;
  /// Class IRI, vocabulary class IRI, or datatype IRI. Unused for Any.
  std::optional<Term> term;
  /// Vocabulary name when kind == Vocabulary.
  std::string vocabulary;

  static Filler any() { return {}; }
  static Filler ofClass(Term cls) { return {Kind::Class, std::move(cls), {}}; }
  static Filler ofVocabulary(Term cls, std::string name) { return {Kind::Vocabulary, std::move(cls), std::move(name)}; }
  static Filler ofDatatype(Term datatype) { return {Kind::Datatype, std::move(datatype), {}}; }
};

enum class Direction { Forward, Inverse };

/// sub ⊑ super
struct SubClassOf {
  Term sub;
  Term super;
};

/// scope ⊑ ∃property.filler
struct ExistentialAtLeastOne {
  Term scope;
  Term property;
  Filler filler;
};

/// scope ⊑ ≤1 property.filler (forward) or scope ⊑ ≤1 property⁻.filler (inverse).
/// No scope means ⊤.
struct MaxOne {
  Direction direction;
  Term property;
  std::optional<Term> scope;
  std::optional<Filler> filler;
};

/// ⊤ ⊑ ∀property.filler
struct UniversalRange {
  Term property;
  Filler filler;
};

/// scope ⊑ ∃property⁻.source
struct InverseExistential {
  Term scope;
  Term property;
  Term source;
};

/// scope ⊑ ¬∃first.∃second.⊤
struct NegatedPath {
  Term scope;
  Term first;
  Term second;
};

/// scope ⊑ ≥0 property.filler; no scope means ⊤.
struct StructuralTautology {
  std::optional<Term> scope;
  Term property;
  Filler filler;
};

/// ∃property.filler ⊑ required
struct ExistentialDomain {
  Term property;
  Filler filler;
  Term required;
};

/// first ∘ second ⊑ implied, or first ∘ second⁻ ⊑ implied when secondInverted.
struct RoleChain {
  Term first;
  Term second;
  bool secondInverted = false;
  Term implied;
};

using ConstraintForm = std::variant<SubClassOf, ExistentialAtLeastOne, MaxOne, UniversalRange, InverseExistential,
                                    NegatedPath, StructuralTautology, ExistentialDomain, RoleChain>;

struct Constraint {
  /// Axiom label, e.g. "6", or "S1" for support constraints.
  std::string axiomId;
  /// Upper-case module tag used in the violation code, e.g. "AGENTROLE".
  std::string module;
  ConstraintForm form;
  Severity severity = Severity::Error;
  /// Kept for documentation; never enforced, never used for inference.
  bool documentationOnly = false;
  /// DL rendering of the axiom.
  std::string axiom;

  /// "E_<MODULE>_<axiomId>"
  std::string code() const { return "E_" + module + "_" + axiomId; }
};

/// Ordered list of every encoded axiom, plus the subclass hierarchy the
/// SubClassOf entries induce.
class ConstraintCatalog {
 public:
  explicit ConstraintCatalog(std::vector<Constraint> constraints);

  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  std::size_t size() const noexcept { return constraints_.size(); }
  auto begin() const { return constraints_.begin(); }
  auto end() const { return constraints_.end(); }

  const Constraint* find(std::string_view axiomId) const;

  /// Direct superclasses of `cls` from enforced SubClassOf entries.
  const std::vector<Term>& directSuperclasses(const Term& cls) const;
  /// `cls` together with every transitive subclass.
  std::set<Term> subclassesOf(const Term& cls) const;

 private:
  std::vector<Constraint> constraints_;
  std::map<Term, std::vector<Term>> supers_;
  std::map<Term, std::vector<Term>> subs_;
};

/// Every axiom encoded against `registry`, in label order.
ConstraintCatalog buildCatalog(const VocabularyRegistry& registry);

/// Names of IRIs referenced by the catalog that the registry cannot resolve.
/// Empty for a consistent catalog.
std::vector<std::string> unresolvedReferences(const ConstraintCatalog& catalog, const VocabularyRegistry& registry);

/// Subjects typed with `cls` or any of its (transitive) subclasses.
std::set<Term> instancesOf(const Graph& graph, const Term& cls, const ConstraintCatalog& catalog);
bool isInstanceOf(const Graph& graph, const Term& node, const Term& cls, const ConstraintCatalog& catalog);

}  // namespace mmods
