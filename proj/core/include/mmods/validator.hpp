#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mmods/catalog.hpp"
#include "mmods/graph.hpp"
#include "mmods/vocabulary.hpp"

namespace mmods {

struct Finding {
  std::string code;
  std::string axiomId;
  Severity severity = Severity::Error;
  Term focus;
  /// Offending edges, sorted. Empty for missing-edge findings.
  std::vector<Triple> triples;
  std::string detail;
};

struct ValidationReport {
  std::string source;
  std::vector<Finding> findings;

  std::size_t count(Severity severity) const;
  std::size_t errors() const { return count(Severity::Error); }
  std::size_t warnings() const { return count(Severity::Warning); }
  std::size_t infos() const { return count(Severity::Info); }
  bool conforms() const { return errors() == 0; }
};

struct ValidationOptions {
  /// Promote unknown controlled-vocabulary individuals from warnings to errors.
  bool strict = false;
  /// Validate the materialized graph rather than the graph as given.
  bool materialize = true;
};

/// Closed-world checker: each axiom is read as an integrity constraint over
/// the explicit triples.
class Validator {
 public:
  Validator(const VocabularyRegistry& registry, const ConstraintCatalog& catalog, ValidationOptions options = {})
      : registry_(registry), catalog_(catalog), options_(options) {}

  /// Findings of one constraint against `graph`, as given (no materialization).
  std::vector<Finding> check(const Graph& graph, const Constraint& constraint) const;

  /// Findings of every catalog entry, in catalog order.
  ValidationReport validate(const Graph& graph) const;

 private:
  enum class VocabStatus { Member, Minted, Foreign };

  bool satisfies(const Graph& graph, const Term& node, const Filler& filler) const;
  VocabStatus vocabStatus(const Graph& graph, const Term& node, const Filler& filler) const;

  const VocabularyRegistry& registry_;
  const ConstraintCatalog& catalog_;
  ValidationOptions options_;
};

inline ValidationReport validate(const Graph& graph, const ConstraintCatalog& catalog,
                                 const VocabularyRegistry& registry, ValidationOptions options = {}) {
  return Validator(registry, catalog, options).validate(graph);
}

}  // namespace mmods
