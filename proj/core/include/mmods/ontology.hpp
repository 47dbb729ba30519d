#pragma once

#include "mmods/catalog.hpp"
#include "mmods/graph.hpp"
#include "mmods/vocabulary.hpp"

namespace mmods {

/// Declaration graph of the ontology: owl:Class per registered class,
/// owl:ObjectProperty / owl:DatatypeProperty per property, a type triple
/// per vocabulary individual, rdfs:subClassOf per enforced SubClassOf entry,
/// and an rdfs:label per registered module.
Graph emitOntology(const VocabularyRegistry& registry, const ConstraintCatalog& catalog);

}  // namespace mmods
