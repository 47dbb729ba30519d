#pragma once

#include <string>

#include "mmods/graph.hpp"
#include "mmods/vocabulary.hpp"

namespace mmods {

/// Turtle with `@prefix` lines for the registry base IRI and rdf, rdfs, xsd.
/// Subjects in canonical order, predicate lists grouped with `;`, object
/// lists with `,`. No blank-node property lists or collections.
std::string writeTurtle(const Graph& graph, const VocabularyRegistry& registry);

}  // namespace mmods
