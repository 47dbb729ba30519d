#pragma once

#include "mmods/catalog.hpp"
#include "mmods/graph.hpp"

namespace mmods {

/// Least fixpoint of the catalog's role chains and subclass entries over
/// `graph`. Only adds triples between nodes already present.
Graph materialize(const Graph& graph, const ConstraintCatalog& catalog);

}  // namespace mmods
