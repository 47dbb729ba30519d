#pragma once

#include <map>
#include <string>

#include "mmods/graph.hpp"

namespace mmods {

/// Maps every blank label of `graph` to a canonical label "c<N>".
///
/// Each connected component of blank nodes is labelled separately and the
/// components are numbered in order of their canonical text. Within a
/// component, labels come from colour refinement: each blank node's colour is
/// the rank of its signature (its current colour plus the sorted shapes of
/// its incident triples, with neighbouring blank nodes replaced by their
/// colours), iterated until the partition is stable. Remaining ties are
/// broken by individualising one member of the first non-singleton class and
/// refining again; the search keeps the lexicographically smallest
/// serialisation over all branches and skips branches that a discovered
/// automorphism maps onto an explored one. The result depends only on the
/// isomorphism class of the graph. Worst case is exponential on highly
/// regular connected graphs, which mapped bibliographic records never are.
std::map<std::string, std::string> canonicalBlankLabels(const Graph& graph);

/// Copy of `graph` with blank nodes renamed through `labels`.
Graph relabelBlankNodes(const Graph& graph, const std::map<std::string, std::string>& labels);

/// Sorted N-Triples text of the graph under canonical blank labels.
std::string canonicalize(const Graph& graph);

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.size() == b.size() && canonicalize(a) == canonicalize(b);
}

}  // namespace mmods
