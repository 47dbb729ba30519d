#pragma once

#include <string>
#include <string_view>

#include "mmods/graph.hpp"

namespace mmods {

/// One triple per line, canonical blank labels, lines sorted bytewise,
/// LF-terminated. Equal to canonicalize(graph).
std::string writeNTriples(const Graph& graph);

/// Parses N-Triples. Blank labels are kept as given. Throws ParseError with
/// the 1-based line number and the offending token.
Graph readNTriples(std::string_view text);

}  // namespace mmods
