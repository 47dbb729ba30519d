#include "mmods/materializer.hpp"

#include <deque>

namespace mmods {

Graph materialize(const Graph& graph, const ConstraintCatalog& catalog) {
  std::vector<const RoleChain*> chains;
  for (const auto& c : catalog)
    if (const auto* rc = std::get_if<RoleChain>(&c.form)) chains.push_back(rc);
  const Term type = Term::iri(std::string(iri::kRdfType));

  Graph out = graph;
  std::deque<Triple> pending(graph.begin(), graph.end());
  auto derive = [&](Term s, const Term& p, Term o) {
    Triple t{std::move(s), p, std::move(o)};
    if (out.add(t)) pending.push_back(std::move(t));
  };

  // Semi-naive: every new triple is joined against the current graph once,
  // in each body position it can occupy.
  while (!pending.empty()) {
    const Triple t = std::move(pending.front());
    pending.pop_front();

    if (t.predicate == type) {
      for (const auto& super : catalog.directSuperclasses(t.object)) derive(t.subject, type, super);
    }
    for (const RoleChain* rc : chains) {
      if (t.predicate == rc->first) {
        // t = (x first y)
        if (!rc->secondInverted) {
          if (!t.object.isLiteral())
            for (const auto& z : out.objects(t.object, rc->second)) derive(t.subject, rc->implied, z);
        } else {
          for (const auto& z : out.subjects(rc->second, t.object)) derive(t.subject, rc->implied, z);
        }
      }
      if (t.predicate == rc->second) {
        if (!rc->secondInverted) {
          // t = (y second z)
          for (const auto& x : out.subjects(rc->first, t.subject)) derive(x, rc->implied, t.object);
        } else {
          // t = (z second y)
          for (const auto& x : out.subjects(rc->first, t.object)) derive(x, rc->implied, t.subject);
        }
      }
    }
  }
  return out;
}

}  // namespace mmods
