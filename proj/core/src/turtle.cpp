#include "mmods/turtle.hpp"

#include <cctype>
#include <map>

#include "mmods/canonical.hpp"

namespace mmods {

namespace {

bool plainLocalName(std::string_view local) {
  if (local.empty() || !(std::isalpha(static_cast<unsigned char>(local[0])) || local[0] == '_')) return false;
  for (char c : local)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

class TermWriter {
 public:
  TermWriter(const VocabularyRegistry& registry, const std::map<std::string, std::string>& labels)
      : labels_(labels) {
    prefixes_ = {{"mmods", registry.baseIri()},
                 {"rdf", std::string(iri::kRdf)},
                 {"rdfs", std::string(iri::kRdfs)},
                 {"xsd", std::string(iri::kXsd)}};
  }

  const std::vector<std::pair<std::string, std::string>>& prefixes() const { return prefixes_; }

  std::string iri(const std::string& value) const {
    // Longest matching namespace wins.
    const std::pair<std::string, std::string>* best = nullptr;
    for (const auto& p : prefixes_)
      if (value.starts_with(p.second) && (!best || p.second.size() > best->second.size())) best = &p;
    if (best) {
      const std::string_view local = std::string_view(value).substr(best->second.size());
      if (plainLocalName(local)) return best->first + ":" + std::string(local);
    }
    return Term::iri(value).toNTriples();
  }

  std::string term(const Term& t, bool predicate = false) const {
    switch (t.kind()) {
      case TermKind::Iri:
        if (predicate && t.value() == iri::kRdfType) return "a";
        return iri(t.value());
      case TermKind::BlankNode:
        return "_:" + labels_.at(t.value());
      case TermKind::Literal: {
        std::string out = "\"" + escapeLiteral(t.value()) + "\"";
        if (!t.language().empty()) return out + "@" + t.language();
        if (t.datatype() != iri::kXsdString) out += "^^" + iri(t.datatype());
        return out;
      }
    }
    return {};
  }

 private:
  const std::map<std::string, std::string>& labels_;
  std::vector<std::pair<std::string, std::string>> prefixes_;
};

}  // namespace

std::string writeTurtle(const Graph& graph, const VocabularyRegistry& registry) {
  const auto labels = canonicalBlankLabels(graph);
  const TermWriter writer(registry, labels);

  std::string out;
  for (const auto& [prefix, ns] : writer.prefixes()) out += "@prefix " + prefix + ": <" + ns + "> .\n";

  // subject text -> predicate text -> sorted object texts
  std::map<std::string, std::map<std::string, std::vector<std::string>>> grouped;
  for (const auto& t : graph)
    grouped[writer.term(t.subject)][writer.term(t.predicate, true)].push_back(writer.term(t.object));

  for (auto& [subject, predicates] : grouped) {
    out += "\n" + subject;
    bool firstPredicate = true;
    for (auto& [predicate, objects] : predicates) {
      std::sort(objects.begin(), objects.end());
      out += firstPredicate ? " " : " ;\n    ";
      firstPredicate = false;
      out += predicate + " ";
      for (std::size_t i = 0; i < objects.size(); ++i) out += (i ? ", " : "") + objects[i];
    }
    out += " .\n";
  }
  return out;
}

}  // namespace mmods
