#include "mmods/ontology.hpp"

namespace mmods {

Graph emitOntology(const VocabularyRegistry& registry, const ConstraintCatalog& catalog) {
  Graph out;
  const Term type = Term::iri(std::string(iri::kRdfType));
  const Term owlClass = Term::iri(std::string(iri::kOwlClass));
  const Term label = Term::iri(std::string(iri::kRdfsLabel));

  for (const auto& name : registry.classNames()) out.add(registry.cls(name), type, owlClass);
  for (const auto& name : registry.propertyNames()) {
    const auto kind = registry.propertyKind(name) == PropertyKind::Object ? iri::kOwlObjectProperty
                                                                          : iri::kOwlDatatypeProperty;
    out.add(registry.property(name), type, Term::iri(std::string(kind)));
  }
  for (const auto& vocab : registry.vocabularies())
    for (const auto& ind : vocab.individuals) out.add(registry.individual(ind), type, registry.cls(vocab.name));
  const Term subClassOf = Term::iri(std::string(iri::kRdfsSubClassOf));
  for (const auto& c : catalog) {
    if (c.documentationOnly) continue;
    if (const auto* sc = std::get_if<SubClassOf>(&c.form)) out.add(sc->sub, subClassOf, sc->super);
  }
  for (const auto& module : registry.modules()) out.add(registry.moduleIri(module), label, Term::literal(module.name));
  return out;
}

}  // namespace mmods
