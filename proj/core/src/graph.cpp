#include "mmods/graph.hpp"

#include <charconv>

#include "mmods/error.hpp"

namespace mmods {

Graph::Graph(const Graph& other) : next_blank_(other.next_blank_) {
  for (const auto& t : other.triples_) index(&*triples_.insert(t).first);
}

Graph& Graph::operator=(const Graph& other) {
  if (this != &other) {
    Graph copy(other);
    *this = std::move(copy);
  }
  return *this;
}

bool Graph::add(Term subject, Term predicate, Term object) {
  if (subject.isLiteral()) throw StructuralError("literal in subject position: " + subject.toNTriples());
  if (!predicate.isIri()) throw StructuralError("predicate must be an IRI: " + predicate.toNTriples());

  auto [it, inserted] = triples_.insert(Triple{std::move(subject), std::move(predicate), std::move(object)});
  if (!inserted) return false;
  index(&*it);
  observeBlank(it->subject);
  observeBlank(it->object);
  return true;
}

void Graph::index(const Triple* t) {
  by_subject_[t->subject].insert(t);
  by_predicate_[t->predicate].insert(t);
  by_object_[t->object].insert(t);
  by_subject_predicate_[{t->subject, t->predicate}].insert(t);
  by_predicate_object_[{t->predicate, t->object}].insert(t);
}

void Graph::observeBlank(const Term& term) {
  if (!term.isBlank()) return;
  const auto& label = term.value();
  if (label.size() < 2 || label[0] != 'b') return;
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), n);
  if (ec == std::errc{} && ptr == label.data() + label.size() && n >= next_blank_) next_blank_ = n + 1;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  auto collect = [&](const Bucket& bucket) {
    for (const Triple* t : bucket) {
      if (s && t->subject != *s) continue;
      if (p && t->predicate != *p) continue;
      if (o && t->object != *o) continue;
      out.push_back(*t);
    }
  };
  auto lookup = [&](const auto& map, const auto& key) {
    if (auto it = map.find(key); it != map.end()) collect(it->second);
  };

  if (s && p) {
    lookup(by_subject_predicate_, std::pair{*s, *p});
  } else if (p && o) {
    lookup(by_predicate_object_, std::pair{*p, *o});
  } else if (s) {
    lookup(by_subject_, *s);
  } else if (o) {
    lookup(by_object_, *o);
  } else if (p) {
    lookup(by_predicate_, *p);
  } else {
    out.assign(triples_.begin(), triples_.end());
  }
  return out;
}

std::vector<Term> Graph::objects(const Term& subject, const Term& predicate) const {
  std::vector<Term> out;
  if (auto it = by_subject_predicate_.find({subject, predicate}); it != by_subject_predicate_.end())
    for (const Triple* t : it->second) out.push_back(t->object);
  return out;
}

std::vector<Term> Graph::subjects(const Term& predicate, const Term& object) const {
  std::vector<Term> out;
  if (auto it = by_predicate_object_.find({predicate, object}); it != by_predicate_object_.end())
    for (const Triple* t : it->second) out.push_back(t->subject);
  return out;
}

bool Graph::hasEdge(const Term& subject, const Term& predicate) const {
  return by_subject_predicate_.contains({subject, predicate});
}

Term Graph::freshBlankNode() { return Term::blank("b" + std::to_string(next_blank_++)); }

void Graph::merge(const Graph& other) {
  std::map<std::string, Term> renamed;
  auto rename = [&](const Term& t) -> Term {
    if (!t.isBlank()) return t;
    auto it = renamed.find(t.value());
    if (it == renamed.end()) it = renamed.emplace(t.value(), freshBlankNode()).first;
    return it->second;
  };
  for (const auto& t : other.triples_) add(rename(t.subject), t.predicate, rename(t.object));
}

}  // namespace mmods
