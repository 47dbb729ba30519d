#include <algorithm>
#include <map>

#include "oracle/oracle.hpp"

namespace mmods::oracle {

namespace {

class Enumerator {
 public:
  Enumerator(const std::vector<Triple>& triples, const ConstraintCatalog& catalog, const VocabularyRegistry& registry,
             bool strict)
      : triples_(triples), registry_(registry), strict_(strict), type_(Term::iri(std::string(iri::kRdfType))) {
    // (sub, super) pairs closed under transitivity by naive iteration.
    for (const auto& c : catalog)
      if (!c.documentationOnly)
        if (const auto* sc = std::get_if<SubClassOf>(&c.form)) below_.insert({sc->sub, sc->super});
    bool changed = true;
    while (changed) {
      changed = false;
      auto snapshot = below_;
      for (const auto& [a, b] : snapshot)
        for (const auto& [c, d] : snapshot)
          if (b == c && below_.insert({a, d}).second) changed = true;
    }
  }

  bool typed(const Term& node, const Term& cls) const {
    for (const auto& t : triples_) {
      if (t.subject != node || t.predicate != type_) continue;
      if (t.object == cls || below_.contains({t.object, cls})) return true;
    }
    return false;
  }

  std::vector<Term> nodes() const {
    std::vector<Term> out;
    for (const auto& t : triples_) {
      out.push_back(t.subject);
      out.push_back(t.object);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool listed(const Term& node, const std::string& vocabulary) const {
    const auto values = registry_.vocabularyValues(vocabulary);
    return std::find(values.begin(), values.end(), node) != values.end();
  }

  bool fills(const Term& node, const Filler& filler) const {
    switch (filler.kind) {
      case Filler::Kind::Any: return true;
      case Filler::Kind::Class: return typed(node, *filler.term);
      case Filler::Kind::Vocabulary: return listed(node, filler.vocabulary) || typed(node, *filler.term);
      case Filler::Kind::Datatype: return node.isLiteral() && node.datatype() == filler.term->value();
    }
    return false;
  }

  std::vector<Triple> edges(const Term& p) const {
    std::vector<Triple> out;
    for (const auto& t : triples_)
      if (t.predicate == p) out.push_back(t);
    return out;
  }

  void run(const Constraint& c, std::multiset<FindingKey>& out) const {
    if (c.documentationOnly) return;
    const std::string code = c.code();
    auto put = [&](Severity s, const Term& focus, std::vector<Triple> ts) {
      std::sort(ts.begin(), ts.end());
      out.insert({code, s, focus, std::move(ts)});
    };

    if (const auto* f = std::get_if<ExistentialAtLeastOne>(&c.form)) {
      for (const auto& x : nodes()) {
        if (!typed(x, f->scope)) continue;
        bool found = false;
        for (const auto& t : edges(f->property))
          if (t.subject == x && fills(t.object, f->filler)) found = true;
        if (!found) put(Severity::Error, x, {});
      }
    } else if (const auto* f = std::get_if<MaxOne>(&c.form)) {
      for (const auto& focus : nodes()) {
        if (f->scope && !typed(focus, *f->scope)) continue;
        std::vector<Triple> hits;
        for (const auto& t : edges(f->property)) {
          const bool forward = f->direction == Direction::Forward;
          if ((forward ? t.subject : t.object) != focus) continue;
          if (f->filler && !fills(forward ? t.object : t.subject, *f->filler)) continue;
          hits.push_back(t);
        }
        if (hits.size() >= 2) put(Severity::Error, focus, hits);
      }
    } else if (const auto* f = std::get_if<UniversalRange>(&c.form)) {
      for (const auto& t : edges(f->property)) {
        if (f->filler.kind == Filler::Kind::Vocabulary) {
          if (listed(t.object, f->filler.vocabulary)) continue;
          const bool minted = typed(t.object, *f->filler.term);
          put(minted && !strict_ ? Severity::Warning : Severity::Error, t.subject, {t});
        } else if (!fills(t.object, f->filler)) {
          put(Severity::Error, t.subject, {t});
        }
      }
    } else if (const auto* f = std::get_if<InverseExistential>(&c.form)) {
      for (const auto& x : nodes()) {
        if (!typed(x, f->scope)) continue;
        bool found = false;
        for (const auto& t : edges(f->property))
          if (t.object == x && typed(t.subject, f->source)) found = true;
        if (!found) put(Severity::Error, x, {});
      }
    } else if (const auto* f = std::get_if<NegatedPath>(&c.form)) {
      for (const auto& x : nodes()) {
        if (!typed(x, f->scope)) continue;
        std::vector<Triple> path;
        for (const auto& first : edges(f->first)) {
          if (first.subject != x) continue;
          std::vector<Triple> next;
          for (const auto& second : edges(f->second))
            if (second.subject == first.object) next.push_back(second);
          if (next.empty()) continue;
          path.push_back(first);
          path.insert(path.end(), next.begin(), next.end());
        }
        if (!path.empty()) put(Severity::Error, x, path);
      }
    } else if (const auto* f = std::get_if<StructuralTautology>(&c.form)) {
      for (const auto& t : edges(f->property)) {
        if (f->scope && !typed(t.subject, *f->scope)) continue;
        bool ok;
        if (f->filler.kind == Filler::Kind::Vocabulary) {
          ok = listed(t.object, f->filler.vocabulary) || (!strict_ && typed(t.object, *f->filler.term));
        } else {
          ok = fills(t.object, f->filler);
        }
        if (!ok) put(Severity::Warning, t.subject, {t});
      }
    } else if (const auto* f = std::get_if<ExistentialDomain>(&c.form)) {
      for (const auto& x : nodes()) {
        if (typed(x, f->required)) continue;
        std::vector<Triple> hits;
        for (const auto& t : edges(f->property))
          if (t.subject == x && fills(t.object, f->filler)) hits.push_back(t);
        if (!hits.empty()) put(Severity::Error, x, hits);
      }
    }
  }

 private:
  const std::vector<Triple>& triples_;
  const VocabularyRegistry& registry_;
  bool strict_;
  Term type_;
  std::set<std::pair<Term, Term>> below_;
};

}  // namespace

std::multiset<FindingKey> keysOf(const std::vector<Finding>& findings) {
  std::multiset<FindingKey> out;
  for (const auto& f : findings) out.insert({f.code, f.severity, f.focus, f.triples});
  return out;
}

std::multiset<FindingKey> bruteForceFindings(const std::vector<Triple>& triples, const ConstraintCatalog& catalog,
                                             const VocabularyRegistry& registry, bool strict) {
  std::multiset<FindingKey> out;
  Enumerator e(triples, catalog, registry, strict);
  for (const auto& c : catalog) e.run(c, out);
  return out;
}

}  // namespace mmods::oracle
