#include "mmods/validator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mmods/materializer.hpp"

namespace mmods {

namespace {

std::string fillerText(const Filler& filler) {
  switch (filler.kind) {
    case Filler::Kind::Any: return "any node";
    case Filler::Kind::Class: return "an instance of " + filler.term->toNTriples();
    case Filler::Kind::Vocabulary: return "a member of vocabulary " + filler.vocabulary;
    case Filler::Kind::Datatype: return "a literal of datatype " + filler.term->toNTriples();
  }
  return {};
}

}  // namespace

std::size_t ValidationReport::count(Severity severity) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [&](const Finding& f) { return f.severity == severity; }));
}

Validator::VocabStatus Validator::vocabStatus(const Graph& graph, const Term& node, const Filler& filler) const {
  if (registry_.vocabularyOf(node) == filler.vocabulary) return VocabStatus::Member;
  if (isInstanceOf(graph, node, *filler.term, catalog_)) return VocabStatus::Minted;
  return VocabStatus::Foreign;
}

bool Validator::satisfies(const Graph& graph, const Term& node, const Filler& filler) const {
  switch (filler.kind) {
    case Filler::Kind::Any: return true;
    case Filler::Kind::Class: return isInstanceOf(graph, node, *filler.term, catalog_);
    case Filler::Kind::Vocabulary: return vocabStatus(graph, node, filler) != VocabStatus::Foreign;
    case Filler::Kind::Datatype: return node.hasDatatype(filler.term->value());
  }
  return false;
}

std::vector<Finding> Validator::check(const Graph& graph, const Constraint& constraint) const {
  std::vector<Finding> out;
  if (constraint.documentationOnly) return out;
  auto emit = [&](Severity severity, Term focus, std::vector<Triple> triples, std::string detail) {
    std::sort(triples.begin(), triples.end());
    out.push_back({constraint.code(), constraint.axiomId, severity, std::move(focus), std::move(triples),
                   std::move(detail)});
  };

  std::visit(
      [&](const auto& form) {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, ExistentialAtLeastOne>) {
          for (const auto& x : instancesOf(graph, form.scope, catalog_)) {
            const auto objects = graph.objects(x, form.property);
            const bool ok = std::any_of(objects.begin(), objects.end(),
                                        [&](const Term& o) { return satisfies(graph, o, form.filler); });
            if (!ok)
              emit(Severity::Error, x, {},
                   "missing " + form.property.toNTriples() + " edge to " + fillerText(form.filler));
          }
        } else if constexpr (std::is_same_v<T, MaxOne>) {
          const bool forward = form.direction == Direction::Forward;
          std::map<Term, std::vector<Triple>> grouped;
          for (const auto& t : graph.match(std::nullopt, form.property, std::nullopt)) {
            const Term& focus = forward ? t.subject : t.object;
            const Term& other = forward ? t.object : t.subject;
            if (form.filler && !satisfies(graph, other, *form.filler)) continue;
            grouped[focus].push_back(t);
          }
          for (auto& [focus, edges] : grouped) {
            if (edges.size() < 2) continue;
            if (form.scope && !isInstanceOf(graph, focus, *form.scope, catalog_)) continue;
            std::string detail = std::to_string(edges.size()) + (forward ? " distinct objects on " : " distinct subjects on ") +
                                 form.property.toNTriples() + ", at most 1 allowed";
            emit(Severity::Error, focus, std::move(edges), std::move(detail));
          }
        } else if constexpr (std::is_same_v<T, UniversalRange>) {
          for (const auto& t : graph.match(std::nullopt, form.property, std::nullopt)) {
            if (form.filler.kind == Filler::Kind::Vocabulary) {
              const auto status = vocabStatus(graph, t.object, form.filler);
              if (status == VocabStatus::Member) continue;
              const bool minted = status == VocabStatus::Minted;
              const Severity severity = (!minted || options_.strict) ? Severity::Error : Severity::Warning;
              emit(severity, t.subject, {t},
                   (minted ? "unknown individual of vocabulary " + form.filler.vocabulary + ": "
                           : "object is not " + fillerText(form.filler) + ": ") +
                       t.object.toNTriples());
            } else if (!satisfies(graph, t.object, form.filler)) {
              emit(Severity::Error, t.subject, {t}, "object is not " + fillerText(form.filler) + ": " +
                                                        t.object.toNTriples());
            }
          }
        } else if constexpr (std::is_same_v<T, InverseExistential>) {
          for (const auto& x : instancesOf(graph, form.scope, catalog_)) {
            const auto sources = graph.subjects(form.property, x);
            const bool ok = std::any_of(sources.begin(), sources.end(),
                                        [&](const Term& s) { return isInstanceOf(graph, s, form.source, catalog_); });
            if (!ok)
              emit(Severity::Error, x, {},
                   "no incoming " + form.property.toNTriples() + " edge from an instance of " +
                       form.source.toNTriples());
          }
        } else if constexpr (std::is_same_v<T, NegatedPath>) {
          for (const auto& x : instancesOf(graph, form.scope, catalog_)) {
            std::vector<Triple> path;
            for (const auto& y : graph.objects(x, form.first)) {
              if (y.isLiteral()) continue;
              auto second = graph.match(y, form.second, std::nullopt);
              if (second.empty()) continue;
              path.push_back({x, form.first, y});
              path.insert(path.end(), second.begin(), second.end());
            }
            if (!path.empty())
              emit(Severity::Error, x, std::move(path),
                   "forbidden path " + form.first.toNTriples() + " / " + form.second.toNTriples());
          }
        } else if constexpr (std::is_same_v<T, StructuralTautology>) {
          for (const auto& t : graph.match(std::nullopt, form.property, std::nullopt)) {
            if (form.scope && !isInstanceOf(graph, t.subject, *form.scope, catalog_)) continue;
            bool ok = satisfies(graph, t.object, form.filler);
            if (form.filler.kind == Filler::Kind::Vocabulary) {
              const auto status = vocabStatus(graph, t.object, form.filler);
              ok = status == VocabStatus::Member || (status == VocabStatus::Minted && !options_.strict);
            }
            if (!ok)
              emit(Severity::Warning, t.subject, {t},
                   "object is not " + fillerText(form.filler) + ": " + t.object.toNTriples());
          }
        } else if constexpr (std::is_same_v<T, ExistentialDomain>) {
          std::map<Term, std::vector<Triple>> offending;
          for (const auto& t : graph.match(std::nullopt, form.property, std::nullopt)) {
            if (!satisfies(graph, t.object, form.filler)) continue;
            if (isInstanceOf(graph, t.subject, form.required, catalog_)) continue;
            offending[t.subject].push_back(t);
          }
          for (auto& [x, edges] : offending)
            emit(Severity::Error, x, std::move(edges), "subject must be an instance of " + form.required.toNTriples());
        }
        // SubClassOf and RoleChain are inference-only.
      },
      constraint.form);

  return out;
}

ValidationReport Validator::validate(const Graph& graph) const {
  ValidationReport report;
  if (options_.materialize) {
    const Graph closed = materialize(graph, catalog_);
    for (const auto& c : catalog_) {
      auto findings = check(closed, c);
      report.findings.insert(report.findings.end(), findings.begin(), findings.end());
    }
  } else {
    for (const auto& c : catalog_) {
      auto findings = check(graph, c);
      report.findings.insert(report.findings.end(), findings.begin(), findings.end());
    }
  }
  return report;
}

}  // namespace mmods
