#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mmods/term.hpp"

namespace mmods {

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// In-memory triple set with subject, predicate, object, (s,p) and (p,o)
/// indexes. Single writer; safe for concurrent readers once built.
class Graph {
 public:
  Graph() = default;
  Graph(const Graph& other);
  Graph(Graph&&) noexcept = default;
  Graph& operator=(const Graph& other);
  Graph& operator=(Graph&&) noexcept = default;
  ~Graph() = default;

  /// Inserts the triple; returns false if it was already present.
  /// Throws StructuralError for a literal subject or a non-IRI predicate.
  bool add(Term subject, Term predicate, Term object);
  bool add(const Triple& triple) { return add(triple.subject, triple.predicate, triple.object); }

  bool contains(const Triple& triple) const { return triples_.contains(triple); }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  /// Triples agreeing with every bound position, in sorted order.
  std::vector<Triple> match(const std::optional<Term>& subject,
                            const std::optional<Term>& predicate,
                            const std::optional<Term>& object) const;

  std::vector<Term> objects(const Term& subject, const Term& predicate) const;
  std::vector<Term> subjects(const Term& predicate, const Term& object) const;
  bool hasEdge(const Term& subject, const Term& predicate) const;

  /// Blank node labelled "b<N>" with a strictly increasing counter. Labels of
  /// that shape already present in the graph are never handed out again.
  Term freshBlankNode();

  /// Union with `other`. Blank nodes of `other` are relabelled to fresh
  /// labels so the two graphs' blank nodes stay disjoint.
  void merge(const Graph& other);

  const std::set<Triple>& triples() const noexcept { return triples_; }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

 private:
  struct TriplePtrLess {
    bool operator()(const Triple* a, const Triple* b) const { return *a < *b; }
  };
  using Bucket = std::set<const Triple*, TriplePtrLess>;

  void index(const Triple* triple);
  void observeBlank(const Term& term);

  std::set<Triple> triples_;
  std::map<Term, Bucket> by_subject_;
  std::map<Term, Bucket> by_predicate_;
  std::map<Term, Bucket> by_object_;
  std::map<std::pair<Term, Term>, Bucket> by_subject_predicate_;
  std::map<std::pair<Term, Term>, Bucket> by_predicate_object_;
  std::size_t next_blank_ = 0;
};

}  // namespace mmods
