#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mmods/graph.hpp"
#include "mmods/vocabulary.hpp"

namespace mmods::testing {

inline std::string fixturePath(const std::string& name) { return std::string(MMODS_FIXTURE_DIR) + "/" + name; }

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string readFixture(const std::string& name) { return readFile(fixturePath(name)); }

/// Builds triples from registry local names; "_:x" gives a blank node.
class GraphBuilder {
 public:
  explicit GraphBuilder(const VocabularyRegistry& registry) : r_(registry) {}

  Term node(const std::string& name) const {
    if (name.rfind("_:", 0) == 0) return Term::blank(name.substr(2));
    return r_.mint(name);
  }
  GraphBuilder& edge(const std::string& s, const std::string& p, const std::string& o) {
    g_.add(node(s), r_.property(p), node(o));
    return *this;
  }
  GraphBuilder& value(const std::string& s, const std::string& p, Term literal) {
    g_.add(node(s), r_.property(p), std::move(literal));
    return *this;
  }
  GraphBuilder& type(const std::string& s, const std::string& cls) {
    g_.add(node(s), Term::iri(std::string(iri::kRdfType)), r_.cls(cls));
    return *this;
  }
  GraphBuilder& member(const std::string& s, const std::string& p, const std::string& individual) {
    g_.add(node(s), r_.property(p), r_.individual(individual));
    return *this;
  }
  Graph& graph() { return g_; }
  Graph build() const { return g_; }

 private:
  const VocabularyRegistry& r_;
  Graph g_;
};

}  // namespace mmods::testing
