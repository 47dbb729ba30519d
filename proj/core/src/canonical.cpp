#include "mmods/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

namespace mmods {

namespace {

// A triple position is either a fixed N-Triples token or a blank node index.
// `token` ranks the fixed text among all fixed texts of the graph.
struct Slot {
  int blank = -1;
  std::string text;
  long token = 0;
};

struct EncodedTriple {
  Slot s, p, o;
};

using Colouring = std::vector<int>;

// Ordered partition of the blank nodes. A node's colour is the position where
// its cell starts, so splitting one cell leaves every other colour alone.
struct Partition {
  Colouring cell;
  std::vector<int> order;
  std::vector<int> where;
  std::vector<int> size;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& graph) {
    std::map<std::string, int> ids;
    for (const auto& t : graph) {
      for (const Term* term : {&t.subject, &t.object})
        if (term->isBlank()) ids.emplace(term->value(), 0);
    }
    for (auto& [label, id] : ids) {
      id = static_cast<int>(labels_.size());
      labels_.push_back(label);
    }
    incident_.resize(labels_.size());
    adjacent_.resize(labels_.size());
    keys_.resize(labels_.size());
    touched_.assign(labels_.size(), false);

    std::map<std::string, long> tokens;
    for (const auto& t : graph) {
      for (const Term* term : {&t.subject, &t.predicate, &t.object})
        if (!term->isBlank()) tokens.emplace(term->toNTriples(), 0);
    }
    long rank = 0;
    for (auto& [text, id] : tokens) id = rank++;
    auto encode = [&](const Term& term) {
      Slot slot;
      if (term.isBlank()) {
        slot.blank = ids.at(term.value());
      } else {
        slot.text = term.toNTriples();
        slot.token = tokens.at(slot.text);
      }
      return slot;
    };
    for (const auto& t : graph) {
      const auto idx = triples_.size();
      triples_.push_back({encode(t.subject), encode(t.predicate), encode(t.object)});
      const auto& e = triples_.back();
      if (e.s.blank >= 0) incident_[e.s.blank].push_back(idx);
      if (e.o.blank >= 0 && e.o.blank != e.s.blank) {
        incident_[e.o.blank].push_back(idx);
        if (e.s.blank >= 0) {
          // Edge code as seen from the far end: predicate rank and direction.
          adjacent_[e.s.blank].push_back({e.o.blank, 2 * e.p.token + 1});
          adjacent_[e.o.blank].push_back({e.s.blank, 2 * e.p.token});
        }
      }
    }
  }

  std::map<std::string, std::string> run() {
    std::map<std::string, std::string> out;
    if (labels_.empty()) return out;
    Partition initial = groundPartition();
    std::set<int> work;
    for (int s = 0; s < static_cast<int>(labels_.size()); s += initial.size[s]) work.insert(s);
    refine(initial, work);
    std::vector<int> prefix;
    search(initial, prefix);
    for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]] = "c" + std::to_string((*best_labels_)[i]);
    return out;
  }

 private:
  // Fixed tokens are >= 0, the node itself is -1, another blank node is -2.
  static long slotCode(const Slot& slot, int self) {
    if (slot.blank < 0) return slot.token;
    return slot.blank == self ? -1 : -2;
  }

  using Signature = std::vector<long>;

  Signature groundSignature(int node) const {
    std::vector<std::array<long, 3>> shapes;
    shapes.reserve(incident_[node].size());
    for (auto idx : incident_[node]) {
      const auto& e = triples_[idx];
      shapes.push_back({slotCode(e.s, node), slotCode(e.p, node), slotCode(e.o, node)});
    }
    std::sort(shapes.begin(), shapes.end());
    Signature sig;
    sig.reserve(3 * shapes.size());
    for (const auto& s : shapes) sig.insert(sig.end(), s.begin(), s.end());
    return sig;
  }

  Partition groundPartition() const {
    const int n = static_cast<int>(labels_.size());
    std::vector<Signature> sigs(n);
    for (int i = 0; i < n; ++i) sigs[i] = groundSignature(i);
    Partition p;
    p.order.resize(n);
    std::iota(p.order.begin(), p.order.end(), 0);
    std::stable_sort(p.order.begin(), p.order.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });
    p.cell.resize(n);
    p.where.resize(n);
    p.size.assign(n, 0);
    for (int pos = 0; pos < n; ++pos) {
      const int node = p.order[pos];
      p.where[node] = pos;
      p.cell[node] = (pos > 0 && sigs[p.order[pos - 1]] == sigs[node]) ? p.cell[p.order[pos - 1]] : pos;
      ++p.size[p.cell[node]];
    }
    return p;
  }

  // Splits cells by their edges into each splitter cell until nothing changes.
  // Only neighbours of a splitter are touched; untouched nodes keep their cell
  // start, so the result depends on colours alone and not on node labels.
  void refine(Partition& p, std::set<int>& work) {
    std::vector<int> members;
    std::vector<int> hit;
    while (!work.empty()) {
      const int s = *work.begin();
      work.erase(work.begin());
      members.assign(p.order.begin() + s, p.order.begin() + s + p.size[s]);
      hit.clear();
      for (int x : members) {
        for (const auto& [u, code] : adjacent_[x]) {
          if (!touched_[u]) {
            touched_[u] = true;
            hit.push_back(u);
          }
          keys_[u].push_back(code);
        }
      }
      std::map<int, std::vector<int>> byCell;
      for (int u : hit) {
        std::sort(keys_[u].begin(), keys_[u].end());
        byCell[p.cell[u]].push_back(u);
      }
      for (auto& [start, nodes] : byCell) split(p, start, nodes, work);
      for (int u : hit) {
        touched_[u] = false;
        keys_[u].clear();
      }
    }
  }

  void split(Partition& p, int start, std::vector<int>& nodes, std::set<int>& work) {
    const int csize = p.size[start];
    std::stable_sort(nodes.begin(), nodes.end(), [&](int a, int b) { return keys_[a] < keys_[b]; });
    const int untouched = csize - static_cast<int>(nodes.size());
    if (untouched == 0 && keys_[nodes.front()] == keys_[nodes.back()]) return;

    std::vector<int> layout;
    layout.reserve(csize);
    for (int pos = start; pos < start + csize; ++pos)
      if (!touched_[p.order[pos]]) layout.push_back(p.order[pos]);
    layout.insert(layout.end(), nodes.begin(), nodes.end());

    std::vector<std::pair<int, int>> groups;  // start, size
    for (int i = 0; i < csize; ++i) {
      const int node = layout[i];
      const bool fresh = i == 0 || (i == untouched) ||
                         (i > untouched && keys_[layout[i - 1]] != keys_[node]);
      if (fresh) groups.push_back({start + i, 0});
      ++groups.back().second;
      p.order[start + i] = node;
      p.where[node] = start + i;
      p.cell[node] = groups.back().first;
    }
    for (const auto& [g, n] : groups) p.size[g] = n;

    if (work.count(start)) {
      for (const auto& g : groups) work.insert(g.first);
      return;
    }
    auto largest = std::max_element(groups.begin(), groups.end(),
                                    [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto g = groups.begin(); g != groups.end(); ++g)
      if (g != largest) work.insert(g->first);
  }

  std::string leafText(const Colouring& colours) const {
    std::vector<std::string> lines;
    lines.reserve(triples_.size());
    auto text = [&](const Slot& slot) {
      return slot.blank < 0 ? slot.text : "_:c" + std::to_string(colours[slot.blank]);
    };
    for (const auto& e : triples_) lines.push_back(text(e.s) + ' ' + text(e.p) + ' ' + text(e.o) + " .\n");
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l;
    return out;
  }

  // Permutation taking each node to the node with the same label in `target`.
  std::vector<int> mapping(const Colouring& from, const Colouring& target) const {
    std::vector<int> by_colour(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) by_colour[target[i]] = static_cast<int>(i);
    std::vector<int> perm(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) perm[i] = by_colour[from[i]];
    return perm;
  }

  static std::size_t commonPrefix(const std::vector<int>& a, const std::vector<int>& b) {
    return static_cast<std::size_t>(std::mismatch(a.begin(), a.end(), b.begin(), b.end()).first - a.begin());
  }

  void visitLeaf(const Colouring& colours, const std::vector<int>& prefix) {
    std::string text = leafText(colours);
    if (!first_text_) {
      first_text_ = text;
      first_labels_ = colours;
      first_prefix_ = prefix;
    }
    if (!best_text_ || text < *best_text_) {
      best_text_ = std::move(text);
      best_labels_ = colours;
      best_prefix_ = prefix;
      return;
    }
    // Same serialisation as the first or best leaf: an automorphism. It fixes
    // the shared part of both paths and maps this path's next node onto an
    // explored sibling, so the search resumes at the level where they split.
    const std::vector<int>* other = nullptr;
    if (text == *first_text_) {
      automorphisms_.push_back(mapping(colours, *first_labels_));
      other = &first_prefix_;
    } else if (text == *best_text_) {
      automorphisms_.push_back(mapping(colours, *best_labels_));
      other = &best_prefix_;
    } else {
      return;
    }
    abort_level_ = commonPrefix(prefix, *other);
  }

  static int findRoot(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbit partition under the stored automorphisms that fix `prefix` pointwise.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(labels_.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& perm : automorphisms_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](int v) { return perm[v] == v; })) continue;
      for (std::size_t x = 0; x < perm.size(); ++x) {
        int a = findRoot(parent, static_cast<int>(x));
        int b = findRoot(parent, perm[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t x = 0; x < parent.size(); ++x) findRoot(parent, static_cast<int>(x));
    return parent;
  }

  void search(const Partition& p, std::vector<int>& prefix) {
    const int n = static_cast<int>(labels_.size());
    int start = 0;
    while (start < n && p.size[start] == 1) ++start;
    if (start == n) {
      visitLeaf(p.cell, prefix);
      return;
    }
    const std::vector<int> target(p.order.begin() + start, p.order.begin() + start + p.size[start]);

    const std::size_t level = prefix.size();
    explored_.resize(level + 1);
    explored_[level].clear();
    std::vector<int> parent;
    std::size_t known = 0;
    for (int v : target) {
      if (!explored_[level].empty()) {
        if (parent.empty() || known != automorphisms_.size()) {
          parent = orbits(prefix);
          known = automorphisms_.size();
        }
        const auto& done = explored_[level];
        if (std::any_of(done.begin(), done.end(), [&](int u) { return parent[u] == parent[v]; })) continue;
      }
      Partition next = p;
      individualise(next, start, v);
      std::set<int> work{start};
      refine(next, work);
      prefix.push_back(v);
      search(next, prefix);
      prefix.pop_back();
      if (abort_level_) {
        if (*abort_level_ < level) return;
        abort_level_.reset();
      }
      explored_[level].push_back(v);
    }
  }

  // Moves `v` to the front of its cell as a singleton.
  static void individualise(Partition& p, int start, int v) {
    const int other = p.order[start];
    std::swap(p.order[start], p.order[p.where[v]]);
    p.where[other] = p.where[v];
    p.where[v] = start;
    const int rest = p.size[start] - 1;
    p.size[start] = 1;
    p.size[start + 1] = rest;
    for (int pos = start + 1; pos < start + 1 + rest; ++pos) p.cell[p.order[pos]] = start + 1;
  }

  std::vector<std::string> labels_;
  std::vector<EncodedTriple> triples_;
  std::vector<std::vector<std::size_t>> incident_;
  // Blank neighbours of each node with the code of the connecting edge.
  std::vector<std::vector<std::pair<int, long>>> adjacent_;
  std::vector<std::vector<long>> keys_;
  std::vector<bool> touched_;
  std::optional<std::string> best_text_;
  std::optional<Colouring> best_labels_;
  std::vector<int> best_prefix_;
  std::optional<std::string> first_text_;
  std::optional<Colouring> first_labels_;
  std::vector<int> first_prefix_;
  // Children already searched at each level of the current path.
  std::vector<std::vector<int>> explored_;
  std::optional<std::size_t> abort_level_;
  std::vector<std::vector<int>> automorphisms_;
};

std::string sortedLines(const Graph& graph, const std::map<std::string, std::string>& labels) {
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  auto text = [&](const Term& t) { return t.isBlank() ? "_:" + labels.at(t.value()) : t.toNTriples(); };
  for (const auto& t : graph) lines.push_back(text(t.subject) + ' ' + text(t.predicate) + ' ' + text(t.object) + " .\n");
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l;
  return out;
}

std::string componentRoot(std::map<std::string, std::string>& parent, const std::string& x) {
  std::string root = x;
  while (parent.at(root) != root) root = parent.at(root);
  for (std::string y = x; y != root;) y = std::exchange(parent.at(y), root);
  return root;
}

}  // namespace

// Blank nodes in different connected components never share a triple, so
// each component is labelled on its own and the components are laid out in
// order of their canonical text. Isomorphic components get equal text, and
// which of them comes first does not change the result.
std::map<std::string, std::string> canonicalBlankLabels(const Graph& graph) {
  std::map<std::string, std::string> parent;
  auto root = [&](const std::string& x) { return componentRoot(parent, x); };
  for (const auto& t : graph) {
    if (t.subject.isBlank()) parent.emplace(t.subject.value(), t.subject.value());
    if (t.object.isBlank()) parent.emplace(t.object.value(), t.object.value());
  }
  for (const auto& t : graph) {
    if (t.subject.isBlank() && t.object.isBlank()) {
      auto a = root(t.subject.value());
      auto b = root(t.object.value());
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::string, Graph> components;
  for (const auto& t : graph) {
    const Term* blank = t.subject.isBlank() ? &t.subject : t.object.isBlank() ? &t.object : nullptr;
    if (blank) components[root(blank->value())].add(t);
  }

  struct Labelled {
    std::string text;
    std::map<std::string, std::string> labels;
  };
  std::vector<Labelled> parts;
  parts.reserve(components.size());
  for (const auto& [r, sub] : components) {
    auto labels = CanonicalSearch(sub).run();
    auto text = sortedLines(sub, labels);
    parts.push_back({std::move(text), std::move(labels)});
  }
  std::sort(parts.begin(), parts.end(), [](const Labelled& a, const Labelled& b) { return a.text < b.text; });

  std::map<std::string, std::string> out;
  std::size_t offset = 0;
  for (const auto& part : parts) {
    for (const auto& [label, local] : part.labels)
      out[label] = "c" + std::to_string(offset + std::stoul(local.substr(1)));
    offset += part.labels.size();
  }
  return out;
}

Graph relabelBlankNodes(const Graph& graph, const std::map<std::string, std::string>& labels) {
  auto rename = [&](const Term& t) {
    if (!t.isBlank()) return t;
    auto it = labels.find(t.value());
    return it == labels.end() ? t : Term::blank(it->second);
  };
  Graph out;
  for (const auto& t : graph) out.add(rename(t.subject), t.predicate, rename(t.object));
  return out;
}

std::string canonicalize(const Graph& graph) { return sortedLines(graph, canonicalBlankLabels(graph)); }

}  // namespace mmods
