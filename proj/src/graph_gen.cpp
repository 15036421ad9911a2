#include "treeverse/graph_gen.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "treeverse/balanced.hpp"

namespace treeverse {

namespace {

constexpr int kDenseLimit = 4096;

/// Per-source scratch that unions rule tags over target vertices.
class TargetSet {
 public:
  explicit TargetSet(int n) : tags_(n, 0) {}

  void add(Vertex w, std::uint8_t tag) {
    if (tags_[w] == 0) touched_.push_back(w);
    tags_[w] |= tag;
  }
  void add_range(Vertex begin, Vertex end, std::uint8_t tag) {
    for (Vertex w = begin; w < end; ++w) add(w, tag);
  }
  void flush(Vertex from, std::vector<Arc>& out) {
    std::sort(touched_.begin(), touched_.end());
    for (Vertex w : touched_) {
      if (w != from) out.push_back({from, w, tags_[w]});
      tags_[w] = 0;
    }
    touched_.clear();
  }

 private:
  std::vector<std::uint8_t> tags_;
  std::vector<Vertex> touched_;
};

/// Descendants of a at depth 1..r below it, via the per-level id ranges.
void add_shallow_descendants(const RootedTree& t, Vertex a, int r, TargetSet& targets) {
  const Vertex end = a + t.subtree_size(a);
  for (int d = 1; d <= r; ++d) {
    auto row = t.level_vertices(t.level(a) + d);
    auto lo = std::lower_bound(row.begin(), row.end(), a);
    auto hi = std::lower_bound(lo, row.end(), end);
    for (auto it = lo; it != hi; ++it) targets.add(*it, kG4);
  }
}

}  // namespace

UndirectedGraph::UndirectedGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(n), adjacency_(n), order_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  std::iota(order_.begin(), order_.end(), 0);
  if (n <= kDenseLimit) {
    const std::size_t words = (static_cast<std::size_t>(n) * n + 63) / 64;
    bits_.assign(words, 0);
    for (auto [a, b] : edges_) {
      for (auto idx : {static_cast<std::size_t>(a) * n + b, static_cast<std::size_t>(b) * n + a})
        bits_[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
  }
}

UndirectedGraph UndirectedGraph::complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return UndirectedGraph(n, std::move(e));
}

UndirectedGraph UndirectedGraph::cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex a = 0; a < n && n >= 3; ++a) e.emplace_back(a, (a + 1) % n);
  return UndirectedGraph(n, std::move(e));
}

UndirectedGraph UndirectedGraph::path(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex a = 0; a + 1 < n; ++a) e.emplace_back(a, a + 1);
  return UndirectedGraph(n, std::move(e));
}

bool UndirectedGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b) return false;
  if (!bits_.empty()) {
    const std::size_t idx = static_cast<std::size_t>(a) * n_ + b;
    return (bits_[idx / 64] >> (idx % 64)) & 1u;
  }
  const auto& row = adjacency_[a].size() < adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const Vertex other = &row == &adjacency_[a] ? b : a;
  return std::binary_search(row.begin(), row.end(), other);
}

void UndirectedGraph::set_order(std::vector<Vertex> order) {
  std::vector<Vertex> check = order;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n_; ++i)
    if (static_cast<int>(check.size()) != n_ || check[i] != i)
      throw std::invalid_argument("ordering must be a permutation of the vertices");
  order_ = std::move(order);
}

UndirectedGraph UndirectedGraph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> local(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    if (local[v] >= 0) throw std::invalid_argument("duplicate vertex in induced set");
    local[v] = static_cast<Vertex>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : adjacency_[vertices[i]])
      if (local[w] > static_cast<Vertex>(i)) e.emplace_back(static_cast<Vertex>(i), local[w]);
  return UndirectedGraph(static_cast<int>(vertices.size()), std::move(e));
}

UndirectedGraph UndirectedGraph::induced_prefix(int m) const {
  if (m < 0 || m > n_) throw std::out_of_range("prefix size out of range");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [a, b] : edges_)
    if (b < m) e.emplace_back(a, b);
  return UndirectedGraph(m, std::move(e));
}

GeneratedDigraph generate(const RootedTree& t, int r) {
  if (r < 0) throw std::invalid_argument("radius must be non-negative");
  GeneratedDigraph out{t, r, false, {}};
  TargetSet targets(t.size());
  for (Vertex u = 0; u < t.size(); ++u) {
    // G1
    for (Vertex w = u + 1; w < u + t.subtree_size(u); ++w)
      targets.add(w, t.parents()[w] == u ? kG1 | kTreeEdge : kG1);
    if (auto p = t.parent(u)) {
      // G2: left siblings and their subtrees form the id range [first child, u).
      targets.add_range(t.children(*p).front(), u, kG2);
      // G3
      if (auto w = t.nearest_left_cousin(*p)) targets.add_range(*w, *w + t.subtree_size(*w), kG3);
    }
    // G4
    if (r > 0) {
      const Vertex a = t.ith_ancestor(u, r);
      add_shallow_descendants(t, a, r, targets);
      if (auto c = t.nearest_left_cousin(a)) add_shallow_descendants(t, *c, r, targets);
    }
    targets.flush(u, out.arcs);
  }
  return out;
}

GeneratedDigraph legacy_generate(int k) {
  RootedTree t = perfect_binary(k);
  GeneratedDigraph out{t, 0, true, {}};
  TargetSet targets(t.size());
  for (Vertex u = 0; u < t.size(); ++u) {
    for (Vertex w = u + 1; w < u + t.subtree_size(u); ++w)
      targets.add(w, t.parents()[w] == u ? kG1 | kTreeEdge : kG1);
    if (auto p = t.parent(u)) {
      targets.add_range(t.children(*p).front(), u, kG2);
      // Rule (iii): nearest-left sibling of the parent, if any.
      if (auto g = t.parent(*p)) {
        auto sibs = t.children(*g);
        auto it = std::find(sibs.begin(), sibs.end(), *p);
        if (it != sibs.begin()) {
          const Vertex w = *(it - 1);
          targets.add_range(w, w + t.subtree_size(w), kG3);
        }
      }
    }
    targets.flush(u, out.arcs);
  }
  return out;
}

UndirectedGraph underlying(const GeneratedDigraph& digraph) {
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(digraph.arcs.size());
  for (const Arc& a : digraph.arcs) e.emplace_back(a.from, a.to);
  return UndirectedGraph(digraph.source.size(), std::move(e));
}

UndirectedGraph admissible_induced(const GeneratedDigraph& digraph, int m) {
  if (m < 0 || m > digraph.source.size()) throw std::out_of_range("prefix size out of range");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (const Arc& a : digraph.arcs)
    if (a.from < m && a.to < m) e.emplace_back(a.from, a.to);
  return UndirectedGraph(m, std::move(e));
}

MergedTree merged_tree(const RootedTree& t, Vertex first, Vertex last) {
  if (first < 0 || last >= t.size() || first > last) throw std::invalid_argument("bad run bounds");
  const int lvl = t.level(first);
  if (lvl == 0 || t.level(last) != lvl) throw std::invalid_argument("run must lie on one level below the root");
  auto row = t.level_vertices(lvl);
  auto lo = std::lower_bound(row.begin(), row.end(), first);
  auto hi = std::lower_bound(row.begin(), row.end(), last);
  const Vertex p_first = *t.parent(first);
  const Vertex p_last = *t.parent(last);
  if (p_first != p_last && t.nearest_left_cousin(p_last) != p_first)
    throw std::invalid_argument("run parents are neither equal nor consecutive");

  MergedTree out{RootedTree(), {p_last}};
  std::vector<Vertex> parent{-1};
  for (auto it = lo; it <= hi; ++it) {
    const Vertex u = *it;
    const Vertex base = static_cast<Vertex>(parent.size());
    for (Vertex w = u; w < u + t.subtree_size(u); ++w) {
      parent.push_back(w == u ? 0 : base + (t.parents()[w] - u));
      out.to_source.push_back(w);
    }
  }
  out.tree = RootedTree::from_preorder_parents(std::move(parent));
  return out;
}

EdgeTypeCounts count_edges_by_type(const GeneratedDigraph& digraph) {
  EdgeTypeCounts c;
  for (const Arc& a : digraph.arcs) {
    c.g1 += (a.tags & kG1) != 0;
    c.g2 += (a.tags & kG2) != 0;
    c.g3 += (a.tags & kG3) != 0;
    c.g4 += (a.tags & kG4) != 0;
    c.tree_edges += (a.tags & kTreeEdge) != 0;
  }
  c.arcs = digraph.arcs.size();
  c.undirected = underlying(digraph).edge_count();
  return c;
}

std::string to_dot(const UndirectedGraph& graph, const RootedTree& tree) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < graph.size(); ++v) {
    os << "  " << v << " [label=\"" << v;
    if (v < tree.size()) os << " (" << tree.level(v) << ")";
    os << "\"];\n";
  }
  for (auto [a, b] : graph.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const GeneratedDigraph& digraph, int indent) {
  const EdgeTypeCounts c = count_edges_by_type(digraph);
  nlohmann::json j;
  j["n"] = digraph.source.size();
  j["r"] = digraph.radius;
  j["legacy"] = digraph.legacy;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : underlying(digraph).edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  j["arc_types"] = {{"G1", c.g1}, {"G2", c.g2}, {"G3", c.g3}, {"G4", c.g4},
                    {"tree", c.tree_edges}, {"arcs", c.arcs}};
  return j.dump(indent);
}

}  // namespace treeverse
