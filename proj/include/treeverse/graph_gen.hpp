#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treeverse/tree.hpp"

namespace treeverse {

/// Which generation rules produced an arc. Tree edges are tagged in addition
/// to their G1 tag.
enum RuleTag : std::uint8_t {
  kG1 = 1u << 0,
  kG2 = 1u << 1,
  kG3 = 1u << 2,
  kG4 = 1u << 3,
  kTreeEdge = 1u << 4,
};

struct Arc {
  Vertex from;
  Vertex to;
  std::uint8_t tags;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple undirected graph with sorted adjacency lists and, for n <= 4096,
/// a dense bit matrix for O(1) membership.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  /// Duplicate pairs are merged; self-loops and out-of-range ends throw.
  UndirectedGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  static UndirectedGraph complete(int n);
  static UndirectedGraph cycle(int n);
  static UndirectedGraph path(int n);

  int size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(Vertex a, Vertex b) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  /// Each edge once as (smaller, larger), sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  /// Vertex ordering used by interval queries; identity unless set.
  const std::vector<Vertex>& order() const { return order_; }
  void set_order(std::vector<Vertex> order);

  /// Induced subgraph; vertex i of the result is vertices[i].
  UndirectedGraph induced(std::span<const Vertex> vertices) const;
  /// Induced on {0, ..., m - 1}.
  UndirectedGraph induced_prefix(int m) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> bits_;
  std::vector<Vertex> order_;
};

/// Arcs produced from a rooted tree by the generation rules, deduplicated per
/// ordered pair with the producing rules unioned into the tag.
struct GeneratedDigraph {
  RootedTree source;
  int radius = 0;
  bool legacy = false;
  /// Sorted by (from, to).
  std::vector<Arc> arcs;
};

/// Rules G1-G4 with radius r applied to every vertex.
GeneratedDigraph generate(const RootedTree& tree, int r);

/// The older three-rule generator on the perfect binary tree of level k, whose
/// third rule uses the nearest-left sibling of the parent instead of the
/// parent's nearest-left cousin.
GeneratedDigraph legacy_generate(int k);

UndirectedGraph underlying(const GeneratedDigraph& digraph);

/// Underlying graph induced on the admissible prefix {0, ..., m - 1}.
UndirectedGraph admissible_induced(const GeneratedDigraph& digraph, int m);

/// Tree made from a run of consecutive same-level vertices under a new root.
struct MergedTree {
  RootedTree tree;
  /// to_source[i] is the source vertex behind merged vertex i. The new root
  /// maps to the parent of the last run vertex.
  std::vector<Vertex> to_source;
};

/// Hangs D[first], ..., D[last] under a fresh root, where first..last are
/// consecutive on one level and either share a parent or have parents p, q
/// with p = l(q). Throws std::invalid_argument otherwise.
MergedTree merged_tree(const RootedTree& tree, Vertex first, Vertex last);

struct EdgeTypeCounts {
  std::size_t g1 = 0;
  std::size_t g2 = 0;
  std::size_t g3 = 0;
  std::size_t g4 = 0;
  std::size_t tree_edges = 0;
  std::size_t arcs = 0;
  std::size_t undirected = 0;
};

/// Arc counts per rule tag (an arc with several tags counts once per tag).
EdgeTypeCounts count_edges_by_type(const GeneratedDigraph& digraph);

/// Graphviz rendering; vertices are labelled "id (level)".
std::string to_dot(const UndirectedGraph& graph, const RootedTree& tree);
/// {n, r, legacy, edges: [[u, w], ...], arc_types: {...}}
std::string to_json(const GeneratedDigraph& digraph, int indent = -1);

}  // namespace treeverse
