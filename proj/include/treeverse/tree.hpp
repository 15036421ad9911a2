#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treeverse {

using Vertex = int;

/// Ordered rooted tree whose vertex ids are its DFS preorder positions.
///
/// Vertex 0 is the root and every subtree D[u] occupies the id interval
/// [u, u + subtree_size(u)). All positional queries used by the generators
/// and the embedder (levels, ancestors, nearest-left cousins) are
/// precomputed at construction; the object is immutable afterwards.
class RootedTree {
 public:
  /// Single-vertex tree.
  RootedTree();

  /// Builds from a parent array already in preorder: parent[0] == -1 and
  /// every parent[i] is an ancestor-chain vertex of i - 1 (or i - 1 itself).
  /// Children keep increasing-id order. Throws std::invalid_argument when the
  /// array is not a preorder parent array.
  static RootedTree from_preorder_parents(std::vector<Vertex> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  int height() const { return static_cast<int>(by_level_.size()) - 1; }

  std::optional<Vertex> parent(Vertex u) const;
  std::span<const Vertex> children(Vertex u) const;
  int level(Vertex u) const;
  int subtree_size(Vertex u) const;
  std::optional<Vertex> nearest_left_cousin(Vertex u) const;
  /// i-fold parent, clamped at the root.
  Vertex ith_ancestor(Vertex u, int i) const;

  bool is_leaf(Vertex u) const { return children(u).empty(); }
  /// True when w is in D[u] (u itself included).
  bool in_subtree(Vertex u, Vertex w) const;
  bool is_admissible(std::span<const Vertex> set) const;

  /// Vertices of one level, increasing id (left to right).
  std::span<const Vertex> level_vertices(int level) const;

  /// Raw parent array, -1 for the root.
  const std::vector<Vertex>& parents() const { return parent_; }

  /// The tree induced on the admissible prefix {0, ..., m - 1}; ids unchanged.
  RootedTree prefix(int m) const;
  /// D[u] as its own tree; id i there is id u + i here.
  RootedTree subtree(Vertex u) const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.parent_ == b.parent_;
  }

 private:
  explicit RootedTree(std::vector<Vertex> parent);
  void check(Vertex u) const;

  std::vector<Vertex> parent_;
  std::vector<int> child_offset_;
  std::vector<Vertex> child_list_;
  std::vector<int> level_;
  std::vector<int> size_;
  std::vector<Vertex> left_cousin_;
  std::vector<std::vector<Vertex>> by_level_;
};

/// Relabels an arbitrary ordered rooted structure into DFS preorder.
///
/// children[v] lists the children of vertex v from left to right. The root is
/// the unique vertex that is nobody's child. Throws std::invalid_argument on
/// a duplicate child, a cycle, or a disconnected input. When to_original is
/// given it receives, per preorder id, the input vertex it came from.
RootedTree build_tree(const std::vector<std::vector<Vertex>>& children,
                      std::vector<Vertex>* to_original = nullptr);

/// Rooted forest: a parent array with any number of roots plus undirected
/// adjacency. Ids are arbitrary (not necessarily preorder).
class Forest {
 public:
  Forest() = default;

  /// Roots each component at its smallest vertex. Throws std::invalid_argument
  /// when the edges contain a cycle, a loop or an out-of-range endpoint.
  static Forest from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
  static Forest from_adjacency(std::vector<std::vector<Vertex>> adjacency);
  static Forest from_tree(const RootedTree& tree);

  int size() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<Vertex>& roots() const { return roots_; }
  std::optional<Vertex> parent(Vertex u) const;
  std::span<const Vertex> neighbors(Vertex u) const;
  int component_count() const { return static_cast<int>(roots_.size()); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> roots_;
};

/// Connected components of forest - u, each sorted, ordered by smallest member.
/// Throws std::out_of_range for an invalid u.
std::vector<std::vector<Vertex>> u_components(const Forest& forest, Vertex u);

// Tree text formats.

/// Nested parentheses in preorder, e.g. "(()(()()))".
std::string to_paren_string(const RootedTree& tree);
RootedTree parse_paren_string(std::string_view text);
/// "parent[1],parent[2],...", root implicit at index 0; empty for n = 1.
std::string to_parent_csv(const RootedTree& tree);
/// Accepts any labelling rooted at 0; children are ordered by id.
RootedTree parse_parent_csv(std::string_view text);
/// Dispatches on the first non-blank character.
RootedTree parse_tree(std::string_view text);

}  // namespace treeverse
