#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "treeverse/tree.hpp"

namespace treeverse::testing {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

/// Uniform labelled tree on n vertices (random Prufer sequence).
inline Edges random_tree_edges(int n, std::mt19937_64& rng) {
  if (n <= 1) return {};
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = pick(rng);
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  Edges edges;
  for (int s : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, s);
    --degree[leaf];
    --degree[s];
  }
  Vertex a = -1, b = -1;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  edges.emplace_back(a, b);
  return edges;
}

/// Roots an edge list at `root`; children ordered by id.
inline RootedTree rooted(int n, const Edges& edges, Vertex root) {
  std::vector<std::vector<Vertex>> adj(n), children(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    std::sort(adj[v].begin(), adj[v].end());
    for (Vertex w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        children[v].push_back(w);
        stack.push_back(w);
      }
  }
  return build_tree(children);
}

inline Edges edges_of(const RootedTree& t) {
  Edges e;
  for (Vertex v = 1; v < t.size(); ++v) e.emplace_back(*t.parent(v), v);
  return e;
}

inline RootedTree random_tree(int n, std::mt19937_64& rng) {
  const Edges e = random_tree_edges(n, rng);
  return rooted(n, e, std::uniform_int_distribution<int>(0, n - 1)(rng));
}

/// The same free tree rooted at every vertex.
inline std::vector<RootedTree> all_rootings(const RootedTree& t) {
  const Edges e = edges_of(t);
  std::vector<RootedTree> out;
  for (Vertex r = 0; r < t.size(); ++r) out.push_back(rooted(t.size(), e, r));
  return out;
}

/// Random tree with each edge then dropped with probability `drop`.
inline Edges random_forest_edges(int n, double drop, std::mt19937_64& rng) {
  Edges kept;
  std::bernoulli_distribution cut(drop);
  for (auto e : random_tree_edges(n, rng))
    if (!cut(rng)) kept.push_back(e);
  return kept;
}

inline RootedTree path_tree(int n) {
  std::vector<Vertex> p(n);
  for (int i = 0; i < n; ++i) p[i] = i - 1;
  return RootedTree::from_preorder_parents(p);
}

inline RootedTree star_tree(int n) {
  std::vector<Vertex> p(n, 0);
  p[0] = -1;
  return RootedTree::from_preorder_parents(p);
}

}  // namespace treeverse::testing
