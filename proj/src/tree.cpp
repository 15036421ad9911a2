#include "treeverse/tree.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <stdexcept>

namespace treeverse {

RootedTree::RootedTree() : RootedTree(std::vector<Vertex>{-1}) {}

RootedTree::RootedTree(std::vector<Vertex> parent) : parent_(std::move(parent)) {
  const int n = size();
  child_offset_.assign(n + 1, 0);
  for (Vertex v = 1; v < n; ++v) ++child_offset_[parent_[v] + 1];
  for (int i = 0; i < n; ++i) child_offset_[i + 1] += child_offset_[i];
  child_list_.resize(n > 0 ? n - 1 : 0);
  std::vector<int> fill(child_offset_.begin(), child_offset_.end() - 1);
  for (Vertex v = 1; v < n; ++v) child_list_[fill[parent_[v]]++] = v;

  level_.assign(n, 0);
  for (Vertex v = 1; v < n; ++v) level_[v] = level_[parent_[v]] + 1;
  size_.assign(n, 1);
  for (Vertex v = n - 1; v >= 1; --v) size_[parent_[v]] += size_[v];

  left_cousin_.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (level_[v] >= static_cast<int>(by_level_.size())) by_level_.resize(level_[v] + 1);
    auto& row = by_level_[level_[v]];
    if (!row.empty()) left_cousin_[v] = row.back();
    row.push_back(v);
  }
}

RootedTree RootedTree::from_preorder_parents(std::vector<Vertex> parent) {
  if (parent.empty()) throw std::invalid_argument("tree must have at least one vertex");
  if (parent[0] != -1) throw std::invalid_argument("vertex 0 must be the root");
  std::vector<Vertex> path{0};
  for (Vertex v = 1; v < static_cast<Vertex>(parent.size()); ++v) {
    const Vertex p = parent[v];
    if (p < 0 || p >= v) throw std::invalid_argument("parent ids must precede their children");
    while (!path.empty() && path.back() != p) path.pop_back();
    if (path.empty()) throw std::invalid_argument("parent array is not in DFS preorder");
    path.push_back(v);
  }
  return RootedTree(std::move(parent));
}

void RootedTree::check(Vertex u) const {
  if (u < 0 || u >= size()) throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
}

std::optional<Vertex> RootedTree::parent(Vertex u) const {
  check(u);
  if (parent_[u] < 0) return std::nullopt;
  return parent_[u];
}

std::span<const Vertex> RootedTree::children(Vertex u) const {
  check(u);
  return {child_list_.data() + child_offset_[u],
          static_cast<size_t>(child_offset_[u + 1] - child_offset_[u])};
}

int RootedTree::level(Vertex u) const {
  check(u);
  return level_[u];
}

int RootedTree::subtree_size(Vertex u) const {
  check(u);
  return size_[u];
}

std::optional<Vertex> RootedTree::nearest_left_cousin(Vertex u) const {
  check(u);
  if (left_cousin_[u] < 0) return std::nullopt;
  return left_cousin_[u];
}

Vertex RootedTree::ith_ancestor(Vertex u, int i) const {
  check(u);
  while (i-- > 0 && parent_[u] >= 0) u = parent_[u];
  return u;
}

bool RootedTree::in_subtree(Vertex u, Vertex w) const {
  check(u);
  check(w);
  return w >= u && w < u + size_[u];
}

bool RootedTree::is_admissible(std::span<const Vertex> set) const {
  std::vector<Vertex> s(set.begin(), set.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<Vertex>(i)) return false;
  return static_cast<int>(s.size()) <= size();
}

std::span<const Vertex> RootedTree::level_vertices(int level) const {
  if (level < 0 || level > height()) return {};
  return by_level_[level];
}

RootedTree RootedTree::prefix(int m) const {
  if (m < 1 || m > size()) throw std::out_of_range("prefix size out of range");
  return RootedTree(std::vector<Vertex>(parent_.begin(), parent_.begin() + m));
}

RootedTree RootedTree::subtree(Vertex u) const {
  check(u);
  std::vector<Vertex> p(size_[u]);
  p[0] = -1;
  for (int i = 1; i < size_[u]; ++i) p[i] = parent_[u + i] - u;
  return RootedTree(std::move(p));
}

RootedTree build_tree(const std::vector<std::vector<Vertex>>& children,
                      std::vector<Vertex>* to_original) {
  const int n = static_cast<int>(children.size());
  if (n == 0) throw std::invalid_argument("tree must have at least one vertex");
  std::vector<Vertex> parent(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex c : children[v]) {
      if (c < 0 || c >= n) throw std::invalid_argument("child id out of range");
      if (c == v) throw std::invalid_argument("cycle detected");
      if (parent[c] >= 0) throw std::invalid_argument("duplicate child " + std::to_string(c));
      parent[c] = v;
    }
  }
  std::vector<Vertex> roots;
  for (Vertex v = 0; v < n; ++v)
    if (parent[v] < 0) roots.push_back(v);
  if (roots.empty()) throw std::invalid_argument("cycle detected");
  if (roots.size() > 1) throw std::invalid_argument("disconnected input");

  std::vector<Vertex> order;
  std::vector<Vertex> new_id(n, -1);
  std::vector<Vertex> stack{roots[0]};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    new_id[v] = static_cast<Vertex>(order.size());
    order.push_back(v);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
  }
  // Every non-root has exactly one parent, so anything unreached sits on a cycle.
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("cycle detected");

  std::vector<Vertex> p(n, -1);
  for (Vertex v = 0; v < n; ++v)
    if (parent[v] >= 0) p[new_id[v]] = new_id[parent[v]];
  if (to_original) *to_original = order;
  return RootedTree::from_preorder_parents(std::move(p));
}

Forest Forest::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : adjacency[v]) {
      if (w < 0 || w >= n) throw std::invalid_argument("edge endpoint out of range");
      if (w == v) throw std::invalid_argument("self-loop in forest");
    }
    degree_sum += adjacency[v].size();
  }
  Forest f;
  f.parent_.assign(n, -1);
  std::vector<char> seen(n, 0);
  size_t tree_edges = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    f.roots_.push_back(s);
    seen[s] = 1;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w : adjacency[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        f.parent_[w] = v;
        ++tree_edges;
        q.push(w);
      }
    }
  }
  if (degree_sum != 2 * tree_edges) throw std::invalid_argument("edges do not form a forest");
  f.adjacency_ = std::move(adjacency);
  return f;
}

Forest Forest::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("edge endpoint out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return from_adjacency(std::move(adj));
}

Forest Forest::from_tree(const RootedTree& tree) {
  std::vector<std::vector<Vertex>> adj(tree.size());
  for (Vertex v = 1; v < tree.size(); ++v) {
    const Vertex p = tree.parents()[v];
    adj[p].push_back(v);
    adj[v].push_back(p);
  }
  return from_adjacency(std::move(adj));
}

std::optional<Vertex> Forest::parent(Vertex u) const {
  if (u < 0 || u >= size()) throw std::out_of_range("vertex out of range");
  if (parent_[u] < 0) return std::nullopt;
  return parent_[u];
}

std::span<const Vertex> Forest::neighbors(Vertex u) const {
  if (u < 0 || u >= size()) throw std::out_of_range("vertex out of range");
  return adjacency_[u];
}

std::vector<std::vector<Vertex>> u_components(const Forest& forest, Vertex u) {
  const int n = forest.size();
  if (u < 0 || u >= n) throw std::out_of_range("vertex out of range");
  std::vector<char> seen(n, 0);
  seen[u] = 1;
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : forest.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string to_paren_string(const RootedTree& tree) {
  std::string out;
  out.reserve(2 * tree.size());
  std::vector<Vertex> path;
  for (Vertex v = 0; v < tree.size(); ++v) {
    const Vertex p = tree.parents()[v];
    while (!path.empty() && path.back() != p) {
      out.push_back(')');
      path.pop_back();
    }
    out.push_back('(');
    path.push_back(v);
  }
  out.append(path.size(), ')');
  return out;
}

RootedTree parse_paren_string(std::string_view text) {
  std::vector<Vertex> parent;
  std::vector<Vertex> path;
  bool closed = false;
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    if (closed) throw std::invalid_argument("trailing characters after the root closes");
    if (c == '(') {
      parent.push_back(path.empty() ? -1 : path.back());
      path.push_back(static_cast<Vertex>(parent.size()) - 1);
    } else if (c == ')') {
      if (path.empty()) throw std::invalid_argument("unbalanced ')'");
      path.pop_back();
      closed = path.empty();
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "'");
    }
  }
  if (parent.empty() || !closed) throw std::invalid_argument("unbalanced parentheses");
  return RootedTree::from_preorder_parents(std::move(parent));
}

std::string to_parent_csv(const RootedTree& tree) {
  std::string out;
  for (Vertex v = 1; v < tree.size(); ++v) {
    if (v > 1) out.push_back(',');
    out += std::to_string(tree.parents()[v]);
  }
  return out;
}

RootedTree parse_parent_csv(std::string_view text) {
  std::vector<Vertex> parent{-1};
  size_t pos = 0;
  auto blank = [](char c) { return c == ' ' || c == '\n' || c == '\t' || c == '\r'; };
  while (pos < text.size() && blank(text[pos])) ++pos;
  if (pos < text.size()) {
    while (true) {
      while (pos < text.size() && blank(text[pos])) ++pos;
      size_t end = pos;
      while (end < text.size() && text[end] != ',') ++end;
      size_t last = end;
      while (last > pos && blank(text[last - 1])) --last;
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + last, value);
      if (ec != std::errc() || ptr != text.data() + last)
        throw std::invalid_argument("malformed parent entry");
      parent.push_back(value);
      if (end == text.size()) break;
      pos = end + 1;
    }
  }
  const int n = static_cast<int>(parent.size());
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v = 1; v < n; ++v) {
    if (parent[v] < 0 || parent[v] >= n) throw std::invalid_argument("parent id out of range");
    children[parent[v]].push_back(v);
  }
  RootedTree tree = build_tree(children);
  return tree;
}

RootedTree parse_tree(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    return c == '(' ? parse_paren_string(text) : parse_parent_csv(text);
  }
  return parse_parent_csv(text);
}

}  // namespace treeverse
