#include "treeverse/balanced.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace treeverse {

namespace {

/// Emits a preorder parent array for a tree described by a per-vertex child
/// type list, starting from a root of type `root_type`.
template <typename ChildTypes>
std::vector<Vertex> grow(int k, int root_type, ChildTypes child_types, std::vector<int>* types) {
  std::vector<Vertex> parent;
  std::vector<std::tuple<Vertex, int, int>> work{{-1, root_type, 0}};
  while (!work.empty()) {
    auto [p, type, depth] = work.back();
    work.pop_back();
    const Vertex id = static_cast<Vertex>(parent.size());
    parent.push_back(p);
    if (types) types->push_back(type);
    if (depth == k) continue;
    const auto& kids = child_types(type);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) work.emplace_back(id, *it, depth + 1);
  }
  return parent;
}

}  // namespace

RootedTree perfect_binary(int k) {
  if (k < 0 || k > 24) throw std::invalid_argument("binary tree level must be in [0, 24]");
  static const std::vector<int> two{0, 0};
  auto p = grow(k, 0, [](int) -> const std::vector<int>& { return two; }, nullptr);
  return RootedTree::from_preorder_parents(std::move(p));
}

TypedTree build_typed_tree(int k) {
  if (k < 0 || k > 14) throw std::invalid_argument("typed tree level must be in [0, 14]");
  static const std::vector<int> of_one{1, 2};
  static const std::vector<int> of_two{1, 2, 1, 2};
  TypedTree out;
  out.k = k;
  auto p = grow(
      k, 1, [](int type) -> const std::vector<int>& { return type == 1 ? of_one : of_two; },
      &out.type_of);
  out.tree = RootedTree::from_preorder_parents(std::move(p));
  return out;
}

std::int64_t descendants_formula(int level, int type, int k) {
  if (k < 0 || level < 0 || level > k) throw std::out_of_range("level out of range");
  if (type != 1 && type != 2) throw std::invalid_argument("type must be 1 or 2");
  std::int64_t p = 1;
  for (int i = 0; i < k - level; ++i) p *= 3;
  return type * (p - 1);
}

Rational Rational::parse(const std::string& text) {
  Rational r;
  const auto slash = text.find('/');
  auto read = [&](std::string_view s, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("malformed rational '" + text + "'");
  };
  std::string_view all(text);
  if (slash == std::string::npos) {
    read(all, r.num);
    r.den = 1;
  } else {
    read(all.substr(0, slash), r.num);
    read(all.substr(slash + 1), r.den);
  }
  if (r.num <= 0 || r.den <= 0) throw std::invalid_argument("rational must be positive");
  const std::int64_t g = std::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::T1: return "T1";
    case Axiom::T2: return "T2";
    case Axiom::T3: return "T3";
    case Axiom::T4: return "T4";
  }
  return "?";
}

BalanceReport validate_balance(const RootedTree& t, Rational K, int s) {
  if (s < 0) throw std::invalid_argument("s must be non-negative");
  BalanceReport report{K, s, {}};
  auto nu = [&](Vertex v) { return static_cast<std::int64_t>(t.subtree_size(v)); };

  for (Vertex u = 0; u < t.size(); ++u) {
    const auto l = t.nearest_left_cousin(u);
    if (!l) continue;
    // T2: nu(l(u)) > nu(u) / K, cross-multiplied.
    if (nu(*l) * K.num <= nu(u) * K.den) report.violations.push_back({Axiom::T2, {u, *l}});
    if (const auto ll = t.nearest_left_cousin(*l); ll && nu(*ll) + nu(*l) < nu(u))
      report.violations.push_back({Axiom::T1, {u, *l, *ll}});
    if (!t.is_leaf(u) && t.is_leaf(*l)) report.violations.push_back({Axiom::T4, {u, *l}});
  }

  // T3 over per-level extremes: the smallest non-rightmost subtree on level
  // l must dominate the largest subtree on any level >= l + s.
  const int levels = t.height() + 1;
  std::vector<Vertex> max_at(levels + 1, -1);
  for (int lv = levels - 1; lv >= 0; --lv) {
    Vertex best = max_at[lv + 1];
    for (Vertex v : t.level_vertices(lv))
      if (best < 0 || nu(v) > nu(best)) best = v;
    max_at[lv] = best;
  }
  for (int lv = 0; lv < levels; ++lv) {
    auto row = t.level_vertices(lv);
    if (row.size() < 2) continue;
    Vertex small = -1;
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      if (small < 0 || nu(row[i]) < nu(small)) small = row[i];
    const int deeper = lv + s;
    if (deeper >= levels) continue;
    const Vertex big = max_at[deeper];
    // s = 0 compares a level with itself, including the vertex against itself.
    if (nu(small) < nu(big)) report.violations.push_back({Axiom::T3, {small, big}});
  }
  return report;
}

}  // namespace treeverse
