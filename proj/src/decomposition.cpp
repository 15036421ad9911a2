#include "treeverse/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace treeverse {

namespace {

using Components = std::vector<std::vector<Vertex>>;

int total_size(const Components& comps) {
  int s = 0;
  for (const auto& c : comps) s += static_cast<int>(c.size());
  return s;
}

/// Components of forest - w that lie inside `region` (sorted; empty means the
/// whole forest).
Components components_within(const Forest& f, Vertex w, const std::vector<Vertex>& region) {
  Components all = u_components(f, w);
  if (!region.empty()) {
    std::erase_if(all, [&](const std::vector<Vertex>& c) {
      return !std::binary_search(region.begin(), region.end(), c.front());
    });
  }
  return all;
}

/// Larger first; ties by smallest member.
void sort_components(Components& comps) {
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
}

/// Where the walk enters `comp`: the neighbour of w inside it, or its smallest
/// vertex when comp is another tree of the forest.
Vertex entry_vertex(const Forest& f, Vertex w, const std::vector<Vertex>& comp) {
  for (Vertex n : f.neighbors(w))
    if (std::binary_search(comp.begin(), comp.end(), n)) return n;
  return comp.front();
}

ComponentCollection make(Vertex w, Vertex u, Components comps) {
  ComponentCollection c{w, u, std::move(comps), 0};
  c.union_size = total_size(c.components);
  return c;
}

ComponentCollection bounded_walk(const Forest& f, Vertex u, int x) {
  Vertex w = u;
  std::vector<Vertex> region;
  while (true) {
    Components comps = components_within(f, w, region);
    sort_components(comps);
    if (comps.empty()) throw std::logic_error("no components left to choose from");
    if (static_cast<int>(comps.front().size()) >= 2 * x) {
      w = entry_vertex(f, w, comps.front());
      region = std::move(comps.front());
      continue;
    }
    if (static_cast<int>(comps.front().size()) >= x) {
      comps.resize(1);
      return make(w, u, std::move(comps));
    }
    // Every component is below x, so stopping at the first union >= x keeps it <= 2x - 2.
    Components chosen;
    int sum = 0;
    for (auto& c : comps) {
      sum += static_cast<int>(c.size());
      chosen.push_back(std::move(c));
      if (sum >= x) return make(w, u, std::move(chosen));
    }
    throw std::logic_error("components too small for the requested bound");
  }
}

/// Indices of a sub-multiset of sizes summing into [lo, hi], if any.
std::vector<int> subset_in_window(const std::vector<int>& sizes, int lo, int hi) {
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int items = static_cast<int>(sizes.size());
  // reach[i][s]: some subset of the first i items sums to s.
  std::vector<std::vector<char>> reach(items + 1, std::vector<char>(total + 1, 0));
  reach[0][0] = 1;
  for (int i = 0; i < items; ++i)
    for (int s = 0; s <= total; ++s)
      if (reach[i][s]) {
        reach[i + 1][s] = 1;
        reach[i + 1][s + sizes[i]] = 1;
      }
  for (int target = std::max(lo, 1); target <= std::min(hi, total); ++target) {
    if (!reach[items][target]) continue;
    std::vector<int> pick;
    int s = target;
    for (int i = items; i > 0; --i) {
      if (reach[i - 1][s]) continue;
      pick.push_back(i - 1);
      s -= sizes[i - 1];
    }
    std::reverse(pick.begin(), pick.end());
    return pick;
  }
  return {};
}

}  // namespace

std::string to_string(CollectionKind kind) {
  switch (kind) {
    case CollectionKind::Feasible: return "feasible";
    case CollectionKind::Critical: return "critical";
    case CollectionKind::Plain: return "plain";
  }
  return "?";
}

CollectionKind classify(const ComponentCollection& coll, int x, int y) {
  const int total = coll.union_size;
  if (x <= total + 1 && total + 1 <= x + y - 2) return CollectionKind::Feasible;
  if (coll.components.size() >= 2 && x + y - 2 <= total && total <= 2 * x - 3) {
    std::size_t smallest = coll.components.front().size();
    for (const auto& c : coll.components) smallest = std::min(smallest, c.size());
    // The largest proper sub-union drops exactly the smallest component.
    if (total - static_cast<int>(smallest) <= x - 2) return CollectionKind::Critical;
  }
  return CollectionKind::Plain;
}

std::string validate_collection(const Forest& forest, const ComponentCollection& coll) {
  const int n = forest.size();
  if (coll.w < 0 || coll.w >= n) return "w out of range";
  if (coll.u < 0 || coll.u >= n) return "u out of range";
  std::map<Vertex, std::vector<Vertex>> by_min;
  for (auto& c : u_components(forest, coll.w)) by_min.emplace(c.front(), std::move(c));
  std::vector<char> used(n, 0);
  int total = 0;
  for (const auto& comp : coll.components) {
    if (comp.empty()) return "empty component";
    std::vector<Vertex> sorted = comp;
    std::sort(sorted.begin(), sorted.end());
    auto it = by_min.find(sorted.front());
    if (it == by_min.end() || it->second != sorted) return "not a component of forest - w";
    if (used[sorted.front()]) return "component listed twice";
    for (Vertex v : sorted) used[v] = 1;
    total += static_cast<int>(sorted.size());
  }
  if (used[coll.u]) return "u lies in the collection";
  if (total != coll.union_size) return "union_size mismatch";
  return {};
}

ComponentCollection find_bounded_components(const Forest& forest, Vertex u, int x) {
  if (x < 1) throw std::invalid_argument("x must be positive");
  if (u < 0 || u >= forest.size()) throw std::out_of_range("u out of range");
  if (forest.size() < x + 1) throw std::invalid_argument("forest too small: needs at least x + 1 vertices");
  return bounded_walk(forest, u, x);
}

ClassifiedCollection detail::feasible_or_critical(const Forest& f, Vertex u, int x, int y) {
  const int n = f.size();
  if (u < 0 || u >= n) throw std::out_of_range("u out of range");
  if (x < 2 || y < 2) throw std::invalid_argument("x and y must be at least 2");
  if (x <= n && n <= x + y - 2)
    return {make(u, u, components_within(f, u, {})), CollectionKind::Feasible};
  if (n < x) throw std::invalid_argument("forest too small");

  ComponentCollection seed = bounded_walk(f, u, x - 1);
  Vertex w = seed.w;
  Components comps = std::move(seed.components);
  while (true) {
    sort_components(comps);
    const int total = total_size(comps);
    if (x - 1 <= total && total <= x + y - 3) return {make(w, u, std::move(comps)), CollectionKind::Feasible};
    if (total < x + y - 2 || total > 2 * x - 3) throw std::logic_error("collection left the working window");

    std::size_t s = 0;
    while (s < comps.size() && static_cast<int>(comps[s].size()) >= y) ++s;
    int big = 0;
    for (std::size_t i = 0; i < s; ++i) big += static_cast<int>(comps[i].size());
    if (big < x + y - 2) {
      // Dropping the sub-y components one by one steps down by less than y,
      // so the union lands in [x - 1, x + y - 3].
      int sum = total;
      while (sum > x + y - 3) {
        sum -= static_cast<int>(comps.back().size());
        comps.pop_back();
      }
      return {make(w, u, std::move(comps)), CollectionKind::Feasible};
    }

    // Minimal subcollection of the large components reaching x + y - 2.
    Components minimal;
    int sum = 0;
    for (std::size_t i = 0; i < s && sum < x + y - 2; ++i) {
      sum += static_cast<int>(comps[i].size());
      minimal.push_back(comps[i]);
    }
    for (std::size_t i = minimal.size(); i-- > 0;) {
      if (sum - static_cast<int>(minimal[i].size()) >= x + y - 2) {
        sum -= static_cast<int>(minimal[i].size());
        minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }

    if (minimal.size() >= 2) {
      std::vector<int> sizes;
      for (const auto& c : minimal) sizes.push_back(static_cast<int>(c.size()));
      const std::vector<int> pick = subset_in_window(sizes, x - 1, x + y - 3);
      if (!pick.empty()) {
        Components chosen;
        for (int i : pick) chosen.push_back(minimal[i]);
        return {make(w, u, std::move(chosen)), CollectionKind::Feasible};
      }
      return {make(w, u, std::move(minimal)), CollectionKind::Critical};
    }

    w = entry_vertex(f, w, minimal.front());
    comps = components_within(f, w, minimal.front());
  }
}

ClassifiedCollection find_feasible_or_critical(const Forest& forest, Vertex u, int x, int y) {
  if (!(x > y && y >= 2)) throw std::invalid_argument("requires x > y >= 2");
  if (u < 0 || u >= forest.size()) throw std::out_of_range("u out of range");
  if (forest.size() < x + 1) throw std::invalid_argument("forest too small: needs at least x + 1 vertices");
  return detail::feasible_or_critical(forest, u, x, y);
}

}  // namespace treeverse
