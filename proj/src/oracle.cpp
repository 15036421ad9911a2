#include "treeverse/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace treeverse {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency adjacency_of(const RootedTree& t) {
  Adjacency g(t.size());
  for (Vertex v = 1; v < t.size(); ++v) {
    const Vertex p = *t.parent(v);
    g[v].push_back(p);
    g[p].push_back(v);
  }
  return g;
}

std::string canon(const Adjacency& g, Vertex v, Vertex from) {
  std::vector<std::string> parts;
  for (Vertex w : g[v])
    if (w != from) parts.push_back(canon(g, w, v));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  s += ')';
  return s;
}

/// One or two centers, by repeated leaf removal.
std::vector<Vertex> centers(const Adjacency& g) {
  const int n = static_cast<int>(g.size());
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(g[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : g[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string free_form(const Adjacency& g) {
  std::string best;
  for (Vertex c : centers(g)) {
    std::string s = canon(g, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::uint64_t rooted_aut(const Adjacency& g, Vertex v, Vertex from, std::string& form) {
  std::vector<std::pair<std::string, std::uint64_t>> kids;
  for (Vertex w : g[v]) {
    if (w == from) continue;
    std::string f;
    const std::uint64_t a = rooted_aut(g, w, v, f);
    kids.emplace_back(std::move(f), a);
  }
  std::sort(kids.begin(), kids.end());
  std::uint64_t total = 1;
  form = "(";
  for (std::size_t i = 0; i < kids.size();) {
    std::size_t j = i;
    while (j < kids.size() && kids[j].first == kids[i].first) {
      total *= kids[j].second * (j - i + 1);
      form += kids[j].first;
      ++j;
    }
    i = j;
  }
  form += ')';
  return total;
}

void check_guard(int n, int limit, bool unsafe, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": size must be positive");
  if (n > limit && !unsafe)
    throw std::invalid_argument(std::string(what) + ": size " + std::to_string(n) + " exceeds the guard of " +
                                std::to_string(limit) + " (pass unsafe_large to override)");
}

Adjacency adjacency_from_levels(const std::vector<int>& levels) {
  Adjacency g(levels.size());
  std::vector<Vertex> last(levels.size() + 1, -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int l = levels[i];
    last[l] = static_cast<Vertex>(i);
    if (l > 0) {
      const Vertex p = last[l - 1];
      g[i].push_back(p);
      g[p].push_back(static_cast<Vertex>(i));
    }
  }
  return g;
}

}  // namespace

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TREEVERSE_JOBS")) {
    int value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::ptrdiff_t first_failure(std::size_t count, int jobs, const std::function<bool(std::size_t)>& ok) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)), count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || i > best.load()) return;
        if (!ok(i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  const std::size_t b = best.load();
  return b == count ? -1 : static_cast<std::ptrdiff_t>(b);
}

std::vector<std::vector<int>> rooted_level_sequences(int n) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> L(n);
  for (int i = 0; i < n; ++i) L[i] = i;
  while (true) {
    out.push_back(L);
    int p = n - 1;
    while (p > 0 && L[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (L[q] != L[p] - 1) --q;
    for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
  }
  return out;
}

std::string rooted_canonical_form(const RootedTree& tree, Vertex root) {
  if (root < 0 || root >= tree.size()) throw std::out_of_range("root out of range");
  return canon(adjacency_of(tree), root, -1);
}

std::string free_canonical_form(const RootedTree& tree) { return free_form(adjacency_of(tree)); }

std::vector<RootedTree> enumerate_free_trees(int n, bool unsafe_large) {
  check_guard(n, kFreeTreeGuard, unsafe_large, "enumerate_free_trees");
  std::set<std::string> forms;
  for (const auto& levels : rooted_level_sequences(n)) forms.insert(free_form(adjacency_from_levels(levels)));
  std::vector<RootedTree> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(parse_paren_string(f));
  return out;
}

std::uint64_t automorphism_count(const RootedTree& tree) {
  const Adjacency g = adjacency_of(tree);
  const auto c = centers(g);
  std::string fa, fb;
  if (c.size() == 1) return rooted_aut(g, c[0], -1, fa);
  const std::uint64_t a = rooted_aut(g, c[0], c[1], fa);
  const std::uint64_t b = rooted_aut(g, c[1], c[0], fb);
  return a * b * (fa == fb ? 2 : 1);
}

std::vector<Vertex> orbit_representatives(const RootedTree& tree) {
  const Adjacency g = adjacency_of(tree);
  std::set<std::string> seen;
  std::vector<Vertex> reps;
  for (Vertex v = 0; v < tree.size(); ++v)
    if (seen.insert(canon(g, v, -1)).second) reps.push_back(v);
  return reps;
}

std::vector<std::pair<Vertex, Vertex>> prufer_decode(std::span<const int> seq, int n) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  if (n == 1) {
    if (!seq.empty()) throw std::invalid_argument("sequence length must be n - 2");
    return {};
  }
  if (static_cast<int>(seq.size()) != n - 2) throw std::invalid_argument("sequence length must be n - 2");
  std::vector<int> degree(n, 1);
  for (int s : seq) {
    if (s < 0 || s >= n) throw std::out_of_range("sequence entry out of range");
    ++degree[s];
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int s : seq) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--degree[s] == 1) leaves.insert(s);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

std::size_t prufer_class_count(int n, bool unsafe_large) {
  check_guard(n, kPruferGuard, unsafe_large, "prufer_class_count");
  if (n <= 2) return 1;
  std::set<std::string> forms;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    Adjacency g(n);
    for (auto [a, b] : prufer_decode(seq, n)) {
      g[a].push_back(b);
      g[b].push_back(a);
    }
    forms.insert(free_form(g));
    int i = n - 3;
    while (i >= 0 && ++seq[i] == n) seq[i--] = 0;
    if (i < 0) break;
  }
  return forms.size();
}

std::optional<std::vector<Vertex>> brute_embed(const RootedTree& guest, const UndirectedGraph& host) {
  const int m = guest.size();
  const int n = host.size();
  if (m > n) return std::nullopt;
  const Adjacency g = adjacency_of(guest);

  // Start from a maximum-degree guest vertex; it is the most constrained.
  Vertex root = 0;
  for (Vertex v = 1; v < m; ++v)
    if (g[v].size() > g[root].size()) root = v;
  std::vector<Vertex> order, parent(m, -1);
  std::vector<Vertex> stack{root};
  std::vector<char> seen(m, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = g[v].rbegin(); it != g[v].rend(); ++it)
      if (!seen[*it]) {
        seen[*it] = 1;
        parent[*it] = v;
        stack.push_back(*it);
      }
  }

  std::vector<Vertex> phi(m, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const Vertex v = order[i];
    const int need = static_cast<int>(g[v].size());
    auto attempt = [&](Vertex h) {
      if (used[h] || host.degree(h) < need) return false;
      used[h] = 1;
      phi[v] = h;
      if (extend(i + 1)) return true;
      used[h] = 0;
      return false;
    };
    if (i == 0) {
      for (Vertex h = 0; h < n; ++h)
        if (attempt(h)) return true;
      return false;
    }
    for (Vertex h : host.neighbors(phi[parent[v]]))
      if (attempt(h)) return true;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return phi;
}

UniversalityResult is_universal(const UndirectedGraph& graph, const OracleOptions& options) {
  const int n = graph.size();
  check_guard(n, kUniversalGuard, options.unsafe_large, "is_universal");
  const auto trees = enumerate_free_trees(n, options.unsafe_large);
  std::atomic<std::size_t> checked{0};
  const auto fail = first_failure(trees.size(), options.jobs, [&](std::size_t i) {
    ++checked;
    return brute_embed(trees[i], graph).has_value();
  });
  UniversalityResult r;
  r.universal = fail < 0;
  r.trees_checked = checked.load();
  if (fail >= 0) {
    r.witness = trees[fail];
    r.start = 0;
    r.size = n;
  }
  return r;
}

UniversalityResult is_interval_universal(const UndirectedGraph& graph, std::span<const Vertex> ordering,
                                         const OracleOptions& options) {
  const int n = graph.size();
  check_guard(n, kIntervalGuard, options.unsafe_large, "is_interval_universal");
  if (static_cast<int>(ordering.size()) != n) throw std::invalid_argument("ordering must list every vertex once");
  std::vector<char> hit(n, 0);
  for (Vertex v : ordering) {
    if (v < 0 || v >= n || hit[v]) throw std::invalid_argument("ordering must list every vertex once");
    hit[v] = 1;
  }

  std::vector<std::vector<RootedTree>> trees(n + 1);
  for (int m = 1; m <= n; ++m) trees[m] = enumerate_free_trees(m, options.unsafe_large);
  struct Task {
    int start;
    int size;
    std::size_t tree;
  };
  std::vector<Task> tasks;
  std::vector<std::vector<UndirectedGraph>> blocks(n + 1);
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i + m <= n; ++i) {
      blocks[m].push_back(graph.induced(ordering.subspan(i, m)));
      for (std::size_t t = 0; t < trees[m].size(); ++t) tasks.push_back({i, m, t});
    }

  std::atomic<std::size_t> checked{0};
  const auto fail = first_failure(tasks.size(), options.jobs, [&](std::size_t k) {
    ++checked;
    const Task& t = tasks[k];
    return brute_embed(trees[t.size][t.tree], blocks[t.size][t.start]).has_value();
  });
  UniversalityResult r;
  r.universal = fail < 0;
  r.trees_checked = checked.load();
  if (fail >= 0) {
    const Task& t = tasks[fail];
    r.witness = trees[t.size][t.tree];
    r.start = t.start;
    r.size = t.size;
  }
  return r;
}

std::optional<Vertex> degree_witness(const UndirectedGraph& graph) {
  for (Vertex v = 0; v < graph.size(); ++v)
    if (graph.degree(v) == graph.size() - 1) return v;
  return std::nullopt;
}

}  // namespace treeverse
