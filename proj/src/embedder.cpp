#include "treeverse/embedder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "treeverse/balanced.hpp"
#include "treeverse/decomposition.hpp"

namespace treeverse {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

struct Key {
  int k;
  int t;
};

Key key_of(const RootedTree& h) { return {h.height(), static_cast<int>(h.children(0).size())}; }

bool before(Key a, Key b) { return a.k < b.k || (a.k == b.k && a.t < b.t); }

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("embedder: ") + what);
}

std::vector<Vertex> shifted(int size, Vertex offset) {
  std::vector<Vertex> ids(size);
  std::iota(ids.begin(), ids.end(), offset);
  return ids;
}

Adjacency induced(const Adjacency& g, const std::vector<Vertex>& subset) {
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i);
  Adjacency out(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (Vertex nb : g[subset[i]])
      if (pos[nb] >= 0) out[i].push_back(pos[nb]);
  return out;
}

/// Links the components of a forest into one tree through their minima.
void connect(Adjacency& g) {
  const int n = static_cast<int>(g.size());
  std::vector<char> seen(n, 0);
  Vertex previous = -1;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex nb : g[v])
        if (!seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
    }
    if (previous >= 0) {
      g[previous].push_back(s);
      g[s].push_back(previous);
    }
    previous = s;
  }
}

Vertex holder(const std::vector<Vertex>& phi, Vertex target) {
  const auto it = std::find(phi.begin(), phi.end(), target);
  require(it != phi.end(), "no guest vertex on the expected host vertex");
  return static_cast<Vertex>(it - phi.begin());
}

class Embedder {
 public:
  explicit Embedder(EmbedStats* stats) : stats_(stats) {}

  std::vector<Vertex> run(const RootedTree& h, Adjacency g, Vertex x1, Vertex x2, int depth);

 private:
  void note(const char* name) {
    if (stats_) ++stats_->cases[name];
  }

  /// Embeds g[subset] into `sub`, whose vertex i is vertex to_host[i] of the
  /// caller's host. x1/x2 outside the subset fall back to its first member.
  void place(const RootedTree& sub, const std::vector<Vertex>& to_host, Key caller, const Adjacency& g,
             const std::vector<Vertex>& subset, Vertex x1, Vertex x2, std::vector<Vertex>& phi, int depth) {
    if (subset.empty()) return;
    require(static_cast<int>(subset.size()) <= sub.size(), "piece larger than its sub-host");
    require(before(key_of(sub), caller), "recursion does not descend in (level, root degree)");
    const auto local = [&](Vertex v) {
      const auto it = std::find(subset.begin(), subset.end(), v);
      return it == subset.end() ? -1 : static_cast<Vertex>(it - subset.begin());
    };
    Vertex l1 = local(x1);
    if (l1 < 0) l1 = 0;
    Vertex l2 = local(x2);
    if (l2 < 0) l2 = l1;
    const std::vector<Vertex> res = run(sub, induced(g, subset), l1, l2, depth + 1);
    const int first = sub.size() - static_cast<int>(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      require(res[i] >= first, "sub-embedding image is not a suffix");
      phi[subset[i]] = to_host[res[i]];
    }
  }

  EmbedStats* stats_;
};

std::vector<Vertex> Embedder::run(const RootedTree& h, Adjacency g, Vertex x1, Vertex x2, int depth) {
  const int n = h.size();
  const int m = static_cast<int>(g.size());
  if (stats_) {
    ++stats_->calls;
    stats_->max_depth = std::max(stats_->max_depth, depth);
  }
  std::vector<Vertex> phi(m, -1);
  if (m == 0) return phi;
  require(m <= n, "guest larger than host");
  connect(g);

  const auto everything = shifted(m, 0);
  const auto all_but = [&](std::initializer_list<Vertex> drop) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < m; ++v)
      if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
    return out;
  };

  // Level <= 2: G^2 is complete, only the suffix and x1's level matter.
  if (h.height() <= 2) {
    note("base");
    const Vertex start = n - m;
    Vertex best = start;
    for (Vertex v = start; v < n; ++v)
      if (h.level(v) < h.level(best)) best = v;
    phi[x1] = best;
    Vertex next = start;
    for (Vertex i = 0; i < m; ++i) {
      if (i == x1) continue;
      if (next == best) ++next;
      phi[i] = next++;
    }
    return phi;
  }

  const Key here = key_of(h);
  const auto kids = h.children(0);
  const int t = static_cast<int>(kids.size());
  const Vertex vt = kids.back();
  const int x = h.subtree_size(vt);

  if (x == 1) {
    note("last-child-leaf");
    place(h.prefix(n - 1), shifted(n - 1, 0), here, g, all_but({x1}), x2, x2, phi, depth);
    if (m < n) {
      phi[x1] = vt;
    } else {
      phi[holder(phi, 0)] = vt;
      phi[x1] = 0;
    }
    return phi;
  }

  if (m < x) {
    note("descend");
    place(h.subtree(vt), shifted(x, vt), here, g, everything, x1, x2, phi, depth);
    return phi;
  }

  if (t == 1) {
    note("case-1");
    const RootedTree sub = h.subtree(vt);
    if (m <= n - 1) {
      place(sub, shifted(n - 1, vt), here, g, everything, x1, x2, phi, depth);
    } else {
      place(sub, shifted(n - 1, vt), here, g, all_but({x1}), x2, x2, phi, depth);
      phi[x1] = 0;
    }
    return phi;
  }

  if (t == 2) {
    const Vertex v1 = kids[0];
    const MergedTree merged = merged_tree(h, h.children(v1).front(), h.children(vt).back());
    if (m <= n - 2) {
      note("case-2-1");
      place(merged.tree, merged.to_source, here, g, all_but({x1}), x2, x2, phi, depth);
      phi[x1] = vt;
      return phi;
    }
    note("case-2-2");
    const auto degree_without_x1 = [&](Vertex v) {
      return static_cast<int>(g[v].size()) - static_cast<int>(std::count(g[v].begin(), g[v].end(), x1));
    };
    Vertex w = -1;
    Vertex w_nb = -1;
    for (Vertex v = m - 1; v >= 0 && w < 0; --v)
      if (v != x1 && degree_without_x1(v) == 1) w = v;
    if (w >= 0) {
      for (Vertex nb : g[w])
        if (nb != x1) w_nb = nb;
    } else {
      for (Vertex v = 0; v < m && w < 0; ++v)
        if (v != x1 && degree_without_x1(v) == 0) w = v;
      require(w >= 0, "forest without a leaf or isolated vertex");
      for (Vertex v = 0; v < m && w_nb < 0; ++v)
        if (v != x1 && v != w) w_nb = v;
    }
    place(merged.tree, merged.to_source, here, g, all_but({x1, w}), w_nb, w_nb, phi, depth);
    phi[w] = v1;
    phi[x1] = m == n - 1 ? vt : 0;
    return phi;
  }

  const Vertex vt1 = kids[t - 2];
  const Vertex vt2 = kids[t - 3];
  const int y = h.subtree_size(vt1);
  const int z = h.subtree_size(vt2);

  const ClassifiedCollection found = detail::feasible_or_critical(Forest::from_adjacency(g), x1, x, y);
  const ComponentCollection& coll = found.collection;
  const Vertex w = coll.w;
  std::vector<char> in_t0(m, 0);
  in_t0[w] = 1;
  for (const auto& c : coll.components)
    for (Vertex v : c) in_t0[v] = 1;
  std::vector<Vertex> t0, t1;
  for (Vertex v = 0; v < m; ++v) (in_t0[v] ? t0 : t1).push_back(v);

  // A critical collection of total x + y - 1 leaves only v_{t-1} of the pair
  // free; the pair route handles it and the three-piece split cannot.
  const bool tight = found.kind == CollectionKind::Critical && static_cast<int>(t0.size()) == x + y - 1;
  if (found.kind == CollectionKind::Feasible || tight) {
    const MergedTree pair = merged_tree(h, vt1, vt);
    if (!in_t0[x1] && m < x + y) {
      // With n' = x + y - 1 the rest would sit below w's level; the whole guest fits the pair.
      note("case-3-pair");
      place(pair.tree, pair.to_source, here, g, everything, x1, x2, phi, depth);
      return phi;
    }
    note(tight ? "case-3-2-tight" : "case-3-1");
    place(pair.tree, pair.to_source, here, g, t0, w, w, phi, depth);
    require(phi[w] == vt, "feasible piece did not put w on the last child");
    const int rest = n - static_cast<int>(t0.size());
    place(h.prefix(rest), shifted(rest, 0), here, g, t1, x1, x1, phi, depth);
    if (x1 == w && m == n) {
      phi[holder(phi, 0)] = vt;
      phi[x1] = 0;
    }
    return phi;
  }

  require(found.kind == CollectionKind::Critical, "collection is neither feasible nor critical");
  require(coll.components.size() == 2, "critical collection without exactly two components");
  note("case-3-2");
  const std::vector<Vertex>& c1 = coll.components[0];
  const std::vector<Vertex>& c2 = coll.components[1];
  const int size_t0 = static_cast<int>(t0.size());
  const int a = std::min(1, size_t0 - x - y + 1);
  const int lo = size_t0 - (x + y) + 2 - a;
  require(1 <= lo && lo < y, "split bound out of range");

  std::vector<Vertex> part = c1;
  part.push_back(w);
  std::sort(part.begin(), part.end());
  const Vertex w_local = static_cast<Vertex>(std::lower_bound(part.begin(), part.end(), w) - part.begin());
  const ComponentCollection split =
      find_bounded_components(Forest::from_adjacency(induced(g, part)), w_local, lo);
  const Vertex w_split = part[split.w];
  require(w_split != w, "split vertex coincides with w");

  std::vector<char> in_c1(m, 0), in_c2(m, 0), in_split(m, 0), in_c0(m, 0);
  for (Vertex v : c1) in_c1[v] = 1;
  for (Vertex v : c2) in_c2[v] = 1;
  for (const auto& c : split.components)
    for (Vertex v : c) in_split[part[v]] = 1;
  if (m >= x + y + z) {
    in_c0[w] = 1;
  } else {
    for (Vertex v = 0; v < m; ++v) in_c0[v] = !in_c1[v] && !in_c2[v];
  }
  const auto neighbor_in = [&](const std::vector<char>& mark) {
    for (Vertex nb : g[w])
      if (mark[nb]) return nb;
    throw std::logic_error("embedder: component not attached to w");
  };
  const Vertex w1 = neighbor_in(in_c1);
  const Vertex w2 = neighbor_in(in_c2);

  std::vector<Vertex> piece0, piece1, rest;
  for (Vertex v = 0; v < m; ++v) {
    if (in_split[v] || in_c0[v]) piece0.push_back(v);
    else if (in_c1[v]) piece1.push_back(v);
    else if (!in_c2[v]) rest.push_back(v);
  }

  place(h.subtree(vt), shifted(x, vt), here, g, c2, w2, w2, phi, depth);
  require(h.parent(phi[w2]) == vt, "w2 not on a child of the last child");

  const int n2 = n - static_cast<int>(c2.size());
  const MergedTree upper = merged_tree(h.prefix(n2), vt1, vt);
  require(phi2_applies(upper.tree, static_cast<int>(piece1.size())), "middle piece outside its size window");
  place(upper.tree, upper.to_source, here, g, piece1, w_split, w1, phi, depth);
  require(phi[w_split] == vt && h.level(phi[w1]) <= 2, "middle piece misplaced w' or w1");

  const int n1 = n2 - static_cast<int>(piece1.size());
  const MergedTree lower = merged_tree(h.prefix(n1), vt2, vt1);
  require(phi2_applies(lower.tree, static_cast<int>(piece0.size())), "first piece outside its size window");
  if (x1 != w && in_c0[x1]) {
    place(lower.tree, lower.to_source, here, g, piece0, x1, w, phi, depth);
    require(phi[x1] == vt1 && h.level(phi[w]) <= 2, "first piece misplaced x1 or w");
  } else {
    place(lower.tree, lower.to_source, here, g, piece0, w, w, phi, depth);
    require(phi[w] == vt1, "first piece misplaced w");
  }

  const int n0 = n1 - static_cast<int>(piece0.size());
  place(h.prefix(n0), shifted(n0, 0), here, g, rest, x1, x1, phi, depth);
  if (x1 == w && m == n) {
    phi[holder(phi, 0)] = vt1;
    phi[x1] = 0;
  }
  return phi;
}

Adjacency guest_adjacency(const RootedTree& guest) {
  Adjacency g(guest.size());
  for (Vertex v = 1; v < guest.size(); ++v) {
    const Vertex p = *guest.parent(v);
    g[v].push_back(p);
    g[p].push_back(v);
  }
  return g;
}

}  // namespace

std::shared_ptr<const Host> make_host(RootedTree tree) {
  const BalanceReport report = validate_balance(tree, Rational{2, 1}, 1);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    std::string msg = "host tree is not (2,1)-balanced: " + to_string(v.axiom) + " fails at";
    for (Vertex u : v.witness) msg += " " + std::to_string(u);
    throw std::invalid_argument(msg);
  }
  UndirectedGraph graph = underlying(generate(tree, 2));
  return std::make_shared<const Host>(Host{std::move(tree), std::move(graph)});
}

bool phi2_applies(const RootedTree& host, int guest_size) {
  const auto kids = host.children(0);
  if (kids.size() != 2) return false;
  const int nu2 = host.subtree_size(kids[1]);
  return host.size() - 2 >= guest_size && guest_size >= nu2 && nu2 >= 2;
}

Embedding embed(std::shared_ptr<const Host> host, const RootedTree& guest, Vertex x1, Vertex x2,
                EmbedStats* stats) {
  if (!host) throw std::invalid_argument("null host");
  const int m = guest.size();
  if (m > host->tree.size()) throw std::invalid_argument("guest has more vertices than the host");
  if (x1 < 0 || x1 >= m) throw std::out_of_range("x1 out of range");
  if (x2 < 0 || x2 >= m) throw std::out_of_range("x2 out of range");
  Embedder embedder(stats);
  Embedding e;
  e.map = embedder.run(host->tree, guest_adjacency(guest), x1, x2, 0);
  e.host = host;
  const bool expected = phi2_applies(host->tree, m);
  e.flags = verify_embedding(e.map, guest, host->graph, host->tree, x1, x2, expected).flags;
  return e;
}

Embedding embed(const RootedTree& host_tree, const RootedTree& guest, Vertex x1, Vertex x2, EmbedStats* stats) {
  return embed(make_host(host_tree), guest, x1, x2, stats);
}

Verification verify_embedding(std::span<const Vertex> map, const RootedTree& guest, const UndirectedGraph& host_graph,
                              const RootedTree& host_tree, Vertex x1, Vertex x2, bool phi2_expected) {
  Verification out;
  const int n = host_tree.size();
  const int m = guest.size();
  auto fail = [&](std::string msg) { out.diagnostics.push_back(std::move(msg)); };
  if (host_graph.size() != n) fail("host graph and tree sizes differ");
  if (static_cast<int>(map.size()) != m) {
    fail("map size differs from guest size");
    return out;
  }
  std::vector<char> used(n, 0);
  bool in_range = true;
  for (Vertex v = 0; v < m; ++v) {
    if (map[v] < 0 || map[v] >= n) {
      fail("guest vertex " + std::to_string(v) + " maps outside the host");
      in_range = false;
      continue;
    }
    if (used[map[v]]) fail("host vertex " + std::to_string(map[v]) + " used twice");
    used[map[v]] = 1;
  }
  if (!in_range) return out;
  for (Vertex v = 1; v < m; ++v) {
    const Vertex p = *guest.parent(v);
    if (!host_graph.has_edge(map[v], map[p]))
      fail("edge " + std::to_string(p) + "-" + std::to_string(v) + " not preserved");
  }
  out.flags.admissible_complement = std::all_of(used.begin(), used.begin() + (n - m), [](char c) { return !c; });
  if (!out.flags.admissible_complement) fail("unused host vertices are not a preorder prefix");
  if (m > 0) {
    int min_level = host_tree.level(map[0]);
    for (Vertex v = 0; v < m; ++v) min_level = std::min(min_level, host_tree.level(map[v]));
    out.flags.phi1_ok = host_tree.level(map[x1]) == min_level;
    out.flags.phi2_ok = host_tree.level(map[x2]) <= 2;
  }
  if (!out.flags.phi1_ok) fail("x1 is not on the minimum level of the image");
  out.flags.phi2_applicable = phi2_expected;
  if (phi2_expected && !out.flags.phi2_ok) fail("x2 is below level 2");
  out.ok = out.diagnostics.empty();
  return out;
}

Verification verify_embedding(const Embedding& e, const RootedTree& guest, Vertex x1, Vertex x2, bool phi2_expected) {
  if (!e.host) throw std::invalid_argument("embedding has no host");
  return verify_embedding(e.map, guest, e.host->graph, e.host->tree, x1, x2, phi2_expected);
}

}  // namespace treeverse
