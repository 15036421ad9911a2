// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "support.hpp"
#include "treeverse/analytics.hpp"
#include "treeverse/balanced.hpp"
#include "treeverse/decomposition.hpp"
#include "treeverse/embedder.hpp"
#include "treeverse/oracle.hpp"

using namespace treeverse;
using namespace treeverse::testing;

namespace {

// Pinned limits.
constexpr int kExhaustiveGuest = 16;     // criterion 1, k = 3: every free tree up to this size
constexpr int kSampledPerSize = 300;     // criterion 1, k = 3: random guests per larger size
constexpr int kPhi2Exhaustive = 14;      // criterion 8: every free tree up to this size
constexpr int kPhi2SampledPerSize = 60;  // criterion 8: random guests per larger size
constexpr int kForests = 10000;          // criterion 6
constexpr int kPrefixesPerLevel = 20;    // criterion 4

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool verified(const std::shared_ptr<const Host>& host, const RootedTree& g, Vertex x1, Vertex x2) {
  try {
    const Embedding e = embed(host, g, x1, x2);
    return verify_embedding(e, g, x1, x2, phi2_applies(host->tree, g.size())).ok;
  } catch (const std::exception&) {
    return false;
  }
}

Outcome universality() {
  std::mt19937_64 rng(1);
  long checked = 0, failed = 0;
  for (int k = 1; k <= 3; ++k) {
    const auto host = make_host(build_typed_tree(k).tree);
    const int n = host->tree.size();
    for (int m = 1; m <= n; ++m) {
      if (k < 3 || m <= kExhaustiveGuest) {
        for (const RootedTree& g : enumerate_free_trees(m))
          for (Vertex x1 : orbit_representatives(g)) {
            ++checked;
            failed += !verified(host, g, x1, (x1 + m / 2) % m);
          }
      } else {
        for (int rep = 0; rep < kSampledPerSize; ++rep) {
          const RootedTree g = random_tree(m, rng);
          const Vertex x1 = static_cast<Vertex>(rng() % m);
          ++checked;
          failed += !verified(host, g, x1, static_cast<Vertex>(rng() % m));
        }
      }
    }
  }
  return {failed == 0, std::to_string(checked) + " embeddings, " + std::to_string(failed) + " failures"};
}

Outcome oracle_cross_check() {
  const UndirectedGraph g = underlying(generate(build_typed_tree(2).tree, 2));
  const UniversalityResult u = is_universal(g);
  std::vector<Vertex> order(g.size());
  for (Vertex v = 0; v < g.size(); ++v) order[v] = v;
  const UniversalityResult i = is_interval_universal(g, order);
  return {u.universal && u.trees_checked == 47 && i.universal,
          std::to_string(u.trees_checked) + " trees universal=" + std::to_string(u.universal) +
              ", interval=" + std::to_string(i.universal)};
}

Outcome counterexample() {
  const CounterexampleReport r = reproduce_counterexample();
  std::string missing;
  for (auto [a, b] : r.legacy_missing) missing += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return {r.ok(), "legacy slice misses " + missing};
}

Outcome edge_bounds() {
  const BoundReport t = bound_table_ternary(7, true, kPrefixesPerLevel);
  const BoundReport b = bound_table_binary(10, true, kPrefixesPerLevel);
  double worst = 1e300;
  for (const auto* r : {&t, &b})
    for (const auto& row : r->rows) worst = std::min(worst, row.slack);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu ternary rows, %zu binary rows, min slack %.1f", t.rows.size(), b.rows.size(),
                worst);
  return {t.ok() && b.ok(), buf};
}

Outcome balance() {
  const Rational two{2, 1};
  bool ok = true;
  for (int k = 0; k <= 8; ++k) ok = ok && validate_balance(build_typed_tree(k).tree, two, 1).ok();
  const RootedTree t5 = build_typed_tree(5).tree;
  int prefixes = 0;
  for (int m = 1; m <= t5.size(); ++m, ++prefixes) ok = ok && validate_balance(t5.prefix(m), two, 1).ok();
  return {ok, "T_0..T_8 and " + std::to_string(prefixes) + " prefixes of T_5"};
}

Outcome decomposition() {
  std::mt19937_64 rng(6);
  long bad = 0, critical = 0;
  for (int iter = 0; iter < kForests; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 59);
    const Forest f = Forest::from_edges(n, random_forest_edges(n, iter % 2 ? 0.1 : 0.0, rng));
    const Vertex u = static_cast<Vertex>(rng() % n);
    const int bx = 1 + static_cast<int>(rng() % (n - 1));
    try {
      const ComponentCollection b = find_bounded_components(f, u, bx);
      bad += !(validate_collection(f, b).empty() && b.union_size >= bx && b.union_size <= 2 * bx - 1);
      if (n < 4) continue;
      const int x = 3 + static_cast<int>(rng() % (n - 3));
      const int y = 2 + static_cast<int>(rng() % (x - 2));
      const ClassifiedCollection c = find_feasible_or_critical(f, u, x, y);
      const int total = c.collection.union_size;
      bool ok = validate_collection(f, c.collection).empty() && classify(c.collection, x, y) == c.kind;
      if (c.kind == CollectionKind::Feasible) {
        ok = ok && x <= total + 1 && total + 1 <= x + y - 2;
      } else if (c.kind == CollectionKind::Critical) {
        ++critical;
        ok = ok && c.collection.components.size() >= 2 && x + y - 2 <= total && total <= 2 * x - 3;
        for (const auto& comp : c.collection.components)
          ok = ok && total - static_cast<int>(comp.size()) <= x - 2;
      } else {
        ok = false;
      }
      bad += !ok;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return {bad == 0, std::to_string(kForests) + " forests, " + std::to_string(critical) + " critical, " +
                        std::to_string(bad) + " failures"};
}

bool generator_identities(const RootedTree& t) {
  const int n = t.size();
  UndirectedGraph g[4];
  for (int r = 0; r <= 3; ++r) g[r] = underlying(generate(t, r));
  if (!(g[0] == g[1])) return false;
  for (int r = 0; r <= 3; ++r) {
    if (g[r].degree(0) != n - 1) return false;
    for (Vertex v = 1; v < n; ++v)
      if (!g[r].has_edge(v, *t.parent(v))) return false;
    if (r < 3)
      for (auto [a, b] : g[r].edges())
        if (!g[r + 1].has_edge(a, b)) return false;
  }
  for (int r = 0; r <= 2; ++r) {
    for (int m = 1; m <= n; ++m)
      if (!(g[r].induced_prefix(m) == underlying(generate(t.prefix(m), r)))) return false;
    for (int lvl = 1; lvl <= t.height(); ++lvl) {
      const auto row = t.level_vertices(lvl);
      for (std::size_t i = 0; i < row.size(); ++i)
        for (std::size_t j = i; j < row.size(); ++j) {
          const Vertex pf = *t.parent(row[i]), pl = *t.parent(row[j]);
          if (pf != pl && t.nearest_left_cousin(pl) != pf) continue;
          const MergedTree mt = merged_tree(t, row[i], row[j]);
          const UndirectedGraph h = underlying(generate(mt.tree, r));
          for (Vertex a = 1; a < h.size(); ++a)
            for (Vertex b = a + 1; b < h.size(); ++b)
              if (h.has_edge(a, b) != g[r].has_edge(mt.to_source[a], mt.to_source[b])) return false;
        }
    }
  }
  return true;
}

Outcome generators() {
  long instances = 0, bad = 0;
  for (int n = 1; n <= 9; ++n)
    for (const RootedTree& f : enumerate_free_trees(n))
      for (const RootedTree& t : all_rootings(f)) {
        ++instances;
        bad += !generator_identities(t);
      }
  for (int k = 0; k <= 4; ++k) {
    instances += 2;
    bad += !generator_identities(build_typed_tree(k).tree);
    bad += !generator_identities(perfect_binary(k));
  }
  return {bad == 0, std::to_string(instances) + " rooted trees, " + std::to_string(bad) + " failures"};
}

Outcome phi2() {
  std::mt19937_64 rng(8);
  long checked = 0, bad = 0;
  for (int k = 1; k <= 3; ++k) {
    const RootedTree full = build_typed_tree(k).tree;
    for (int n = 1; n <= full.size(); ++n) {
      const RootedTree t = full.prefix(n);
      if (t.children(0).size() != 2) continue;
      const auto host = make_host(t);
      const int nu2 = t.subtree_size(t.children(0)[1]);
      if (nu2 < 2) continue;
      for (int m = nu2; m <= n - 2; ++m) {
        auto check = [&](const RootedTree& g, Vertex x1, Vertex x2) {
          ++checked;
          try {
            const Embedding e = embed(host, g, x1, x2);
            bad += !(e.flags.phi2_applicable && e.flags.phi2_ok && host->tree.level(e.map[x2]) <= 2 &&
                     verify_embedding(e, g, x1, x2, true).ok);
          } catch (const std::exception&) {
            ++bad;
          }
        };
        if (m <= kPhi2Exhaustive) {
          for (const RootedTree& g : enumerate_free_trees(m)) {
            const auto reps = orbit_representatives(g);
            for (Vertex x1 : reps)
              for (Vertex x2 : reps) check(g, x1, x2);
          }
        } else {
          for (int rep = 0; rep < kPhi2SampledPerSize; ++rep) {
            const RootedTree g = random_tree(m, rng);
            check(g, static_cast<Vertex>(rng() % m), static_cast<Vertex>(rng() % m));
          }
        }
      }
    }
  }
  return {bad == 0 && checked > 0, std::to_string(checked) + " embeddings, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"universality of T_1..T_3 hosts", universality},
      {"oracle cross-check on T_2", oracle_cross_check},
      {"legacy counterexample", counterexample},
      {"edge bounds", edge_bounds},
      {"balance axioms", balance},
      {"decomposition properties", decomposition},
      {"generator identities", generators},
      {"level of x2 in the two-child window", phi2},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s: %s (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
