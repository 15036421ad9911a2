#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "support.hpp"
#include "treeverse/balanced.hpp"
#include "treeverse/embedder.hpp"
#include "treeverse/oracle.hpp"

using namespace treeverse;
using namespace treeverse::testing;

namespace {

std::shared_ptr<const Host> typed_host(int k, int prefix = 0) {
  const RootedTree t = build_typed_tree(k).tree;
  return make_host(prefix > 0 ? t.prefix(prefix) : t);
}

bool checked(const std::shared_ptr<const Host>& host, const RootedTree& guest, Vertex x1, Vertex x2,
             EmbedStats* stats = nullptr) {
  const Embedding e = embed(host, guest, x1, x2, stats);
  const Verification v = verify_embedding(e, guest, x1, x2, phi2_applies(host->tree, guest.size()));
  if (!v.ok) MESSAGE(to_paren_string(guest) << " x1=" << x1 << " x2=" << x2 << ": " << v.diagnostics.front());
  return v.ok;
}

RootedTree random_guest(int m, std::mt19937_64& rng) { return random_tree(m, rng); }

}  // namespace

TEST_CASE("star into T_2 puts the centre on the root") {
  const auto host = typed_host(2);
  const RootedTree star = star_tree(9);
  const Embedding e = embed(host, star, 0, 0);
  CHECK(e.map[0] == 0);
  CHECK(e.flags.phi1_ok);
  CHECK(e.flags.admissible_complement);
  CHECK(checked(host, star, 0, 0));
}

TEST_CASE("path into T_2 fills the host") {
  const auto host = typed_host(2);
  const RootedTree path = path_tree(9);
  const Embedding e = embed(host, path, 0, 8);
  CHECK(std::set<Vertex>(e.map.begin(), e.map.end()).size() == 9);
  CHECK(checked(host, path, 0, 8));
  CHECK(checked(host, path, 8, 4));
}

TEST_CASE("seven-vertex trees into T_3 leave the first twenty vertices") {
  const auto host = typed_host(3);
  const auto trees = enumerate_free_trees(7);
  REQUIRE(trees.size() == 11);
  for (const RootedTree& g : trees) {
    const Embedding e = embed(host, g, 0, 0);
    CHECK(verify_embedding(e, g, 0, 0, false).ok);
    for (Vertex v : e.map) CHECK(v >= 20);
  }
}

TEST_CASE("verify_embedding") {
  const auto host = typed_host(2);
  const RootedTree& t = host->tree;
  std::vector<Vertex> identity(t.size());
  for (Vertex v = 0; v < t.size(); ++v) identity[v] = v;
  CHECK(verify_embedding(identity, t, host->graph, t, 0, 0, false).ok);

  SUBCASE("non-edge") {
    // G^2 of T_2 is complete; T_3 has non-edges.
    const auto big = typed_host(3);
    std::pair<Vertex, Vertex> missing{-1, -1};
    for (Vertex a = 0; a < big->tree.size() && missing.first < 0; ++a)
      for (Vertex b = a + 1; b < big->tree.size(); ++b)
        if (!big->graph.has_edge(a, b)) {
          missing = {a, b};
          break;
        }
    REQUIRE(missing.first >= 0);
    const Verification v = verify_embedding(std::vector<Vertex>{missing.first, missing.second}, path_tree(2),
                                            big->graph, big->tree, 0, 0, false);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.diagnostics.empty());
  }
  SUBCASE("complement not a prefix") {
    std::vector<Vertex> map;
    for (Vertex v = 0; v < t.size(); ++v)
      if (v != 0 && v != 2) map.push_back(v);
    const RootedTree guest = path_tree(static_cast<int>(map.size()));
    const Verification v = verify_embedding(map, guest, UndirectedGraph::complete(9), t, 0, 0, false);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.flags.admissible_complement);
  }
  SUBCASE("not injective") {
    const Verification v = verify_embedding(std::vector<Vertex>{8, 8}, path_tree(2), host->graph, t, 0, 0, false);
    CHECK_FALSE(v.ok);
  }
  SUBCASE("x1 not on the minimum level") {
    const Verification v = verify_embedding(std::vector<Vertex>{5, 0}, path_tree(2), host->graph, t, 0, 0, false);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.flags.phi1_ok);
  }
}

TEST_CASE("phi2 window") {
  const RootedTree t2 = build_typed_tree(2).tree;
  CHECK(phi2_applies(t2, 7));
  CHECK(phi2_applies(t2, 5));
  CHECK_FALSE(phi2_applies(t2, 4));
  CHECK_FALSE(phi2_applies(t2, 8));
  CHECK_FALSE(phi2_applies(path_tree(5), 3));
}

TEST_CASE("errors") {
  const auto host = typed_host(2);
  CHECK_THROWS_AS(embed(host, path_tree(10), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(embed(host, path_tree(4), 4, 0), std::out_of_range);
  CHECK_THROWS_AS(embed(host, path_tree(4), 0, -1), std::out_of_range);
  CHECK_THROWS_AS(make_host(parse_paren_string("(()(()()()()))")), std::invalid_argument);
}

TEST_CASE("every tree up to nine vertices into every T_2 prefix") {
  for (int n = 1; n <= 9; ++n) {
    const auto host = typed_host(2, n);
    for (int m = 1; m <= n; ++m)
      for (const RootedTree& g : enumerate_free_trees(m)) {
        const auto reps = orbit_representatives(g);
        for (Vertex x1 : reps)
          for (Vertex x2 = 0; x2 < m; ++x2) {
            INFO("host " << n << " guest " << to_paren_string(g) << " x1=" << x1 << " x2=" << x2);
            REQUIRE(checked(host, g, x1, x2));
          }
      }
  }
}

TEST_CASE("random sweep covers every case") {
  std::mt19937_64 rng(99);
  EmbedStats stats;
  for (int k = 3; k <= 4; ++k) {
    const RootedTree full = build_typed_tree(k).tree;
    for (int n = 1; n <= full.size(); n += (k == 3 ? 1 : 3)) {
      const auto host = make_host(full.prefix(n));
      for (int rep = 0; rep < 12; ++rep) {
        const int m = 1 + static_cast<int>(rng() % n);
        const RootedTree g = random_guest(m, rng);
        const Vertex x1 = static_cast<Vertex>(rng() % m), x2 = static_cast<Vertex>(rng() % m);
        INFO("k=" << k << " n=" << n << " guest " << to_paren_string(g) << " x1=" << x1 << " x2=" << x2);
        REQUIRE(checked(host, g, x1, x2, &stats));
      }
    }
  }
  for (const char* name : {"base", "last-child-leaf", "descend", "case-1", "case-2-1", "case-2-2", "case-3-1",
                           "case-3-2", "case-3-pair", "case-3-2-tight"}) {
    INFO(name);
    CHECK(stats.cases[name] > 0);
  }
  CHECK(stats.calls > 0);
}

TEST_CASE("binary hosts") {
  std::mt19937_64 rng(5);
  for (int k = 1; k <= 4; ++k) {
    const auto host = make_host(perfect_binary(k));
    for (int rep = 0; rep < 40; ++rep) {
      const int m = 1 + static_cast<int>(rng() % host->tree.size());
      const RootedTree g = random_guest(m, rng);
      REQUIRE(checked(host, g, static_cast<Vertex>(rng() % m), static_cast<Vertex>(rng() % m)));
    }
  }
}

TEST_CASE("interval consequence agrees with the oracle") {
  const RootedTree t = build_typed_tree(2).tree;
  const UndirectedGraph g = underlying(generate(t, 2));
  std::vector<Vertex> order(t.size());
  for (Vertex v = 0; v < t.size(); ++v) order[v] = v;
  const UniversalityResult oracle = is_interval_universal(g, order, OracleOptions{1, false});
  CHECK(oracle.universal);

  // Embedding into the prefix of size i + m uses exactly {i, ..., i + m - 1}.
  bool all = true;
  for (int i = 0; i < t.size(); ++i)
    for (int m = 1; i + m <= t.size(); ++m) {
      const auto host = make_host(t.prefix(i + m));
      for (const RootedTree& guest : enumerate_free_trees(m)) {
        const Embedding e = embed(host, guest, 0, 0);
        bool ok = verify_embedding(e, guest, 0, 0, false).ok;
        for (Vertex v : e.map) ok = ok && v >= i;
        for (auto [a, b] : edges_of(guest)) ok = ok && g.has_edge(e.map[a], e.map[b]);
        all = all && ok;
      }
    }
  CHECK(all == oracle.universal);
}

TEST_CASE("oracle finds an embedding wherever the embedder does") {
  std::mt19937_64 rng(8);
  const auto host = typed_host(2);
  for (int rep = 0; rep < 60; ++rep) {
    const int m = 1 + static_cast<int>(rng() % 9);
    const RootedTree g = random_guest(m, rng);
    REQUIRE(checked(host, g, 0, 0));
    CHECK(brute_embed(g, host->graph).has_value());
  }
}
