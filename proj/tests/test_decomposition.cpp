#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "treeverse/decomposition.hpp"

using namespace treeverse;
using namespace treeverse::testing;

namespace {

ComponentCollection sized(std::vector<int> sizes, Vertex w = 0) {
  ComponentCollection c;
  c.w = w;
  Vertex next = 1;
  for (int s : sizes) {
    std::vector<Vertex> comp;
    for (int i = 0; i < s; ++i) comp.push_back(next++);
    c.components.push_back(comp);
    c.union_size += s;
  }
  return c;
}

}  // namespace

TEST_CASE("bounded components: examples") {
  const Forest star = Forest::from_tree(star_tree(5));
  const ComponentCollection s = find_bounded_components(star, 0, 2);
  CHECK(s.w == 0);
  CHECK(s.components.size() == 2);
  CHECK(s.union_size == 2);
  CHECK(validate_collection(star, s).empty());

  const Forest path = Forest::from_tree(path_tree(5));
  const ComponentCollection p = find_bounded_components(path, 0, 2);
  CHECK(validate_collection(path, p).empty());
  CHECK(p.union_size >= 2);
  CHECK(p.union_size <= 3);

  // x + 1 vertices with u a leaf.
  const Forest small = Forest::from_tree(path_tree(4));
  const ComponentCollection q = find_bounded_components(small, 3, 3);
  CHECK(validate_collection(small, q).empty());
  CHECK(q.union_size == 3);

  CHECK_THROWS_AS(find_bounded_components(small, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(find_bounded_components(small, 0, 4), std::invalid_argument);
}

TEST_CASE("classify") {
  CHECK(classify(sized({5}), 5, 3) == CollectionKind::Feasible);
  CHECK(classify(sized({3, 3}), 5, 3) == CollectionKind::Critical);
  CHECK(classify(sized({6}), 5, 3) == CollectionKind::Plain);
  CHECK(classify(sized({3}), 5, 3) == CollectionKind::Plain);
  CHECK(classify(sized({4, 3}), 5, 3) == CollectionKind::Plain);
  CHECK(classify(sized({2, 2, 2}), 5, 3) == CollectionKind::Plain);
  CHECK(to_string(CollectionKind::Critical) == "critical");
}

TEST_CASE("validator rejects malformed collections") {
  const Forest path = Forest::from_tree(path_tree(5));
  ComponentCollection c{2, 0, {{3, 4}}, 2};
  CHECK(validate_collection(path, c).empty());
  c.components = {{3}};
  c.union_size = 1;
  CHECK_FALSE(validate_collection(path, c).empty());
  c = {2, 0, {{0, 1}}, 2};
  CHECK_FALSE(validate_collection(path, c).empty());
  c = {2, 0, {{3, 4}}, 3};
  CHECK_FALSE(validate_collection(path, c).empty());
  c = {7, 0, {}, 0};
  CHECK_FALSE(validate_collection(path, c).empty());
}

TEST_CASE("feasible or critical: examples") {
  // Small forest: all u-components.
  const Forest small = Forest::from_tree(path_tree(6));
  const ClassifiedCollection a = find_feasible_or_critical(small, 0, 5, 3);
  CHECK(a.kind == CollectionKind::Feasible);

  const Forest star = Forest::from_tree(star_tree(8));
  for (int y = 2; y < 5; ++y) {
    const ClassifiedCollection b = find_feasible_or_critical(star, 0, 5, y);
    CHECK(b.kind == CollectionKind::Feasible);
    CHECK(b.collection.union_size + 1 == 5);
  }

  // Spider: two legs of length x - 1 hanging off a centre, u at a leg end.
  const int x = 6;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < 2 * x - 1; ++i) e.emplace_back(i == x ? 0 : i - 1, i);
  const Forest spider = Forest::from_edges(2 * x - 1, e);
  for (int y = 2; y < x; ++y) {
    const ClassifiedCollection c = find_feasible_or_critical(spider, x - 1, x, y);
    CHECK(validate_collection(spider, c.collection).empty());
    CHECK(classify(c.collection, x, y) == c.kind);
    CHECK(c.kind != CollectionKind::Plain);
  }

  CHECK_THROWS_AS(find_feasible_or_critical(star, 0, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(find_feasible_or_critical(star, 0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(find_feasible_or_critical(star, 0, 8, 2), std::invalid_argument);
}

TEST_CASE("finders on random forests") {
  std::mt19937_64 rng(101);
  long critical = 0, feasible = 0;
  for (int iter = 0; iter < 12000; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 59);
    const Forest f = Forest::from_edges(n, random_forest_edges(n, iter % 3 == 0 ? 0.15 : 0.0, rng));
    const Vertex u = static_cast<Vertex>(rng() % n);
    INFO("iteration " << iter);

    const int bx = 1 + static_cast<int>(rng() % (n - 1));
    const ComponentCollection b = find_bounded_components(f, u, bx);
    REQUIRE(validate_collection(f, b) == "");
    CHECK(b.union_size >= bx);
    CHECK(b.union_size <= 2 * bx - 1);

    if (n < 4) continue;
    const int x = 3 + static_cast<int>(rng() % (n - 3));
    const int y = 2 + static_cast<int>(rng() % (x - 2));
    const ClassifiedCollection c = find_feasible_or_critical(f, u, x, y);
    REQUIRE(validate_collection(f, c.collection) == "");
    REQUIRE(classify(c.collection, x, y) == c.kind);
    REQUIRE(c.kind != CollectionKind::Plain);
    if (c.kind == CollectionKind::Critical) {
      ++critical;
      for (const auto& comp : c.collection.components) CHECK(static_cast<int>(comp.size()) >= y);
      if (x <= 2 * y - 1) CHECK(c.collection.components.size() == 2);
    } else {
      ++feasible;
    }
  }
  CHECK(critical > 0);
  CHECK(feasible > 0);
}

TEST_CASE("internal finder for x <= y is always feasible") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 40);
    const Forest f = Forest::from_edges(n, random_forest_edges(n, 0.1, rng));
    const int x = 2 + static_cast<int>(rng() % (n - 2));
    const int y = x + static_cast<int>(rng() % 4);
    const ClassifiedCollection c = detail::feasible_or_critical(f, static_cast<Vertex>(rng() % n), x, y);
    CHECK(c.kind == CollectionKind::Feasible);
    CHECK(validate_collection(f, c.collection).empty());
  }
}
