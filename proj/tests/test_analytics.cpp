#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "json.hpp"
#include "treeverse/analytics.hpp"
#include "treeverse/balanced.hpp"
#include "treeverse/graph_gen.hpp"

using namespace treeverse;

namespace {

const BoundRow& row_for(const BoundReport& r, int k, int n) {
  for (const auto& row : r.rows)
    if (row.k == k && row.n == n) return row;
  throw std::runtime_error("row not found");
}

}  // namespace

TEST_CASE("ternary table examples") {
  const BoundReport r = bound_table_ternary(7, false);
  REQUIRE(r.rows.size() == 7);
  CHECK(row_for(r, 1, 3).edges == 3);
  CHECK(row_for(r, 1, 3).bound == doctest::Approx(14.0 + 600.0));
  CHECK(row_for(r, 2, 9).edges == 36);
  CHECK(row_for(r, 2, 9).bound == doctest::Approx(14.0 / 3 * 9 * 2 + 1800));
  CHECK(row_for(r, 3, 27).edges == 339);
  CHECK(row_for(r, 4, 81).edges == 1668);
  CHECK(row_for(r, 7, 2187).slack >= 0);
  CHECK(r.ok());
  for (const auto& row : r.rows) CHECK(row.formula == "14/3*n*log3(n)+200*n");
}

TEST_CASE("ternary prefix sweep") {
  const BoundReport r = bound_table_ternary(5, true);
  CHECK(r.ok());
  for (int k = 1; k <= 5; ++k) {
    const int n = static_cast<int>(std::pow(3, k));
    int rows = 0;
    for (const auto& row : r.rows)
      if (row.k == k) {
        ++rows;
        CHECK(row.n > n / 3);
        CHECK(row.n <= n);
      }
    CHECK(rows == std::min(20, n - n / 3));
    CHECK(row_for(r, k, n).edges == underlying(generate(build_typed_tree(k).tree, 2)).edge_count());
  }
  // Each prefix row counts the admissible prefix directly.
  const RootedTree t4 = build_typed_tree(4).tree;
  for (const auto& row : r.rows)
    if (row.k == 4) CHECK(row.edges == underlying(generate(t4.prefix(row.n), 2)).edge_count());
}

TEST_CASE("binary table") {
  const BoundReport r = bound_table_binary(10, true);
  CHECK(r.ok());
  CHECK(row_for(r, 0, 1).edges == 0);
  CHECK(row_for(r, 2, 7).edges == 21);
  CHECK(row_for(r, 2, 7).bound == doctest::Approx(56));
  CHECK(row_for(r, 3, 15).edges == 83);
  CHECK(row_for(r, 4, 31).edges == 261);
  CHECK(row_for(r, 10, 2047).slack >= 0);
  const RootedTree b5 = perfect_binary(5);
  for (const auto& row : r.rows) {
    if (row.k != 5) continue;
    CHECK(row.edges == underlying(generate(b5.prefix(row.n), 0)).edge_count());
    CHECK(row.formula == (row.n == 63 ? "7/2*k*n+n" : "7/2*k*n+4*n"));
    CHECK(row.g4 == 0);
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(bound_table_ternary(10, false), std::invalid_argument);
  CHECK_THROWS_AS(bound_table_ternary(0, false), std::invalid_argument);
  CHECK_THROWS_AS(bound_table_binary(12, false), std::invalid_argument);
  CHECK_THROWS_AS(edge_gap_summary(9), std::invalid_argument);
}

TEST_CASE("CSV and JSON round trips") {
  const BoundReport r = bound_table_ternary(4, true);
  CHECK(parse_bound_csv(to_csv(r)) == r);
  CHECK(parse_bound_json(to_json(r)) == r);
  CHECK(to_csv(r).rfind("family,k,n,edges,g1,g2,g3,g4,formula,bound,slack\n", 0) == 0);
  CHECK(nlohmann::json::parse(to_json(r))["ok"] == true);
  CHECK(to_table(r).find("ternary-typed") != std::string::npos);
  CHECK_THROWS_AS(parse_bound_csv("nope\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bound_csv("family,k,n,edges,g1,g2,g3,g4,formula,bound,slack\na,1\n"), std::invalid_argument);
}

TEST_CASE("tables are deterministic") {
  CHECK(to_csv(bound_table_binary(8, true)) == to_csv(bound_table_binary(8, true)));
  CHECK(to_json(bound_table_ternary(5, true)) == to_json(bound_table_ternary(5, true)));
}

TEST_CASE("counterexample") {
  const CounterexampleReport r = reproduce_counterexample();
  CHECK(r.legacy_missing == CounterexampleReport::expected_missing());
  REQUIRE(r.six_vertex_complete.size() == 4);
  for (auto [l, complete] : r.six_vertex_complete) {
    INFO("l = " << l);
    CHECK(complete);
  }
  CHECK(r.ok());
  CHECK(r.corrected_missing.empty());
}

TEST_CASE("radius gap") {
  const std::vector<std::uint64_t> gaps = {0, 0, 124, 668, 2472, 8056, 24980, 75924};
  for (int k = 1; k <= 8; ++k) {
    const GapReport g = edge_gap_summary(k);
    INFO("k = " << k);
    CHECK(g.gap == gaps[k - 1]);
    CHECK(g.edges_r2 - g.edges_r0 == g.gap);
    CHECK(g.limit == 32ull * g.n);
    CHECK(g.ok());
  }
}
