#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "treeverse/tree.hpp"

namespace treeverse {

inline constexpr int kTernaryGuard = 9;
inline constexpr int kBinaryGuard = 11;
inline constexpr int kGapGuard = 8;

/// Absolute tolerance on the bound side of every slack check; counts are exact.
inline constexpr double kBoundTolerance = 1e-6;

struct BoundRow {
  std::string family;
  int k = 0;
  int n = 0;
  std::uint64_t edges = 0;
  /// Arc counts per generation rule (an arc with several tags counts once per tag).
  std::uint64_t g1 = 0, g2 = 0, g3 = 0, g4 = 0;
  std::string formula;
  double bound = 0;
  double slack = 0;

  bool operator==(const BoundRow&) const = default;
};

struct BoundReport {
  std::vector<BoundRow> rows;

  /// Every row has slack >= -kBoundTolerance.
  bool ok() const;
  bool operator==(const BoundReport&) const = default;
};

/// G^2 of T_k for k = 1..k_max (<= 9) against 14/3 n log3 n + 200 n. With
/// prefix_sweep, up to `per_level` admissible prefix sizes spread over
/// (3^(k-1), 3^k] per level, always including both ends.
BoundReport bound_table_ternary(int k_max, bool prefix_sweep, int per_level = 20);

/// G^0 of B(k) for k = 0..k_max (<= 11): full trees against 7/2 kn + n and,
/// with prefix_sweep, prefixes (2^k - 1, 2^(k+1) - 1) against 7/2 kn + 4n.
BoundReport bound_table_binary(int k_max, bool prefix_sweep, int per_level = 20);

std::string to_csv(const BoundReport& report);
std::string to_json(const BoundReport& report, int indent = 2);
std::string to_table(const BoundReport& report);
BoundReport parse_bound_csv(const std::string& text);
BoundReport parse_bound_json(const std::string& text);

struct CounterexampleReport {
  /// Pairs (a, b), a < b, missing from the legacy G(3) on the last six of the
  /// first eleven preorder vertices.
  std::vector<std::pair<Vertex, Vertex>> legacy_missing;
  /// Per level l = 2..5: whether the legacy G(l) restricted to its first six
  /// vertices is complete.
  std::vector<std::pair<int, bool>> six_vertex_complete;
  /// Same slice as legacy_missing but under the corrected rules (r = 0 on B(3)).
  std::vector<std::pair<Vertex, Vertex>> corrected_missing;

  static std::vector<std::pair<Vertex, Vertex>> expected_missing() { return {{5, 10}, {6, 10}, {7, 10}}; }
  /// The legacy slice misses exactly the expected edges and every 6-vertex
  /// admissible graph is complete. The corrected slice is informational.
  bool ok() const;
};

CounterexampleReport reproduce_counterexample();

struct GapReport {
  int k = 0;
  int n = 0;
  std::uint64_t edges_r2 = 0;
  std::uint64_t edges_r0 = 0;
  std::uint64_t gap = 0;
  std::uint64_t limit = 0;

  bool ok() const { return gap <= limit; }
};

/// Edges that radius 2 adds over radius 0 on T_k, against 32 n. k <= 8.
GapReport edge_gap_summary(int k);

}  // namespace treeverse
