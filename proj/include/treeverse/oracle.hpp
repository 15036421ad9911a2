#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treeverse/graph_gen.hpp"
#include "treeverse/tree.hpp"

namespace treeverse {

inline constexpr int kFreeTreeGuard = 16;
inline constexpr int kUniversalGuard = 12;
inline constexpr int kIntervalGuard = 11;
inline constexpr int kPruferGuard = 9;

struct OracleOptions {
  /// Worker threads; 0 reads TREEVERSE_JOBS, then falls back to the core count.
  int jobs = 0;
  /// Lifts the size guards.
  bool unsafe_large = false;
};

int resolve_jobs(int requested);

/// Smallest i in [0, count) with ok(i) false, or -1. Runs on `jobs` threads;
/// the answer does not depend on scheduling.
std::ptrdiff_t first_failure(std::size_t count, int jobs, const std::function<bool(std::size_t)>& ok);

/// All rooted unordered trees on n vertices as canonical level sequences
/// (root at level 0), in the generation order of Beyer and Hedetniemi.
std::vector<std::vector<int>> rooted_level_sequences(int n);

/// Parenthesis string of the tree rooted at `root`, children sorted; equal
/// strings mean isomorphic rooted trees.
std::string rooted_canonical_form(const RootedTree& tree, Vertex root);

/// Rooted at the center (the smaller form over both centers when bicentral).
std::string free_canonical_form(const RootedTree& tree);

/// One tree per isomorphism class, rooted at its canonical center with
/// children in canonical order, sorted by canonical form. 1 <= n <= 16
/// unless unsafe_large.
std::vector<RootedTree> enumerate_free_trees(int n, bool unsafe_large = false);

/// Size of the automorphism group of the underlying free tree.
std::uint64_t automorphism_count(const RootedTree& tree);

/// Smallest vertex of each automorphism orbit of the free tree, ascending.
std::vector<Vertex> orbit_representatives(const RootedTree& tree);

/// Labeled tree on {0..n-1} from a Prufer sequence of length n - 2.
std::vector<std::pair<Vertex, Vertex>> prufer_decode(std::span<const int> sequence, int n);

/// Number of isomorphism classes among all n^(n-2) labeled trees.
/// 1 <= n <= 9 unless unsafe_large.
std::size_t prufer_class_count(int n, bool unsafe_large = false);

/// Injective edge-preserving map guest -> host by backtracking, or nothing
/// when none exists. No admissibility constraint.
std::optional<std::vector<Vertex>> brute_embed(const RootedTree& guest, const UndirectedGraph& host);

struct UniversalityResult {
  bool universal = false;
  std::size_t trees_checked = 0;
  /// First failing tree in canonical order.
  std::optional<RootedTree> witness;
  /// Interval start and size of the failure (interval check only).
  int start = -1;
  int size = -1;
};

/// Every |G|-vertex tree embeds in G. |G| <= 12 unless unsafe_large.
UniversalityResult is_universal(const UndirectedGraph& graph, const OracleOptions& options = {});

/// Every block of m consecutive vertices of `ordering` induces a graph
/// containing all m-vertex trees. |G| <= 11 unless unsafe_large.
UniversalityResult is_interval_universal(const UndirectedGraph& graph, std::span<const Vertex> ordering,
                                         const OracleOptions& options = {});

/// A vertex adjacent to all others, if any.
std::optional<Vertex> degree_witness(const UndirectedGraph& graph);

}  // namespace treeverse
