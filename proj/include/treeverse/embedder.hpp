#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "treeverse/graph_gen.hpp"
#include "treeverse/tree.hpp"

namespace treeverse {

/// A (2,1)-balanced tree together with its radius-2 generated graph.
struct Host {
  RootedTree tree;
  UndirectedGraph graph;
};

/// Validates (2,1)-balance and generates G^2. Throws std::invalid_argument
/// when the tree is not (2,1)-balanced.
std::shared_ptr<const Host> make_host(RootedTree tree);

struct EmbeddingFlags {
  bool admissible_complement = false;
  bool phi1_ok = false;
  bool phi2_applicable = false;
  bool phi2_ok = false;
};

struct Embedding {
  /// Guest vertex -> host vertex.
  std::vector<Vertex> map;
  std::shared_ptr<const Host> host;
  EmbeddingFlags flags;
};

/// Call counters per proof case, for coverage checks and the CLI.
struct EmbedStats {
  std::map<std::string, long> cases;
  long calls = 0;
  int max_depth = 0;
};

/// True when the host's root has exactly two children v1, v2 and
/// n - 2 >= guest_size >= nu(v2) >= 2; then x2 must land on level <= 2.
bool phi2_applies(const RootedTree& host, int guest_size);

/// Embeds the guest into G^2 of the host so that the unused host vertices
/// form a preorder prefix, x1 lands on the minimum level of the image, and,
/// when phi2_applies, x2 lands on level <= 2.
///
/// The construction is the inductive one over (host level, root degree):
/// small hosts are complete graphs; otherwise the guest is split by a
/// feasible or critical component collection and the pieces go into merged
/// subtrees of the last two or three root children. Throws
/// std::invalid_argument if the guest is larger than the host or x1/x2 are
/// out of range, and std::logic_error if an internal case precondition
/// fails (a bug, never repaired silently).
Embedding embed(std::shared_ptr<const Host> host, const RootedTree& guest, Vertex x1, Vertex x2,
                EmbedStats* stats = nullptr);

/// Convenience overload that builds (and validates) the host first.
Embedding embed(const RootedTree& host_tree, const RootedTree& guest, Vertex x1, Vertex x2,
                EmbedStats* stats = nullptr);

struct Verification {
  bool ok = false;
  EmbeddingFlags flags;
  std::vector<std::string> diagnostics;
};

/// Checks injectivity, edge preservation, prefix complement, the x1
/// minimum-level property and, if phi2_expected, level(x2) <= 2.
Verification verify_embedding(std::span<const Vertex> map, const RootedTree& guest,
                              const UndirectedGraph& host_graph, const RootedTree& host_tree,
                              Vertex x1, Vertex x2, bool phi2_expected);

Verification verify_embedding(const Embedding& e, const RootedTree& guest, Vertex x1, Vertex x2,
                              bool phi2_expected);

}  // namespace treeverse
