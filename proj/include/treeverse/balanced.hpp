#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treeverse/tree.hpp"

namespace treeverse {

/// Perfect binary tree B(k): 2^(k+1) - 1 vertices, all leaves on level k.
RootedTree perfect_binary(int k);

/// The ternary-size typed family: type-1 vertices get children typed (1, 2),
/// type-2 vertices get (1, 2, 1, 2), down to level k. Has 3^k vertices.
struct TypedTree {
  RootedTree tree;
  std::vector<int> type_of;
  int k = 0;
};

TypedTree build_typed_tree(int k);

/// Number of proper descendants of a level-`level` vertex of type `type` in
/// the level-k typed tree: 3^(k-level) - 1 for type 1, twice that for type 2.
std::int64_t descendants_formula(int level, int type, int k);

/// Positive rational, compared exactly.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  /// "2", "3/2". Throws std::invalid_argument for non-positive or malformed input.
  static Rational parse(const std::string& text);
  std::string str() const;
};

enum class Axiom { T1, T2, T3, T4 };

std::string to_string(Axiom a);

struct BalanceViolation {
  Axiom axiom;
  std::vector<Vertex> witness;
};

struct BalanceReport {
  Rational K;
  int s = 0;
  std::vector<BalanceViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the four (K, s)-balance axioms; violations are reported, never thrown.
BalanceReport validate_balance(const RootedTree& tree, Rational K, int s);

}  // namespace treeverse
