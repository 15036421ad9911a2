#pragma once

#include <string>
#include <vector>

#include "treeverse/tree.hpp"

namespace treeverse {

/// A vertex w together with some of the components of forest - w, all of
/// them avoiding a designated vertex u.
struct ComponentCollection {
  Vertex w = -1;
  Vertex u = -1;
  /// Each component sorted; components listed in the order they were chosen.
  std::vector<std::vector<Vertex>> components;
  int union_size = 0;
};

enum class CollectionKind { Feasible, Critical, Plain };

std::string to_string(CollectionKind kind);

/// (x, y)-feasible: x <= |C u {w}| <= x + y - 2.
/// (x, y)-critical: x + y - 2 <= |C| <= 2x - 3, at least two components, and
/// every proper sub-union has at most x - 2 vertices.
/// Feasible is tested first.
CollectionKind classify(const ComponentCollection& coll, int x, int y);

/// Structural check independent of the finders: w valid, every component is
/// exactly a component of forest - w, components disjoint, u not covered and
/// union_size consistent. Returns an empty string when valid, else a reason.
std::string validate_collection(const Forest& forest, const ComponentCollection& coll);

/// Finds w and w-components avoiding u whose union has between x and 2x - 1
/// vertices, by walking from u into any component that is still too large.
/// Throws std::invalid_argument when x < 1 or the forest has fewer than
/// x + 1 vertices.
ComponentCollection find_bounded_components(const Forest& forest, Vertex u, int x);

struct ClassifiedCollection {
  ComponentCollection collection;
  CollectionKind kind = CollectionKind::Plain;
};

/// Returns a collection avoiding u that is (x, y)-feasible or (x, y)-critical.
/// Requires x > y >= 2 and at least x + 1 vertices (std::invalid_argument).
ClassifiedCollection find_feasible_or_critical(const Forest& forest, Vertex u, int x, int y);

namespace detail {
/// Same search without the public argument guards: any x, y >= 2 and any
/// forest with at least x vertices. For x <= y the result is always feasible.
ClassifiedCollection feasible_or_critical(const Forest& forest, Vertex u, int x, int y);
}  // namespace detail

}  // namespace treeverse
