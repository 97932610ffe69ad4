#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetpoly/poset.hpp"

namespace posetpoly {

// Witness that a poset lies in the family generated from X-free posets by
// ordinal sums and disjoint unions. Internal nodes combine their children
// left to right.
struct DecompositionTree {
  enum class Kind { Leaf, OrdinalSum, DisjointUnion };

  Kind kind = Kind::Leaf;
  Poset poset;            // the poset this subtree evaluates to
  // Indices in the poset the tree was built from: the input poset for
  // in_family trees, the folded layout for trees assembled with make_node.
  ElementSet elements{};
  std::vector<DecompositionTree> children;

  int size() const { return poset.size(); }
};

struct FamilyOptions {
  // X-free posets larger than this are still split by components and
  // ordinal cuts when possible. Negative means never split X-free posets.
  int split_leaves_above = -1;
};

// Canonical decomposition: X-free posets become leaves, otherwise the poset is
// split by comparability components or by its finest ordinal decomposition.
// Returns nullopt (NotInFamily) when neither split exists.
std::optional<DecompositionTree> in_family(const Poset& p,
                                           const FamilyOptions& options = {});

DecompositionTree make_leaf(const Poset& p);
DecompositionTree make_node(DecompositionTree::Kind kind,
                            std::vector<DecompositionTree> children);

// Folds the tree with ordinal_sum / disjoint_union.
Poset fold(const DecompositionTree& tree);

// Original element indices in the order fold() lays them out.
std::vector<int> fold_order(const DecompositionTree& tree);

// Tree for the opposite poset: children of ordinal sums are reversed and
// leaves replaced by their opposites.
DecompositionTree opposite(const DecompositionTree& tree);

// Flattens nested nodes of the same kind, then rebuilds every node as a
// binary tree nested to the left or to the right.
enum class Association { Flat, Left, Right };
DecompositionTree reassociate(const DecompositionTree& tree, Association assoc);

int max_leaf_size(const DecompositionTree& tree);
bool leaves_x_free(const DecompositionTree& tree);

// Compact text form, e.g. "OrdinalSum[Leaf(2), Leaf(1), Leaf(2)]".
std::string describe(const DecompositionTree& tree);

const char* kind_name(DecompositionTree::Kind kind);

}  // namespace posetpoly
