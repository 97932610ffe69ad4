#include "posetpoly/family.hpp"

#include <algorithm>

#include "posetpoly/errors.hpp"

namespace posetpoly {

DecompositionTree make_leaf(const Poset& p) {
  DecompositionTree t;
  t.kind = DecompositionTree::Kind::Leaf;
  t.poset = p;
  t.elements = p.all();
  return t;
}

namespace {

void shift_by(DecompositionTree& t, int offset) {
  t.elements <<= offset;
  for (auto& c : t.children) shift_by(c, offset);
}

}  // namespace

DecompositionTree make_node(DecompositionTree::Kind kind,
                            std::vector<DecompositionTree> children) {
  if (kind == DecompositionTree::Kind::Leaf || children.empty()) {
    throw Error("make_node needs an internal kind and at least one child");
  }
  if (children.size() == 1) return std::move(children.front());
  DecompositionTree t;
  t.kind = kind;
  int offset = 0;
  for (auto& c : children) {
    shift_by(c, offset);
    t.elements |= c.elements;
    offset += c.size();
  }
  t.children = std::move(children);
  t.poset = fold(t);
  return t;
}

namespace {

void shift_elements(DecompositionTree& t, const std::vector<int>& map_to_parent) {
  ElementSet mapped = 0;
  for (int i : elements_of(t.elements)) mapped |= singleton(map_to_parent[i]);
  t.elements = mapped;
  for (auto& c : t.children) shift_elements(c, map_to_parent);
}

std::optional<DecompositionTree> decompose(const Poset& p, const FamilyOptions& opt) {
  const bool x_free = is_x_free(p);
  if (x_free && (opt.split_leaves_above < 0 || p.size() <= opt.split_leaves_above)) {
    return make_leaf(p);
  }

  std::vector<ElementSet> parts;
  DecompositionTree::Kind kind = DecompositionTree::Kind::DisjointUnion;
  parts = comparability_components(p);
  if (parts.size() < 2) {
    kind = DecompositionTree::Kind::OrdinalSum;
    parts = ordinal_blocks(p);
  }
  if (parts.size() < 2) {
    if (x_free) return make_leaf(p);
    return std::nullopt;
  }

  DecompositionTree node;
  node.kind = kind;
  node.poset = p;
  node.elements = p.all();
  for (ElementSet part : parts) {
    auto child = decompose(induced_subposet(p, part), opt);
    if (!child) return std::nullopt;
    shift_elements(*child, elements_of(part));
    node.children.push_back(std::move(*child));
  }
  return node;
}

}  // namespace

std::optional<DecompositionTree> in_family(const Poset& p, const FamilyOptions& options) {
  return decompose(p, options);
}

Poset fold(const DecompositionTree& tree) {
  if (tree.kind == DecompositionTree::Kind::Leaf) return tree.poset;
  Poset acc = fold(tree.children.front());
  for (std::size_t k = 1; k < tree.children.size(); ++k) {
    Poset next = fold(tree.children[k]);
    acc = tree.kind == DecompositionTree::Kind::OrdinalSum ? ordinal_sum(acc, next)
                                                           : disjoint_union(acc, next);
  }
  return acc;
}

std::vector<int> fold_order(const DecompositionTree& tree) {
  if (tree.kind == DecompositionTree::Kind::Leaf) return elements_of(tree.elements);
  std::vector<int> out;
  for (const auto& c : tree.children) {
    auto sub = fold_order(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

DecompositionTree opposite(const DecompositionTree& tree) {
  if (tree.kind == DecompositionTree::Kind::Leaf) return make_leaf(opposite(tree.poset));
  std::vector<DecompositionTree> children;
  for (const auto& c : tree.children) children.push_back(opposite(c));
  if (tree.kind == DecompositionTree::Kind::OrdinalSum) {
    std::reverse(children.begin(), children.end());
  }
  return make_node(tree.kind, std::move(children));
}

namespace {

void flatten_into(const DecompositionTree& t, DecompositionTree::Kind kind,
                  std::vector<DecompositionTree>& out, Association assoc);

DecompositionTree rebuild(const DecompositionTree& t, Association assoc) {
  if (t.kind == DecompositionTree::Kind::Leaf) return make_leaf(t.poset);
  std::vector<DecompositionTree> flat;
  for (const auto& c : t.children) flatten_into(c, t.kind, flat, assoc);
  if (assoc == Association::Flat) return make_node(t.kind, std::move(flat));
  if (assoc == Association::Left) {
    DecompositionTree acc = std::move(flat.front());
    for (std::size_t k = 1; k < flat.size(); ++k) {
      acc = make_node(t.kind, {std::move(acc), std::move(flat[k])});
    }
    return acc;
  }
  DecompositionTree acc = std::move(flat.back());
  for (std::size_t k = flat.size() - 1; k-- > 0;) {
    acc = make_node(t.kind, {std::move(flat[k]), std::move(acc)});
  }
  return acc;
}

void flatten_into(const DecompositionTree& t, DecompositionTree::Kind kind,
                  std::vector<DecompositionTree>& out, Association assoc) {
  if (t.kind == kind) {
    for (const auto& c : t.children) flatten_into(c, kind, out, assoc);
  } else {
    out.push_back(rebuild(t, assoc));
  }
}

}  // namespace

DecompositionTree reassociate(const DecompositionTree& tree, Association assoc) {
  return rebuild(tree, assoc);
}

int max_leaf_size(const DecompositionTree& tree) {
  if (tree.kind == DecompositionTree::Kind::Leaf) return tree.size();
  int m = 0;
  for (const auto& c : tree.children) m = std::max(m, max_leaf_size(c));
  return m;
}

bool leaves_x_free(const DecompositionTree& tree) {
  if (tree.kind == DecompositionTree::Kind::Leaf) return is_x_free(tree.poset);
  return std::all_of(tree.children.begin(), tree.children.end(), leaves_x_free);
}

const char* kind_name(DecompositionTree::Kind kind) {
  switch (kind) {
    case DecompositionTree::Kind::Leaf:
      return "Leaf";
    case DecompositionTree::Kind::OrdinalSum:
      return "OrdinalSum";
    case DecompositionTree::Kind::DisjointUnion:
      return "DisjointUnion";
  }
  return "?";
}

std::string describe(const DecompositionTree& tree) {
  if (tree.kind == DecompositionTree::Kind::Leaf) {
    return "Leaf(" + std::to_string(tree.size()) + ")";
  }
  std::string out = kind_name(tree.kind);
  out += "[";
  for (std::size_t k = 0; k < tree.children.size(); ++k) {
    if (k) out += ", ";
    out += describe(tree.children[k]);
  }
  return out + "]";
}

}  // namespace posetpoly
