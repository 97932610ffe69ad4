#pragma once

#include <cstddef>
#include <optional>

#include "posetpoly/face_engine.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly {

enum class PolytopeKind { Order, Chain };

const char* kind_name(PolytopeKind kind);

// Order or chain polytope in R^P, coordinate i for element i. Vertices are
// the 0/1 indicator vectors of filters (Order) or antichains (Chain), in
// ascending bitset order.
struct PosetPolytope {
  Poset poset;
  PolytopeKind kind = PolytopeKind::Order;
  VRep vrep;
  HRep hrep;
  std::vector<ElementSet> vertex_sets;  // the filter / antichain of each vertex
  std::size_t origin_index = 0;         // e_{} for both kinds
  std::optional<std::size_t> top_index; // e_P, order polytopes only
};

// Facets: -x_i <= 0 for minimal i, x_j <= 1 for maximal j, x_i - x_j <= 0 for
// each cover i < j.
PosetPolytope order_polytope(const Poset& p);

// Facets: -x_i <= 0 for every i, sum over C of x_i <= 1 for each maximal
// chain C.
PosetPolytope chain_polytope(const Poset& p);

PosetPolytope make_polytope(const Poset& p, PolytopeKind kind);

int facet_count_order(const Poset& p);
int facet_count_chain(const Poset& p);

// x -> 1 - x maps the vertices of O(P) bijectively onto those of O(P^op).
bool opposite_iso_check(const Poset& p);

FaceSet polytope_faces(const PosetPolytope& poly);

Point indicator(ElementSet s, int n);

}  // namespace posetpoly
