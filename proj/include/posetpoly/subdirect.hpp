#pragma once

#include "posetpoly/face_engine.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly {

// P v Q = conv(P x {0} u {0} x Q) for polytopes having the origin as a
// vertex. The vertex list is (0,0) first, then (v,0) for the nonzero
// vertices of P in their order, then (0,w) for those of Q. No hull
// computation: these points are exactly the vertices.
// Throws OriginNotVertexError.
VRep subdirect_vertices(const VRep& p, const VRep& q);

constexpr int subdirect_dim(int dim_p, int dim_q) { return dim_p + dim_q; }

// Face counts of P v Q from the origin splits of P and Q. Faces through the
// origin are F v G with dim F + dim G; the others are projected joins F * G
// with dim F + dim G + 1, where the empty face takes part with dim -1.
OriginSplit subdirect_face_counts(const OriginSplit& p, const OriginSplit& q);

// C(A < B) has exactly the vertices of C(A) v C(B), coordinates A then B.
bool ordinal_chain_identity(const Poset& a, const Poset& b);

// x -> (x_A, 1 - x_B) maps the vertices of O(A < B) onto those of
// O(A) v O(B^op).
bool ordinal_order_identity(const Poset& a, const Poset& b);

}  // namespace posetpoly
