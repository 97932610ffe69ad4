#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "posetpoly/face_engine.hpp"
#include "posetpoly/family.hpp"
#include "posetpoly/fpoly.hpp"
#include "posetpoly/polytopes.hpp"

namespace posetpoly {

// Faces of a polytope split four ways by whether they contain the bottom
// vertex (the origin) and the top vertex (the all-ones vector). Chain
// polytopes only track the bottom; their top bit is always 0.
class SplitF {
 public:
  static constexpr std::size_t key(bool bottom, bool top) {
    return (bottom ? 2U : 0U) | (top ? 1U : 0U);
  }

  FPoly& at(bool bottom, bool top) { return parts_[key(bottom, top)]; }
  const FPoly& at(bool bottom, bool top) const { return parts_[key(bottom, top)]; }

  FPoly total() const;
  FPoly through_bottom() const { return at(true, false) + at(true, true); }
  FPoly avoiding_bottom() const { return at(false, false) + at(false, true); }
  FPoly through_top() const { return at(false, true) + at(true, true); }
  FPoly avoiding_top() const { return at(false, false) + at(true, false); }

  // Exchanges the roles of bottom and top. x -> 1 - x takes O(B) to O(B^op)
  // and swaps e_{} with e_B.
  SplitF swapped() const;

  bool operator==(const SplitF&) const = default;

 private:
  std::array<FPoly, 4> parts_;
};

struct PolytopeSplits {
  SplitF order;
  SplitF chain;
  bool operator==(const PolytopeSplits&) const = default;
};

// Splits from an enumerated face lattice.
SplitF brute_split(const PosetPolytope& poly, const FaceSet& faces);
SplitF brute_split(const Poset& p, PolytopeKind kind);
PolytopeSplits brute_splits(const Poset& p);

// Product polytope: a nonempty face F x G contains a distinguished vertex iff
// both factors do.
SplitF combine_disjoint(const SplitF& a, const SplitF& b);
// O(A < B) through O(A) v O(B^op): bottom of the sum sits at the top of
// O(B^op), top of the sum at the top of O(A).
//   R[b][t] = (1/x) A[1][t] B[b][1] + A[0][t] B[b][0]
SplitF combine_ordinal_order(const SplitF& a, const SplitF& b);
// C(A < B) = C(A) v C(B), bottom only.
SplitF combine_ordinal_chain(const SplitF& a, const SplitF& b);

// Bottom-up evaluation over a decomposition tree. Leaves of at most
// max_brute elements are enumerated; larger leaves are split further when
// they decompose, otherwise LeafTooLargeError. With workers > 1 the children
// of a node are evaluated concurrently; the combination order is fixed.
PolytopeSplits recursive_split(const DecompositionTree& tree, int max_brute = 8,
                               unsigned workers = 1);

enum class Method { Brute, Recursive };
const char* method_name(Method m);

// Splits of P by the chosen method. Recursive throws NotInFamilyError when P
// has no decomposition.
PolytopeSplits compute_splits(const Poset& p, Method method, int max_brute = 8);
FPoly f_vector(const Poset& p, PolytopeKind kind, Method method, int max_brute = 8);

struct Quad {
  FPoly alpha;  // (1/x) f0 of C(P)
  FPoly beta;   // (1/x) f0 of O(P)
  FPoly gamma;  // f1 of O(P)
  FPoly delta;  // f1 of C(P)
  bool operator==(const Quad&) const = default;
};

Quad quad_from_splits(const PolytopeSplits& s);
// Quad of P^op read off the splits of P.
Quad opposite_quad(const PolytopeSplits& s);
Quad quad(const Poset& p, Method method, int max_brute = 8);

// f0 of C(P) at the origin equals x (1 + x)^#P.
bool check_simplex_vertex_figure(const Poset& p);

// f0 <= x f1 at the given vertex, or at every vertex.
bool check_origin_estimate(const FaceSet& fs, std::size_t vertex);
bool check_origin_estimate_all(const FaceSet& fs);

struct PyrJoinCheck {
  FPoly join;     // f of P * Q
  FPoly pyramid;  // f of pyr(P v Q)
  FPoly g_p;      // x f1 - f0 for P
  FPoly g_q;
  bool holds = false;
};
PyrJoinCheck check_pyr_vs_join(const OriginSplit& p, const OriginSplit& q);

// Both parts of the alpha/beta/gamma/delta lemma. Subtractions are checked;
// a would-be negative difference makes the check fail.
struct LemmaCheck {
  bool part1 = false;  // x (beta - alpha) <= delta - gamma
  bool part2 = false;  // alpha <= beta <= gamma <= delta
  bool holds() const { return part1 && part2; }
};
LemmaCheck check_lemma_abcd(const Quad& q);

// Inequalities (2) and (3) at one binary ordinal-sum step A < B. Their sum is
// f_O(A<B) <= f_C(A<B).
struct OrdinalStep {
  int size_a = 0;
  int size_b = 0;
  bool ineq2 = false;  // x alpha_A (beta_Bop - alpha_B) <= gamma_A (delta_B - gamma_Bop)
  bool ineq3 = false;  // x (beta_A - alpha_A) beta_Bop <= (delta_A - gamma_A) delta_B
  FPoly lhs2, rhs2, lhs3, rhs3;
};

struct TheoremReport {
  Poset poset;
  FPoly f_order;
  FPoly f_chain;
  bool leq = false;
  std::vector<std::int64_t> slack;  // f_C - f_O per coefficient
  Method method = Method::Brute;
  bool x_free = false;
  std::vector<OrdinalStep> steps;
};

// f_O <= f_C through the recursion over the tree, recording each ordinal
// step's inequality chain.
TheoremReport verify_main_theorem(const DecompositionTree& tree, int max_brute = 8);
TheoremReport verify_main_theorem_brute(const Poset& p);

}  // namespace posetpoly
