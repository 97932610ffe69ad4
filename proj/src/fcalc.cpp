#include "posetpoly/fcalc.hpp"

#include <future>

#include "posetpoly/errors.hpp"

namespace posetpoly {

FPoly SplitF::total() const {
  return parts_[0] + parts_[1] + parts_[2] + parts_[3];
}

SplitF SplitF::swapped() const {
  SplitF out;
  for (bool b : {false, true}) {
    for (bool t : {false, true}) out.at(t, b) = at(b, t);
  }
  return out;
}

SplitF brute_split(const PosetPolytope& poly, const FaceSet& faces) {
  // For the empty poset bottom and top are the same vertex and both bits are
  // set on it.
  const bool track_top = poly.kind == PolytopeKind::Order && poly.top_index.has_value();
  std::array<std::vector<FPoly::Coeff>, 4> counts;
  for (auto& c : counts) c.assign(static_cast<std::size_t>(faces.dim) + 2, 0);
  for (const Face& f : faces.faces) {
    const bool bottom = f.vertices.test(poly.origin_index);
    const bool top = track_top && f.vertices.test(*poly.top_index);
    ++counts[SplitF::key(bottom, top)][static_cast<std::size_t>(f.dim + 1)];
  }
  SplitF s;
  for (bool b : {false, true}) {
    for (bool t : {false, true}) s.at(b, t) = FPoly(counts[SplitF::key(b, t)]);
  }
  return s;
}

SplitF brute_split(const Poset& p, PolytopeKind kind) {
  const PosetPolytope poly = make_polytope(p, kind);
  return brute_split(poly, polytope_faces(poly));
}

PolytopeSplits brute_splits(const Poset& p) {
  return {brute_split(p, PolytopeKind::Order), brute_split(p, PolytopeKind::Chain)};
}

SplitF combine_disjoint(const SplitF& a, const SplitF& b) {
  // Drop the empty face (constant term of part 00) before pairing faces.
  auto nonempty = [](const SplitF& s, bool bottom, bool top) {
    const FPoly& part = s.at(bottom, top);
    return part[0] == 0 ? part : checked_sub(part, FPoly{part[0]});
  };
  SplitF out;
  for (bool b1 : {false, true}) {
    for (bool t1 : {false, true}) {
      const FPoly fa = nonempty(a, b1, t1);
      if (fa.is_zero()) continue;
      for (bool b2 : {false, true}) {
        for (bool t2 : {false, true}) {
          const FPoly fb = nonempty(b, b2, t2);
          if (fb.is_zero()) continue;
          out.at(b1 && b2, t1 && t2) += divx(fa * fb);
        }
      }
    }
  }
  out.at(false, false) += FPoly{1};
  return out;
}

SplitF combine_ordinal_order(const SplitF& a, const SplitF& b) {
  SplitF out;
  for (bool bottom : {false, true}) {
    for (bool top : {false, true}) {
      out.at(bottom, top) = divx(a.at(true, top) * b.at(bottom, true)) +
                            a.at(false, top) * b.at(bottom, false);
    }
  }
  return out;
}

SplitF combine_ordinal_chain(const SplitF& a, const SplitF& b) {
  SplitF out;
  out.at(true, false) = divx(a.through_bottom() * b.through_bottom());
  out.at(false, false) = a.avoiding_bottom() * b.avoiding_bottom();
  return out;
}

Quad quad_from_splits(const PolytopeSplits& s) {
  return {divx(s.chain.through_bottom()), divx(s.order.through_bottom()),
          s.order.avoiding_bottom(), s.chain.avoiding_bottom()};
}

Quad opposite_quad(const PolytopeSplits& s) {
  return {divx(s.chain.through_bottom()), divx(s.order.through_top()),
          s.order.avoiding_top(), s.chain.avoiding_bottom()};
}

namespace {

OrdinalStep ordinal_step(const PolytopeSplits& a, int size_a, const PolytopeSplits& b,
                         int size_b) {
  OrdinalStep step;
  step.size_a = size_a;
  step.size_b = size_b;
  const Quad qa = quad_from_splits(a);
  const Quad qb = quad_from_splits(b);
  const Quad qbo = opposite_quad(b);
  try {
    step.lhs2 = mulx(qa.alpha * checked_sub(qbo.beta, qb.alpha));
    step.rhs2 = qa.gamma * checked_sub(qb.delta, qbo.gamma);
    step.ineq2 = leq(step.lhs2, step.rhs2);
  } catch (const NegativeCoefficientError&) {
    step.ineq2 = false;
  }
  try {
    step.lhs3 = mulx(checked_sub(qa.beta, qa.alpha) * qbo.beta);
    step.rhs3 = checked_sub(qa.delta, qa.gamma) * qb.delta;
    step.ineq3 = leq(step.lhs3, step.rhs3);
  } catch (const NegativeCoefficientError&) {
    step.ineq3 = false;
  }
  return step;
}

struct Evaluation {
  PolytopeSplits splits;
  std::vector<OrdinalStep> steps;
};

Evaluation evaluate(const DecompositionTree& tree, int max_brute, unsigned workers) {
  if (tree.kind == DecompositionTree::Kind::Leaf) {
    if (tree.size() <= max_brute) return {brute_splits(tree.poset), {}};
    auto finer = in_family(tree.poset, FamilyOptions{max_brute});
    if (!finer || finer->kind == DecompositionTree::Kind::Leaf) {
      throw LeafTooLargeError("leaf with " + std::to_string(tree.size()) +
                              " elements exceeds the brute-force limit of " +
                              std::to_string(max_brute));
    }
    return evaluate(*finer, max_brute, workers);
  }

  std::vector<Evaluation> parts;
  if (workers > 1) {
    std::vector<std::future<Evaluation>> pending;
    for (const auto& c : tree.children) {
      pending.push_back(std::async(std::launch::async, [&c, max_brute, workers] {
        return evaluate(c, max_brute, workers);
      }));
    }
    for (auto& f : pending) parts.push_back(f.get());
  } else {
    for (const auto& c : tree.children) parts.push_back(evaluate(c, max_brute, workers));
  }

  Evaluation acc = std::move(parts.front());
  int acc_size = tree.children.front().size();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    Evaluation& next = parts[k];
    const int next_size = tree.children[k].size();
    acc.steps.insert(acc.steps.end(), next.steps.begin(), next.steps.end());
    if (tree.kind == DecompositionTree::Kind::OrdinalSum) {
      acc.steps.push_back(ordinal_step(acc.splits, acc_size, next.splits, next_size));
      acc.splits = {combine_ordinal_order(acc.splits.order, next.splits.order),
                    combine_ordinal_chain(acc.splits.chain, next.splits.chain)};
    } else {
      acc.splits = {combine_disjoint(acc.splits.order, next.splits.order),
                    combine_disjoint(acc.splits.chain, next.splits.chain)};
    }
    acc_size += next_size;
  }
  return acc;
}

}  // namespace

PolytopeSplits recursive_split(const DecompositionTree& tree, int max_brute,
                               unsigned workers) {
  return evaluate(tree, max_brute, workers).splits;
}

const char* method_name(Method m) { return m == Method::Brute ? "brute" : "recursive"; }

namespace {

DecompositionTree family_tree(const Poset& p, int max_brute) {
  auto tree = in_family(p, FamilyOptions{max_brute});
  if (!tree) throw NotInFamilyError("poset has no decomposition into X-free pieces");
  return std::move(*tree);
}

}  // namespace

PolytopeSplits compute_splits(const Poset& p, Method method, int max_brute) {
  if (method == Method::Brute) return brute_splits(p);
  return recursive_split(family_tree(p, max_brute), max_brute);
}

FPoly f_vector(const Poset& p, PolytopeKind kind, Method method, int max_brute) {
  if (method == Method::Brute) return f_polynomial(polytope_faces(make_polytope(p, kind)));
  const PolytopeSplits s = compute_splits(p, method, max_brute);
  return kind == PolytopeKind::Order ? s.order.total() : s.chain.total();
}

Quad quad(const Poset& p, Method method, int max_brute) {
  return quad_from_splits(compute_splits(p, method, max_brute));
}

bool check_simplex_vertex_figure(const Poset& p) {
  const PosetPolytope c = chain_polytope(p);
  const OriginSplit s = f_split_at(polytope_faces(c), c.origin_index);
  return s.through == mulx(FPoly::one_plus_x_pow(p.size()));
}

bool check_origin_estimate(const FaceSet& fs, std::size_t vertex) {
  const OriginSplit s = f_split_at(fs, vertex);
  return leq(s.through, mulx(s.avoiding));
}

bool check_origin_estimate_all(const FaceSet& fs) {
  for (std::size_t v = 0; v < fs.vertex_count; ++v) {
    if (!check_origin_estimate(fs, v)) return false;
  }
  return true;
}

PyrJoinCheck check_pyr_vs_join(const OriginSplit& p, const OriginSplit& q) {
  PyrJoinCheck out;
  out.join = join(p.through + p.avoiding, q.through + q.avoiding);
  out.pyramid = pyramid(subdirect(p.through, p.avoiding, q.through, q.avoiding));
  try {
    out.g_p = checked_sub(mulx(p.avoiding), p.through);
    out.g_q = checked_sub(mulx(q.avoiding), q.through);
  } catch (const NegativeCoefficientError&) {
    out.holds = false;
    return out;
  }
  out.holds = leq(out.join, out.pyramid);
  return out;
}

LemmaCheck check_lemma_abcd(const Quad& q) {
  LemmaCheck out;
  out.part2 = leq(q.alpha, q.beta) && leq(q.beta, q.gamma) && leq(q.gamma, q.delta);
  if (leq(q.alpha, q.beta) && leq(q.gamma, q.delta)) {
    out.part1 = leq(mulx(checked_sub(q.beta, q.alpha)), checked_sub(q.delta, q.gamma));
  }
  return out;
}

TheoremReport verify_main_theorem(const DecompositionTree& tree, int max_brute) {
  Evaluation e = evaluate(tree, max_brute, 1);
  TheoremReport r;
  r.poset = tree.poset;
  r.method = Method::Recursive;
  r.f_order = e.splits.order.total();
  r.f_chain = e.splits.chain.total();
  r.leq = leq(r.f_order, r.f_chain);
  r.slack = signed_difference(r.f_chain, r.f_order);
  r.x_free = is_x_free(tree.poset);
  r.steps = std::move(e.steps);
  return r;
}

TheoremReport verify_main_theorem_brute(const Poset& p) {
  TheoremReport r;
  r.poset = p;
  r.method = Method::Brute;
  r.f_order = f_vector(p, PolytopeKind::Order, Method::Brute);
  r.f_chain = f_vector(p, PolytopeKind::Chain, Method::Brute);
  r.leq = leq(r.f_order, r.f_chain);
  r.slack = signed_difference(r.f_chain, r.f_order);
  r.x_free = is_x_free(p);
  return r;
}

}  // namespace posetpoly
