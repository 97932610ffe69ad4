#include "posetpoly/subdirect.hpp"

#include <algorithm>
#include <set>

#include "posetpoly/errors.hpp"
#include "posetpoly/polytopes.hpp"

namespace posetpoly {

namespace {

bool is_origin(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](std::int64_t c) { return c == 0; });
}

void require_origin(const VRep& v, const char* side) {
  if (std::none_of(v.vertices.begin(), v.vertices.end(), is_origin)) {
    throw OriginNotVertexError(std::string("origin is not a vertex of the ") + side +
                               " polytope");
  }
}

}  // namespace

VRep subdirect_vertices(const VRep& p, const VRep& q) {
  require_origin(p, "left");
  require_origin(q, "right");
  const auto m = static_cast<std::size_t>(p.ambient_dim);
  const auto n = static_cast<std::size_t>(q.ambient_dim);
  VRep out;
  out.ambient_dim = p.ambient_dim + q.ambient_dim;
  out.vertices.emplace_back(m + n, 0);
  for (const Point& v : p.vertices) {
    if (is_origin(v)) continue;
    Point w(m + n, 0);
    std::copy(v.begin(), v.end(), w.begin());
    out.vertices.push_back(std::move(w));
  }
  for (const Point& v : q.vertices) {
    if (is_origin(v)) continue;
    Point w(m + n, 0);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(m));
    out.vertices.push_back(std::move(w));
  }
  return out;
}

namespace {

FPoly::Coeff checked_mul(FPoly::Coeff a, FPoly::Coeff b) {
  FPoly::Coeff r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("face count overflows 64 bits");
  return r;
}

FPoly::Coeff checked_add(FPoly::Coeff a, FPoly::Coeff b) {
  FPoly::Coeff r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("face count overflows 64 bits");
  return r;
}

}  // namespace

OriginSplit subdirect_face_counts(const OriginSplit& p, const OriginSplit& q) {
  // Coefficient k of a split is the number of faces of dimension k - 1.
  const std::size_t len_through = p.through.coeffs().size() + q.through.coeffs().size();
  const std::size_t len_avoiding = p.avoiding.coeffs().size() + q.avoiding.coeffs().size();
  std::vector<FPoly::Coeff> through(len_through + 1, 0);
  std::vector<FPoly::Coeff> avoiding(len_avoiding + 1, 0);
  for (std::size_t i = 0; i < p.through.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < q.through.coeffs().size(); ++j) {
      const FPoly::Coeff n = checked_mul(p.through[i], q.through[j]);
      if (n == 0) continue;
      // dim F = i - 1, dim G = j - 1, dim (F v G) = i + j - 2.
      if (i == 0 || j == 0) throw ConstantTermError("empty face listed as containing the origin");
      through[i + j - 1] = checked_add(through[i + j - 1], n);
    }
  }
  for (std::size_t i = 0; i < p.avoiding.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < q.avoiding.coeffs().size(); ++j) {
      // dim (F * G) = (i - 1) + (j - 1) + 1.
      avoiding[i + j] = checked_add(avoiding[i + j], checked_mul(p.avoiding[i], q.avoiding[j]));
    }
  }
  return {FPoly(std::move(through)), FPoly(std::move(avoiding))};
}

bool ordinal_chain_identity(const Poset& a, const Poset& b) {
  const PosetPolytope whole = chain_polytope(ordinal_sum(a, b));
  const VRep glued = subdirect_vertices(chain_polytope(a).vrep, chain_polytope(b).vrep);
  const std::set<Point> lhs(whole.vrep.vertices.begin(), whole.vrep.vertices.end());
  const std::set<Point> rhs(glued.vertices.begin(), glued.vertices.end());
  return lhs.size() == whole.vrep.vertices.size() && lhs == rhs;
}

bool ordinal_order_identity(const Poset& a, const Poset& b) {
  const PosetPolytope whole = order_polytope(ordinal_sum(a, b));
  const VRep glued =
      subdirect_vertices(order_polytope(a).vrep, order_polytope(opposite(b)).vrep);
  const auto na = static_cast<std::size_t>(a.size());
  std::set<Point> image;
  for (const Point& v : whole.vrep.vertices) {
    Point w = v;
    for (std::size_t i = na; i < w.size(); ++i) w[i] = 1 - w[i];
    image.insert(std::move(w));
  }
  const std::set<Point> rhs(glued.vertices.begin(), glued.vertices.end());
  return image.size() == whole.vrep.vertices.size() && image == rhs;
}

}  // namespace posetpoly
