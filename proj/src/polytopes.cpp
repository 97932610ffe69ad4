#include "posetpoly/polytopes.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "posetpoly/errors.hpp"

namespace posetpoly {

const char* kind_name(PolytopeKind kind) {
  return kind == PolytopeKind::Order ? "order" : "chain";
}

Point indicator(ElementSet s, int n) {
  Point p(static_cast<std::size_t>(n), 0);
  for (int i : elements_of(s)) p[static_cast<std::size_t>(i)] = 1;
  return p;
}

namespace {

std::vector<std::int64_t> zeros(int n) { return std::vector<std::int64_t>(n, 0); }

// A generic formula could in principle emit the same row twice; the face
// engine wants each facet once.
void dedup_rows(HRep& h) {
  std::vector<Inequality> unique;
  for (auto& r : h.rows) {
    if (std::find(unique.begin(), unique.end(), r) == unique.end()) unique.push_back(r);
  }
  h.rows = std::move(unique);
}

void fill_vertices(PosetPolytope& poly, std::vector<ElementSet> sets) {
  const int n = poly.poset.size();
  poly.vrep.ambient_dim = n;
  poly.hrep.ambient_dim = n;
  poly.vertex_sets = std::move(sets);
  for (ElementSet s : poly.vertex_sets) poly.vrep.vertices.push_back(indicator(s, n));
  poly.origin_index = 0;  // the empty set sorts first
}

}  // namespace

PosetPolytope order_polytope(const Poset& p) {
  PosetPolytope poly;
  poly.poset = p;
  poly.kind = PolytopeKind::Order;
  fill_vertices(poly, filters(p).members);
  poly.top_index = poly.vertex_sets.size() - 1;  // the whole poset sorts last

  const int n = p.size();
  for (int i : elements_of(p.minimal_elements())) {
    auto a = zeros(n);
    a[i] = -1;
    poly.hrep.rows.push_back({std::move(a), 0});
  }
  for (int j : elements_of(p.maximal_elements())) {
    auto a = zeros(n);
    a[j] = 1;
    poly.hrep.rows.push_back({std::move(a), 1});
  }
  for (auto [i, j] : p.covers()) {
    auto a = zeros(n);
    a[i] = 1;
    a[j] = -1;
    poly.hrep.rows.push_back({std::move(a), 0});
  }
  dedup_rows(poly.hrep);
  return poly;
}

PosetPolytope chain_polytope(const Poset& p) {
  PosetPolytope poly;
  poly.poset = p;
  poly.kind = PolytopeKind::Chain;
  fill_vertices(poly, antichains(p).members);

  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    auto a = zeros(n);
    a[i] = -1;
    poly.hrep.rows.push_back({std::move(a), 0});
  }
  for (ElementSet c : maximal_chains(p).members) {
    auto a = zeros(n);
    for (int i : elements_of(c)) a[i] = 1;
    poly.hrep.rows.push_back({std::move(a), 1});
  }
  dedup_rows(poly.hrep);
  return poly;
}

PosetPolytope make_polytope(const Poset& p, PolytopeKind kind) {
  return kind == PolytopeKind::Order ? order_polytope(p) : chain_polytope(p);
}

int facet_count_order(const Poset& p) {
  return popcount(p.minimal_elements()) + popcount(p.maximal_elements()) +
         static_cast<int>(p.covers().size());
}

int facet_count_chain(const Poset& p) {
  if (p.empty()) return 0;
  const std::uint64_t chains = count_maximal_chains(p);
  if (chains > static_cast<std::uint64_t>(std::numeric_limits<int>::max() - p.size())) {
    throw OverflowError("facet count exceeds int range");
  }
  return p.size() + static_cast<int>(chains);
}

bool opposite_iso_check(const Poset& p) {
  const PosetPolytope here = order_polytope(p);
  const PosetPolytope there = order_polytope(opposite(p));
  std::set<Point> image;
  for (const Point& v : here.vrep.vertices) {
    Point w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = 1 - v[i];
    image.insert(std::move(w));
  }
  if (image.size() != here.vrep.vertices.size()) return false;
  const std::set<Point> target(there.vrep.vertices.begin(), there.vrep.vertices.end());
  return image == target;
}

FaceSet polytope_faces(const PosetPolytope& poly) {
  return enumerate_faces(incidence(poly.vrep, poly.hrep), poly.vrep);
}

}  // namespace posetpoly
