#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle/oracles.hpp"
#include "posetpoly/errors.hpp"
#include "posetpoly/face_engine.hpp"
#include "posetpoly/polytopes.hpp"

using namespace posetpoly;

namespace {

VRep segment_v() { return {1, {{0}, {1}}}; }
HRep segment_h() { return {1, {{{1}, 1}, {{-1}, 0}}}; }

VRep triangle_v() { return {2, {{0, 0}, {1, 0}, {0, 1}}}; }
HRep triangle_h() { return {2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}}}; }

VRep square_v() { return {2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}}; }
HRep square_h() { return {2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 0}, 1}, {{0, 1}, 1}}}; }

FaceSet faces_of(const VRep& v, const HRep& h) { return enumerate_faces(incidence(v, h), v); }

std::vector<bool> row_bits(const VertexSet& s) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < s.bits(); ++i) out.push_back(s.test(i));
  return out;
}

std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  for (std::size_t i : s.indices()) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

TEST_CASE("incidence matrices") {
  const IncidenceMatrix seg = incidence(segment_v(), segment_h());
  CHECK(row_bits(seg.rows[0]) == std::vector<bool>{false, true});
  CHECK(row_bits(seg.rows[1]) == std::vector<bool>{true, false});

  const IncidenceMatrix tri = incidence(triangle_v(), triangle_h());
  for (const auto& r : tri.rows) CHECK(r.count() == 2);

  const PosetPolytope o = order_polytope(Poset::chain(2));
  const IncidenceMatrix oc = incidence(o.vrep, o.hrep);
  CHECK(oc.rows.size() == 3);
  for (std::size_t v = 0; v < oc.vertex_count; ++v) {
    int tight = 0;
    for (std::size_t r = 0; r < oc.rows.size(); ++r) tight += oc.tight(r, v) ? 1 : 0;
    CHECK(tight == 2);
  }
}

TEST_CASE("incidence errors") {
  HRep bad = segment_h();
  bad.rows.push_back({{1}, 0});  // x <= 0 cuts off the vertex 1
  try {
    incidence(segment_v(), bad);
    FAIL("expected InfeasibleVertexError");
  } catch (const InfeasibleVertexError& e) {
    CHECK(e.vertex() == 1);
    CHECK(e.row() == 2);
  }
  CHECK_THROWS_AS(incidence(segment_v(), triangle_h()), DimensionMismatchError);
}

TEST_CASE("affine rank") {
  CHECK(affine_rank(std::vector<Point>{}) == -1);
  CHECK(affine_rank(std::vector<Point>{{3, 4}}) == 0);
  CHECK(affine_rank(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}}) == 2);
  std::vector<Point> cube;
  for (int m = 0; m < 8; ++m) cube.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
  CHECK(affine_rank(cube) == 3);
  CHECK(affine_rank(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}}) == 1);
}

TEST_CASE("affine rank survives int64 overflow") {
  // Bareiss products of these entries exceed 2^63.
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<Point> pts = {{0, 0, 0, 0},
                            {big, 3, 5, 7},
                            {11, big, 13, 17},
                            {19, 23, big, 29},
                            {big + 11, big + 3, 18, 24}};
  CHECK(affine_rank(pts) == oracle::affine_rank(pts));
  pts.push_back({31, 37, 41, big});
  CHECK(affine_rank(pts) == oracle::affine_rank(pts));
}

TEST_CASE("affine rank matches the rational oracle") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const int d = 1 + static_cast<int>(rng() % 5);
    const int m = static_cast<int>(rng() % 7);
    std::vector<Point> pts;
    for (int i = 0; i < m; ++i) {
      Point p;
      for (int c = 0; c < d; ++c) p.push_back(static_cast<std::int64_t>(rng() % 3) - 1);
      pts.push_back(p);
    }
    CHECK(affine_rank(pts) == oracle::affine_rank(pts));
  }
}

TEST_CASE("small face lattices") {
  const FaceSet seg = faces_of(segment_v(), segment_h());
  CHECK(seg.faces.size() == 4);
  CHECK(seg.dim == 1);
  CHECK(f_polynomial(seg) == FPoly{1, 2, 1});

  const FaceSet tri = faces_of(triangle_v(), triangle_h());
  CHECK(tri.faces.size() == 8);
  CHECK(f_polynomial(tri) == FPoly::one_plus_x_pow(3));

  CHECK(f_polynomial(faces_of(square_v(), square_h())) == FPoly{1, 4, 4, 1});

  const VRep point{0, {{}}};
  CHECK(f_polynomial(enumerate_faces(incidence(point, HRep{0, {}}), point)) == FPoly{1, 1});
}

TEST_CASE("enumerate_faces rejects lower-dimensional input") {
  const VRep flat{2, {{0, 0}, {1, 1}}};
  const HRep rows{2, {{{-1, 0}, 0}, {{1, 0}, 1}}};
  CHECK_THROWS_AS(enumerate_faces(incidence(flat, rows), flat), NotFullDimensionalError);
}

TEST_CASE("face lattice of the order and chain polytopes of X") {
  const Poset x = x_poset();
  const FPoly fo = f_polynomial(polytope_faces(order_polytope(x)));
  CHECK(fo.degree() == 6);
  CHECK(fo[0] == 1);
  CHECK(fo[1] == 8);
  // Frozen from the subset oracle below.
  CHECK(fo == FPoly{1, 8, 24, 34, 24, 8, 1});
  CHECK(f_polynomial(polytope_faces(chain_polytope(x))) == FPoly{1, 8, 24, 35, 26, 9, 1});
}

TEST_CASE("face engine agrees with the subset oracle") {
  std::vector<PosetPolytope> polys = {chain_polytope(x_poset()), order_polytope(x_poset())};
  for (int k = 0; k < 30; ++k) {
    const Poset p = random_poset(2 + k % 4, 500 + k, 0.3 + 0.1 * (k % 4));
    polys.push_back(order_polytope(p));
    polys.push_back(chain_polytope(p));
  }
  int compared = 0;
  for (const auto& poly : polys) {
    if (poly.vrep.vertices.size() > 10) continue;
    ++compared;
    const FaceSet fs = polytope_faces(poly);
    std::vector<std::uint64_t> ours;
    for (const Face& f : fs.faces) ours.push_back(mask_of(f.vertices));
    std::sort(ours.begin(), ours.end());
    const auto masks = oracle::face_masks(poly.vrep.vertices);
    CHECK(ours == masks);
    std::vector<FPoly::Coeff> counts(static_cast<std::size_t>(poly.vrep.ambient_dim) + 2, 0);
    for (std::uint64_t m : masks) {
      std::vector<Point> pts;
      for (std::size_t v = 0; v < poly.vrep.vertices.size(); ++v) {
        if ((m >> v) & 1U) pts.push_back(poly.vrep.vertices[v]);
      }
      ++counts[static_cast<std::size_t>(oracle::affine_rank(pts) + 1)];
    }
    CHECK(f_polynomial(fs) == FPoly(counts));
  }
  CHECK(compared >= 30);
}

TEST_CASE("face set invariants") {
  for (int k = 0; k < 40; ++k) {
    const Poset p = random_poset(1 + k % 6, 900 + k, 0.5);
    for (const auto& poly : {order_polytope(p), chain_polytope(p)}) {
      const FaceSet fs = polytope_faces(poly);
      const FPoly f = f_polynomial(fs);
      CHECK(f.at_minus_one() == 0);  // Euler
      CHECK(fs.dim == p.size());
      CHECK(f[static_cast<std::size_t>(p.size()) + 1] == 1);

      // Sorted by (dim, index list), closed under intersection.
      std::set<std::vector<std::size_t>> seen;
      for (std::size_t i = 0; i < fs.faces.size(); ++i) {
        seen.insert(fs.faces[i].vertices.indices());
        CHECK(fs.faces[i].dim == affine_rank(poly.vrep, fs.faces[i].vertices));
        if (i > 0) {
          const Face& a = fs.faces[i - 1];
          const Face& b = fs.faces[i];
          CHECK((a.dim < b.dim || (a.dim == b.dim && lex_less(a.vertices, b.vertices))));
        }
      }
      std::size_t open = 0;
      for (const Face& a : fs.faces) {
        for (const Face& b : fs.faces) open += seen.count((a.vertices & b.vertices).indices()) == 0;
      }
      CHECK(open == 0);
      const IncidenceMatrix inc = incidence(poly.vrep, poly.hrep);
      for (const auto& row : inc.rows) CHECK(seen.count(row.indices()) == 1);
      CHECK(seen.count(VertexSet::full(fs.vertex_count).indices()) == 1);
    }
  }
}

TEST_CASE("parallel enumeration is deterministic") {
  const PosetPolytope poly = order_polytope(Poset::antichain(6));
  const IncidenceMatrix inc = incidence(poly.vrep, poly.hrep);
  const FaceSet one = enumerate_faces(inc, poly.vrep, IntersectionBfs(1));
  const FaceSet four = enumerate_faces(inc, poly.vrep, IntersectionBfs(4));
  REQUIRE(one.faces.size() == four.faces.size());
  CHECK(one.faces.size() == 730);  // 3^6 + 1
  for (std::size_t i = 0; i < one.faces.size(); ++i) {
    CHECK(one.faces[i].vertices == four.faces[i].vertices);
    CHECK(one.faces[i].dim == four.faces[i].dim);
  }
}

TEST_CASE("splits at a vertex") {
  const FaceSet seg = faces_of(segment_v(), segment_h());
  const OriginSplit s = f_split_at(seg, 0);
  CHECK(s.through == FPoly{0, 1, 1});
  CHECK(s.avoiding == FPoly{1, 1});

  const FaceSet tri = faces_of(triangle_v(), triangle_h());
  for (std::size_t v = 0; v < 3; ++v) {
    const OriginSplit t = f_split_at(tri, v);
    CHECK(t.through == FPoly{0, 1, 2, 1});
    CHECK(t.avoiding == FPoly{1, 2, 1});
  }

  const FaceSet sq = faces_of(square_v(), square_h());
  for (std::size_t v = 0; v < 4; ++v) {
    const OriginSplit t = f_split_at(sq, v);
    std::size_t through = 0;
    for (const Face& f : sq.faces) through += f.vertices.test(v) ? 1 : 0;
    CHECK(t.through.at_one() == through);
    CHECK(t.through + t.avoiding == f_polynomial(sq));
  }
  CHECK_THROWS_AS(f_split_at(tri, 3), NotAVertexError);
}

TEST_CASE("vertex lookup and JSON lines") {
  CHECK(find_vertex(triangle_v(), {0, 1}) == 2);
  CHECK(find_vertex(triangle_v(), {1, 1}) == -1);
  CHECK(faces_jsonl(faces_of(segment_v(), segment_h())) ==
        "{\"dim\": -1, \"vertices\": []}\n"
        "{\"dim\": 0, \"vertices\": [0]}\n"
        "{\"dim\": 0, \"vertices\": [1]}\n"
        "{\"dim\": 1, \"vertices\": [0, 1]}\n");
}

TEST_CASE("vertex cap") {
  const PosetPolytope cube = order_polytope(Poset::antichain(13));
  CHECK(cube.vrep.vertices.size() == 8192);
  CHECK_THROWS_AS(polytope_faces(cube), TooLargeError);
}
