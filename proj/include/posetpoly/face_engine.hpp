#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "posetpoly/fpoly.hpp"
#include "posetpoly/vertex_set.hpp"

namespace posetpoly {

using Point = std::vector<std::int64_t>;

// Practical cap on vertex count for face enumeration.
constexpr std::size_t kMaxVertices = 4096;

struct VRep {
  int ambient_dim = 0;
  std::vector<Point> vertices;
};

// Row a.x <= b.
struct Inequality {
  std::vector<std::int64_t> a;
  std::int64_t b = 0;
  bool operator==(const Inequality&) const = default;
};

struct HRep {
  int ambient_dim = 0;
  std::vector<Inequality> rows;
};

// Row i holds the vertices tight on inequality i.
struct IncidenceMatrix {
  std::size_t vertex_count = 0;
  std::vector<VertexSet> rows;

  bool tight(std::size_t row, std::size_t vertex) const { return rows[row].test(vertex); }
};

struct Face {
  VertexSet vertices;
  int dim = -1;
};

// All faces including the empty face and the polytope itself, sorted by
// (dim, ascending vertex index list).
struct FaceSet {
  std::size_t vertex_count = 0;
  int dim = -1;  // dimension of the polytope
  std::vector<Face> faces;
};

// Dimension of the affine hull of the points, -1 for no points. Exact
// fraction-free elimination in 64-bit integers, redone with arbitrary
// precision if an intermediate overflows.
int affine_rank(std::span<const Point> points);
int affine_rank(const VRep& v, const VertexSet& subset);

// Throws DimensionMismatchError, InfeasibleVertexError.
IncidenceMatrix incidence(const VRep& v, const HRep& h);

// Produces the family of nonempty vertex sets of faces: the full vertex set
// plus every intersection of facet vertex sets. Implementations must be
// deterministic; enumerate_faces sorts the result anyway.
class FaceEnumerator {
 public:
  virtual ~FaceEnumerator() = default;
  virtual std::vector<VertexSet> closed_sets(const IncidenceMatrix& inc) const = 0;
};

// Breadth-first closure: each frontier set is intersected with every facet
// row and unseen results become the next frontier. With workers > 1 the
// frontier is split into contiguous chunks and results are merged in chunk
// order.
class IntersectionBfs final : public FaceEnumerator {
 public:
  explicit IntersectionBfs(unsigned workers = 1) : workers_(workers == 0 ? 1 : workers) {}
  std::vector<VertexSet> closed_sets(const IncidenceMatrix& inc) const override;

 private:
  unsigned workers_;
};

// Throws NotFullDimensionalError when the vertices do not span the ambient
// space, TooLargeError past kMaxVertices.
FaceSet enumerate_faces(const IncidenceMatrix& inc, const VRep& v);
FaceSet enumerate_faces(const IncidenceMatrix& inc, const VRep& v,
                        const FaceEnumerator& engine);

FPoly f_polynomial(const FaceSet& fs);

struct OriginSplit {
  FPoly through;   // faces containing the vertex
  FPoly avoiding;  // faces not containing it, the empty face included
};

// Throws NotAVertexError for an out-of-range index.
OriginSplit f_split_at(const FaceSet& fs, std::size_t vertex);

// Index of the given point in the vertex list, or -1.
std::ptrdiff_t find_vertex(const VRep& v, const Point& p);

// One JSON object per line: {"dim": d, "vertices": [i, j, ...]}.
std::string faces_jsonl(const FaceSet& fs);

}  // namespace posetpoly
