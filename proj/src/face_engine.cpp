#include "posetpoly/face_engine.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "posetpoly/errors.hpp"

namespace posetpoly {

namespace {

struct Overflow {};

struct CheckedI64 {
  using T = std::int64_t;
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
};

struct BigInt {
  using T = boost::multiprecision::cpp_int;
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
};

// Rank of an integer matrix by Bareiss fraction-free elimination. Every
// entry after step k is a (k+1)-minor of the input, so the division by the
// previous pivot is exact.
template <typename Ops>
int bareiss_rank(std::vector<std::vector<typename Ops::T>> m, std::size_t cols) {
  using T = typename Ops::T;
  const std::size_t rows = m.size();
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const T piv = m[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T lead = m[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = Ops::sub(Ops::mul(piv, m[r][c]), Ops::mul(lead, m[rank][c])) / prev;
      }
      m[r][col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_of_differences(const std::vector<const Point*>& pts, std::size_t cols) {
  if (pts.empty()) return -1;
  const Point& base = *pts.front();
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(pts.size() - 1);
  try {
    for (std::size_t k = 1; k < pts.size(); ++k) {
      std::vector<std::int64_t> row(cols);
      for (std::size_t c = 0; c < cols; ++c) row[c] = CheckedI64::sub((*pts[k])[c], base[c]);
      m.push_back(std::move(row));
    }
    return bareiss_rank<CheckedI64>(m, cols);
  } catch (const Overflow&) {
    std::vector<std::vector<BigInt::T>> big;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      std::vector<BigInt::T> row(cols);
      for (std::size_t c = 0; c < cols; ++c) {
        row[c] = BigInt::T((*pts[k])[c]) - BigInt::T(base[c]);
      }
      big.push_back(std::move(row));
    }
    return bareiss_rank<BigInt>(std::move(big), cols);
  }
}

std::size_t common_width(std::span<const Point> points) {
  if (points.empty()) return 0;
  const std::size_t w = points.front().size();
  for (const auto& p : points) {
    if (p.size() != w) throw DimensionMismatchError("points of different dimension");
  }
  return w;
}

}  // namespace

int affine_rank(std::span<const Point> points) {
  const std::size_t width = common_width(points);
  std::vector<const Point*> ptrs;
  ptrs.reserve(points.size());
  for (const auto& p : points) ptrs.push_back(&p);
  return rank_of_differences(ptrs, width);
}

int affine_rank(const VRep& v, const VertexSet& subset) {
  std::vector<const Point*> ptrs;
  for (std::size_t i : subset.indices()) ptrs.push_back(&v.vertices[i]);
  return rank_of_differences(ptrs, static_cast<std::size_t>(v.ambient_dim));
}

IncidenceMatrix incidence(const VRep& v, const HRep& h) {
  if (v.ambient_dim != h.ambient_dim) {
    throw DimensionMismatchError("VRep and HRep ambient dimensions differ");
  }
  if (v.vertices.size() > kMaxVertices) {
    throw TooLargeError(std::to_string(v.vertices.size()) + " vertices exceed the cap of " +
                        std::to_string(kMaxVertices));
  }
  const auto dim = static_cast<std::size_t>(v.ambient_dim);
  IncidenceMatrix inc;
  inc.vertex_count = v.vertices.size();
  inc.rows.reserve(h.rows.size());
  for (std::size_t r = 0; r < h.rows.size(); ++r) {
    const Inequality& row = h.rows[r];
    if (row.a.size() != dim) throw DimensionMismatchError("row width differs from ambient dim");
    VertexSet tight(v.vertices.size());
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
      const Point& p = v.vertices[i];
      if (p.size() != dim) throw DimensionMismatchError("vertex width differs from ambient dim");
      std::int64_t lhs = 0;
      for (std::size_t c = 0; c < dim; ++c) {
        std::int64_t term;
        if (__builtin_mul_overflow(row.a[c], p[c], &term) ||
            __builtin_add_overflow(lhs, term, &lhs)) {
          throw OverflowError("row evaluation overflow");
        }
      }
      if (lhs > row.b) throw InfeasibleVertexError(i, r);
      if (lhs == row.b) tight.set(i);
    }
    inc.rows.push_back(std::move(tight));
  }
  return inc;
}

std::vector<VertexSet> IntersectionBfs::closed_sets(const IncidenceMatrix& inc) const {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> out;
  std::vector<VertexSet> frontier{VertexSet::full(inc.vertex_count)};
  seen.insert(frontier.front());
  out.push_back(frontier.front());

  auto expand = [&inc](std::span<const VertexSet> chunk, std::vector<VertexSet>& found) {
    for (const VertexSet& f : chunk) {
      for (const VertexSet& row : inc.rows) {
        VertexSet g = f & row;
        if (g.none() || g == f) continue;
        found.push_back(std::move(g));
      }
    }
  };

  while (!frontier.empty()) {
    const std::size_t parts = std::min<std::size_t>(workers_, frontier.size());
    std::vector<std::vector<VertexSet>> found(parts);
    if (parts <= 1) {
      expand(frontier, found[0]);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t step = (frontier.size() + parts - 1) / parts;
      for (std::size_t p = 0; p < parts; ++p) {
        const std::size_t lo = std::min(frontier.size(), p * step);
        const std::size_t hi = std::min(frontier.size(), lo + step);
        pool.emplace_back([&, lo, hi, p] {
          expand(std::span<const VertexSet>(frontier).subspan(lo, hi - lo), found[p]);
        });
      }
    }
    std::vector<VertexSet> next;
    for (auto& chunk : found) {
      for (auto& g : chunk) {
        if (seen.insert(g).second) {
          out.push_back(g);
          next.push_back(std::move(g));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

FaceSet enumerate_faces(const IncidenceMatrix& inc, const VRep& v) {
  return enumerate_faces(inc, v, IntersectionBfs{});
}

FaceSet enumerate_faces(const IncidenceMatrix& inc, const VRep& v,
                        const FaceEnumerator& engine) {
  if (inc.vertex_count != v.vertices.size()) {
    throw DimensionMismatchError("incidence matrix and VRep disagree on vertex count");
  }
  if (v.vertices.empty()) throw NotFullDimensionalError("polytope has no vertices");
  if (v.vertices.size() > kMaxVertices) {
    throw TooLargeError(std::to_string(v.vertices.size()) + " vertices exceed the cap of " +
                        std::to_string(kMaxVertices));
  }
  const VertexSet all = VertexSet::full(v.vertices.size());
  const int full_dim = affine_rank(v, all);
  if (full_dim < v.ambient_dim) {
    throw NotFullDimensionalError("vertices span dimension " + std::to_string(full_dim) +
                                  " in ambient dimension " + std::to_string(v.ambient_dim));
  }

  struct Keyed {
    Face face;
    std::vector<std::size_t> key;
  };
  std::vector<Keyed> keyed;
  keyed.push_back({Face{VertexSet(v.vertices.size()), -1}, {}});
  for (VertexSet& s : engine.closed_sets(inc)) {
    const int d = s == all ? full_dim : affine_rank(v, s);
    auto key = s.indices();
    keyed.push_back({Face{std::move(s), d}, std::move(key)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.face.dim != b.face.dim) return a.face.dim < b.face.dim;
    return a.key < b.key;
  });

  FaceSet fs;
  fs.vertex_count = v.vertices.size();
  fs.dim = full_dim;
  fs.faces.reserve(keyed.size());
  for (auto& k : keyed) fs.faces.push_back(std::move(k.face));
  return fs;
}

FPoly f_polynomial(const FaceSet& fs) {
  std::vector<FPoly::Coeff> c(static_cast<std::size_t>(fs.dim) + 2, 0);
  for (const auto& f : fs.faces) ++c[static_cast<std::size_t>(f.dim + 1)];
  return FPoly(std::move(c));
}

OriginSplit f_split_at(const FaceSet& fs, std::size_t vertex) {
  if (vertex >= fs.vertex_count) {
    throw NotAVertexError("vertex index " + std::to_string(vertex) + " out of range");
  }
  std::vector<FPoly::Coeff> through(static_cast<std::size_t>(fs.dim) + 2, 0);
  std::vector<FPoly::Coeff> avoiding(through.size(), 0);
  for (const auto& f : fs.faces) {
    auto& target = f.vertices.test(vertex) ? through : avoiding;
    ++target[static_cast<std::size_t>(f.dim + 1)];
  }
  return {FPoly(std::move(through)), FPoly(std::move(avoiding))};
}

std::ptrdiff_t find_vertex(const VRep& v, const Point& p) {
  auto it = std::find(v.vertices.begin(), v.vertices.end(), p);
  return it == v.vertices.end() ? -1 : it - v.vertices.begin();
}

std::string faces_jsonl(const FaceSet& fs) {
  std::ostringstream os;
  for (const auto& f : fs.faces) {
    os << "{\"dim\": " << f.dim << ", \"vertices\": [";
    bool first = true;
    for (std::size_t i : f.vertices.indices()) {
      if (!first) os << ", ";
      os << i;
      first = false;
    }
    os << "]}\n";
  }
  return os.str();
}

}  // namespace posetpoly
