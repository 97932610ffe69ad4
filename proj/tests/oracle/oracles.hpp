#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "posetpoly/face_engine.hpp"
#include "posetpoly/fpoly.hpp"
#include "posetpoly/poset.hpp"

namespace oracle {

using posetpoly::ElementSet;
using posetpoly::Point;
using posetpoly::Poset;
using Rational = boost::multiprecision::cpp_rational;

// ---- posets -------------------------------------------------------------

inline bool up_closed(const Poset& p, ElementSet s) {
  for (int i = 0; i < p.size(); ++i) {
    if (!posetpoly::contains(s, i)) continue;
    for (int j = 0; j < p.size(); ++j) {
      if (p.leq(i, j) && !posetpoly::contains(s, j)) return false;
    }
  }
  return true;
}

inline bool pairwise_incomparable(const Poset& p, ElementSet s) {
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (posetpoly::contains(s, i) && posetpoly::contains(s, j) && p.comparable(i, j)) {
        return false;
      }
    }
  }
  return true;
}

inline bool totally_ordered(const Poset& p, ElementSet s) {
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (posetpoly::contains(s, i) && posetpoly::contains(s, j) && !p.comparable(i, j)) {
        return false;
      }
    }
  }
  return true;
}

inline std::vector<ElementSet> all_subsets_where(const Poset& p, auto pred) {
  std::vector<ElementSet> out;
  const ElementSet limit = ElementSet{1} << p.size();
  for (ElementSet s = 0; s < limit; ++s) {
    if (pred(s)) out.push_back(s);
  }
  return out;
}

inline std::vector<ElementSet> filters(const Poset& p) {
  return all_subsets_where(p, [&](ElementSet s) { return up_closed(p, s); });
}

inline std::vector<ElementSet> antichains(const Poset& p) {
  return all_subsets_where(p, [&](ElementSet s) { return pairwise_incomparable(p, s); });
}

inline std::vector<ElementSet> maximal_chains(const Poset& p) {
  return all_subsets_where(p, [&](ElementSet s) {
    if (s == 0 || !totally_ordered(p, s)) return false;
    for (int i = 0; i < p.size(); ++i) {
      if (!posetpoly::contains(s, i) && totally_ordered(p, s | posetpoly::singleton(i))) {
        return false;
      }
    }
    return true;
  });
}

// Every 5-subset, every assignment of roles, exact comparison with the
// relations of the X-poset (a, b < c < d, e).
inline bool has_induced_x(const Poset& p) {
  const int n = p.size();
  // less[i][j] in the X-poset with roles 0,1 = minimal, 2 = middle, 3,4 = maximal.
  auto x_less = [](int i, int j) {
    const int level[] = {0, 0, 1, 2, 2};
    return level[i] < level[j];
  };
  std::vector<int> pick(5);
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (ElementSet s = 0; s < (ElementSet{1} << n); ++s) {
    if (posetpoly::popcount(s) != 5) continue;
    pick = posetpoly::elements_of(s);
    std::sort(pick.begin(), pick.end());
    do {
      bool ok = true;
      for (int i = 0; i < 5 && ok; ++i) {
        for (int j = 0; j < 5 && ok; ++j) {
          if (i != j && p.less(pick[i], pick[j]) != x_less(i, j)) ok = false;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return false;
}

// Every nonempty proper A with A entirely below its complement.
inline std::vector<ElementSet> ordinal_cuts(const Poset& p) {
  const ElementSet all = p.all();
  std::vector<ElementSet> out;
  for (ElementSet a = 1; a < all; ++a) {
    if ((a & ~all) != 0) continue;
    bool ok = true;
    for (int i : posetpoly::elements_of(a)) {
      for (int j : posetpoly::elements_of(all & ~a)) {
        if (!p.less(i, j)) ok = false;
      }
    }
    if (ok) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](ElementSet x, ElementSet y) {
    return posetpoly::popcount(x) < posetpoly::popcount(y);
  });
  return out;
}

// Label-blind isomorphism by trying every bijection. Small posets only.
inline bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.size() && ok; ++i) {
      for (int j = 0; j < a.size() && ok; ++j) {
        if (a.leq(i, j) != b.leq(perm[i], perm[j])) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---- linear algebra ------------------------------------------------------

// Rank of the differences p_i - p_0 over the rationals; -1 for no points.
inline int affine_rank(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  const std::size_t d = pts[0].size();
  std::vector<std::vector<Rational>> m;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    std::vector<Rational> row(d);
    for (std::size_t c = 0; c < d; ++c) row[c] = Rational(pts[k][c]) - Rational(pts[0][c]);
    m.push_back(std::move(row));
  }
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t k = r + 1; k < m.size(); ++k) {
      if (m[k][c] == 0) continue;
      const Rational f = m[k][c] / m[r][c];
      for (std::size_t cc = c; cc < d; ++cc) m[k][cc] -= f * m[r][cc];
    }
    ++r;
    ++rank;
  }
  return rank;
}

// Phase-1 simplex with Bland's rule: is {y >= 0 : A y = b} nonempty? b >= 0.
inline bool feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (rows == 0) return true;
  const std::size_t vars = a[0].size();
  const std::size_t cols = vars + rows;  // plus one artificial per row
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < vars; ++c) t[r][c] = a[r][c];
    t[r][vars + r] = 1;
    t[r][cols] = b[r];
    basis[r] = vars + r;
  }
  // Reduced costs of minimizing the sum of artificials.
  auto reduced = [&](std::size_t c) {
    Rational cost = c >= vars ? 1 : 0;
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational cb = basis[r] >= vars ? 1 : 0;
      cost -= cb * t[r][c];
    }
    return cost;
  };
  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t c = 0; c < cols; ++c) {
      if (reduced(c) < 0) {
        enter = c;
        break;
      }
    }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][*enter] <= 0) continue;
      const Rational ratio = t[r][cols] / t[r][*enter];
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded cannot happen in phase 1
    const Rational piv = t[*leave][*enter];
    for (auto& v : t[*leave]) v /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == *leave || t[r][*enter] == 0) continue;
      const Rational f = t[r][*enter];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[*leave][c];
    }
    basis[*leave] = *enter;
  }
  Rational objective = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= vars) objective += t[r][cols];
  }
  return objective == 0;
}

// W is a face iff some functional alpha and level c have alpha.w = c on W and
// alpha.u <= c - 1 off W.
inline bool is_face(const std::vector<Point>& verts, const std::vector<bool>& in_w) {
  const std::size_t m = verts.size();
  const std::size_t d = verts[0].size();
  const std::size_t nw = static_cast<std::size_t>(std::count(in_w.begin(), in_w.end(), true));
  if (nw == 0 || nw == m) return true;
  // Variables: alpha+ (d), alpha- (d), c+, c-, one slack per vertex off W.
  const std::size_t off = m - nw;
  const std::size_t vars = 2 * d + 2 + off;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::size_t slack = 0;
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<Rational> row(vars);
    const Rational sign = in_w[v] ? 1 : -1;
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = sign * verts[v][k];
      row[d + k] = -sign * verts[v][k];
    }
    row[2 * d] = -sign;
    row[2 * d + 1] = sign;
    if (in_w[v]) {
      b.push_back(0);
    } else {
      // -(u.alpha - c + s) = 1
      row[2 * d + 2 + slack++] = -1;
      b.push_back(1);
    }
    a.push_back(std::move(row));
  }
  return feasible(std::move(a), std::move(b));
}

// f-polynomial from testing every vertex subset. Small vertex counts only.
inline posetpoly::FPoly face_fpoly(const std::vector<Point>& verts) {
  const std::size_t m = verts.size();
  std::vector<posetpoly::FPoly::Coeff> counts(verts.empty() ? 1 : verts[0].size() + 2, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> in_w(m);
    std::vector<Point> pts;
    for (std::size_t v = 0; v < m; ++v) {
      in_w[v] = (mask >> v) & 1U;
      if (in_w[v]) pts.push_back(verts[v]);
    }
    if (!is_face(verts, in_w)) continue;
    ++counts[static_cast<std::size_t>(affine_rank(pts) + 1)];
  }
  return posetpoly::FPoly(std::move(counts));
}

// Vertex masks of all faces, as above.
inline std::vector<std::uint64_t> face_masks(const std::vector<Point>& verts) {
  std::vector<std::uint64_t> out;
  const std::size_t m = verts.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> in_w(m);
    for (std::size_t v = 0; v < m; ++v) in_w[v] = (mask >> v) & 1U;
    if (is_face(verts, in_w)) out.push_back(mask);
  }
  return out;
}

}  // namespace oracle
