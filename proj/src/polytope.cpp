#include "latfree/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace latfree {

namespace {

struct LexLess {
  template <typename Scalar>
  bool operator()(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    return lex_less(a, b);
  }
};

void sort_unique(std::vector<RationalPoint>& pts) {
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RationalPoint& a, const RationalPoint& b) {
                          return equal(a, b);
                        }),
            pts.end());
}

RatMatrix difference_matrix(const std::vector<RationalPoint>& pts) {
  const Eigen::Index d = pts.front().size();
  RatMatrix m(static_cast<Eigen::Index>(pts.size()) - 1, d);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i) - 1) = (pts[i] - pts[0]).transpose();
  }
  return m;
}

// Generalized cross product of the rows of an (n-1) x n matrix: a vector
// orthogonal to all rows, zero iff the rows are dependent.
RatVector orthogonal_complement(const RatMatrix& rows) {
  const Eigen::Index n = rows.cols();
  RatVector v(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    RatMatrix minor(rows.rows(), n - 1);
    for (Eigen::Index c = 0, k = 0; c < n; ++c) {
      if (c == j) continue;
      minor.col(k++) = rows.col(c);
    }
    const Rat m = det(minor);
    v(j) = (j % 2 == 0) ? m : Rat(-m);
  }
  return v;
}

Rat dot(const IntVector& n, const RationalPoint& x) {
  Rat s(0);
  for (Eigen::Index i = 0; i < n.size(); ++i) s += Rat(n(i)) * x(i);
  return s;
}

// Columns J such that the differences restricted to J have full rank k.
std::vector<Eigen::Index> independent_columns(const RatMatrix& diffs, Eigen::Index k) {
  std::vector<Eigen::Index> cols;
  for (Eigen::Index c = 0; c < diffs.cols() && static_cast<Eigen::Index>(cols.size()) < k; ++c) {
    std::vector<Eigen::Index> trial = cols;
    trial.push_back(c);
    RatMatrix sub(diffs.rows(), static_cast<Eigen::Index>(trial.size()));
    for (std::size_t t = 0; t < trial.size(); ++t) {
      sub.col(static_cast<Eigen::Index>(t)) = diffs.col(trial[t]);
    }
    if (rank(sub) == trial.size()) cols = std::move(trial);
  }
  return cols;
}

RationalPoint restrict_to(const RationalPoint& p, const std::vector<Eigen::Index>& cols) {
  RationalPoint r(static_cast<Eigen::Index>(cols.size()));
  for (std::size_t t = 0; t < cols.size(); ++t) r(static_cast<Eigen::Index>(t)) = p(cols[t]);
  return r;
}

struct FullHull {
  std::vector<RationalPoint> vertices;  // sorted
  std::vector<Facet> facets;
};

// Attach vertex indices and discard non-vertex points. `pts` is sorted and
// free of duplicates; `rows` are the facet rows.
FullHull finish_hull(const std::vector<RationalPoint>& pts, std::vector<HRow> rows) {
  const Eigen::Index d = pts.front().size();
  std::vector<std::vector<std::size_t>> tight_rows(pts.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (dot(rows[r].normal, pts[i]) == rows[r].rhs) tight_rows[i].push_back(r);
    }
  }
  FullHull out;
  std::vector<std::ptrdiff_t> new_index(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (static_cast<Eigen::Index>(tight_rows[i].size()) < d) continue;
    RatMatrix normals(static_cast<Eigen::Index>(tight_rows[i].size()), d);
    for (std::size_t t = 0; t < tight_rows[i].size(); ++t) {
      normals.row(static_cast<Eigen::Index>(t)) =
          rows[tight_rows[i][t]].normal.cast<Rat>().transpose();
    }
    if (static_cast<Eigen::Index>(rank(normals)) == d) {
      new_index[i] = static_cast<std::ptrdiff_t>(out.vertices.size());
      out.vertices.push_back(pts[i]);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const HRow& a, const HRow& b) {
    return lex_less(a.normal, b.normal);
  });
  for (auto& row : rows) {
    Facet f{row.normal, row.rhs, {}};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (new_index[i] >= 0 && dot(row.normal, pts[i]) == row.rhs) {
        f.vertex_indices.push_back(static_cast<std::size_t>(new_index[i]));
      }
    }
    out.facets.push_back(std::move(f));
  }
  return out;
}

FullHull hull_1d(const std::vector<RationalPoint>& pts) {
  std::vector<HRow> rows;
  rows.push_back({int_vector({-1}), Rat(-pts.front()(0))});
  rows.push_back({int_vector({1}), pts.back()(0)});
  return finish_hull(pts, std::move(rows));
}

Rat cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

// Andrew's monotone chain, strict turns only.
FullHull hull_2d(const std::vector<RationalPoint>& pts) {
  std::vector<RationalPoint> chain(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], p) <= 0) --k;
    chain[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);
  std::vector<HRow> rows;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const RationalPoint& p = chain[i];
    const RationalPoint& q = chain[(i + 1) % chain.size()];
    RatVector n(2);
    n(0) = q(1) - p(1);
    n(1) = p(0) - q(0);
    HRow row{clear_denominators(n), Rat(0)};
    row.rhs = dot(row.normal, p);
    rows.push_back(std::move(row));
  }
  return finish_hull(pts, std::move(rows));
}

// Brute force over d-subsets; fine for the dozen-point inputs used here.
FullHull hull_brute(const std::vector<RationalPoint>& pts) {
  const Eigen::Index d = pts.front().size();
  const std::size_t n = pts.size();
  std::vector<HRow> rows;
  std::set<std::vector<std::string>> seen;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    RatMatrix diffs(d - 1, d);
    for (Eigen::Index r = 1; r < d; ++r) {
      diffs.row(r - 1) = (pts[idx[static_cast<std::size_t>(r)]] - pts[idx[0]]).transpose();
    }
    const RatVector normal = orthogonal_complement(diffs);
    if (!normal.isZero()) {
      IntVector n = clear_denominators(normal);
      const Rat b = dot(n, pts[idx[0]]);
      bool below = false;
      bool above = false;
      for (const auto& p : pts) {
        const Rat v = dot(n, p);
        if (v < b) below = true;
        if (v > b) above = true;
        if (below && above) break;
      }
      if (!(below && above)) {
        HRow row{above ? IntVector(-n) : n, above ? Rat(-b) : b};
        std::vector<std::string> key;
        for (Eigen::Index i = 0; i < row.normal.size(); ++i) key.push_back(row.normal(i).str());
        if (seen.insert(key).second) rows.push_back(std::move(row));
      }
    }
    // next combination
    std::size_t i = static_cast<std::size_t>(d);
    while (i > 0 && idx[i - 1] == n - static_cast<std::size_t>(d) + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < static_cast<std::size_t>(d); ++j) idx[j] = idx[j - 1] + 1;
  }
  return finish_hull(pts, std::move(rows));
}

FullHull full_hull(const std::vector<RationalPoint>& pts) {
  const Eigen::Index d = pts.front().size();
  if (d == 1) return hull_1d(pts);
  if (d == 2) return hull_2d(pts);
  return hull_brute(pts);
}

}  // namespace

bool operator==(const VPolytope& a, const VPolytope& b) {
  if (a.dim_ != b.dim_ || a.vertices_.size() != b.vertices_.size()) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    if (!equal(a.vertices_[i], b.vertices_[i])) return false;
  }
  return true;
}

Eigen::Index affine_dimension(const std::vector<RationalPoint>& points) {
  if (points.empty()) throw GeometryError("affine_dimension: empty point set");
  if (points.size() == 1) return 0;
  return static_cast<Eigen::Index>(rank(difference_matrix(points)));
}

VPolytope hull(const std::vector<RationalPoint>& points) {
  if (points.empty()) throw GeometryError("hull: empty point list");
  const Eigen::Index d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw GeometryError("hull: points of different dimensions");
  }
  std::vector<RationalPoint> pts = points;
  sort_unique(pts);

  VPolytope out;
  out.dim_ = d;
  out.affine_dim_ = affine_dimension(pts);
  if (out.affine_dim_ == 0) {
    out.vertices_ = {pts.front()};
    return out;
  }
  if (out.affine_dim_ == d) {
    FullHull h = full_hull(pts);
    out.vertices_ = std::move(h.vertices);
    out.facets_ = std::move(h.facets);
    return out;
  }
  // Lower-dimensional: hull of an injective coordinate projection.
  const auto cols = independent_columns(difference_matrix(pts), out.affine_dim_);
  std::vector<RationalPoint> projected;
  projected.reserve(pts.size());
  for (const auto& p : pts) projected.push_back(restrict_to(p, cols));
  std::vector<RationalPoint> sorted_projection = projected;
  sort_unique(sorted_projection);
  const FullHull h = full_hull(sorted_projection);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (const auto& v : h.vertices) {
      if (equal(projected[i], v)) {
        out.vertices_.push_back(pts[i]);
        break;
      }
    }
  }
  return out;
}

VPolytope hull(const std::vector<LatticePoint>& points) {
  std::vector<RationalPoint> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rational(p));
  return hull(pts);
}

std::vector<Facet> facets(const VPolytope& p) {
  if (!p.full_dimensional()) throw GeometryError("facets: polytope is not full-dimensional");
  return p.facet_list();
}

HPolyhedron v_to_h(const VPolytope& p) {
  if (!p.full_dimensional()) throw GeometryError("v_to_h: polytope is not full-dimensional");
  HPolyhedron h{p.dim(), {}};
  for (const auto& f : p.facet_list()) h.rows.push_back({f.normal, f.rhs});
  return h;
}

VPolytope h_to_v(const HPolyhedron& p) {
  const Eigen::Index d = p.dim;
  if (d <= 0) throw GeometryError("h_to_v: dimension must be positive");
  std::vector<HRow> rows;
  for (const auto& r : p.rows) {
    if (r.normal.size() != d) throw GeometryError("h_to_v: row of wrong dimension");
    if (r.normal.isZero()) {
      if (r.rhs < 0) throw GeometryError("h_to_v: empty polyhedron");
      continue;
    }
    rows.push_back(r);
  }
  const auto m = static_cast<std::size_t>(rows.size());
  RatMatrix a(static_cast<Eigen::Index>(m), d);
  for (std::size_t i = 0; i < m; ++i) a.row(static_cast<Eigen::Index>(i)) = rows[i].normal.cast<Rat>().transpose();
  if (m == 0 || static_cast<Eigen::Index>(rank(a)) < d) throw UnboundedPolyhedron();

  auto satisfies_all = [&](const RationalPoint& x) {
    for (const auto& r : rows) {
      if (dot(r.normal, x) > r.rhs) return false;
    }
    return true;
  };

  // Extreme rays of the recession cone {y : A y <= 0} come from (d-1)-subsets.
  if (d == 1) {
    bool pos = false, neg = false;
    for (const auto& r : rows) {
      if (r.normal(0) > 0) pos = true;
      if (r.normal(0) < 0) neg = true;
    }
    if (!pos || !neg) throw UnboundedPolyhedron();
  } else {
    std::vector<std::size_t> idx(static_cast<std::size_t>(d - 1));
    const std::size_t k = idx.size();
    if (m >= k) {
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        RatMatrix sub(static_cast<Eigen::Index>(k), d);
        for (std::size_t t = 0; t < k; ++t) sub.row(static_cast<Eigen::Index>(t)) = a.row(static_cast<Eigen::Index>(idx[t]));
        const RatVector y = orthogonal_complement(sub);
        if (!y.isZero()) {
          for (int sign : {1, -1}) {
            bool ray = true;
            for (std::size_t i = 0; i < m && ray; ++i) {
              const Rat v = (a.row(static_cast<Eigen::Index>(i)) * y)(0) * Rat(sign);
              if (v > 0) ray = false;
            }
            if (ray) throw UnboundedPolyhedron();
          }
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }

  std::vector<RationalPoint> verts;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d));
  const std::size_t k = idx.size();
  if (m >= k) {
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      RatMatrix sub(d, d);
      RatVector rhs(d);
      for (std::size_t t = 0; t < k; ++t) {
        sub.row(static_cast<Eigen::Index>(t)) = a.row(static_cast<Eigen::Index>(idx[t]));
        rhs(static_cast<Eigen::Index>(t)) = rows[idx[t]].rhs;
      }
      if (auto x = solve(sub, rhs); x && satisfies_all(*x)) verts.push_back(*x);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (verts.empty()) throw GeometryError("h_to_v: empty polyhedron");
  return hull(verts);
}

std::vector<std::vector<RationalPoint>> triangulate(const VPolytope& p) {
  if (!p.full_dimensional()) throw GeometryError("triangulate: polytope is not full-dimensional");
  const Eigen::Index d = p.dim();
  if (d == 1) return {{p.vertex(0), p.vertex(1)}};
  std::vector<std::vector<RationalPoint>> out;
  const RationalPoint& apex = p.vertex(0);
  for (const auto& f : p.facet_list()) {
    if (std::find(f.vertex_indices.begin(), f.vertex_indices.end(), 0u) != f.vertex_indices.end()) {
      continue;
    }
    // Drop a coordinate on which the facet normal is nonzero; the projection
    // is then injective on the facet hyperplane.
    Eigen::Index drop = 0;
    while (f.normal(drop) == 0) ++drop;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index c = 0; c < d; ++c) {
      if (c != drop) keep.push_back(c);
    }
    std::vector<RationalPoint> originals;
    std::vector<RationalPoint> projected;
    for (std::size_t vi : f.vertex_indices) {
      originals.push_back(p.vertex(vi));
      projected.push_back(restrict_to(p.vertex(vi), keep));
    }
    for (const auto& simplex : triangulate(hull(projected))) {
      std::vector<RationalPoint> lifted{apex};
      for (const auto& q : simplex) {
        for (std::size_t t = 0; t < projected.size(); ++t) {
          if (equal(projected[t], q)) {
            lifted.push_back(originals[t]);
            break;
          }
        }
      }
      out.push_back(std::move(lifted));
    }
  }
  return out;
}

namespace {

Rat factorial(Eigen::Index n) {
  Rat f(1);
  for (Eigen::Index i = 2; i <= n; ++i) f *= Rat(i);
  return f;
}

Rat full_volume(const VPolytope& p) {
  const Eigen::Index d = p.dim();
  Rat total(0);
  for (const auto& s : triangulate(p)) {
    RatMatrix edges(d, d);
    for (Eigen::Index i = 0; i < d; ++i) edges.col(i) = s[static_cast<std::size_t>(i) + 1] - s[0];
    total += boost::multiprecision::abs(det(edges));
  }
  return total / factorial(d);
}

}  // namespace

Rat volume(const VPolytope& p) {
  if (p.empty()) throw GeometryError("volume: empty polytope");
  if (p.full_dimensional()) return full_volume(p);
  const Eigen::Index k = p.affine_dim();
  if (k == 0) return Rat(1);
  const Eigen::Index d = p.dim();
  // Basis of the integer vectors parallel to aff(p).
  const RatMatrix diffs = difference_matrix(p.vertices());
  IntMatrix int_diffs(diffs.rows(), d);
  for (Eigen::Index i = 0; i < diffs.rows(); ++i) {
    if (diffs.row(i).isZero()) {
      int_diffs.row(i).setZero();
    } else {
      int_diffs.row(i) = clear_denominators(RatVector(diffs.row(i).transpose())).transpose();
    }
  }
  const IntMatrix normals = integer_kernel(int_diffs);             // d x (d-k)
  const IntMatrix basis = integer_kernel(IntMatrix(normals.transpose()));  // d x k
  const RatMatrix rb = basis.cast<Rat>();
  const auto rows = independent_columns(RatMatrix(rb.transpose()), k);
  RatMatrix square(k, k);
  for (Eigen::Index t = 0; t < k; ++t) square.row(t) = rb.row(rows[static_cast<std::size_t>(t)]);
  const RatMatrix inv = *inverse(square);
  std::vector<RationalPoint> coords;
  for (const auto& v : p.vertices()) {
    coords.push_back(RationalPoint(inv * restrict_to(RationalPoint(v - p.vertex(0)), rows)));
  }
  return full_volume(hull(coords));
}

VPolytope project_drop_last(const VPolytope& p) {
  if (p.dim() < 2) throw GeometryError("project_drop_last: dimension must be at least 2");
  std::vector<RationalPoint> pts;
  for (const auto& v : p.vertices()) pts.push_back(v.head(p.dim() - 1));
  return hull(pts);
}

VPolytope transform(const VPolytope& p, const AffineUnimodularMap& t) {
  std::vector<RationalPoint> pts;
  for (const auto& v : p.vertices()) pts.push_back(apply_map(t, v));
  return hull(pts);
}

bool is_integral(const VPolytope& p) {
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [](const RationalPoint& v) { return latfree::is_integral(v); });
}

Int precision(const VPolytope& p) {
  Int s(1);
  for (const auto& v : p.vertices()) {
    for (Eigen::Index i = 0; i < v.size(); ++i) s = lcm(s, denominator(v(i)));
  }
  return s;
}

std::vector<LatticePoint> integer_vertices(const VPolytope& p) {
  if (!is_integral(p)) throw GeometryError("polytope is not integral");
  std::vector<LatticePoint> out;
  for (const auto& v : p.vertices()) out.push_back(to_integer(v));
  return out;
}

bool contains(const VPolytope& p, const RationalPoint& x) {
  if (!p.full_dimensional()) throw GeometryError("contains: polytope is not full-dimensional");
  return std::all_of(p.facet_list().begin(), p.facet_list().end(),
                     [&](const Facet& f) { return dot(f.normal, x) <= f.rhs; });
}

}  // namespace latfree
