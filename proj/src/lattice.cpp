#include "latfree/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace latfree {

bool LatticeSpec::contains(const LatticePoint& x) const {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) % s_ != 0) return false;
  }
  return true;
}

namespace {

// coeff . k <= bound for x = s k; the slack of a point is bound - coeff . k.
struct ScaledRow {
  IntVector coeff;
  Int bound;
};

std::vector<ScaledRow> scaled_rows(const VPolytope& p, const Int& s) {
  std::vector<ScaledRow> rows;
  for (const auto& f : p.facet_list()) {
    const Int scale = denominator(f.rhs) * s;
    rows.push_back({IntVector(f.normal * scale), numerator(f.rhs)});
  }
  return rows;
}

struct Box {
  IntVector lo;
  IntVector hi;
};

Box lattice_box(const std::vector<RationalPoint>& verts, const Int& s) {
  const Eigen::Index d = verts.front().size();
  Box b{IntVector(d), IntVector(d)};
  for (Eigen::Index i = 0; i < d; ++i) {
    Rat mn = verts.front()(i), mx = verts.front()(i);
    for (const auto& v : verts) {
      mn = std::min(mn, v(i));
      mx = std::max(mx, v(i));
    }
    b.lo(i) = ceil(mn / Rat(s));
    b.hi(i) = floor(mx / Rat(s));
  }
  return b;
}

Int floor_div(const Int& a, const Int& b) { return floor(Rat(a, b)); }
Int ceil_div(const Int& a, const Int& b) { return ceil(Rat(a, b)); }

// Calls visit(k, slack) for every k in the box with s k in p; visit returns
// false to stop. Points come in lexicographic order of k.
template <typename Visitor>
void scan_polytope(const std::vector<ScaledRow>& rows, const Box& box, Visitor&& visit) {
  const Eigen::Index d = box.lo.size();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (box.lo(i) > box.hi(i)) return;
  }
  const Eigen::Index last = d - 1;
  IntVector k = box.lo;
  std::vector<Int> partial(rows.size());
  std::vector<Int> slack(rows.size());
  while (true) {
    // Slack with the last coordinate set to zero, then the feasible range
    // of the last coordinate.
    Int tmin = box.lo(last), tmax = box.hi(last);
    bool feasible = true;
    for (std::size_t r = 0; r < rows.size() && feasible; ++r) {
      Int acc = rows[r].bound;
      for (Eigen::Index i = 0; i < last; ++i) acc -= rows[r].coeff(i) * k(i);
      partial[r] = acc;
      const Int& c = rows[r].coeff(last);
      if (c > 0) {
        tmax = std::min(tmax, floor_div(acc, c));
      } else if (c < 0) {
        tmin = std::max(tmin, ceil_div(acc, c));
      } else if (acc < 0) {
        feasible = false;
      }
    }
    if (feasible) {
      for (Int t = tmin; t <= tmax; ++t) {
        k(last) = t;
        for (std::size_t r = 0; r < rows.size(); ++r) slack[r] = partial[r] - rows[r].coeff(last) * t;
        if (!visit(static_cast<const IntVector&>(k), static_cast<const std::vector<Int>&>(slack))) return;
      }
    }
    // Advance the outer coordinates.
    Eigen::Index i = last - 1;
    while (i >= 0) {
      if (k(i) < box.hi(i)) {
        ++k(i);
        break;
      }
      k(i) = box.lo(i);
      --i;
    }
    if (i < 0) return;
  }
}

LatticePoint scaled(const IntVector& k, const Int& s) { return LatticePoint(k * s); }

struct LowerDimFrame {
  std::vector<Eigen::Index> cols;  // injective coordinates
  RationalPoint origin;
  RatMatrix lift;  // x = origin + lift * (y - origin_J)
  VPolytope projected;
};

LowerDimFrame lower_dim_frame(const VPolytope& p) {
  const Eigen::Index d = p.dim();
  const Eigen::Index k = p.affine_dim();
  LowerDimFrame fr;
  fr.origin = p.vertex(0);
  // k independent difference vectors.
  std::vector<RatVector> basis;
  for (std::size_t i = 1; i < p.vertex_count() && static_cast<Eigen::Index>(basis.size()) < k; ++i) {
    std::vector<RatVector> trial = basis;
    trial.push_back(p.vertex(i) - fr.origin);
    RatMatrix m(static_cast<Eigen::Index>(trial.size()), d);
    for (std::size_t t = 0; t < trial.size(); ++t) m.row(static_cast<Eigen::Index>(t)) = trial[t].transpose();
    if (rank(m) == trial.size()) basis = std::move(trial);
  }
  RatMatrix dm(d, k);  // columns are basis vectors
  for (Eigen::Index t = 0; t < k; ++t) dm.col(t) = basis[static_cast<std::size_t>(t)];
  for (Eigen::Index c = 0; c < d && static_cast<Eigen::Index>(fr.cols.size()) < k; ++c) {
    auto trial = fr.cols;
    trial.push_back(c);
    RatMatrix sub(static_cast<Eigen::Index>(trial.size()), k);
    for (std::size_t t = 0; t < trial.size(); ++t) sub.row(static_cast<Eigen::Index>(t)) = dm.row(trial[t]);
    if (rank(sub) == trial.size()) fr.cols = std::move(trial);
  }
  RatMatrix square(k, k);
  for (Eigen::Index t = 0; t < k; ++t) square.row(t) = dm.row(fr.cols[static_cast<std::size_t>(t)]);
  fr.lift = dm * (*inverse(square));
  std::vector<RationalPoint> proj;
  for (const auto& v : p.vertices()) {
    RationalPoint y(k);
    for (Eigen::Index t = 0; t < k; ++t) y(t) = v(fr.cols[static_cast<std::size_t>(t)]);
    proj.push_back(std::move(y));
  }
  fr.projected = hull(proj);
  return fr;
}

// Lattice points of a lower-dimensional p; relint_only selects the relative
// interior.
std::vector<LatticePoint> lower_dim_points(const VPolytope& p, const LatticeSpec& spec,
                                           bool relint_only) {
  std::vector<LatticePoint> out;
  const Int& s = spec.scale();
  if (p.affine_dim() == 0) {
    if (is_integral(p.vertex(0))) {
      const LatticePoint x = to_integer(p.vertex(0));
      if (spec.contains(x)) out.push_back(x);
    }
    return out;
  }
  const LowerDimFrame fr = lower_dim_frame(p);
  const auto rows = scaled_rows(fr.projected, s);
  const Box box = lattice_box(fr.projected.vertices(), s);
  RationalPoint origin_j(static_cast<Eigen::Index>(fr.cols.size()));
  for (std::size_t t = 0; t < fr.cols.size(); ++t) origin_j(static_cast<Eigen::Index>(t)) = fr.origin(fr.cols[t]);
  scan_polytope(rows, box, [&](const IntVector& k, const std::vector<Int>& slack) {
    if (relint_only && std::any_of(slack.begin(), slack.end(), [](const Int& v) { return v == 0; })) {
      return true;
    }
    const RationalPoint y = to_rational(scaled(k, s));
    const RationalPoint x = fr.origin + fr.lift * (y - origin_j);
    if (is_integral(x)) {
      const LatticePoint xi = to_integer(x);
      if (spec.contains(xi)) out.push_back(xi);
    }
    return true;
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  return out;
}

}  // namespace

PointClassification classify_lattice_points(const VPolytope& p, const LatticeSpec& spec) {
  if (!p.full_dimensional()) {
    throw GeometryError("classify_lattice_points: polytope is not full-dimensional");
  }
  const Int& s = spec.scale();
  const auto rows = scaled_rows(p, s);
  PointClassification out;
  out.facet_relint.resize(rows.size());
  scan_polytope(rows, lattice_box(p.vertices(), s), [&](const IntVector& k, const std::vector<Int>& slack) {
    std::size_t tight = 0, which = 0;
    for (std::size_t r = 0; r < slack.size(); ++r) {
      if (slack[r] == 0) {
        ++tight;
        which = r;
      }
    }
    if (tight == 0) {
      out.interior.push_back(scaled(k, s));
    } else {
      out.boundary.push_back(scaled(k, s));
      if (tight == 1) out.facet_relint[which].push_back(scaled(k, s));
    }
    return true;
  });
  return out;
}

std::vector<LatticePoint> lattice_points(const VPolytope& p, const LatticeSpec& spec, Region region) {
  if (p.empty()) return {};
  if (!p.full_dimensional()) {
    if (region == Region::Interior) return {};
    return lower_dim_points(p, spec, false);
  }
  auto c = classify_lattice_points(p, spec);
  switch (region) {
    case Region::Interior:
      return c.interior;
    case Region::Boundary:
      return c.boundary;
    case Region::All:
      break;
  }
  std::vector<LatticePoint> all = c.interior;
  all.insert(all.end(), c.boundary.begin(), c.boundary.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  return all;
}

std::vector<LatticePoint> relint_lattice_points(const VPolytope& p, const LatticeSpec& spec) {
  if (p.empty()) return {};
  if (p.full_dimensional()) return lattice_points(p, spec, Region::Interior);
  return lower_dim_points(p, spec, true);
}

std::optional<LatticePoint> find_interior_point(const VPolytope& p, const LatticeSpec& spec) {
  if (!p.full_dimensional()) return std::nullopt;
  const Int& s = spec.scale();
  std::optional<LatticePoint> found;
  scan_polytope(scaled_rows(p, s), lattice_box(p.vertices(), s),
                [&](const IntVector& k, const std::vector<Int>& slack) {
                  for (const auto& v : slack) {
                    if (v == 0) return true;
                  }
                  found = scaled(k, s);
                  return false;
                });
  return found;
}

bool is_latticefree(const VPolytope& p, const LatticeSpec& spec) {
  return !find_interior_point(p, spec).has_value();
}

std::size_t ConvexMaximality::witnessed_facets() const {
  return static_cast<std::size_t>(std::count_if(facet_witnesses.begin(), facet_witnesses.end(),
                                                [](const auto& w) { return w.has_value(); }));
}

ConvexMaximality is_maximal_latticefree_convex(const VPolytope& p, const LatticeSpec& spec) {
  if (!p.full_dimensional()) {
    throw GeometryError("is_maximal_latticefree_convex: polytope is not full-dimensional");
  }
  const Int& s = spec.scale();
  const auto rows = scaled_rows(p, s);
  ConvexMaximality out;
  out.facet_witnesses.resize(rows.size());
  scan_polytope(rows, lattice_box(p.vertices(), s), [&](const IntVector& k, const std::vector<Int>& slack) {
    std::size_t tight = 0, which = 0;
    for (std::size_t r = 0; r < slack.size(); ++r) {
      if (slack[r] == 0) {
        ++tight;
        which = r;
      }
    }
    if (tight == 0) {
      out.interior_witness = scaled(k, s);
      return false;
    }
    if (tight == 1 && !out.facet_witnesses[which]) out.facet_witnesses[which] = scaled(k, s);
    return true;
  });
  out.latticefree = !out.interior_witness.has_value();
  out.maximal = out.latticefree && out.witnessed_facets() == out.facet_witnesses.size();
  return out;
}

Rat width_along(const VPolytope& p, const IntVector& u) {
  if (p.empty()) throw GeometryError("width_along: empty polytope");
  const RatVector ur = u.cast<Rat>();
  Rat mn = ur.dot(p.vertex(0)), mx = mn;
  for (const auto& v : p.vertices()) {
    const Rat x = ur.dot(v);
    mn = std::min(mn, x);
    mx = std::max(mx, x);
  }
  return mx - mn;
}

LatticeWidth lattice_width(const VPolytope& p, const LatticeSpec& spec) {
  if (p.empty()) throw GeometryError("lattice_width: empty polytope");
  const Eigen::Index d = p.dim();
  const Rat s(spec.scale());
  if (!p.full_dimensional()) {
    // Some integer vector is orthogonal to aff(p).
    IntMatrix diffs(std::max<Eigen::Index>(1, static_cast<Eigen::Index>(p.vertex_count()) - 1), d);
    diffs.setZero();
    for (std::size_t i = 1; i < p.vertex_count(); ++i) {
      diffs.row(static_cast<Eigen::Index>(i) - 1) =
          clear_denominators(RatVector(p.vertex(i) - p.vertex(0))).transpose();
    }
    const IntMatrix ker = integer_kernel(diffs);
    return {Rat(0), primitive(IntVector(ker.col(0)))};
  }

  // Warm start from the coordinate directions.
  Rat best = -1;
  IntVector best_u;
  for (Eigen::Index i = 0; i < d; ++i) {
    IntVector e = IntVector::Zero(d);
    e(i) = 1;
    const Rat w = width_along(p, e);
    if (best < 0 || w < best) {
      best = w;
      best_u = e;
    }
  }
  // Any u with w(p, u) <= best satisfies |D u| <= best for the difference
  // matrix D of d independent edges, hence |u_j| <= best * sum_i |D^-1_ji|.
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < p.vertex_count() && static_cast<Eigen::Index>(diffs.size()) < d; ++i) {
    auto trial = diffs;
    trial.push_back(p.vertex(i) - p.vertex(0));
    RatMatrix m(static_cast<Eigen::Index>(trial.size()), d);
    for (std::size_t t = 0; t < trial.size(); ++t) m.row(static_cast<Eigen::Index>(t)) = trial[t].transpose();
    if (rank(m) == trial.size()) diffs = std::move(trial);
  }
  RatMatrix dm(d, d);
  for (Eigen::Index t = 0; t < d; ++t) dm.row(t) = diffs[static_cast<std::size_t>(t)].transpose();
  const RatMatrix inv = *inverse(dm);
  IntVector bound(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    Rat row_sum(0);
    for (Eigen::Index i = 0; i < d; ++i) row_sum += boost::multiprecision::abs(inv(j, i));
    bound(j) = floor(best * row_sum);
  }
  // The candidates are the integer points of {u : |u.(v - v')| <= best}
  // inside that box; scan them line by line.
  Box box{IntVector(-bound), bound};
  const Int l = precision(p);
  const Int limit = floor(best * Rat(l));
  std::vector<ScaledRow> rows;
  for (std::size_t i = 0; i < p.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < p.vertex_count(); ++j) {
      const RatVector diff = (p.vertex(i) - p.vertex(j)) * Rat(l);
      const IntVector c = to_integer(diff);
      rows.push_back({c, limit});
      rows.push_back({IntVector(-c), limit});
    }
  }
  scan_polytope(rows, box, [&](const IntVector& u, const std::vector<Int>&) {
    Eigen::Index lead = 0;
    while (lead < d && u(lead) == 0) ++lead;
    if (lead < d && u(lead) > 0) {
      const Rat w = width_along(p, u);
      if (w < best) {
        best = w;
        best_u = u;
      }
    }
    return true;
  });
  return {best / s, primitive(best_u)};
}

Int default_search_radius(const VPolytope& p, const LatticeSpec& spec) {
  return Int(2) * ceil(lattice_width(p, spec).width) + spec.scale();
}

IntegralMaximality is_maximal_integral_latticefree(const VPolytope& p, const LatticeSpec& spec,
                                                   std::optional<Int> radius) {
  if (!p.full_dimensional()) {
    throw GeometryError("is_maximal_integral_latticefree: polytope is not full-dimensional");
  }
  if (!is_integral(p)) throw GeometryError("is_maximal_integral_latticefree: polytope is not integral");
  if (!is_latticefree(p, spec)) {
    throw GeometryError("is_maximal_integral_latticefree: polytope is not lattice-free");
  }
  IntegralMaximality out;
  out.radius = radius ? *radius : default_search_radius(p, spec);
  const Box inner = lattice_box(p.vertices(), Int(1));
  const Eigen::Index d = p.dim();
  IntVector lo = inner.lo.array() - out.radius;
  IntVector hi = inner.hi.array() + out.radius;
  std::vector<LatticePoint> verts = integer_vertices(p);
  IntVector z = lo;
  while (true) {
    if (!contains(p, to_rational(z))) {
      std::vector<LatticePoint> pts = verts;
      pts.push_back(z);
      if (is_latticefree(hull(pts), spec)) {
        out.witness = z;
        out.maximal_within_radius = false;
        return out;
      }
    }
    Eigen::Index i = d - 1;
    while (i >= 0) {
      if (z(i) < hi(i)) {
        ++z(i);
        break;
      }
      z(i) = lo(i);
      --i;
    }
    if (i < 0) break;
  }
  out.maximal_within_radius = true;
  return out;
}

PickCheck pick_check(const VPolytope& p) {
  if (p.dim() != 2 || !p.full_dimensional()) throw GeometryError("pick_check: expected a polygon");
  if (!is_integral(p)) throw GeometryError("pick_check: polygon is not integral");
  const auto c = classify_lattice_points(p, LatticeSpec());
  PickCheck out;
  out.area = volume(p);
  out.interior = Int(c.interior.size());
  out.boundary = Int(c.boundary.size());
  out.holds = out.area == Rat(out.interior) + Rat(out.boundary, 2) - 1;
  return out;
}

std::size_t parity_classes(const std::vector<LatticePoint>& points, const LatticeSpec& spec) {
  if (spec.scale() != 1) throw ArithmeticError("parity classes are only defined for s = 1");
  std::set<std::string> classes;
  for (const auto& x : points) {
    std::string key;
    for (Eigen::Index i = 0; i < x.size(); ++i) key.push_back((x(i) % 2 == 0) ? '0' : '1');
    classes.insert(key);
  }
  return classes.size();
}

LatticeReport analyze(const VPolytope& p, const LatticeSpec& spec) {
  if (!p.full_dimensional()) throw GeometryError("analyze: polytope is not full-dimensional");
  auto c = classify_lattice_points(p, spec);
  LatticeReport r;
  r.interior_points = std::move(c.interior);
  r.boundary_points = std::move(c.boundary);
  r.facet_relint_points = std::move(c.facet_relint);
  const auto w = lattice_width(p, spec);
  r.width = w.width;
  r.width_witness = w.direction;
  if (spec.scale() == 1) {
    std::vector<LatticePoint> all = r.interior_points;
    all.insert(all.end(), r.boundary_points.begin(), r.boundary_points.end());
    r.parity_class_count = parity_classes(all, spec);
  }
  r.is_latticefree = r.interior_points.empty();
  r.is_maximal_convex =
      r.is_latticefree && std::all_of(r.facet_relint_points.begin(), r.facet_relint_points.end(),
                                      [](const auto& v) { return !v.empty(); });
  return r;
}

}  // namespace latfree
