#include "latfree/catalog.hpp"

#include "latfree/lattice.hpp"

#include <algorithm>
#include <string>

namespace latfree {

namespace {

VPolytope from_ints(const std::vector<std::vector<long>>& pts) {
  std::vector<LatticePoint> v;
  for (const auto& p : pts) {
    LatticePoint x(static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) x(static_cast<Eigen::Index>(i)) = Int(p[i]);
    v.push_back(x);
  }
  return hull(v);
}

VPolytope parallelepiped(const LatticePoint& u1, const LatticePoint& u2, const LatticePoint& u3) {
  std::vector<LatticePoint> pts;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) pts.push_back(LatticePoint(a * u1 + b * u2 + c * u3));
    }
  }
  return hull(pts);
}

VPolytope prism(const std::vector<std::vector<long>>& base, const LatticePoint& u) {
  std::vector<LatticePoint> pts;
  for (const auto& b : base) {
    const LatticePoint x = int_vector({b[0], b[1], 0});
    pts.push_back(x);
    pts.push_back(LatticePoint(x + u));
  }
  return hull(pts);
}

ExpectedStats stats(std::size_t i, std::size_t b, std::size_t f, long w) {
  return {i, b, f, Rat(w)};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string id, VPolytope p, Family f, ExpectedStats s, std::string note) {
    c.push_back({std::move(id), std::move(p), f, s, std::move(note)});
  };
  // Lattice statistics below come from a separate brute-force count.
  add("M1", from_ints({{0, 0, 0}, {2, 0, 0}, {0, 3, 0}, {0, 0, 6}}), Family::Simplex,
      stats(0, 23, 4, 2), "conv{o, 2e1, 3e2, 6e3}");
  add("M2", from_ints({{0, 0, 0}, {2, 0, 0}, {0, 4, 0}, {0, 0, 4}}), Family::Simplex,
      stats(0, 22, 4, 2), "conv{o, 2e1, 4e2, 4e3}");
  add("M3", from_ints({{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}}), Family::Simplex,
      stats(0, 20, 4, 3), "conv{o, 3e1, 3e2, 3e3}");
  add("M4", from_ints({{0, 0, 0}, {1, 0, 0}, {2, 4, 0}, {3, 0, 4}}), Family::Simplex,
      stats(0, 10, 4, 2), "conv{o, e1, 2e1+4e2, 3e1+4e3}");
  add("M5", from_ints({{0, 0, 0}, {1, 0, 0}, {2, 5, 0}, {3, 0, 5}}), Family::Simplex,
      stats(0, 12, 4, 3), "conv{o, e1, 2e1+5e2, 3e1+5e3}");
  add("M6", from_ints({{0, 0, 0}, {3, 0, 0}, {1, 3, 0}, {2, 0, 3}}), Family::Simplex,
      stats(0, 14, 4, 3), "conv{o, 3e1, e1+3e2, 2e1+3e3}");
  add("M7", from_ints({{0, 0, 0}, {4, 0, 0}, {1, 2, 0}, {2, 0, 4}}), Family::Simplex,
      stats(0, 18, 4, 2), "conv{o, 4e1, e1+2e2, 2e1+4e3}");
  add("M8", from_ints({{2, 0, 0}, {-2, 0, 0}, {0, 2, 0}, {0, -2, 0}, {1, 1, 2}}), Family::Pyramid,
      stats(0, 18, 5, 2), "pyramid over conv{+-2e1, +-2e2} with apex (1,1,2)");
  add("M9", from_ints({{-1, 0, 0}, {0, -1, 0}, {2, 0, 0}, {0, 2, 0}, {1, 1, 3}}), Family::Pyramid,
      stats(0, 14, 5, 3), "pyramid over conv{-e1, -e2, 2e1, 2e2} with apex (1,1,3)");
  add("M10", prism({{1, 0}, {0, 1}, {-1, -1}}, int_vector({1, 2, 3})), Family::Prism,
      stats(0, 14, 5, 3), "prism over conv{e1, e2, -(e1+e2)} with shift (1,2,3)");
  add("M11", prism({{1, 0}, {-1, 0}, {0, 2}}, int_vector({1, 0, 2})), Family::Prism,
      stats(0, 14, 5, 2), "prism over conv{+-e1, 2e2} with shift (1,0,2)");
  add("M12", parallelepiped(int_vector({-1, 1, 0}), int_vector({1, 1, 0}), int_vector({1, 1, 2})),
      Family::Parallelepiped, stats(0, 14, 6, 2),
      "parallelepiped spanned by (-1,1,0), (1,1,0), (1,1,2)");

  add("M^1", from_ints({{0}, {1}}), Family::Segment, stats(0, 2, 2, 1), "[0,1]");
  add("M^2", from_ints({{0, 0}, {2, 0}, {0, 2}}), Family::Polygon, stats(0, 6, 3, 2),
      "conv{o, 2e1, 2e2}");

  for (const auto& r : figure_records()) {
    const auto p = from_ints(r.vertices);
    add(r.id, p, Family::Polygon, {r.interior, r.boundary, p.vertex_count(), Rat(r.width)}, r.note);
  }

  add("R1", from_ints({{0, 0}, {2, 0}}), Family::Segment, stats(1, 2, 0, 0), "conv{o, 2e1}");
  add("R2", from_ints({{0, 0}, {3, 0}, {0, 2}}), Family::Polygon, stats(1, 6, 3, 2),
      "conv{o, 3e1, 2e2}");
  add("R3", from_ints({{0, 0}, {2, 0}, {1, 2}}), Family::Polygon, stats(1, 4, 3, 2),
      "conv{o, 2e1, e1+2e2}");
  add("R4", from_ints({{0, 0}, {2, 1}, {1, 2}}), Family::Polygon, stats(1, 3, 3, 2),
      "conv{o, 2e1+e2, e1+2e2}");
  return c;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Simplex: return "simplex";
    case Family::Pyramid: return "pyramid";
    case Family::Prism: return "prism";
    case Family::Parallelepiped: return "parallelepiped";
    case Family::Polygon: return "polygon";
    case Family::Segment: return "segment";
  }
  return "";
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& get(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw CatalogError("unknown catalog id: " + std::string(id));
}

std::vector<const CatalogEntry*> entries_with_prefix(std::string_view prefix) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) {
    if (std::string_view(e.id).substr(0, prefix.size()) == prefix) out.push_back(&e);
  }
  return out;
}

std::vector<const CatalogEntry*> m3_entries() {
  std::vector<const CatalogEntry*> out;
  for (int i = 1; i <= 12; ++i) out.push_back(&get("M" + std::to_string(i)));
  return out;
}

std::vector<const CatalogEntry*> maximal_classes(Eigen::Index d) {
  switch (d) {
    case 1: return {&get("M^1")};
    case 2: return {&get("M^2")};
    case 3: return m3_entries();
    default: return {};
  }
}

namespace {

const std::vector<CanonicalForm>& catalog_forms() {
  static const std::vector<CanonicalForm> forms = [] {
    std::vector<CanonicalForm> out;
    for (const auto& e : catalog()) out.push_back(canonical_form(e.polytope));
    return out;
  }();
  return forms;
}

std::vector<Classification> matches(const VPolytope& p, bool maximal_only, bool first_only) {
  std::vector<const CatalogEntry*> pool;
  if (maximal_only) pool = maximal_classes(p.dim());
  const auto form = canonical_form(p);
  const auto& all = catalog();
  const auto& forms = catalog_forms();
  std::vector<Classification> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& e = all[i];
    if (e.dimension() != p.dim()) continue;
    if (maximal_only && std::find(pool.begin(), pool.end(), &e) == pool.end()) continue;
    if (forms[i] == form) {
      out.push_back({&e, EquivalenceWitness{forms[i].map.inverse().compose(form.map)}});
      if (first_only) break;
    }
  }
  return out;
}

}  // namespace

std::optional<Classification> classify(const VPolytope& p, bool maximal_only) {
  auto m = matches(p, maximal_only, true);
  if (m.empty()) return std::nullopt;
  return m.front();
}

std::vector<Classification> classify_all(const VPolytope& p) { return matches(p, false, false); }

YSequence y_sequence(const Int& s, int d) {
  if (s < 1 || d < 1) throw ArithmeticError("y_sequence: need s >= 1 and d >= 1");
  YSequence y{s, {}};
  Int product(1);
  for (int j = 1; j <= d; ++j) {
    const Int term = j == 1 ? Int(s + 1) : Int(1 + s * product);
    y.terms.push_back(term);
    product *= term;
  }
  return y;
}

VPolytope s_simplex(const Int& s, int d) {
  if (d < 2) throw ArithmeticError("s_simplex: need d >= 2");
  const auto y = y_sequence(s, d);
  std::vector<LatticePoint> pts{LatticePoint(LatticePoint::Zero(d))};
  for (int i = 0; i < d; ++i) {
    LatticePoint e = LatticePoint::Zero(d);
    e(i) = i + 1 < d ? y.terms[static_cast<std::size_t>(i)] : Int(y.terms[static_cast<std::size_t>(i)] - 1);
    pts.push_back(e);
  }
  return hull(pts);
}

VPolytope q2(const Int& s) {
  if (s < 3) throw ArithmeticError("q2: need s >= 3");
  const Int a = 2 * s + 1, b = 2 * s - 1;
  std::vector<LatticePoint> pts;
  LatticePoint p(2);
  p << Int(0), Int(0);
  pts.push_back(p);
  p << a, Int(0);
  pts.push_back(p);
  p << a, Int(1);
  pts.push_back(p);
  p << b, b;
  pts.push_back(p);
  return hull(pts);
}

std::string_view triangle_type_name(TriangleType t) {
  switch (t) {
    case TriangleType::Type1: return "type 1";
    case TriangleType::Type2: return "type 2";
    case TriangleType::Type3: return "type 3";
  }
  return "";
}

TriangleType classify_triangle_type(const VPolytope& t) {
  if (t.dim() != 2 || !t.full_dimensional() || t.vertex_count() != 3) {
    throw GeometryError("classify_triangle_type: expected a triangle in the plane");
  }
  const LatticeSpec z;
  if (!is_maximal_latticefree_convex(t, z).maximal) {
    throw GeometryError("classify_triangle_type: triangle is not maximal lattice-free");
  }
  // Edge k is opposite vertex k.
  std::size_t relint[3];
  std::size_t on_edge[3];
  for (std::size_t k = 0; k < 3; ++k) {
    const auto e = hull(std::vector<RationalPoint>{t.vertex((k + 1) % 3), t.vertex((k + 2) % 3)});
    relint[k] = relint_lattice_points(e, z).size();
    on_edge[k] = lattice_points(e, z, Region::All).size();
  }
  if (is_integral(t) && relint[0] == 1 && relint[1] == 1 && relint[2] == 1) return TriangleType::Type1;
  if (lattice_points(t, z, Region::Boundary).size() == 3 && relint[0] == 1 && relint[1] == 1 &&
      relint[2] == 1) {
    return TriangleType::Type3;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    if (is_integral(t.vertex(k))) continue;
    // The two edges at vertex k are the ones opposite the other vertices.
    if (relint[(k + 1) % 3] == 1 && relint[(k + 2) % 3] == 1 && on_edge[k] >= 2) {
      return TriangleType::Type2;
    }
  }
  throw GeometryError("classify_triangle_type: no type matches");
}

}  // namespace latfree
