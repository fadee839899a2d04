#include "latfree/closed_form.hpp"

#include <string>

namespace latfree {

namespace {

VPolytope polygon(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<LatticePoint> v;
  for (auto p : pts) v.push_back(int_vector(p));
  return hull(v);
}

VPolytope lift(const VPolytope& base) {
  std::vector<RationalPoint> pts;
  for (const auto& v : base.vertices()) {
    RationalPoint x(3);
    x << v(0), v(1), Rat(0);
    pts.push_back(x);
  }
  return hull(pts);
}

void check_apex(const LatticePoint& a) {
  if (a.size() != 3) throw GeometryError("apex must have three coordinates");
  if (a(2) < 1 || a(0) < 0 || a(1) < 0 || a(0) >= a(2) || a(1) >= a(2)) {
    throw GeometryError("apex normalization violated: need 0 <= a1, a2 < a3");
  }
}

StrictRow row(const Int& c1, const Int& c2, const Int& c3, const Int& rhs) {
  IntVector c(3);
  c << c1, c2, c3;
  return {c, rhs};
}

}  // namespace

std::string_view family_name(PyramidFamily f) {
  switch (f) {
    case PyramidFamily::Diamond: return "diamond";
    case PyramidFamily::Arrow: return "arrow";
    case PyramidFamily::KitePrism: return "kite-prism";
    case PyramidFamily::SailPrism: return "sail-prism";
    case PyramidFamily::KiteSimplex: return "kite-simplex";
    case PyramidFamily::SailSimplex: return "sail-simplex";
  }
  return "";
}

std::optional<PyramidFamily> parse_family(std::string_view name) {
  for (auto f : all_pyramid_families) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

VPolytope family_base(PyramidFamily f) {
  switch (f) {
    case PyramidFamily::Diamond: return polygon({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    case PyramidFamily::Arrow: return polygon({{1, 0}, {0, 1}, {1, 1}, {-1, -1}});
    case PyramidFamily::KitePrism:
    case PyramidFamily::KiteSimplex: return polygon({{1, 0}, {0, 1}, {-1, -1}});
    case PyramidFamily::SailPrism:
    case PyramidFamily::SailSimplex: return polygon({{1, 0}, {-1, 0}, {0, 2}});
  }
  throw GeometryError("unknown family");
}

LatticePoint family_base_center(PyramidFamily f) {
  if (f == PyramidFamily::SailPrism || f == PyramidFamily::SailSimplex) return int_vector({0, 1});
  return int_vector({0, 0});
}

bool is_prism_family(PyramidFamily f) {
  return f == PyramidFamily::KitePrism || f == PyramidFamily::SailPrism;
}

PyramidSpec make_pyramid_spec(PyramidFamily f, const LatticePoint& apex) {
  check_apex(apex);
  return {lift(family_base(f)), apex};
}

VPolytope pyramid_body(PyramidFamily f, const PyramidSpec& spec) {
  check_apex(spec.apex);
  std::vector<RationalPoint> pts = spec.base.vertices();
  if (is_prism_family(f)) {
    const LatticePoint c = family_base_center(f);
    RationalPoint shift = to_rational(spec.apex);
    shift(0) -= c(0);
    shift(1) -= c(1);
    for (const auto& v : spec.base.vertices()) pts.push_back(v + shift);
  } else {
    pts.push_back(to_rational(spec.apex));
  }
  return hull(pts);
}

bool InteriorSystem::contains(const LatticePoint& x) const {
  if (x(2) < x3_min || x(2) > x3_max) return false;
  for (const auto& r : rows) {
    if (r.coeff.dot(x) >= r.rhs) return false;
  }
  return true;
}

InteriorSystem pyramid_interior_points_closed_form(const PyramidSpec& spec, PyramidFamily f) {
  check_apex(spec.apex);
  if (!(spec.base == lift(family_base(f)))) {
    throw GeometryError("base does not match family " + std::string(family_name(f)));
  }
  const Int& a1 = spec.apex(0);
  const Int& a2 = spec.apex(1);
  const Int& a3 = spec.apex(2);
  InteriorSystem sys;
  sys.x3_min = 1;
  sys.x3_max = a3 - 1;
  auto& r = sys.rows;
  switch (f) {
    case PyramidFamily::Diamond:
      // |a3 x1 - a1 x3| + |a3 x2 - a2 x3| < a3 - x3, split into four rows.
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          r.push_back(row(s1 * a3, s2 * a3, 1 - s1 * a1 - s2 * a2, a3));
        }
      }
      break;
    case PyramidFamily::Arrow:
      r.push_back(row(a3, 0, 1 - a1, a3));
      r.push_back(row(0, a3, 1 - a2, a3));
      r.push_back(row(a3, -2 * a3, 1 - a1 + 2 * a2, a3));
      r.push_back(row(-2 * a3, a3, 1 - a2 + 2 * a1, a3));
      break;
    case PyramidFamily::KitePrism:
      r.push_back(row(a3, -2 * a3, 2 * a2 - a1, a3));
      r.push_back(row(-2 * a3, a3, 2 * a1 - a2, a3));
      r.push_back(row(a3, a3, -(a1 + a2), a3));
      break;
    case PyramidFamily::SailPrism:
      r.push_back(row(2 * a3, a3, -(2 * a1 + a2 - 1), 2 * a3));
      r.push_back(row(-2 * a3, a3, 2 * a1 - a2 + 1, 2 * a3));
      r.push_back(row(0, -a3, a2 - 1, 0));
      break;
    case PyramidFamily::KiteSimplex:
      r.push_back(row(a3, -2 * a3, 1 + 2 * a2 - a1, a3));
      r.push_back(row(-2 * a3, a3, 1 + 2 * a1 - a2, a3));
      r.push_back(row(a3, a3, 1 - a1 - a2, a3));
      break;
    case PyramidFamily::SailSimplex:
      r.push_back(row(2 * a3, a3, 2 - 2 * a1 - a2, 2 * a3));
      r.push_back(row(-2 * a3, a3, 2 + 2 * a1 - a2, 2 * a3));
      r.push_back(row(0, -a3, a2, 0));
      break;
  }
  return sys;
}

}  // namespace latfree
