#include "latfree/catalog.hpp"
#include "latfree/lattice.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <map>

using namespace latfree;

namespace {

RationalPoint thirds(long x, long y, long den) {
  RationalPoint p(2);
  p << Rat(x) / den, Rat(y) / den;
  return p;
}

}  // namespace

TEST_CASE("entries by id") {
  CHECK(get("M6").polytope == test::poly({{0, 0, 0}, {3, 0, 0}, {1, 3, 0}, {2, 0, 3}}));
  CHECK(get("R4").polytope == test::poly({{0, 0}, {2, 1}, {1, 2}}));
  const auto& m9 = get("M9");
  CHECK(m9.family == Family::Pyramid);
  CHECK(m9.polytope == test::poly({{-1, 0, 0}, {0, -1, 0}, {2, 0, 0}, {0, 2, 0}, {1, 1, 3}}));
  CHECK_THROWS_AS(get("M13"), CatalogError);
  CHECK(m3_entries().size() == 12);
  CHECK(entries_with_prefix("Fig-quad2-").size() == 10);
  CHECK(entries_with_prefix("Fig-tria2-").size() == 3);
  CHECK(entries_with_prefix("R").size() == 4);
  CHECK(maximal_classes(2).size() == 1);
  CHECK(maximal_classes(4).empty());
}

TEST_CASE("family structure of the three-dimensional classes") {
  std::map<Family, int> count;
  for (const auto* e : m3_entries()) ++count[e->family];
  CHECK(count[Family::Simplex] == 7);
  CHECK(count[Family::Pyramid] == 2);
  CHECK(count[Family::Prism] == 2);
  CHECK(count[Family::Parallelepiped] == 1);

  for (const auto* e : m3_entries()) {
    const auto& p = e->polytope;
    CAPTURE(e->id);
    switch (e->family) {
      case Family::Simplex:
        CHECK(p.vertex_count() == 4);
        break;
      case Family::Pyramid: {
        // One quadrilateral facet; the remaining vertex is the apex.
        int quads = 0;
        for (const auto& f : p.facet_list()) quads += f.vertex_indices.size() == 4;
        CHECK(p.vertex_count() == 5);
        CHECK(quads == 1);
        break;
      }
      case Family::Prism: {
        std::vector<std::vector<RationalPoint>> tri;
        for (const auto& f : p.facet_list()) {
          if (f.vertex_indices.size() != 3) continue;
          std::vector<RationalPoint> pts;
          for (auto i : f.vertex_indices) pts.push_back(p.vertex(i));
          tri.push_back(pts);
        }
        REQUIRE(tri.size() == 2);
        // Translates: the same shape after moving the lex-least vertex to o.
        auto normalise = [](std::vector<RationalPoint> pts) {
          std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
          const RationalPoint o = pts[0];
          for (auto& x : pts) x -= o;
          return pts;
        };
        const auto a = normalise(tri[0]), b = normalise(tri[1]);
        for (std::size_t i = 0; i < 3; ++i) CHECK(equal(a[i], b[i]));
        break;
      }
      case Family::Parallelepiped:
        CHECK(p.vertex_count() == 8);
        CHECK(p.facet_list().size() == 6);
        CHECK(volume(p) == 4);
        break;
      default:
        FAIL("unexpected family");
    }
  }
}

TEST_CASE("expected statistics are reproduced") {
  const LatticeSpec z;
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    const auto& p = e.polytope;
    if (p.full_dimensional()) {
      const auto c = classify_lattice_points(p, z);
      CHECK(c.interior.size() == e.expected.interior);
      CHECK(c.boundary.size() == e.expected.boundary);
      CHECK(p.facet_list().size() == e.expected.facets);
      CHECK(lattice_width(p, z).width == e.expected.width);
    } else {
      const auto rel = relint_lattice_points(p, z).size();
      CHECK(rel == e.expected.interior);
      CHECK(lattice_points(p, z, Region::All).size() - rel == e.expected.boundary);
    }
  }
}

TEST_CASE("three-dimensional classes are maximal lattice-free") {
  const LatticeSpec z;
  for (const auto* e : m3_entries()) {
    CAPTURE(e->id);
    CHECK(is_latticefree(e->polytope, z));
    const auto m = is_maximal_latticefree_convex(e->polytope, z);
    CHECK(m.maximal);
  }
}

TEST_CASE("figure records agree with the catalog") {
  for (const auto& r : figure_records()) {
    CAPTURE(r.id);
    const auto& e = get(r.id);
    CHECK(e.family == Family::Polygon);
    CHECK(e.expected.interior == r.interior);
    CHECK(e.polytope.vertex_count() == r.vertices.size());
  }
  // Figures with the same number of interior points are pairwise inequivalent.
  const auto& rs = figure_records();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      if (rs[i].interior != rs[j].interior) continue;
      CAPTURE(rs[i].id);
      CAPTURE(rs[j].id);
      CHECK_FALSE(equivalent(get(rs[i].id).polytope, get(rs[j].id).polytope, Int(1)));
    }
  }
  CHECK(std::count_if(rs.begin(), rs.end(), [](const auto& r) { return r.interior == 1; }) == 16);
}

TEST_CASE("classify finds catalog entries") {
  const auto c = classify(test::poly({{3, 1}, {5, 1}, {3, 3}}), true);
  REQUIRE(c);
  CHECK(c->entry->id == "M^2");
  CHECK(verify_witness(c->witness, test::poly({{3, 1}, {5, 1}, {3, 3}}), c->entry->polytope));
  CHECK_FALSE(classify(test::poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}), true));
  const auto m = test::m_body(11);
  const auto hit = classify(m, true);
  REQUIRE(hit);
  CHECK(hit->entry->id == "M11");
}

TEST_CASE("y sequence") {
  const auto y = y_sequence(Int(1), 4);
  CHECK(y.terms == std::vector<Int>{2, 3, 7, 43});
  CHECK_THROWS_AS(y_sequence(Int(0), 3), ArithmeticError);
  for (long s = 1; s <= 3; ++s) {
    const auto t = y_sequence(Int(s), 6).terms;
    for (std::size_t j = 1; j < t.size(); ++j) CHECK(t[j] == t[j - 1] * t[j - 1] - t[j - 1] + 1);
    for (int d = 2; d <= 6; ++d) {
      Int bound = 1;
      const long e = 1L << (d - 2);
      for (long k = 0; k < e; ++k) bound *= (s + 1);
      CHECK(t[static_cast<std::size_t>(d - 1)] >= bound);
    }
  }
}

TEST_CASE("growth simplices") {
  CHECK(s_simplex(Int(1), 2) == test::poly({{0, 0}, {2, 0}, {0, 2}}));
  CHECK(s_simplex(Int(1), 3) == get("M1").polytope);
  for (long s = 1; s <= 3; ++s) {
    for (int d = 2; d <= 4; ++d) {
      const Int yd = y_sequence(Int(s), d).terms.back();
      Int fact = 1;
      for (int k = 2; k <= d; ++k) fact *= k;
      CHECK(volume(s_simplex(Int(s), d)) == Rat((yd - 1) * (yd - 1)) / Rat(fact * s));
    }
  }
  const LatticeSpec z;
  for (int d = 2; d <= 3; ++d) {
    const auto p = s_simplex(Int(1), d);
    CHECK(is_latticefree(p, z));
    CHECK(is_maximal_integral_latticefree(p, z).maximal_within_radius);
  }
  CHECK_THROWS_AS(s_simplex(Int(1), 1), ArithmeticError);
}

TEST_CASE("the quadrilateral Q2") {
  CHECK(q2(Int(3)) == test::poly({{0, 0}, {7, 0}, {7, 1}, {5, 5}}));
  CHECK_THROWS_AS(q2(Int(2)), ArithmeticError);
  const LatticeSpec s3(Int(3));
  const auto q = q2(Int(3));
  CHECK(is_latticefree(q, s3));
  CHECK_FALSE(is_maximal_latticefree_convex(q, s3).maximal);
  CHECK(is_maximal_integral_latticefree(q, s3, Int(4)).maximal_within_radius);
}

TEST_CASE("triangle types") {
  CHECK(classify_triangle_type(test::poly({{0, 0}, {2, 0}, {0, 2}})) == TriangleType::Type1);
  const auto t2 = hull(std::vector<RationalPoint>{thirds(0, -1, 2), thirds(0, 3, 2), thirds(4, 1, 2)});
  CHECK(classify_triangle_type(t2) == TriangleType::Type2);
  const auto t3 = hull(std::vector<RationalPoint>{thirds(4, 1, 3), thirds(1, -2, 3), thirds(-2, 4, 3)});
  CHECK(classify_triangle_type(t3) == TriangleType::Type3);
  CHECK(triangle_type_name(TriangleType::Type3) == "type 3");
  // Not maximal.
  CHECK_THROWS_AS(classify_triangle_type(test::poly({{0, 0}, {1, 0}, {0, 1}})), GeometryError);
  CHECK_THROWS_AS(classify_triangle_type(test::poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}})), GeometryError);
}
