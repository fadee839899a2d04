#include "latfree/lattice.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace latfree;
using latfree::test::m_body;
using latfree::test::poly;

namespace {

VPolytope cube() {
  return poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

// Q2(s) for s = 3.
VPolytope q2_3() { return poly({{0, 0}, {7, 0}, {7, 1}, {5, 5}}); }

VPolytope random_polygon(std::mt19937& rng, long box) {
  std::uniform_int_distribution<long> coord(0, box);
  std::uniform_int_distribution<int> count(3, 6);
  while (true) {
    std::vector<LatticePoint> pts;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) pts.push_back(int_vector({coord(rng), coord(rng)}));
    auto p = hull(pts);
    if (p.full_dimensional()) return p;
  }
}

VPolytope random_body(std::mt19937& rng, Eigen::Index d, long box) {
  std::uniform_int_distribution<long> coord(-box, box);
  while (true) {
    std::vector<LatticePoint> pts;
    for (Eigen::Index i = 0; i < d + 2; ++i) {
      LatticePoint x(d);
      for (Eigen::Index j = 0; j < d; ++j) x(j) = Int(coord(rng));
      pts.push_back(x);
    }
    auto p = hull(pts);
    if (p.full_dimensional()) return p;
  }
}

// Brute-force lattice width over a fixed box of directions.
Rat brute_width(const VPolytope& p, long range) {
  const Eigen::Index d = p.dim();
  Rat best = -1;
  IntVector u = IntVector::Constant(d, Int(-range));
  while (true) {
    if (!u.isZero()) {
      const Rat w = width_along(p, u);
      if (best < 0 || w < best) best = w;
    }
    Eigen::Index i = d - 1;
    while (i >= 0 && u(i) == range) u(i--) = -range;
    if (i < 0) break;
    ++u(i);
  }
  return best;
}

}  // namespace

TEST_CASE("lattice points of small polygons") {
  const LatticeSpec z;
  CHECK(lattice_points(poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), z, Region::All).size() == 4);

  // (1,1) lies on the edge x + y = 2, so nothing is interior.
  const auto tri = poly({{0, 0}, {2, 0}, {0, 2}});
  CHECK(lattice_points(tri, z, Region::Interior).empty());
  CHECK(lattice_points(tri, z, Region::Boundary).size() == 6);
  CHECK(lattice_points(tri, z, Region::All).size() == 6);

  const auto inner = lattice_points(poly({{0, 0}, {3, 0}, {0, 3}}), z, Region::Interior);
  REQUIRE(inner.size() == 1);
  CHECK(equal(inner[0], int_vector({1, 1})));

  CHECK(lattice_points(m_body(3), z, Region::Interior).empty());
  CHECK_FALSE(is_latticefree(poly({{0, 0}, {3, 0}, {0, 3}}), z));
}

TEST_CASE("points are sorted lexicographically") {
  const auto pts = lattice_points(poly({{0, 0}, {2, 0}, {0, 2}}), LatticeSpec(), Region::All);
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(lex_less(pts[i - 1], pts[i]));
}

TEST_CASE("rational vertices and scaled lattices") {
  // Only (1,1) is strictly inside conv{(1/2,1/2), (5/2,1/2), (1/2,5/2)}.
  const auto p = hull(std::vector<RationalPoint>{
      make_vector<Rat>({Rat(1, 2), Rat(1, 2)}), make_vector<Rat>({Rat(5, 2), Rat(1, 2)}),
      make_vector<Rat>({Rat(1, 2), Rat(5, 2)})});
  const auto inner = lattice_points(p, LatticeSpec(), Region::Interior);
  REQUIRE(inner.size() == 1);
  CHECK(equal(inner[0], int_vector({1, 1})));

  const auto big = poly({{0, 0}, {6, 0}, {0, 6}});
  const auto pts2 = lattice_points(big, LatticeSpec(2), Region::All);
  CHECK(pts2.size() == 10);
  for (const auto& x : pts2) CHECK(LatticeSpec(2).contains(x));
  CHECK(lattice_points(big, LatticeSpec(2), Region::Interior).size() == 1);
  CHECK_THROWS_AS(LatticeSpec(0), ArithmeticError);
}

TEST_CASE("Q2 for s = 3 is lattice-free but not convex-maximal") {
  const LatticeSpec s3(3);
  CHECK(is_latticefree(q2_3(), s3));
  const auto cm = is_maximal_latticefree_convex(q2_3(), s3);
  CHECK(cm.latticefree);
  CHECK_FALSE(cm.maximal);
  CHECK(cm.witnessed_facets() == 3);
}

TEST_CASE("convex maximality of three-dimensional examples") {
  const LatticeSpec z;
  const auto c = is_maximal_latticefree_convex(cube(), z);
  CHECK(c.latticefree);
  CHECK_FALSE(c.maximal);
  CHECK(c.witnessed_facets() == 0);

  const auto m8 = is_maximal_latticefree_convex(m_body(8), z);
  CHECK(m8.latticefree);
  CHECK(m8.maximal);

  const auto big = is_maximal_latticefree_convex(poly({{0, 0}, {3, 0}, {0, 3}}), z);
  CHECK_FALSE(big.latticefree);
  REQUIRE(big.interior_witness);
  CHECK(equal(*big.interior_witness, int_vector({1, 1})));
}

TEST_CASE("every M body is lattice-free") {
  for (int i = 1; i <= 12; ++i) {
    CAPTURE(i);
    CHECK(is_latticefree(m_body(i), LatticeSpec()));
  }
}

TEST_CASE("integral maximality search") {
  const auto m4 = is_maximal_integral_latticefree(m_body(4), LatticeSpec(), Int(3));
  CHECK(m4.maximal_within_radius);
  CHECK(m4.radius == 3);
  CHECK_FALSE(m4.witness);

  const auto q = is_maximal_integral_latticefree(q2_3(), LatticeSpec(3), Int(4));
  CHECK(q.maximal_within_radius);

  const auto unit = poly({{0, 0}, {1, 0}, {0, 1}});
  const auto u = is_maximal_integral_latticefree(unit, LatticeSpec(), Int(2));
  CHECK_FALSE(u.maximal_within_radius);
  REQUIRE(u.witness);
  std::vector<LatticePoint> pts = integer_vertices(unit);
  pts.push_back(*u.witness);
  const auto grown = hull(pts);
  CHECK(volume(grown) > volume(unit));
  CHECK(is_latticefree(grown, LatticeSpec()));

  CHECK_THROWS_AS(is_maximal_integral_latticefree(poly({{0, 0}, {3, 0}, {0, 3}}), LatticeSpec()),
                  GeometryError);
}

TEST_CASE("default search radius") {
  // Width 2 and s = 1 give 2 * 2 + 1.
  CHECK(default_search_radius(poly({{0, 0}, {2, 0}, {0, 2}}), LatticeSpec()) == 5);
}

TEST_CASE("lattice width examples") {
  const auto t = lattice_width(poly({{0, 0}, {2, 0}, {0, 2}}));
  CHECK(t.width == 2);
  CHECK(equal(t.direction, int_vector({1, 0})));

  CHECK(lattice_width(cube()).width == 1);
  CHECK(lattice_width(poly({{1, 0}, {0, 1}, {-1, -1}})).width == 2);
  CHECK(lattice_width(q2_3(), LatticeSpec(3)).width == Rat(5, 3));

  const auto flat = lattice_width(poly({{0, 0, 0}, {1, 1, 0}, {2, 0, 0}}));
  CHECK(flat.width == 0);
  CHECK(width_along(poly({{0, 0, 0}, {1, 1, 0}, {2, 0, 0}}), flat.direction) == 0);
}

TEST_CASE("lattice width matches brute force [property]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_body(rng, trial % 2 ? 2 : 3, 4);
    const auto w = lattice_width(p);
    CAPTURE(trial);
    CHECK(w.width == brute_width(p, 4));
    CHECK(width_along(p, w.direction) == w.width);
  }
}

TEST_CASE("lattice statistics are invariant under lattice-preserving maps [property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const long s = trial % 3 == 0 ? 2 : 1;
    const Eigen::Index d = trial % 2 ? 2 : 3;
    const LatticeSpec spec(s);
    const auto p = random_body(rng, d, 4);
    const auto t = test::random_map(rng, d, s);
    const auto q = transform(p, t);
    const auto cp = classify_lattice_points(p, spec);
    const auto cq = classify_lattice_points(q, spec);
    CAPTURE(trial);
    CHECK(cp.interior.size() == cq.interior.size());
    CHECK(cp.boundary.size() == cq.boundary.size());
    CHECK(lattice_width(p, spec).width == lattice_width(q, spec).width);
    CHECK(is_maximal_latticefree_convex(p, spec).maximal ==
          is_maximal_latticefree_convex(q, spec).maximal);
  }
}

TEST_CASE("Pick's identity") {
  const auto a = pick_check(poly({{0, 0}, {3, 0}, {0, 3}}));
  CHECK(a.area == Rat(9, 2));
  CHECK(a.interior == 1);
  CHECK(a.boundary == 9);
  CHECK(a.holds);

  const auto sq = pick_check(poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(sq.area == 1);
  CHECK(sq.interior == 0);
  CHECK(sq.boundary == 4);
  CHECK(sq.holds);

  const auto t = pick_check(poly({{0, 0}, {0, 1}, {5, -1}}));
  CHECK(t.area == Rat(5, 2));
  CHECK(t.interior == 2);
  CHECK(t.boundary == 3);
  CHECK(t.holds);

  CHECK_THROWS_AS(pick_check(m_body(1)), GeometryError);
}

TEST_CASE("Pick's identity on random polygons [property]") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_polygon(rng, 6);
    CAPTURE(trial);
    CHECK(pick_check(p).holds);
  }
}

TEST_CASE("parity classes") {
  const LatticeSpec z;
  CHECK(parity_classes(lattice_points(poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), z, Region::All)) == 4);
  CHECK(parity_classes({int_vector({0, 0}), int_vector({1, 0})}) == 2);
  CHECK(parity_classes({int_vector({0, 0}), int_vector({2, 4})}) == 1);
  CHECK_THROWS_AS(parity_classes({int_vector({0, 0})}, LatticeSpec(2)), ArithmeticError);
}

TEST_CASE("facet witnesses of a lattice-free body have distinct parities [property]") {
  // The midpoint of relative-interior points of two different facets is
  // interior, and it is integral when the two points agree mod 2.
  std::mt19937 rng(77);
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 40; ++trial) {
    const auto p = random_polygon(rng, 4);
    if (!is_latticefree(p, LatticeSpec())) continue;
    ++seen;
    std::vector<LatticePoint> witnesses;
    for (const auto& w : is_maximal_latticefree_convex(p, LatticeSpec()).facet_witnesses) {
      if (w) witnesses.push_back(*w);
    }
    CHECK(parity_classes(witnesses) == witnesses.size());
  }
  CHECK(seen > 10);

  std::vector<LatticePoint> m12;
  for (const auto& w : is_maximal_latticefree_convex(m_body(12), LatticeSpec()).facet_witnesses) {
    REQUIRE(w);
    m12.push_back(*w);
  }
  CHECK(parity_classes(m12) == 6);
}

TEST_CASE("dropping the last coordinate of an M body leaves interior points") {
  for (int i = 1; i <= 12; ++i) {
    CAPTURE(i);
    CHECK_FALSE(is_latticefree(project_drop_last(m_body(i)), LatticeSpec()));
  }
}

TEST_CASE("convex maximality agrees with pushing out facets [property]") {
  // A facet can be pushed outward without creating interior points exactly
  // when its relative interior avoids the lattice.
  std::mt19937 rng(9);
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 40; ++trial) {
    const auto p = random_polygon(rng, 4);
    if (!is_latticefree(p, LatticeSpec())) continue;
    ++seen;
    const auto verdict = is_maximal_latticefree_convex(p, LatticeSpec());
    const auto h = v_to_h(p);
    bool all_blocked = true;
    for (std::size_t f = 0; f < h.rows.size(); ++f) {
      HPolyhedron pushed = h;
      pushed.rows[f].rhs += Rat(1, 2 * denominator(h.rows[f].rhs));
      const bool blocked = !is_latticefree(h_to_v(pushed), LatticeSpec());
      CHECK(blocked == verdict.facet_witnesses[f].has_value());
      all_blocked = all_blocked && blocked;
    }
    CHECK(verdict.maximal == all_blocked);
  }
  CHECK(seen > 10);
}

TEST_CASE("convex-maximal polygons admit no integral enlargement [property]") {
  std::mt19937 rng(31);
  int maximal = 0;
  for (int trial = 0; trial < 400 && maximal < 5; ++trial) {
    const auto p = random_polygon(rng, 4);
    if (!is_latticefree(p, LatticeSpec())) continue;
    const auto c = is_maximal_latticefree_convex(p, LatticeSpec());
    const auto i = is_maximal_integral_latticefree(p, LatticeSpec(), Int(3));
    if (c.maximal) {
      ++maximal;
      CHECK(i.maximal_within_radius);
    }
    if (!i.maximal_within_radius) CHECK_FALSE(c.maximal);
  }
  CHECK(maximal > 0);
}

TEST_CASE("area and width bounds for lattice-free polygons [property]") {
  std::mt19937 rng(404);
  int wide = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto p = random_polygon(rng, 5);
    if (!is_latticefree(p, LatticeSpec())) continue;
    const Rat w = lattice_width(p).width;
    if (w <= 1) continue;
    ++wide;
    CAPTURE(trial);
    CHECK(3 * (w - 1) * (w - 1) <= 4);
    const Rat a = volume(p);
    if (w <= 2) {
      CHECK(a <= w * w / (2 * (w - 1)));
    } else {
      CHECK(a <= 2);
    }
  }
  CHECK(wide > 0);
}

TEST_CASE("relative interior points of lower-dimensional bodies") {
  const LatticeSpec z;
  const auto seg = poly({{0, 0, 0}, {2, 2, 0}});
  const auto in = relint_lattice_points(seg, z);
  REQUIRE(in.size() == 1);
  CHECK(equal(in[0], int_vector({1, 1, 0})));
  CHECK(lattice_points(seg, z, Region::All).size() == 3);
  CHECK(lattice_points(seg, z, Region::Interior).empty());

  const auto tri = poly({{0, 0, 1}, {3, 0, 1}, {0, 3, 1}});
  CHECK(relint_lattice_points(tri, z).size() == 1);
  CHECK(lattice_points(tri, z, Region::All).size() == 10);

  // A segment whose direction is not primitive in the ambient lattice.
  const auto skew = poly({{0, 0}, {4, 2}});
  CHECK(relint_lattice_points(skew, z).size() == 1);
  CHECK(relint_lattice_points(skew, LatticeSpec(2)).empty());
}

TEST_CASE("analyze bundles the statistics") {
  const auto r = analyze(m_body(3));
  CHECK(r.is_latticefree);
  CHECK(r.is_maximal_convex);
  CHECK(r.interior_points.empty());
  CHECK(r.boundary_points.size() == 20);
  CHECK(r.width == 3);
  REQUIRE(r.parity_class_count);
  CHECK(*r.parity_class_count == 8);
  CHECK_FALSE(analyze(q2_3(), LatticeSpec(3)).parity_class_count);
}
