#include "latfree/closed_form.hpp"
#include "latfree/lattice.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace latfree;

namespace {

PyramidSpec spec(PyramidFamily f, long a1, long a2, long a3) {
  return make_pyramid_spec(f, int_vector({a1, a2, a3}));
}

}  // namespace

TEST_CASE("diamond closed form examples") {
  const auto s1 = spec(PyramidFamily::Diamond, 1, 1, 2);
  CHECK_FALSE(pyramid_interior_points_closed_form(s1, PyramidFamily::Diamond).contains(int_vector({1, 1, 1})));

  const auto s2 = spec(PyramidFamily::Diamond, 2, 2, 5);
  CHECK(pyramid_interior_points_closed_form(s2, PyramidFamily::Diamond).contains(int_vector({1, 1, 2})));
}

TEST_CASE("arrow closed form example") {
  const auto s = spec(PyramidFamily::Arrow, 0, 0, 4);
  CHECK(pyramid_interior_points_closed_form(s, PyramidFamily::Arrow).contains(int_vector({0, 0, 1})));
}

TEST_CASE("apex normalization is enforced") {
  CHECK_THROWS_AS(spec(PyramidFamily::Diamond, 3, 0, 3), GeometryError);
  CHECK_THROWS_AS(spec(PyramidFamily::Arrow, -1, 0, 4), GeometryError);
  CHECK_THROWS_AS(spec(PyramidFamily::KitePrism, 0, 0, 0), GeometryError);

  PyramidSpec bad = spec(PyramidFamily::Diamond, 1, 1, 4);
  bad.apex = int_vector({5, 1, 4});
  CHECK_THROWS_AS(pyramid_interior_points_closed_form(bad, PyramidFamily::Diamond), GeometryError);
  // Base belongs to a different family.
  CHECK_THROWS_AS(pyramid_interior_points_closed_form(spec(PyramidFamily::Diamond, 1, 1, 4),
                                                      PyramidFamily::Arrow),
                  GeometryError);
}

TEST_CASE("family names round-trip") {
  for (auto f : all_pyramid_families) CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("pentagon"));
}

TEST_CASE("prism bodies recover M10 and M11") {
  const auto m10 = pyramid_body(PyramidFamily::KitePrism, spec(PyramidFamily::KitePrism, 1, 2, 3));
  CHECK(m10 == test::m_body(10));
  // The sail's interior point is e2, so the apex (1,1,2) shifts the base by (1,0,2).
  const auto m11 = pyramid_body(PyramidFamily::SailPrism, spec(PyramidFamily::SailPrism, 1, 1, 2));
  CHECK(m11 == test::m_body(11));
}

TEST_CASE("closed forms agree with enumeration [property]") {
  for (auto f : all_pyramid_families) {
    for (long a3 = 4; a3 <= 8; ++a3) {
      for (long a1 = 0; a1 < a3; ++a1) {
        for (long a2 = 0; a2 < a3; ++a2) {
          const auto s = spec(f, a1, a2, a3);
          const auto body = pyramid_body(f, s);
          const auto sys = pyramid_interior_points_closed_form(s, f);
          const auto scanned = lattice_points(body, LatticeSpec(), Region::All);
          std::size_t closed = 0;
          for (const auto& x : scanned) {
            if (sys.contains(x)) ++closed;
          }
          const auto inner = lattice_points(body, LatticeSpec(), Region::Interior);
          CAPTURE(family_name(f));
          CAPTURE(a1);
          CAPTURE(a2);
          CAPTURE(a3);
          REQUIRE(closed == inner.size());
          for (const auto& x : inner) REQUIRE(sys.contains(x));
        }
      }
    }
  }
}
