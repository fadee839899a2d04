#include "latfree/equivalence.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace latfree;
using latfree::test::m_body;
using latfree::test::poly;

namespace {

VPolytope image(const VPolytope& p, const AffineUnimodularMap& t) { return transform(p, t); }

}  // namespace

TEST_CASE("translation witness") {
  const auto m3 = m_body(3);
  const auto shifted = image(m3, AffineUnimodularMap::translation_by(int_vector({1, 1, 1})));
  const auto w = equivalent(m3, shifted);
  REQUIRE(w);
  CHECK(w->map.linear == IntMatrix::Identity(3, 3));
  CHECK(equal(w->map.translation, int_vector({1, 1, 1})));
}

TEST_CASE("volume separates M1 and M2") {
  CHECK(volume(m_body(1)) == 6);
  CHECK(volume(m_body(2)) == Rat(16, 3));
  CHECK_FALSE(equivalent(m_body(1), m_body(2)));
  const auto why = signature_mismatch(invariant_signature(m_body(1)), invariant_signature(m_body(2)));
  REQUIRE(why);
  CHECK(why->rfind("volume", 0) == 0);
}

TEST_CASE("shear witness") {
  const auto a = poly({{0, 0}, {2, 0}, {0, 2}});
  const auto b = poly({{0, 0}, {2, 0}, {2, 2}});
  const auto w = equivalent(a, b);
  REQUIRE(w);
  CHECK(verify_witness(*w, a, b));
  // The triangle has symmetries, so the search may return another witness;
  // the shear itself must verify too.
  CHECK(verify_witness(EquivalenceWitness{{test::int_matrix({{1, 1}, {0, 1}}), int_vector({0, 0}), Int(1)}},
                       a, b));
}

TEST_CASE("canonical form of the unit square is symmetry invariant") {
  const auto sq = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto c = canonical_form(sq);
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) {
      for (bool swap : {false, true}) {
        IntMatrix u = IntMatrix::Zero(2, 2);
        u(0, swap ? 1 : 0) = sx;
        u(1, swap ? 0 : 1) = sy;
        CHECK(canonical_form(image(sq, {u, int_vector({0, 0}), Int(1)})) == c);
      }
    }
  }
}

TEST_CASE("canonical form under point reflection and for distinct classes") {
  const auto m10 = m_body(10);
  const auto flipped = image(m10, {IntMatrix(-IntMatrix::Identity(3, 3)), int_vector({0, 0, 0}), Int(1)});
  CHECK(canonical_form(m10) == canonical_form(flipped));
  CHECK_FALSE(canonical_form(m_body(8)) == canonical_form(m_body(9)));
}

TEST_CASE("M bodies are pairwise inequivalent") {
  std::vector<CanonicalForm> forms;
  for (int i = 1; i <= 12; ++i) forms.push_back(canonical_form(m_body(i)));
  for (int i = 1; i <= 12; ++i) {
    for (int j = i + 1; j <= 12; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK_FALSE(equivalent(m_body(i), m_body(j)));
      CHECK_FALSE(forms[static_cast<std::size_t>(i - 1)] == forms[static_cast<std::size_t>(j - 1)]);
    }
  }
}

TEST_CASE("witnesses are sound, symmetric and compose [property]") {
  std::mt19937 rng(17);
  for (int i = 1; i <= 12; ++i) {
    const auto p = m_body(i);
    for (int k = 0; k < 20; ++k) {
      const auto t1 = test::random_map(rng, 3);
      const auto t2 = test::random_map(rng, 3);
      const auto q = image(p, t1);
      const auto r = image(q, t2);
      CAPTURE(i);
      CAPTURE(k);
      const auto w1 = equivalent(p, q);
      const auto w2 = equivalent(q, r);
      REQUIRE(w1);
      REQUIRE(w2);
      CHECK(verify_witness(*w1, p, q));
      CHECK(equivalent(q, p));
      CHECK(verify_witness(EquivalenceWitness{w2->map.compose(w1->map)}, p, r));
    }
  }
}

TEST_CASE("canonical form matches the tuple search [property]") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coord(-2, 2);
  auto random_body = [&]() {
    while (true) {
      std::vector<LatticePoint> pts;
      for (int i = 0; i < 5; ++i) pts.push_back(int_vector({coord(rng), coord(rng), coord(rng)}));
      auto p = hull(pts);
      if (p.full_dimensional()) return p;
    }
  };
  int agree_equiv = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_body();
    const auto q = trial % 2 == 0 ? image(p, test::random_map(rng, 3)) : random_body();
    const bool by_tuple = equivalent(p, q).has_value();
    const bool by_form = canonical_form(p) == canonical_form(q);
    CAPTURE(trial);
    CHECK(by_tuple == by_form);
    if (trial % 2 == 0) CHECK(by_tuple);
    if (by_tuple) ++agree_equiv;
    const auto w = equivalent_by_canonical_form(p, q);
    CHECK(w.has_value() == by_form);
    if (w) CHECK(verify_witness(*w, p, q));
  }
  CHECK(agree_equiv >= 50);
}

TEST_CASE("scaled lattices restrict translations") {
  const auto t = poly({{0, 0}, {1, 0}, {0, 1}});
  // t + (1,1) misses 2Z^2 entirely while t contains o.
  const auto moved = image(t, AffineUnimodularMap::translation_by(int_vector({1, 1})));
  CHECK(equivalent(t, moved, Int(1)));
  CHECK_FALSE(equivalent(t, moved, Int(2)));
  CHECK_FALSE(canonical_form(t, Int(2)) == canonical_form(moved, Int(2)));

  // [[-1,-1],[0,1]] followed by (2,0) sends t onto t + e1, so these agree.
  const auto e1 = image(t, AffineUnimodularMap::translation_by(int_vector({1, 0})));
  CHECK(equivalent(t, e1, Int(2)));
  CHECK(canonical_form(t, Int(2)) == canonical_form(e1, Int(2)));
  const auto far = image(t, AffineUnimodularMap::translation_by(int_vector({2, -4})));
  const auto w = equivalent(t, far, Int(2));
  REQUIRE(w);
  CHECK(is_lattice_preserving(w->map, Int(2)));
  CHECK(canonical_form(t, Int(2)) == canonical_form(far, Int(2)));
}

TEST_CASE("lower-dimensional canonical forms") {
  const auto a = poly({{0, 0}, {2, 0}});
  const auto b = poly({{1, 1}, {3, 3}});
  const auto c = poly({{0, 0}, {1, 0}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK_FALSE(canonical_form(a) == canonical_form(c));
  const auto w = equivalent_by_canonical_form(a, b);
  REQUIRE(w);
  CHECK(verify_witness(*w, a, b));
  CHECK_THROWS_AS(canonical_form(a, Int(2)), GeometryError);
  CHECK_THROWS_AS(equivalent(a, b), GeometryError);
}

TEST_CASE("dimension mismatch is an error") {
  CHECK_THROWS_AS(equivalent(m_body(1), poly({{0, 0}, {1, 0}, {0, 1}})), GeometryError);
}
