#include "latfree/catalog.hpp"
#include "latfree/io.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>

using namespace latfree;
using nlohmann::json;

namespace {

const std::filesystem::path data_root = LATFREE_TEST_DATA;

bool same_vertices(const VPolytope& a, const VPolytope& b) {
  if (a.vertices().size() != b.vertices().size()) return false;
  for (const auto& v : a.vertices()) {
    const auto& bv = b.vertices();
    if (std::none_of(bv.begin(), bv.end(), [&](const RationalPoint& w) { return equal(v, w); })) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational(json(7)) == Rat(7));
  CHECK(parse_rational(json(-3)) == Rat(-3));
  CHECK(parse_rational(json("3/2")) == Rat(3) / Rat(2));
  CHECK(parse_rational(json("-4/6")) == Rat(-2) / Rat(3));
  CHECK(parse_rational(json("+5")) == Rat(5));
  CHECK(parse_rational(json("123456789012345678901234567890")) == Rat(Int("123456789012345678901234567890")));
  CHECK_THROWS_AS(parse_rational(json(0.5)), ParseError);
  CHECK_THROWS_AS(parse_rational(json("1/0")), ParseError);
  CHECK_THROWS_AS(parse_rational(json("1.5")), ParseError);
  CHECK_THROWS_AS(parse_rational(json("a/b")), ParseError);
  CHECK_THROWS_AS(parse_rational(json("1/-2")), ParseError);
  CHECK_THROWS_AS(parse_rational(json(nullptr)), ParseError);

  CHECK(rational_json(Rat(4)) == json(4));
  CHECK(rational_json(Rat(-1) / Rat(3)) == json("-1/3"));
  const Rat big(Int("123456789012345678901234567890"));
  CHECK(parse_rational(rational_json(big)) == big);
}

TEST_CASE("every example file round-trips") {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_root / "polytopes")) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    const auto f = load_polytope_file(entry.path());
    const auto g = parse_polytope_file(to_json(f));
    CHECK(f == g);
    CHECK(to_json(g) == to_json(f));
    ++files;
  }
  CHECK(files >= 20);
}

TEST_CASE("malformed polytope files") {
  CHECK_THROWS_AS(parse_polytope_text("{"), ParseError);
  CHECK_THROWS_AS(parse_polytope_text("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_polytope_text(R"({"vertices": [[0, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_polytope_text(R"({"dim": 2})"), ParseError);
  CHECK_THROWS_AS(parse_polytope_text(
                      R"({"dim": 1, "vertices": [[0]], "inequalities": [{"normal": [1], "rhs": 0}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_polytope_text(R"({"dim": 2, "vertices": [[0, 0.5]]})"), ParseError);
  CHECK_THROWS_AS(parse_polytope_text(R"({"dim": 2, "vertices": [[0, 0, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_polytope_text(R"({"dim": 2, "vertices": []})"), ParseError);
  CHECK_THROWS_AS(parse_polytope_text(R"({"dim": 2, "scale": 0, "vertices": [[0, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_polytope_text(R"({"dim": 2, "inequalities": [{"normal": ["1/2", 0], "rhs": 1}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_polytope_text(R"({"dim": 2, "inequalities": [{"normal": [1, 0]}]})"), ParseError);
}

TEST_CASE("inequality input") {
  const auto diamond = to_polytope(load_polytope_file(data_root / "polytopes" / "diamond_h.json"));
  CHECK(same_vertices(diamond, test::poly({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
  CHECK_THROWS_AS(to_polytope(load_polytope_file(data_root / "polytopes" / "unbounded_h.json")),
                  UnboundedPolyhedron);

  const auto tri = load_polytope_file(data_root / "polytopes" / "type2_triangle.json");
  REQUIRE(tri.vertices);
  CHECK((*tri.vertices)[0](1) == Rat(-1) / Rat(2));
  CHECK(tri.scale == 1);

  const auto q = load_polytope_file(data_root / "polytopes" / "q2_s3.json");
  CHECK(q.scale == 3);
  CHECK(same_vertices(to_polytope(q), q2(Int(3))));
}

TEST_CASE("vertex files") {
  const auto m8 = test::m_body(8);
  const auto f = vertex_file(m8);
  CHECK(same_vertices(to_polytope(parse_polytope_file(to_json(f))), m8));
  CHECK(same_vertices(to_polytope(load_polytope_file(data_root / "polytopes" / "m8.json")), get("M8").polytope));
}

TEST_CASE("catalog export round-trips") {
  const json j = catalog_json(catalog());
  CHECK(j["format"] == "latfree-catalog");
  const auto back = parse_catalog(json::parse(j.dump()));
  REQUIRE(back.size() == catalog().size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    const auto& a = catalog()[k];
    const auto& b = back[k];
    CAPTURE(a.id);
    CHECK(a.id == b.id);
    CHECK(a.family == b.family);
    CHECK(same_vertices(a.polytope, b.polytope));
    CHECK(a.expected.interior == b.expected.interior);
    CHECK(a.expected.boundary == b.expected.boundary);
    CHECK(a.expected.facets == b.expected.facets);
    CHECK(a.expected.width == b.expected.width);
    CHECK(a.note == b.note);
  }
  CHECK_THROWS_AS(parse_catalog(json::object()), ParseError);
  json bad = j;
  bad["entries"][0]["family"] = "torus";
  CHECK_THROWS_AS(parse_catalog(bad), ParseError);
}

TEST_CASE("run manifests") {
  EnumerationTask t = default_task(TaskKind::Simplices);
  EnumerationResult r;
  r.task = t;
  r.candidates_examined = 12;
  r.raw_survivors = 3;
  Survivor s;
  s.representative = get("M4").polytope;
  s.form = canonical_form(s.representative);
  s.catalog_id = "M4";
  s.origin = "Fig-tria1-1 apex (1,2,4)";
  r.survivors.push_back(s);
  s.catalog_id.reset();
  r.survivors.push_back(s);

  const json m = to_json(manifest_for(r, 1));
  CHECK(m["command"] == "enumerate simplices");
  CHECK(m["exit_status"] == 1);
  CHECK(m["counts"]["candidates_examined"] == 12);
  CHECK(m["counts"]["classes"] == 2);
  CHECK(m["counts"]["expected"] == 2);
  CHECK(m["survivor_ids"] == json({"M4", "unlabelled-2"}));
  CHECK(m["parameters"]["height_max"] == t.height_max);

  const json sv = survivors_json(r);
  CHECK(sv["task"] == "simplices");
  REQUIRE(sv["survivors"].size() == 2);
  CHECK(sv["survivors"][1]["catalog_id"].is_null());
  CHECK(sv["survivors"][0]["vertices"].size() == 4);
}

TEST_CASE("classify recovers catalog entries under random lattice maps [property]") {
  std::mt19937 rng(2024);
  const auto& entries = catalog();
  std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& e = entries[pick(rng)];
    const auto q = transform(e.polytope, test::random_map(rng, e.dimension()));
    CAPTURE(e.id);
    CAPTURE(trial);
    const auto all = classify_all(q);
    CHECK(std::any_of(all.begin(), all.end(), [&](const Classification& c) { return c.entry->id == e.id; }));
    for (const auto& c : all) CHECK(verify_witness(c.witness, q, c.entry->polytope));
    const auto first = classify(q);
    REQUIRE(first);
    CHECK(first->entry == all.front().entry);
  }
}
