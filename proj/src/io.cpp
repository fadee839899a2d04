#include "latfree/io.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

namespace latfree {

using nlohmann::json;

namespace {

Int parse_integer(const json& j, const char* what) {
  const Rat r = parse_rational(j);
  if (!is_integer(r)) throw ParseError(std::string(what) + ": expected an integer");
  return numerator(r);
}

json integer_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return json(v.convert_to<long long>());
  }
  return json(v.str());
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string(key) + ": expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

RationalPoint parse_point(const json& j, Eigen::Index dim) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
    throw ParseError("expected a coordinate list of length " + std::to_string(dim));
  }
  RationalPoint p(dim);
  for (Eigen::Index i = 0; i < dim; ++i) p(i) = parse_rational(j[static_cast<std::size_t>(i)]);
  return p;
}

json point_json(const RatVector& p) {
  json a = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(rational_json(p(i)));
  return a;
}

Family parse_family(const std::string& name) {
  for (auto f : {Family::Simplex, Family::Pyramid, Family::Prism, Family::Parallelepiped, Family::Polygon,
                 Family::Segment}) {
    if (family_name(f) == name) return f;
  }
  throw ParseError("unknown family \"" + name + "\"");
}

}  // namespace

bool operator==(const PolytopeFile& a, const PolytopeFile& b) {
  if (a.dim != b.dim || a.scale != b.scale) return false;
  if (a.vertices.has_value() != b.vertices.has_value()) return false;
  if (a.inequalities.has_value() != b.inequalities.has_value()) return false;
  if (a.vertices) {
    if (a.vertices->size() != b.vertices->size()) return false;
    for (std::size_t i = 0; i < a.vertices->size(); ++i) {
      if (!equal((*a.vertices)[i], (*b.vertices)[i])) return false;
    }
  }
  if (a.inequalities) {
    if (a.inequalities->size() != b.inequalities->size()) return false;
    for (std::size_t i = 0; i < a.inequalities->size(); ++i) {
      const auto& x = (*a.inequalities)[i];
      const auto& y = (*b.inequalities)[i];
      if (!equal(x.normal, y.normal) || x.rhs != y.rhs) return false;
    }
  }
  return true;
}

Rat parse_rational(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rat(Int(std::to_string(j.get<unsigned long long>())));
    return Rat(Int(std::to_string(j.get<long long>())));
  }
  if (j.is_number_float()) throw ParseError("floating-point coordinates are not accepted; use \"p/q\" strings");
  if (!j.is_string()) throw ParseError("expected an integer or a \"p/q\" string");
  static const std::regex pattern(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?)");
  const auto s = j.get<std::string>();
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) throw ParseError("malformed rational \"" + s + "\"");
  const Int num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  const Int den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  return Rat(num) / Rat(den);
}

json rational_json(const Rat& r) {
  if (is_integer(r)) return integer_json(numerator(r));
  return json(to_string(r));
}

PolytopeFile parse_polytope_file(const json& j) {
  if (!j.is_object()) throw ParseError("polytope file must be a JSON object");
  PolytopeFile f;
  const Int dim = parse_integer(field(j, "dim"), "dim");
  if (dim < 1 || dim > 64) throw ParseError("dim: expected 1..64");
  f.dim = dim.convert_to<Eigen::Index>();
  if (j.contains("scale")) f.scale = parse_integer(j["scale"], "scale");
  if (f.scale < 1) throw ParseError("scale: expected a positive integer");

  const bool has_v = j.contains("vertices"), has_h = j.contains("inequalities");
  if (has_v == has_h) throw ParseError("exactly one of \"vertices\" and \"inequalities\" is required");
  if (has_v) {
    const json& vs = j["vertices"];
    if (!vs.is_array() || vs.empty()) throw ParseError("vertices: expected a non-empty array");
    f.vertices.emplace();
    for (const auto& v : vs) f.vertices->push_back(parse_point(v, f.dim));
  } else {
    const json& hs = j["inequalities"];
    if (!hs.is_array() || hs.empty()) throw ParseError("inequalities: expected a non-empty array");
    f.inequalities.emplace();
    for (const auto& h : hs) {
      if (!h.is_object()) throw ParseError("inequalities: expected objects with \"normal\" and \"rhs\"");
      const RationalPoint n = parse_point(field(h, "normal"), f.dim);
      IntVector normal(f.dim);
      for (Eigen::Index i = 0; i < f.dim; ++i) {
        if (!is_integer(n(i))) throw ParseError("normal: expected integer entries");
        normal(i) = numerator(n(i));
      }
      f.inequalities->push_back({normal, parse_rational(field(h, "rhs"))});
    }
  }
  return f;
}

PolytopeFile parse_polytope_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_polytope_file(j);
}

PolytopeFile load_polytope_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polytope_text(ss.str());
}

json to_json(const PolytopeFile& f) {
  json j;
  j["dim"] = f.dim;
  j["scale"] = integer_json(f.scale);
  if (f.vertices) {
    json vs = json::array();
    for (const auto& v : *f.vertices) vs.push_back(point_json(v));
    j["vertices"] = vs;
  }
  if (f.inequalities) {
    json hs = json::array();
    for (const auto& h : *f.inequalities) {
      hs.push_back({{"normal", point_json(to_rational(h.normal))}, {"rhs", rational_json(h.rhs)}});
    }
    j["inequalities"] = hs;
  }
  return j;
}

VPolytope to_polytope(const PolytopeFile& f) {
  if (f.vertices) return hull(*f.vertices);
  return h_to_v(HPolyhedron{f.dim, *f.inequalities});
}

PolytopeFile vertex_file(const VPolytope& p, const Int& scale) {
  PolytopeFile f;
  f.dim = p.dim();
  f.scale = scale;
  f.vertices = p.vertices();
  return f;
}

json to_json(const CatalogEntry& e) {
  json vs = json::array();
  for (const auto& v : e.polytope.vertices()) vs.push_back(point_json(v));
  return {{"id", e.id},
          {"family", std::string(family_name(e.family))},
          {"dim", e.dimension()},
          {"vertices", vs},
          {"stats",
           {{"interior", e.expected.interior},
            {"boundary", e.expected.boundary},
            {"facets", e.expected.facets},
            {"width", rational_json(e.expected.width)}}},
          {"note", e.note}};
}

json catalog_json(const std::vector<CatalogEntry>& entries) {
  json a = json::array();
  for (const auto& e : entries) a.push_back(to_json(e));
  return {{"format", "latfree-catalog"}, {"version", 1}, {"entries", a}};
}

std::vector<CatalogEntry> parse_catalog(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw ParseError("catalog: expected an object with an \"entries\" array");
  }
  std::vector<CatalogEntry> out;
  for (const auto& e : j["entries"]) {
    CatalogEntry c;
    c.id = field(e, "id").get<std::string>();
    c.family = parse_family(field(e, "family").get<std::string>());
    const Int dim = parse_integer(field(e, "dim"), "dim");
    if (dim < 1) throw ParseError("dim: expected a positive integer");
    std::vector<RationalPoint> vs;
    for (const auto& v : field(e, "vertices")) vs.push_back(parse_point(v, dim.convert_to<Eigen::Index>()));
    if (vs.empty()) throw ParseError(c.id + ": no vertices");
    c.polytope = hull(vs);
    const json& s = field(e, "stats");
    c.expected = {count_field(s, "interior"), count_field(s, "boundary"), count_field(s, "facets"),
                  parse_rational(field(s, "width"))};
    if (e.contains("note")) c.note = e["note"].get<std::string>();
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::filesystem::path> data_dir() {
  const char* d = std::getenv("LATFREE_DATA_DIR");
  if (!d || !*d) return std::nullopt;
  return std::filesystem::path(d);
}

json to_json(const RunManifest& m) {
  return {{"command", m.command},
          {"parameters", m.parameters},
          {"counts", m.counts},
          {"survivor_ids", m.survivor_ids},
          {"exit_status", m.exit_status}};
}

RunManifest manifest_for(const EnumerationResult& r, int exit_status) {
  const auto& t = r.task;
  RunManifest m;
  m.command = "enumerate " + std::string(task_name(t.kind));
  m.parameters = {{"height_min", t.height_min},
                  {"height_max", t.height_max},
                  {"box", {t.box_min, t.box_max}},
                  {"r2_center", point_json(to_rational(t.r2_center))},
                  {"jobs", t.jobs}};
  m.counts = {{"candidates_examined", r.candidates_examined},
              {"raw_survivors", r.raw_survivors},
              {"classes", r.survivors.size()},
              {"expected", t.expected ? json(*t.expected) : json(nullptr)}};
  for (std::size_t k = 0; k < r.survivors.size(); ++k) {
    m.survivor_ids.push_back(r.survivors[k].catalog_id.value_or("unlabelled-" + std::to_string(k + 1)));
  }
  m.exit_status = exit_status;
  return m;
}

json survivors_json(const EnumerationResult& r) {
  json a = json::array();
  for (const auto& s : r.survivors) {
    json vs = json::array(), cs = json::array();
    for (const auto& v : s.representative.vertices()) vs.push_back(point_json(v));
    for (const auto& v : s.form.vertices) cs.push_back(point_json(to_rational(v)));
    a.push_back({{"catalog_id", s.catalog_id ? json(*s.catalog_id) : json(nullptr)},
                 {"origin", s.origin},
                 {"vertices", vs},
                 {"canonical_vertices", cs}});
  }
  return {{"task", std::string(task_name(r.task.kind))}, {"survivors", a}};
}

}  // namespace latfree
