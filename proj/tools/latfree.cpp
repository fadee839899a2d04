// latfree: command-line front end. Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.

#include "latfree/catalog.hpp"
#include "latfree/enumeration.hpp"
#include "latfree/equivalence.hpp"
#include "latfree/io.hpp"
#include "latfree/lattice.hpp"
#include "latfree/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace latfree;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string show(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v(i));
  os << ')';
  return os.str();
}

std::string show(const IntVector& v) { return show(to_rational(v)); }

std::string show(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

void print_map(const AffineUnimodularMap& m) {
  std::cout << "U = " << show(m.linear) << "\n";
  std::cout << "t = " << show(m.translation) << "\n";
}

void write_json(const fs::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

int cmd_check(const std::string& file, std::optional<long> scale_opt) {
  const auto f = load_polytope_file(file);
  const Int s = scale_opt ? Int(*scale_opt) : f.scale;
  if (s < 1) throw ParseError("--scale must be positive");
  const LatticeSpec spec(s);
  const auto p = to_polytope(f);
  std::cout << "dimension: " << p.dim() << " (affine " << p.affine_dim() << "); vertices: " << p.vertex_count() << "\n";
  std::cout << "integral: " << (is_integral(p) ? "yes" : "no") << "; precision: " << precision(p) << "; scale: " << s
            << "\n";
  const auto inner = p.full_dimensional() ? lattice_points(p, spec, Region::Interior) : std::vector<LatticePoint>{};
  if (!inner.empty()) {
    std::cout << "lattice-free: no; interior point: " << show(inner.front()) << "\n";
  } else if (!p.full_dimensional()) {
    std::cout << "lattice-free: yes; maximal: no (not full-dimensional)\n";
  } else {
    const auto m = is_maximal_latticefree_convex(p, spec);
    std::size_t witnessed = 0;
    for (const auto& w : m.facet_witnesses) witnessed += w.has_value();
    if (m.maximal) {
      std::cout << "maximal lattice-free: yes; facet witnesses: " << witnessed << "\n";
    } else {
      const std::size_t missing = m.facet_witnesses.size() - witnessed;
      std::optional<IntegralMaximality> im;
      if (is_integral(p)) im = is_maximal_integral_latticefree(p, spec);
      if (im && im->maximal_within_radius) {
        std::cout << "lattice-free: yes; maximal (convex): no\n";
      } else {
        std::cout << "lattice-free: yes; maximal: no\n";
      }
      std::cout << "facets without a relative-interior lattice point: " << missing << " of "
                << m.facet_witnesses.size() << "\n";
      if (im) {
        std::cout << "maximal (integral, radius " << im->radius << "): " << (im->maximal_within_radius ? "yes" : "no");
        if (im->witness) std::cout << "; enlarge by " << show(*im->witness);
        std::cout << "\n";
      }
    }
  }
  const auto w = lattice_width(p, spec);
  std::cout << "lattice width: " << to_string(w.width);
  if (w.direction.size() > 0) std::cout << "; direction: " << show(w.direction);
  std::cout << "\n";
  return kOk;
}

int cmd_classify(const std::string& file) {
  const auto p = to_polytope(load_polytope_file(file));
  if (!is_integral(p)) throw GeometryError("classify needs an integral polytope");
  const auto found = classify_all(p);
  if (found.empty()) {
    std::cout << "not in catalog\n";
    return kOk;
  }
  const auto& first = found.front();
  const auto maximal = maximal_classes(p.dim());
  const bool is_max = std::find(maximal.begin(), maximal.end(), first.entry) != maximal.end();
  std::cout << first.entry->id << (is_max ? "-representative" : "") << "\n";
  std::cout << "family: " << family_name(first.entry->family) << "; " << first.entry->note << "\n";
  if (found.size() > 1) {
    std::cout << "also equivalent to:";
    for (std::size_t i = 1; i < found.size(); ++i) std::cout << ' ' << found[i].entry->id;
    std::cout << "\n";
  }
  std::cout << "witness (maps the input onto " << first.entry->id << "):\n";
  print_map(first.witness.map);
  return kOk;
}

struct EnumerateArgs {
  std::string task;
  std::optional<long> height_min, height_max;
  std::vector<long> box;
  std::vector<long> center;
  unsigned jobs = 1;
  std::optional<std::size_t> expect;
  bool no_expect = false;
  std::string out;
};

int cmd_enumerate(const EnumerateArgs& a) {
  const auto kind = parse_task(a.task);
  if (!kind) throw ParseError("unknown task \"" + a.task + "\"");
  auto t = default_task(*kind);
  if (a.height_min) t.height_min = *a.height_min;
  if (a.height_max) t.height_max = *a.height_max;
  if (!a.box.empty()) {
    t.box_min = a.box[0];
    t.box_max = a.box[1];
  }
  if (!a.center.empty()) t.r2_center = int_vector({a.center[0], a.center[1]});
  t.jobs = a.jobs;
  if (a.expect) t.expected = *a.expect;
  if (a.no_expect) t.expected.reset();
  if (t.height_min > t.height_max || t.box_min > t.box_max) throw ParseError("empty parameter range");

  const auto r = run(t);
  const int status = r.matches_expected() ? kOk : kFailed;
  std::cout << "task: " << task_name(t.kind) << "\n";
  std::cout << "candidates examined: " << r.candidates_examined << "\n";
  std::cout << "classes: " << r.survivors.size();
  if (t.expected) std::cout << " (expected " << *t.expected << ")";
  std::cout << "\n";
  for (const auto& s : r.survivors) {
    std::cout << "  " << s.catalog_id.value_or("unlabelled");
    if (!s.origin.empty()) std::cout << "  from " << s.origin;
    std::cout << "\n";
  }
  std::cout << std::fixed << std::setprecision(2) << "time: " << r.seconds << " s\n";

  fs::path dir = a.out.empty() ? data_dir().value_or(fs::path(".")) : fs::path(a.out);
  fs::create_directories(dir);
  const std::string stem(task_name(t.kind));
  write_json(dir / (stem + ".manifest.json"), to_json(manifest_for(r, status)));
  write_json(dir / (stem + ".survivors.json"), survivors_json(r));
  std::cout << "wrote " << (dir / (stem + ".manifest.json")).string() << "\n";
  return status;
}

int cmd_equiv(const std::string& fa, const std::string& fb, long scale) {
  if (scale < 1) throw ParseError("--scale must be positive");
  const Int s(scale);
  const auto p = to_polytope(load_polytope_file(fa));
  const auto q = to_polytope(load_polytope_file(fb));
  if (p.dim() != q.dim()) throw GeometryError("dimension mismatch");
  const bool full = p.full_dimensional() && q.full_dimensional();
  const auto w = full ? equivalent(p, q, s) : equivalent_by_canonical_form(p, q, s);
  if (w) {
    std::cout << "equivalent\n";
    print_map(w->map);
    return kOk;
  }
  const auto why = signature_mismatch(invariant_signature(p, s), invariant_signature(q, s));
  std::cout << "inequivalent: " << why.value_or("no lattice-preserving affine map matches the vertices") << "\n";
  return kOk;
}

std::vector<CatalogEntry> load_catalog(const std::string& explicit_path) {
  fs::path path = explicit_path;
  if (path.empty()) {
    if (const auto d = data_dir(); d && fs::exists(*d / "catalog.json")) path = *d / "catalog.json";
  }
  if (path.empty()) return catalog();
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  std::cout << "catalog: " << path.string() << "\n";
  return parse_catalog(j);
}

int cmd_verify(const std::string& catalog_path, long scale, unsigned jobs) {
  if (scale < 1) throw ParseError("--scale must be positive");
  const auto entries = load_catalog(catalog_path);
  VerifyOptions opt;
  opt.scale = Int(scale);
  opt.jobs = jobs;
  const auto items = verify_catalog(entries, opt);
  std::size_t failed = 0;
  std::cout << std::fixed << std::setprecision(2);
  for (const auto& it : items) {
    failed += !it.passed;
    std::cout << (it.passed ? "[PASS] " : "[FAIL] ") << "criterion " << it.criterion << ": " << it.name << " ("
              << it.seconds << " s)";
    if (!it.detail.empty()) std::cout << "  " << it.detail;
    std::cout << "\n";
  }
  if (failed) {
    std::cout << failed << " of " << items.size() << " checks failed\n";
    return kFailed;
  }
  std::cout << "all " << items.size() << " checks passed\n";
  return kOk;
}

int cmd_export(const std::string& out) {
  const auto j = catalog_json(catalog());
  fs::path path = out;
  if (path.empty()) {
    if (const auto d = data_dir()) {
      fs::create_directories(*d);
      path = *d / "catalog.json";
    }
  }
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json(path, j);
    std::cerr << "wrote " << path.string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal lattice-free polytopes: checks, classification and enumeration"};
  app.require_subcommand(1);

  std::string file, file_b, catalog_path, out;
  std::optional<long> scale_opt;
  long scale = 1;
  unsigned jobs = 1;

  auto* check = app.add_subcommand("check", "Report integrality, lattice-freeness, maximality and width");
  check->add_option("file", file, "Polytope JSON file")->required();
  check->add_option("--scale", scale_opt, "Lattice scale s (default: the file's)");

  auto* classify_cmd = app.add_subcommand("classify", "Find the catalog entry equivalent to an integral polytope");
  classify_cmd->add_option("file", file, "Polytope JSON file")->required();

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Run a search task and write a manifest");
  enumerate->add_option("task", ea.task, "pyramids, simplices, polygons-i1, quads-i2, triangles-i2, r2-sets, maximal-polygons")
      ->required();
  enumerate->add_option("--height-min", ea.height_min, "Smallest apex height (sweeps)");
  enumerate->add_option("--height-max", ea.height_max, "Largest apex height (sweeps)");
  enumerate->add_option("--box", ea.box, "MIN MAX of the search box")->expected(2);
  enumerate->add_option("--center", ea.center, "X Y of the r2-sets center")->expected(2);
  enumerate->add_option("--jobs", ea.jobs, "Worker threads for the sweeps")->check(CLI::Range(1u, 256u));
  enumerate->add_option("--expect", ea.expect, "Override the expected class count");
  enumerate->add_flag("--no-expect", ea.no_expect, "Skip the class count comparison");
  enumerate->add_option("--out", ea.out, "Output directory (default: $LATFREE_DATA_DIR or .)");

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two polytopes");
  equiv->add_option("file_a", file, "First polytope")->required();
  equiv->add_option("file_b", file_b, "Second polytope")->required();
  equiv->add_option("--scale", scale, "Lattice scale s");

  auto* verify = app.add_subcommand("verify-catalog", "Run every catalog and acceptance check");
  verify->add_option("--scale", scale, "Scale for the growth-simplex and Q2 checks");
  verify->add_option("--catalog", catalog_path, "Catalog JSON (default: $LATFREE_DATA_DIR/catalog.json or built in)");
  verify->add_option("--jobs", jobs, "Worker threads for the sweeps")->check(CLI::Range(1u, 256u));

  auto* exp = app.add_subcommand("export-catalog", "Write the catalog as JSON");
  exp->add_option("--out", out, "Output file (default: $LATFREE_DATA_DIR/catalog.json or stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file, scale_opt);
    if (*classify_cmd) return cmd_classify(file);
    if (*enumerate) return cmd_enumerate(ea);
    if (*equiv) return cmd_equiv(file, file_b, scale);
    if (*verify) return cmd_verify(catalog_path, scale, jobs);
    if (*exp) return cmd_export(out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
