// JSON polytope files, catalog export and run manifests. Rationals are
// always written as exact strings; floats are rejected on input.

#ifndef LATFREE_IO_HPP
#define LATFREE_IO_HPP

#include "latfree/arith.hpp"
#include "latfree/catalog.hpp"
#include "latfree/enumeration.hpp"
#include "latfree/polytope.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latfree {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dim", "scale", "vertices"} or {"dim", "scale", "inequalities"}.
struct PolytopeFile {
  Eigen::Index dim = 0;
  Int scale{1};
  std::optional<std::vector<RationalPoint>> vertices;
  std::optional<std::vector<HRow>> inequalities;

  friend bool operator==(const PolytopeFile& a, const PolytopeFile& b);
};

/// Accepts JSON integers and strings "p" or "p/q".
Rat parse_rational(const nlohmann::json& j);
nlohmann::json rational_json(const Rat& r);

PolytopeFile parse_polytope_file(const nlohmann::json& j);
PolytopeFile parse_polytope_text(std::string_view text);
PolytopeFile load_polytope_file(const std::filesystem::path& path);
nlohmann::json to_json(const PolytopeFile& f);

/// The polytope described by f. Inequality input goes through vertex
/// enumeration, so unbounded systems throw UnboundedPolyhedron.
VPolytope to_polytope(const PolytopeFile& f);
PolytopeFile vertex_file(const VPolytope& p, const Int& scale = Int(1));

nlohmann::json to_json(const CatalogEntry& e);
nlohmann::json catalog_json(const std::vector<CatalogEntry>& entries);
/// Inverse of catalog_json; stats are read back as recorded.
std::vector<CatalogEntry> parse_catalog(const nlohmann::json& j);

/// Directory named by LATFREE_DATA_DIR, if set.
std::optional<std::filesystem::path> data_dir();

struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json counts = nlohmann::json::object();
  std::vector<std::string> survivor_ids;
  int exit_status = 0;
};

nlohmann::json to_json(const RunManifest& m);
RunManifest manifest_for(const EnumerationResult& r, int exit_status);
/// Survivors with representative vertices, canonical vertices and labels.
nlohmann::json survivors_json(const EnumerationResult& r);

}  // namespace latfree

#endif  // LATFREE_IO_HPP
