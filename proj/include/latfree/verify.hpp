// Catalog verification: the checks behind `latfree verify-catalog`, one item
// per acceptance criterion or per catalog entry.

#ifndef LATFREE_VERIFY_HPP
#define LATFREE_VERIFY_HPP

#include "latfree/arith.hpp"
#include "latfree/catalog.hpp"

#include <string>
#include <vector>

namespace latfree {

struct CheckItem {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  /// Lattice scale for the growth-simplex checks; the Q2 checks use
  /// max(scale, 3) since Q2 needs s >= 3.
  Int scale{1};
  unsigned jobs = 1;
};

/// Runs every check against `entries` (M1..M12 are looked up by id there;
/// the sweeps use the built-in figure bases).
std::vector<CheckItem> verify_catalog(const std::vector<CatalogEntry>& entries, const VerifyOptions& opt);

/// Structural test of a family tag: simplex, pyramid over a quadrilateral
/// facet, prism with two translate triangle facets, parallelepiped.
bool has_family_structure(const VPolytope& p, Family f);

}  // namespace latfree

#endif  // LATFREE_VERIFY_HPP
