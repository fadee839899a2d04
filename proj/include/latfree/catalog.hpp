// Named polytopes: the three-dimensional classes M1..M12, their one- and
// two-dimensional counterparts, the planar figures with one or two interior
// points, the R-sets, and the growth-constant constructions.

#ifndef LATFREE_CATALOG_HPP
#define LATFREE_CATALOG_HPP

#include "latfree/arith.hpp"
#include "latfree/equivalence.hpp"
#include "latfree/polytope.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latfree {

class CatalogError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class Family { Simplex, Pyramid, Prism, Parallelepiped, Polygon, Segment };

std::string_view family_name(Family f);

/// Interior and boundary lattice points, facet count and lattice width
/// (all for s = 1; lower-dimensional entries count relative interiors).
struct ExpectedStats {
  std::size_t interior = 0;
  std::size_t boundary = 0;
  std::size_t facets = 0;
  Rat width;
};

struct CatalogEntry {
  std::string id;
  VPolytope polytope;
  Family family;
  ExpectedStats expected;
  std::string note;

  Eigen::Index dimension() const { return polytope.dim(); }
};

/// Every entry in a fixed order: M1..M12, M^1, M^2, the figure entries,
/// R1..R4.
const std::vector<CatalogEntry>& catalog();

/// Throws CatalogError for an unknown id.
const CatalogEntry& get(std::string_view id);

/// Entries whose id starts with prefix, in catalog order.
std::vector<const CatalogEntry*> entries_with_prefix(std::string_view prefix);

/// M1..M12.
std::vector<const CatalogEntry*> m3_entries();

/// Classes of maximal lattice-free integral polytopes of dimension d
/// (d = 1, 2, 3).
std::vector<const CatalogEntry*> maximal_classes(Eigen::Index d);

struct Classification {
  const CatalogEntry* entry = nullptr;
  /// Sends the classified polytope onto the entry.
  EquivalenceWitness witness;
};

/// First entry of the same dimension equivalent to p (s = 1), restricted to
/// the maximal classes when `maximal_only` is set.
std::optional<Classification> classify(const VPolytope& p, bool maximal_only = false);

/// Every equivalent entry of the same dimension, in catalog order. Some
/// entries coincide up to equivalence (R2, R3, R4 are also figures).
std::vector<Classification> classify_all(const VPolytope& p);

struct YSequence {
  Int s;
  std::vector<Int> terms;  // y_1 .. y_d
};

/// y_1 = s + 1, y_j = 1 + s * prod_{i<j} y_i. Requires s >= 1, d >= 1.
YSequence y_sequence(const Int& s, int d);

/// conv{o, y_1 e_1, ..., y_{d-1} e_{d-1}, (y_d - 1) e_d}. Requires d >= 2.
VPolytope s_simplex(const Int& s, int d);

/// conv{o, (2s+1)e1, (2s+1)e1 + e2, (2s-1)(e1 + e2)}. Requires s >= 3.
VPolytope q2(const Int& s);

enum class TriangleType { Type1, Type2, Type3 };

std::string_view triangle_type_name(TriangleType t);

/// Type of a maximal lattice-free triangle in the plane. Throws
/// GeometryError if t is not one.
TriangleType classify_triangle_type(const VPolytope& t);

/// Frozen planar figure data: id, vertices, lattice statistics from an
/// independent count, and where the record came from.
struct FigureRecord {
  std::string id;
  std::vector<std::vector<long>> vertices;
  std::size_t interior;
  std::size_t boundary;
  long width;
  std::string note;
};
const std::vector<FigureRecord>& figure_records();

}  // namespace latfree

#endif  // LATFREE_CATALOG_HPP
