// Lattice statistics and lattice-freeness predicates for rational polytopes
// with respect to the scaled lattice sZ^d.

#ifndef LATFREE_LATTICE_HPP
#define LATFREE_LATTICE_HPP

#include "latfree/arith.hpp"
#include "latfree/polytope.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace latfree {

/// The lattice sZ^d; its dual is (1/s)Z^d.
class LatticeSpec {
 public:
  LatticeSpec() = default;
  explicit LatticeSpec(Int s) : s_(std::move(s)) {
    if (s_ < 1) throw ArithmeticError("lattice scale must be a positive integer");
  }
  explicit LatticeSpec(long s) : LatticeSpec(Int(s)) {}

  const Int& scale() const { return s_; }
  bool contains(const LatticePoint& x) const;

 private:
  Int s_{1};
};

enum class Region { Interior, Boundary, All };

/// Lattice points of p in the given region, sorted lexicographically.
/// Interior and boundary are taken in the ambient space, so a
/// lower-dimensional p has no interior points.
std::vector<LatticePoint> lattice_points(const VPolytope& p, const LatticeSpec& spec,
                                         Region region);

/// Lattice points in the relative interior (any intrinsic dimension).
std::vector<LatticePoint> relint_lattice_points(const VPolytope& p, const LatticeSpec& spec);

/// First interior lattice point in scan order, if any.
std::optional<LatticePoint> find_interior_point(const VPolytope& p, const LatticeSpec& spec);

bool is_latticefree(const VPolytope& p, const LatticeSpec& spec);

/// One pass over the bounding box of a full-dimensional polytope sorting
/// every lattice point into the interior, the boundary, and the relative
/// interiors of the facets (in facet_list() order).
struct PointClassification {
  std::vector<LatticePoint> interior;
  std::vector<LatticePoint> boundary;
  std::vector<std::vector<LatticePoint>> facet_relint;
};
PointClassification classify_lattice_points(const VPolytope& p, const LatticeSpec& spec);

/// Maximality among all lattice-free convex sets: lattice-free and a
/// lattice point in the relative interior of every facet.
struct ConvexMaximality {
  bool latticefree = false;
  bool maximal = false;
  std::optional<LatticePoint> interior_witness;
  /// One entry per facet (facet_list() order); nullopt marks a facet
  /// without relative-interior lattice points.
  std::vector<std::optional<LatticePoint>> facet_witnesses;

  std::size_t witnessed_facets() const;
};
ConvexMaximality is_maximal_latticefree_convex(const VPolytope& p, const LatticeSpec& spec);

/// Radius-bounded search for an integral lattice-free enlargement. The
/// verdict only covers candidate vertices within `radius` of the bounding
/// box of p.
struct IntegralMaximality {
  bool maximal_within_radius = false;
  Int radius;
  std::optional<LatticePoint> witness;
};

/// 2 * ceil(lattice width) + s.
Int default_search_radius(const VPolytope& p, const LatticeSpec& spec);

IntegralMaximality is_maximal_integral_latticefree(const VPolytope& p, const LatticeSpec& spec,
                                                   std::optional<Int> radius = std::nullopt);

/// w(p, u) = max u.x - min u.x over p.
Rat width_along(const VPolytope& p, const IntVector& u);

/// Lattice width with respect to sZ^d: min over nonzero integer u of
/// w(p, u) / s. The direction is the first minimiser found: coordinate
/// directions e1..ed first, then the bounded box in odometer order. Width is
/// rational because s > 1 allows fractional values.
struct LatticeWidth {
  Rat width;
  IntVector direction;
};
LatticeWidth lattice_width(const VPolytope& p, const LatticeSpec& spec = LatticeSpec());

/// Pick's identity for an integral polygon.
struct PickCheck {
  Rat area;
  Int interior;
  Int boundary;
  bool holds = false;
};
PickCheck pick_check(const VPolytope& p);

/// Number of distinct residues mod 2. Only defined for s = 1.
std::size_t parity_classes(const std::vector<LatticePoint>& points,
                           const LatticeSpec& spec = LatticeSpec());

struct LatticeReport {
  std::vector<LatticePoint> interior_points;
  std::vector<LatticePoint> boundary_points;
  std::vector<std::vector<LatticePoint>> facet_relint_points;
  Rat width;
  IntVector width_witness;
  /// Parity classes of all lattice points of p; only for s = 1.
  std::optional<std::size_t> parity_class_count;
  bool is_latticefree = false;
  bool is_maximal_convex = false;
};
LatticeReport analyze(const VPolytope& p, const LatticeSpec& spec = LatticeSpec());

}  // namespace latfree

#endif  // LATFREE_LATTICE_HPP
