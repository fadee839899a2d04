// Search engines: the three-dimensional pyramid and simplex sweeps and the
// planar classification searches.

#ifndef LATFREE_ENUMERATION_HPP
#define LATFREE_ENUMERATION_HPP

#include "latfree/arith.hpp"
#include "latfree/equivalence.hpp"
#include "latfree/polytope.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latfree {

enum class TaskKind { Pyramids, Simplices, PolygonsI1, QuadsI2, TrianglesI2, R2Sets, MaximalPolygons };

std::string_view task_name(TaskKind k);
std::optional<TaskKind> parse_task(std::string_view name);

struct EnumerationTask {
  TaskKind kind = TaskKind::PolygonsI1;
  /// Apex heights for the sweeps.
  long height_min = 4;
  long height_max = 10;
  /// Square box [box_min, box_max]^2 for polygons-i1 and maximal-polygons;
  /// abscissa range for the i = 2 searches; half-width around the center
  /// for r2-sets.
  long box_min = 0;
  long box_max = 4;
  LatticePoint r2_center = LatticePoint::Zero(2);
  unsigned jobs = 1;
  /// Expected number of classes; nullopt skips the comparison.
  std::optional<std::size_t> expected;
};

/// Parameters the classification results are checked against.
EnumerationTask default_task(TaskKind k);

struct Survivor {
  VPolytope representative;
  CanonicalForm form;
  /// Matching catalog entry, if any (first in catalog order).
  std::optional<std::string> catalog_id;
  /// Base id and apex for sweep candidates.
  std::string origin;
};

struct EnumerationResult {
  EnumerationTask task;
  std::size_t candidates_examined = 0;
  /// Pairwise inequivalent, in order of first appearance.
  std::vector<Survivor> survivors;
  /// Sweep candidates that passed the filter before deduplication.
  std::size_t raw_survivors = 0;
  double seconds = 0;

  bool matches_expected() const {
    return !task.expected || *task.expected == survivors.size();
  }
};

EnumerationResult run(const EnumerationTask& task);

/// The sweep bases: quad1-3..7 and quad2-1..10 for pyramids, tria1-1..5 and
/// tria2-1..3 for simplices.
std::vector<std::string> sweep_base_ids(TaskKind k);

/// conv(base x {0}, a) for a planar base.
VPolytope pyramid_over(const VPolytope& base, const LatticePoint& apex);

/// Members of R^2(a) before the minimality filter: segments and triangles
/// with vertex a and other vertices in a + [-r, r]^2, exactly one relative
/// interior lattice point, and no lattice points on the facet opposite a
/// besides its vertices.
std::vector<VPolytope> r2_candidates(const LatticePoint& a, long r);

/// relint(p) is contained in relint(q).
bool relint_contained(const VPolytope& p, const VPolytope& q);

}  // namespace latfree

#endif  // LATFREE_ENUMERATION_HPP
