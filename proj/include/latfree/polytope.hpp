// Rational polytopes in V- and H-representation.

#ifndef LATFREE_POLYTOPE_HPP
#define LATFREE_POLYTOPE_HPP

#include "latfree/arith.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace latfree {

/// Thrown by h_to_v when the inequality system has a nonzero recession
/// cone. The message is always "unbounded-polyhedron".
class UnboundedPolyhedron : public std::domain_error {
 public:
  UnboundedPolyhedron() : std::domain_error("unbounded-polyhedron") {}
};

/// Thrown for inputs outside an operation's contract (empty point lists,
/// lower-dimensional bodies where a full-dimensional one is required, ...).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// normal . x <= rhs with a primitive integer normal. For rational
/// polytopes rhs is rational; the normal is never scaled.
struct HRow {
  IntVector normal;
  Rat rhs;
};

/// A facet of a full-dimensional polytope: its outer row together with the
/// (sorted) indices of the incident vertices.
struct Facet {
  IntVector normal;
  Rat rhs;
  std::vector<std::size_t> vertex_indices;
};

/// Convex hull of finitely many rational points, stored by its vertices in
/// lexicographic order. Full-dimensional polytopes also carry their facets.
class VPolytope {
 public:
  VPolytope() = default;

  Eigen::Index dim() const { return dim_; }
  /// Dimension of the affine hull.
  Eigen::Index affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_ && dim_ > 0; }
  bool empty() const { return vertices_.empty(); }

  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const RationalPoint& vertex(std::size_t i) const { return vertices_[i]; }

  /// Facets; empty unless full-dimensional.
  const std::vector<Facet>& facet_list() const { return facets_; }

  friend bool operator==(const VPolytope& a, const VPolytope& b);

 private:
  friend VPolytope hull(const std::vector<RationalPoint>& points);

  Eigen::Index dim_ = 0;
  Eigen::Index affine_dim_ = -1;
  std::vector<RationalPoint> vertices_;
  std::vector<Facet> facets_;
};

/// Inequality description a_i . x <= b_i.
struct HPolyhedron {
  Eigen::Index dim = 0;
  std::vector<HRow> rows;
};

/// Irredundant vertex set of conv(points). Any intrinsic dimension is fine.
VPolytope hull(const std::vector<RationalPoint>& points);
VPolytope hull(const std::vector<LatticePoint>& points);

/// Facet description; requires a full-dimensional polytope.
HPolyhedron v_to_h(const VPolytope& p);

/// Vertex enumeration of a bounded system. Redundant and duplicate rows are
/// allowed. Throws UnboundedPolyhedron for a nonzero recession cone and
/// GeometryError for an empty or lower-dimensional system.
VPolytope h_to_v(const HPolyhedron& p);

/// Facets with incident vertices; requires a full-dimensional polytope.
std::vector<Facet> facets(const VPolytope& p);

/// Exact volume. Full-dimensional bodies get the Euclidean volume; a
/// k-dimensional body in R^d (k < d) is measured in its affine hull with
/// the lattice of integer vectors parallel to it having covolume 1.
Rat volume(const VPolytope& p);

/// Decomposition into simplices (vertex lists) with pairwise disjoint
/// interiors, fanned from the first vertex; full-dimensional input.
std::vector<std::vector<RationalPoint>> triangulate(const VPolytope& p);

/// Image under the projection that forgets the last coordinate.
VPolytope project_drop_last(const VPolytope& p);

/// Image of p under an affine map (vertexwise).
VPolytope transform(const VPolytope& p, const AffineUnimodularMap& t);

bool is_integral(const VPolytope& p);
/// Smallest positive s with s * p integral (lcm of coordinate denominators).
Int precision(const VPolytope& p);

/// Vertices as integer points; throws GeometryError if p is not integral.
std::vector<LatticePoint> integer_vertices(const VPolytope& p);

/// Dimension of the affine hull of a nonempty point set.
Eigen::Index affine_dimension(const std::vector<RationalPoint>& points);

/// True iff x satisfies every facet row (full-dimensional p).
bool contains(const VPolytope& p, const RationalPoint& x);

}  // namespace latfree

#endif  // LATFREE_POLYTOPE_HPP
