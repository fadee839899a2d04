// Equivalence of integral polytopes modulo lattice-preserving affine maps.

#ifndef LATFREE_EQUIVALENCE_HPP
#define LATFREE_EQUIVALENCE_HPP

#include "latfree/arith.hpp"
#include "latfree/lattice.hpp"
#include "latfree/polytope.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace latfree {

/// Invariants of P under Aff(sZ^d). Lattice counts are taken with respect
/// to sZ^d; for lower-dimensional bodies "interior" means relative interior
/// and there are no facets.
struct Signature {
  Eigen::Index affine_dim = 0;
  std::size_t vertices = 0;
  std::size_t facets = 0;
  Rat volume;
  std::size_t interior = 0;
  std::size_t boundary = 0;
  std::vector<std::size_t> facet_relint;  // sorted
  Rat width;

  friend bool operator==(const Signature& a, const Signature& b);
  friend bool operator<(const Signature& a, const Signature& b);
};

Signature invariant_signature(const VPolytope& p, const Int& s = Int(1));

/// Name of the first invariant on which a and b differ, if any.
std::optional<std::string> signature_mismatch(const Signature& a, const Signature& b);

/// Sends p onto q vertexwise.
struct EquivalenceWitness {
  AffineUnimodularMap map;
};

/// Searches ordered vertex tuples of q for the image of a fixed tuple of p.
/// Both must be integral and full-dimensional in the same dimension.
std::optional<EquivalenceWitness> equivalent(const VPolytope& p, const VPolytope& q,
                                             const Int& s = Int(1));

struct CanonicalForm {
  std::vector<LatticePoint> vertices;  // sorted
  Signature signature;
  /// Lattice-preserving map sending p onto `vertices`.
  AffineUnimodularMap map;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.signature == b.signature && a.vertices.size() == b.vertices.size() &&
           std::equal(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                      [](const auto& x, const auto& y) { return latfree::equal(x, y); });
  }
};

/// Complete invariant: equal forms iff equivalent. Lower-dimensional input
/// is supported for s = 1 only.
CanonicalForm canonical_form(const VPolytope& p, const Int& s = Int(1));

/// Witness p -> q obtained from two equal canonical forms.
std::optional<EquivalenceWitness> equivalent_by_canonical_form(const VPolytope& p,
                                                               const VPolytope& q,
                                                               const Int& s = Int(1));

/// True iff applying w to the vertices of p gives exactly those of q.
bool verify_witness(const EquivalenceWitness& w, const VPolytope& p, const VPolytope& q);

/// Sorted vertex list as a string key, handy for hashing canonical forms.
std::string vertex_key(const std::vector<LatticePoint>& vertices);

}  // namespace latfree

#endif  // LATFREE_EQUIVALENCE_HPP
