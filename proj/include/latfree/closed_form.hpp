// Closed-form interior-point systems for pyramids, prisms and simplices
// over the small base polygons with one interior lattice point.

#ifndef LATFREE_CLOSED_FORM_HPP
#define LATFREE_CLOSED_FORM_HPP

#include "latfree/arith.hpp"
#include "latfree/polytope.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace latfree {

enum class PyramidFamily { Diamond, Arrow, KitePrism, SailPrism, KiteSimplex, SailSimplex };

inline constexpr std::array<PyramidFamily, 6> all_pyramid_families = {
    PyramidFamily::Diamond,    PyramidFamily::Arrow,       PyramidFamily::KitePrism,
    PyramidFamily::SailPrism,  PyramidFamily::KiteSimplex, PyramidFamily::SailSimplex};

std::string_view family_name(PyramidFamily f);
std::optional<PyramidFamily> parse_family(std::string_view name);

/// Base polygon of a family in the plane:
///   diamond conv{+-e1, +-e2}, arrow conv{e1, e2, +-(e1+e2)},
///   kite conv{e1, e2, -(e1+e2)}, sail conv{+-e1, 2e2}.
VPolytope family_base(PyramidFamily f);

/// The unique interior lattice point of the family's base.
LatticePoint family_base_center(PyramidFamily f);

bool is_prism_family(PyramidFamily f);

/// Base lifted to R^2 x {0} and an apex a with a3 > 0. For prism families
/// the apex is the interior lattice point of the top face.
struct PyramidSpec {
  VPolytope base;
  LatticePoint apex;
};

/// Throws GeometryError unless 0 <= a1, a2 < a3.
PyramidSpec make_pyramid_spec(PyramidFamily f, const LatticePoint& apex);

/// conv(base, apex) for pyramids and simplices; conv(F, F + apex - c) for
/// prisms where c is the base center.
VPolytope pyramid_body(PyramidFamily f, const PyramidSpec& spec);

/// row . x < rhs
struct StrictRow {
  IntVector coeff;
  Int rhs;
};

/// Integer points of int(P) are exactly the x with x3 in [1, a3 - 1] that
/// satisfy every strict row.
struct InteriorSystem {
  std::vector<StrictRow> rows;
  Int x3_min;
  Int x3_max;

  bool contains(const LatticePoint& x) const;
};

/// Instantiates the family's closed form at spec.apex. Throws GeometryError
/// on a violated apex normalization or a base that does not match f.
InteriorSystem pyramid_interior_points_closed_form(const PyramidSpec& spec, PyramidFamily f);

}  // namespace latfree

#endif  // LATFREE_CLOSED_FORM_HPP
