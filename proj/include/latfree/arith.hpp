// Exact scalar, vector and matrix arithmetic.
//
// Every quantity in latfree is exact: integers are arbitrary precision and
// rationals are kept in lowest terms by GMP. Dense vectors and matrices are
// plain Eigen types over these scalars, so the usual Eigen expressions
// (products, blocks, casts) work without any floating point involved.

#ifndef LATFREE_ARITH_HPP
#define LATFREE_ARITH_HPP

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latfree {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Int>;
using RatVector = Vector<Rat>;
using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

/// A point of Z^d.
using LatticePoint = IntVector;
/// A point of Q^d.
using RationalPoint = RatVector;

/// Raised on violated preconditions of the arithmetic layer (shape
/// mismatches, zero vectors where a direction is required, ...).
class ArithmeticError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Scalars

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
/// Floor of a rational.
Int floor(const Rat& q);
/// Ceiling of a rational.
Int ceil(const Rat& q);
bool is_integer(const Rat& q);
Int numerator(const Rat& q);
Int denominator(const Rat& q);

/// "p/q" (or "p" when q = 1).
std::string to_string(const Rat& q);
std::string to_string(const Int& n);
/// Parses "p", "-p" or "p/q"; throws ArithmeticError on malformed text or
/// a zero denominator.
Rat parse_rational(std::string_view text);

// ---------------------------------------------------------------------------
// Vectors

template <typename Scalar>
Vector<Scalar> make_vector(std::initializer_list<Scalar> entries) {
  Vector<Scalar> v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

inline IntVector int_vector(std::initializer_list<long> entries) {
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long e : entries) v(i++) = Int(e);
  return v;
}

inline RatVector rat_vector(std::initializer_list<long> entries) {
  RatVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long e : entries) v(i++) = Rat(e);
  return v;
}

RatVector to_rational(const IntVector& v);
/// Throws ArithmeticError if some entry is not an integer.
IntVector to_integer(const RatVector& v);
bool is_integral(const RatVector& v);

/// Lexicographic three-way comparison; shorter vectors order first on a
/// common prefix.
template <typename Scalar>
std::strong_ordering lex_compare(const Vector<Scalar>& a,
                                 const Vector<Scalar>& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return std::strong_ordering::less;
    if (b(i) < a(i)) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

template <typename Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  return lex_compare(a, b) == std::strong_ordering::less;
}

template <typename Scalar>
bool equal(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  return a.size() == b.size() && (a.size() == 0 || (a.array() == b.array()).all());
}

/// Smallest integer multiple of a nonzero rational vector with coprime
/// entries, keeping its direction (no sign normalization).
IntVector clear_denominators(const RatVector& v);

/// The primitive vector on the line through v: v / gcd(v), with the first
/// nonzero entry made positive. Throws ArithmeticError for v = 0.
LatticePoint primitive(const LatticePoint& v);

/// Componentwise gcd of the entries (0 for the zero vector).
Int content(const IntVector& v);

// ---------------------------------------------------------------------------
// Matrices

/// Exact determinant by fraction-free (Bareiss) elimination. Works over any
/// exact integral domain; throws ArithmeticError for non-square input.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ArithmeticError("det: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank over Q.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Unique solution of a square nonsingular system, or nullopt when the
/// matrix is singular.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Inverse of a square nonsingular rational matrix (nullopt if singular).
std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Row-style Hermite normal form: unimodular U with U * m = H, where H is
/// in row echelon form, pivots are positive and entries above each pivot
/// lie in [0, pivot). H is unique for the row lattice of m.
struct HermiteDecomposition {
  IntMatrix h;
  IntMatrix u;
};
HermiteDecomposition hermite_normal_form(const IntMatrix& m);

/// Basis (as columns) of the lattice { x in Z^n : m x = 0 }.
IntMatrix integer_kernel(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Affine maps preserving a scaled lattice

/// x -> linear * x + translation. A map preserves sZ^d iff |det linear| = 1
/// and translation lies in sZ^d; lattice_scale records the s the map was
/// built for.
struct AffineUnimodularMap {
  IntMatrix linear;
  IntVector translation;
  Int lattice_scale{1};

  static AffineUnimodularMap identity(Eigen::Index d, const Int& s = Int(1));
  static AffineUnimodularMap translation_by(const IntVector& v,
                                            const Int& s = Int(1));

  Eigen::Index dim() const { return linear.rows(); }

  /// (*this) o other, i.e. apply other first.
  AffineUnimodularMap compose(const AffineUnimodularMap& other) const;
  /// Inverse map; throws ArithmeticError when |det| != 1.
  AffineUnimodularMap inverse() const;
};

RationalPoint apply_map(const AffineUnimodularMap& t, const RationalPoint& p);
LatticePoint apply_map(const AffineUnimodularMap& t, const LatticePoint& p);

bool is_lattice_preserving(const AffineUnimodularMap& t, const Int& s);

}  // namespace latfree

#endif  // LATFREE_ARITH_HPP
