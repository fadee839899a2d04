#include "latfree/arith.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace latfree {

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return Int(0);
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

Int floor(const Rat& q) {
  const Int n = numerator(q);
  const Int d = denominator(q);
  Int f = n / d;
  if (f * d > n) f -= 1;
  return f;
}

Int ceil(const Rat& q) { return -floor(-q); }

bool is_integer(const Rat& q) { return denominator(q) == 1; }

std::string to_string(const Rat& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Int& n) { return n.str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Int parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s));
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw ArithmeticError("malformed rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rat(parse_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ArithmeticError("malformed rational: '" + std::string(text) + "'");
  }
  const Int d = parse_integer(den);
  if (d == 0) throw ArithmeticError("zero denominator in '" + std::string(text) + "'");
  return Rat(parse_integer(num), d);
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

IntVector to_integer(const RatVector& v) {
  IntVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integer(v(i))) throw ArithmeticError("vector has a non-integer entry");
    r(i) = numerator(v(i));
  }
  return r;
}

bool is_integral(const RatVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integer(v(i))) return false;
  }
  return true;
}

Int content(const IntVector& v) {
  Int g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

IntVector clear_denominators(const RatVector& v) {
  Int l(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, denominator(v(i)));
  IntVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = numerator(v(i) * Rat(l));
  const Int g = content(r);
  if (g == 0) throw ArithmeticError("clear_denominators: zero vector");
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) /= g;
  return r;
}

LatticePoint primitive(const LatticePoint& v) {
  const Int g = content(v);
  if (g == 0) throw ArithmeticError("primitive: zero vector");
  LatticePoint r = v;
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) /= g;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (r(i) != 0) {
      if (r(i) < 0) r = -r;
      break;
    }
  }
  return r;
}

namespace {

// Reduced row echelon form over Q; returns the rank.
std::size_t row_reduce(RatMatrix& a) {
  std::size_t r = 0;
  const Eigen::Index rows = a.rows();
  for (Eigen::Index c = 0; c < a.cols() && static_cast<Eigen::Index>(r) < rows; ++c) {
    Eigen::Index p = static_cast<Eigen::Index>(r);
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.row(p).swap(a.row(static_cast<Eigen::Index>(r)));
    const Rat pivot = a(static_cast<Eigen::Index>(r), c);
    a.row(static_cast<Eigen::Index>(r)) /= pivot;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != static_cast<Eigen::Index>(r) && a(i, c) != 0) {
        const Rat f = a(i, c);
        a.row(i) -= f * a.row(static_cast<Eigen::Index>(r));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return row_reduce(a);
}

std::size_t rank(const IntMatrix& m) { return rank(RatMatrix(m.cast<Rat>())); }

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != a.cols() || a.rows() != b.size()) {
    throw ArithmeticError("solve: shape mismatch");
  }
  const Eigen::Index n = a.rows();
  RatMatrix aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  if (row_reduce(aug) < static_cast<std::size_t>(n)) return std::nullopt;
  // A full-rank square system reduces to [I | x] unless the rank came from
  // the augmented column, which cannot happen when the left block has rank n.
  for (Eigen::Index i = 0; i < n; ++i) {
    if (aug(i, i) != 1) return std::nullopt;
  }
  return RatVector(aug.col(n));
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw ArithmeticError("inverse: matrix is not square");
  const Eigen::Index n = a.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = RatMatrix::Identity(n, n);
  row_reduce(aug);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (aug(i, i) != 1) return std::nullopt;
  }
  return RatMatrix(aug.rightCols(n));
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::Identity(m.rows(), m.rows());
  const Eigen::Index rows = h.rows();
  Eigen::Index pivot_row = 0;
  auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    h.row(i).swap(h.row(j));
    u.row(i).swap(u.row(j));
  };
  auto add_multiple = [&](Eigen::Index target, Eigen::Index source, const Int& f) {
    if (f == 0) return;
    h.row(target) -= f * h.row(source);
    u.row(target) -= f * u.row(source);
  };
  for (Eigen::Index c = 0; c < h.cols() && pivot_row < rows; ++c) {
    // Euclid on column c over rows pivot_row..rows-1.
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = pivot_row; i < rows; ++i) {
        if (h(i, c) != 0 &&
            (best < 0 || boost::multiprecision::abs(h(i, c)) <
                             boost::multiprecision::abs(h(best, c)))) {
          best = i;
        }
      }
      if (best < 0) break;
      swap_rows(pivot_row, best);
      bool done = true;
      for (Eigen::Index i = pivot_row + 1; i < rows; ++i) {
        if (h(i, c) != 0) {
          add_multiple(i, pivot_row, h(i, c) / h(pivot_row, c));
          if (h(i, c) != 0) done = false;
        }
      }
      if (done) break;
    }
    if (h(pivot_row, c) == 0) continue;
    if (h(pivot_row, c) < 0) {
      h.row(pivot_row) = -h.row(pivot_row);
      u.row(pivot_row) = -u.row(pivot_row);
    }
    for (Eigen::Index i = 0; i < pivot_row; ++i) {
      add_multiple(i, pivot_row, floor(Rat(h(i, c), h(pivot_row, c))));
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const HermiteDecomposition hd = hermite_normal_form(m.transpose());
  const Eigen::Index n = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    bool zero = true;
    for (Eigen::Index j = 0; j < hd.h.cols(); ++j) {
      if (hd.h(i, j) != 0) {
        zero = false;
        break;
      }
    }
    if (!zero) r = i + 1;
  }
  IntMatrix basis(n, n - r);
  for (Eigen::Index k = r; k < n; ++k) basis.col(k - r) = hd.u.row(k).transpose();
  return basis;
}

AffineUnimodularMap AffineUnimodularMap::identity(Eigen::Index d, const Int& s) {
  return {IntMatrix::Identity(d, d), IntVector::Zero(d), s};
}

AffineUnimodularMap AffineUnimodularMap::translation_by(const IntVector& v,
                                                        const Int& s) {
  return {IntMatrix::Identity(v.size(), v.size()), v, s};
}

AffineUnimodularMap AffineUnimodularMap::compose(
    const AffineUnimodularMap& other) const {
  if (dim() != other.dim()) throw ArithmeticError("compose: dimension mismatch");
  return {IntMatrix(linear * other.linear),
          IntVector(linear * other.translation + translation), lattice_scale};
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
  const Int d = det(linear);
  if (d != 1 && d != -1) throw ArithmeticError("inverse: map is not unimodular");
  const auto inv = latfree::inverse(RatMatrix(linear.cast<Rat>()));
  IntMatrix li(linear.rows(), linear.cols());
  for (Eigen::Index i = 0; i < li.rows(); ++i) {
    for (Eigen::Index j = 0; j < li.cols(); ++j) li(i, j) = numerator((*inv)(i, j));
  }
  return {li, IntVector(-(li * translation)), lattice_scale};
}

RationalPoint apply_map(const AffineUnimodularMap& t, const RationalPoint& p) {
  if (t.dim() != p.size()) throw ArithmeticError("apply_map: dimension mismatch");
  return RationalPoint(t.linear.cast<Rat>() * p + t.translation.cast<Rat>());
}

LatticePoint apply_map(const AffineUnimodularMap& t, const LatticePoint& p) {
  if (t.dim() != p.size()) throw ArithmeticError("apply_map: dimension mismatch");
  return LatticePoint(t.linear * p + t.translation);
}

bool is_lattice_preserving(const AffineUnimodularMap& t, const Int& s) {
  if (t.linear.rows() != t.linear.cols() || t.translation.size() != t.linear.rows()) {
    return false;
  }
  const Int d = det(t.linear);
  if (d != 1 && d != -1) return false;
  for (Eigen::Index i = 0; i < t.translation.size(); ++i) {
    if (t.translation(i) % s != 0) return false;
  }
  return true;
}

}  // namespace latfree
