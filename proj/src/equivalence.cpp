#include "latfree/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace latfree {

namespace {

bool points_less(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const auto& x, const auto& y) { return lex_less(x, y); });
}

std::vector<LatticePoint> sorted(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  return pts;
}

Int mod_floor(const Int& a, const Int& s) {
  Int r = a % s;
  if (r < 0) r += s;
  return r;
}

// Calls visit(tuple) for every ordered tuple of `size` distinct indices into
// pts whose points are affinely independent, in lexicographic index order.
// visit returns false to stop.
void for_each_independent_tuple(const std::vector<LatticePoint>& pts, std::size_t size,
                                const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = pts.size();
  const Eigen::Index d = pts.front().size();
  std::vector<std::size_t> tuple;
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    if (tuple.size() == size) {
      if (!visit(tuple)) stop = true;
      return;
    }
    for (std::size_t i = 0; i < n && !stop; ++i) {
      if (used[i]) continue;
      if (!tuple.empty()) {
        const std::size_t k = tuple.size();
        IntMatrix e(d, static_cast<Eigen::Index>(k));
        for (std::size_t j = 1; j < k; ++j) e.col(static_cast<Eigen::Index>(j - 1)) = pts[tuple[j]] - pts[tuple[0]];
        e.col(static_cast<Eigen::Index>(k - 1)) = pts[i] - pts[tuple[0]];
        if (rank(e) < k) continue;
      }
      used[i] = true;
      tuple.push_back(i);
      rec();
      tuple.pop_back();
      used[i] = false;
    }
  };
  rec();
}

IntMatrix edge_matrix(const std::vector<LatticePoint>& pts, const std::vector<std::size_t>& tuple) {
  const Eigen::Index d = pts.front().size();
  IntMatrix e(d, static_cast<Eigen::Index>(tuple.size() - 1));
  for (std::size_t j = 1; j < tuple.size(); ++j) {
    e.col(static_cast<Eigen::Index>(j - 1)) = pts[tuple[j]] - pts[tuple[0]];
  }
  return e;
}

void require_integral(const VPolytope& p, const char* what) {
  if (p.empty()) throw GeometryError(std::string(what) + ": empty polytope");
  if (!is_integral(p)) throw GeometryError(std::string(what) + ": polytope is not integral");
}

}  // namespace

bool operator==(const Signature& a, const Signature& b) {
  return a.affine_dim == b.affine_dim && a.vertices == b.vertices && a.facets == b.facets &&
         a.volume == b.volume && a.interior == b.interior && a.boundary == b.boundary &&
         a.facet_relint == b.facet_relint && a.width == b.width;
}

bool operator<(const Signature& a, const Signature& b) {
  return std::tie(a.affine_dim, a.vertices, a.facets, a.volume, a.interior, a.boundary,
                  a.facet_relint, a.width) < std::tie(b.affine_dim, b.vertices, b.facets, b.volume,
                                                      b.interior, b.boundary, b.facet_relint, b.width);
}

Signature invariant_signature(const VPolytope& p, const Int& s) {
  const LatticeSpec spec(s);
  Signature sig;
  sig.affine_dim = p.affine_dim();
  sig.vertices = p.vertex_count();
  sig.volume = volume(p);
  if (p.full_dimensional()) {
    const auto c = classify_lattice_points(p, spec);
    sig.facets = p.facet_list().size();
    sig.interior = c.interior.size();
    sig.boundary = c.boundary.size();
    for (const auto& f : c.facet_relint) sig.facet_relint.push_back(f.size());
    std::sort(sig.facet_relint.begin(), sig.facet_relint.end());
    sig.width = lattice_width(p, spec).width;
  } else {
    const auto all = lattice_points(p, spec, Region::All).size();
    sig.interior = relint_lattice_points(p, spec).size();
    sig.boundary = all - sig.interior;
    sig.width = 0;
  }
  return sig;
}

std::optional<std::string> signature_mismatch(const Signature& a, const Signature& b) {
  if (a.affine_dim != b.affine_dim) return "dimension";
  if (a.volume != b.volume) return "volume " + to_string(a.volume) + " vs " + to_string(b.volume);
  if (a.vertices != b.vertices) {
    return "vertex count " + std::to_string(a.vertices) + " vs " + std::to_string(b.vertices);
  }
  if (a.facets != b.facets) {
    return "facet count " + std::to_string(a.facets) + " vs " + std::to_string(b.facets);
  }
  if (a.interior != b.interior) {
    return "interior points " + std::to_string(a.interior) + " vs " + std::to_string(b.interior);
  }
  if (a.boundary != b.boundary) {
    return "boundary points " + std::to_string(a.boundary) + " vs " + std::to_string(b.boundary);
  }
  if (a.facet_relint != b.facet_relint) return std::string("facet relative-interior counts");
  if (a.width != b.width) return "width " + to_string(a.width) + " vs " + to_string(b.width);
  return std::nullopt;
}

bool verify_witness(const EquivalenceWitness& w, const VPolytope& p, const VPolytope& q) {
  if (p.vertex_count() != q.vertex_count() || w.map.dim() != p.dim()) return false;
  std::vector<RationalPoint> image;
  for (const auto& v : p.vertices()) image.push_back(apply_map(w.map, v));
  std::sort(image.begin(), image.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (!equal(image[i], q.vertex(i))) return false;
  }
  return true;
}

std::optional<EquivalenceWitness> equivalent(const VPolytope& p, const VPolytope& q, const Int& s) {
  if (p.dim() != q.dim()) throw GeometryError("equivalent: dimension mismatch");
  require_integral(p, "equivalent");
  require_integral(q, "equivalent");
  if (!p.full_dimensional() || !q.full_dimensional()) {
    throw GeometryError("equivalent: polytopes must be full-dimensional");
  }
  if (!(invariant_signature(p, s) == invariant_signature(q, s))) return std::nullopt;

  const Eigen::Index d = p.dim();
  const auto pv = integer_vertices(p);
  const auto qv = integer_vertices(q);
  std::vector<std::size_t> fixed;
  for_each_independent_tuple(pv, static_cast<std::size_t>(d) + 1, [&](const auto& t) {
    fixed = t;
    return false;
  });
  const RatMatrix ep_inv = *inverse(RatMatrix(edge_matrix(pv, fixed).cast<Rat>()));
  const LatticePoint& p0 = pv[fixed[0]];

  std::optional<EquivalenceWitness> found;
  for_each_independent_tuple(qv, static_cast<std::size_t>(d) + 1, [&](const auto& t) {
    const RatMatrix a = RatMatrix(edge_matrix(qv, t).template cast<Rat>()) * ep_inv;
    IntMatrix ai(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        if (!is_integer(a(i, j))) return true;
        ai(i, j) = numerator(a(i, j));
      }
    }
    const Int det_a = det(ai);
    if (det_a != 1 && det_a != -1) return true;
    const IntVector b = qv[t[0]] - ai * p0;
    AffineUnimodularMap m{ai, b, s};
    if (!is_lattice_preserving(m, s)) return true;
    EquivalenceWitness w{m};
    if (!verify_witness(w, p, q)) return true;
    found = w;
    return false;
  });
  return found;
}

std::string vertex_key(const std::vector<LatticePoint>& vertices) {
  std::string key;
  for (const auto& v : vertices) {
    key.push_back('(');
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (i) key.push_back(',');
      key += v(i).str();
    }
    key.push_back(')');
  }
  return key;
}

CanonicalForm canonical_form(const VPolytope& p, const Int& s) {
  require_integral(p, "canonical_form");
  const Eigen::Index d = p.dim();
  const Eigen::Index k = p.affine_dim();
  if (k < d && s != 1) {
    throw GeometryError("canonical_form: lower-dimensional input requires s = 1");
  }
  const auto pv = integer_vertices(p);
  CanonicalForm best;
  bool have = false;
  if (k == 0) {
    IntVector shift(d);
    for (Eigen::Index i = 0; i < d; ++i) shift(i) = mod_floor(pv[0](i), s) - pv[0](i);
    best.map = AffineUnimodularMap::translation_by(shift, s);
    best.vertices = {apply_map(best.map, pv[0])};
    best.signature = invariant_signature(p, s);
    return best;
  }
  for_each_independent_tuple(pv, static_cast<std::size_t>(k) + 1, [&](const auto& t) {
    // U * E = H is unique in its first k rows, so the image below does not
    // depend on which U the reduction happens to return.
    const auto hd = hermite_normal_form(edge_matrix(pv, t));
    const IntMatrix& u = hd.u;
    IntVector shift = u * pv[t[0]];
    for (Eigen::Index i = 0; i < d; ++i) shift(i) = mod_floor(shift(i), s);
    AffineUnimodularMap m{u, IntVector(shift - u * pv[t[0]]), s};
    std::vector<LatticePoint> image;
    image.reserve(pv.size());
    for (const auto& v : pv) image.push_back(apply_map(m, v));
    image = sorted(std::move(image));
    if (!have || points_less(image, best.vertices)) {
      best.vertices = std::move(image);
      best.map = m;
      have = true;
    }
    return true;
  });
  best.signature = invariant_signature(p, s);
  return best;
}

std::optional<EquivalenceWitness> equivalent_by_canonical_form(const VPolytope& p, const VPolytope& q,
                                                               const Int& s) {
  if (p.dim() != q.dim()) throw GeometryError("equivalent: dimension mismatch");
  const auto cp = canonical_form(p, s);
  const auto cq = canonical_form(q, s);
  if (!(cp == cq)) return std::nullopt;
  return EquivalenceWitness{cq.map.inverse().compose(cp.map)};
}

}  // namespace latfree
