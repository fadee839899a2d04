#include "latfree/verify.hpp"

#include "latfree/closed_form.hpp"
#include "latfree/enumeration.hpp"
#include "latfree/equivalence.hpp"
#include "latfree/lattice.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace latfree {

namespace {

using Clock = std::chrono::steady_clock;

class Runner {
 public:
  void check(int criterion, std::string name, const std::function<std::string()>& body) {
    const auto start = Clock::now();
    CheckItem item;
    item.criterion = criterion;
    item.name = std::move(name);
    try {
      item.detail = body();
      item.passed = item.detail.empty() || item.detail.rfind("ok", 0) == 0;
    } catch (const std::exception& e) {
      item.detail = std::string("exception: ") + e.what();
    }
    item.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    items_.push_back(std::move(item));
  }
  std::vector<CheckItem> take() { return std::move(items_); }

 private:
  std::vector<CheckItem> items_;
};

std::string fail(const std::string& why) { return "FAILED: " + why; }

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& id) {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::string show(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v(i));
  os << ')';
  return os.str();
}

std::vector<RationalPoint> facet_points(const VPolytope& p, const Facet& f) {
  std::vector<RationalPoint> pts;
  for (auto i : f.vertex_indices) pts.push_back(p.vertex(i));
  return pts;
}

// Vertex list moved so that its lex-least point is o, then sorted.
std::vector<RationalPoint> shape(std::vector<RationalPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  const RationalPoint o = pts.front();
  for (auto& x : pts) x -= o;
  return pts;
}

bool same_shape(const std::vector<RationalPoint>& a, const std::vector<RationalPoint>& b) {
  if (a.size() != b.size()) return false;
  const auto x = shape(a), y = shape(b);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!equal(x[i], y[i])) return false;
  }
  return true;
}

IntMatrix random_unimodular(std::mt19937& rng, Eigen::Index d) {
  IntMatrix u = IntMatrix::Identity(d, d);
  std::uniform_int_distribution<Eigen::Index> pick(0, d - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int step = 0; step < 4; ++step) {
    const Eigen::Index i = pick(rng);
    const Eigen::Index j = (i + 1 + pick(rng) % (d - 1)) % d;
    IntMatrix e = IntMatrix::Identity(d, d);
    e(i, j) = Int(coef(rng));
    IntMatrix next = e * u;
    if (next.cwiseAbs().maxCoeff() <= 3) u = next;
  }
  if (std::uniform_int_distribution<int>(0, 1)(rng)) u.row(0) = -u.row(0);
  return u;
}

VPolytope random_polygon(std::mt19937& rng, long box) {
  std::uniform_int_distribution<long> coord(0, box);
  std::uniform_int_distribution<int> count(3, 6);
  while (true) {
    std::vector<LatticePoint> pts;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) pts.push_back(int_vector({coord(rng), coord(rng)}));
    auto p = hull(pts);
    if (p.full_dimensional()) return p;
  }
}

// Area and width bounds for a lattice-free planar body; empty when they hold.
std::string area_width_violation(const VPolytope& p) {
  const Rat w = lattice_width(p, LatticeSpec()).width;
  if (w <= 1) return "";
  if (3 * (w - 1) * (w - 1) > 4) return "width " + to_string(w) + " too large";
  const Rat a = volume(p);
  if (w <= 2 ? a > w * w / (2 * (w - 1)) : a > 2) {
    return "area " + to_string(a) + " exceeds the bound for width " + to_string(w);
  }
  return "";
}

std::string expect_classes(const EnumerationResult& r, std::vector<std::string> want) {
  std::vector<std::string> got;
  for (const auto& s : r.survivors) got.push_back(s.catalog_id.value_or("?"));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  std::ostringstream os;
  os << r.survivors.size() << " classes from " << r.candidates_examined << " candidates";
  for (const auto& g : got) os << ' ' << g;
  if (got != want) return fail(os.str());
  return "ok: " + os.str();
}

std::string expect_count(const EnumerationResult& r, std::size_t want) {
  const std::string msg = std::to_string(r.survivors.size()) + " classes (expected " + std::to_string(want) + ")";
  return r.survivors.size() == want ? "ok: " + msg : fail(msg);
}

}  // namespace

bool has_family_structure(const VPolytope& p, Family f) {
  if (p.dim() != 3 || !p.full_dimensional()) return false;
  const auto& fs = p.facet_list();
  switch (f) {
    case Family::Simplex:
      return p.vertex_count() == 4;
    case Family::Pyramid: {
      if (p.vertex_count() != 5 || fs.size() != 5) return false;
      return std::count_if(fs.begin(), fs.end(), [](const auto& x) { return x.vertex_indices.size() == 4; }) == 1;
    }
    case Family::Prism: {
      if (p.vertex_count() != 6 || fs.size() != 5) return false;
      std::vector<std::vector<RationalPoint>> tri;
      for (const auto& x : fs) {
        if (x.vertex_indices.size() == 3) tri.push_back(facet_points(p, x));
      }
      return tri.size() == 2 && same_shape(tri[0], tri[1]);
    }
    case Family::Parallelepiped: {
      if (p.vertex_count() != 8 || fs.size() != 6) return false;
      const auto& v = p.vertices();
      const RationalPoint o = v.front();
      // The three neighbours of the lex-least vertex span the body.
      std::vector<RationalPoint> nbr;
      for (const auto& x : fs) {
        const auto& ix = x.vertex_indices;
        if (std::find(ix.begin(), ix.end(), std::size_t{0}) == ix.end()) continue;
        for (auto i : ix) {
          if (i == 0) continue;
          const RationalPoint d = v[i] - o;
          if (std::none_of(nbr.begin(), nbr.end(), [&](const auto& y) { return equal(y, d); })) nbr.push_back(d);
        }
      }
      for (std::size_t a = 0; a < nbr.size(); ++a) {
        for (std::size_t b = a + 1; b < nbr.size(); ++b) {
          for (std::size_t c = b + 1; c < nbr.size(); ++c) {
            std::vector<RationalPoint> box;
            for (int i = 0; i < 8; ++i) {
              box.push_back(RationalPoint(o + (i & 1 ? nbr[a] : RatVector::Zero(3)) +
                                          (i & 2 ? nbr[b] : RatVector::Zero(3)) +
                                          (i & 4 ? nbr[c] : RatVector::Zero(3))));
            }
            if (hull(box) == p) return true;
          }
        }
      }
      return false;
    }
    default:
      return false;
  }
}

std::vector<CheckItem> verify_catalog(const std::vector<CatalogEntry>& entries, const VerifyOptions& opt) {
  Runner checks;
  const LatticeSpec z;

  std::vector<const CatalogEntry*> ms;
  for (int i = 1; i <= 12; ++i) {
    const std::string id = "M" + std::to_string(i);
    const auto* e = find_entry(entries, id);
    if (!e) {
      checks.check(1, id + " present", [] { return fail("missing from catalog"); });
      continue;
    }
    ms.push_back(e);
    checks.check(1, id + " lattice-free", [&] {
      const auto pts = lattice_points(e->polytope, z, Region::Interior);
      return pts.empty() ? std::string() : fail("interior point " + show(to_rational(pts.front())));
    });
    checks.check(1, id + " maximal", [&] {
      const auto m = is_maximal_latticefree_convex(e->polytope, z);
      if (m.maximal) return std::string();
      std::size_t missing = 0;
      for (const auto& w : m.facet_witnesses) missing += !w.has_value();
      return fail(std::to_string(missing) + " facet(s) without a relative-interior lattice point");
    });
    checks.check(1, id + " stats", [&] {
      const auto c = classify_lattice_points(e->polytope, z);
      const auto w = lattice_width(e->polytope, z).width;
      const auto& x = e->expected;
      if (c.interior.size() != x.interior || c.boundary.size() != x.boundary ||
          e->polytope.facet_list().size() != x.facets || w != x.width) {
        return fail("counted i=" + std::to_string(c.interior.size()) + " b=" + std::to_string(c.boundary.size()) +
                    " f=" + std::to_string(e->polytope.facet_list().size()) + " w=" + to_string(w));
      }
      return std::string();
    });
  }
  checks.check(1, "M family structure", [&] {
    int counts[4] = {0, 0, 0, 0};
    for (const auto* e : ms) {
      if (!has_family_structure(e->polytope, e->family)) return fail(e->id + " is not a " + std::string(family_name(e->family)));
      if (static_cast<int>(e->family) < 4) ++counts[static_cast<int>(e->family)];
    }
    if (counts[0] != 7 || counts[1] != 2 || counts[2] != 2 || counts[3] != 1) return fail("family counts");
    for (const auto& [id, apex] : {std::pair{"M8", int_vector({1, 1, 2})}, std::pair{"M9", int_vector({1, 1, 3})}}) {
      const auto* e = find_entry(entries, id);
      if (!e) continue;
      const auto& v = e->polytope.vertices();
      if (std::none_of(v.begin(), v.end(), [&](const auto& x) { return equal(x, to_rational(apex)); })) {
        return fail(std::string(id) + " apex");
      }
    }
    return std::string();
  });
  checks.check(1, "M pairwise inequivalent", [&] {
    std::vector<CanonicalForm> forms;
    for (const auto* e : ms) forms.push_back(canonical_form(e->polytope));
    for (std::size_t i = 0; i < forms.size(); ++i) {
      for (std::size_t j = i + 1; j < forms.size(); ++j) {
        if (forms[i] == forms[j]) return fail(ms[i]->id + " ~ " + ms[j]->id);
      }
    }
    return std::string();
  });

  std::size_t sweep_total = 0;
  checks.check(2, "pyramid sweep", [&] {
    auto t = default_task(TaskKind::Pyramids);
    t.jobs = opt.jobs;
    const auto r = latfree::run(t);
    sweep_total += r.candidates_examined;
    return expect_classes(r, {});
  });
  checks.check(2, "simplex sweep", [&] {
    auto t = default_task(TaskKind::Simplices);
    t.jobs = opt.jobs;
    const auto r = latfree::run(t);
    sweep_total += r.candidates_examined;
    return expect_classes(r, {"M4", "M5"});
  });
  checks.check(2, "sweep size", [&] {
    const std::string msg = std::to_string(sweep_total) + " candidates";
    return sweep_total > 0 && sweep_total < 15000 ? "ok: " + msg : fail(msg);
  });

  std::vector<VPolytope> free_polygons;
  checks.check(3, "polygons-i1", [&] { return expect_count(latfree::run(default_task(TaskKind::PolygonsI1)), 16); });
  checks.check(3, "quads-i2", [&] { return expect_count(latfree::run(default_task(TaskKind::QuadsI2)), 10); });
  checks.check(3, "triangles-i2", [&] { return expect_count(latfree::run(default_task(TaskKind::TrianglesI2)), 3); });
  checks.check(3, "r2-sets", [&] {
    return expect_classes(latfree::run(default_task(TaskKind::R2Sets)), {"R1", "R2", "R3", "R4"});
  });
  checks.check(3, "maximal-polygons", [&] {
    const auto r = latfree::run(default_task(TaskKind::MaximalPolygons));
    for (const auto& s : r.survivors) free_polygons.push_back(s.representative);
    return expect_classes(r, {"M^2"});
  });

  checks.check(4, "diamond/arrow closed forms", [&] {
    std::size_t checked = 0;
    for (auto f : {PyramidFamily::Diamond, PyramidFamily::Arrow}) {
      for (long a3 = 4; a3 <= 8; ++a3) {
        for (long a1 = 0; a1 < a3; ++a1) {
          for (long a2 = 0; a2 < a3; ++a2) {
            const auto s = make_pyramid_spec(f, int_vector({a1, a2, a3}));
            const auto body = pyramid_body(f, s);
            const auto sys = pyramid_interior_points_closed_form(s, f);
            std::set<std::vector<long>> inner;
            for (const auto& x : lattice_points(body, z, Region::Interior)) {
              inner.insert({x(0).convert_to<long>(), x(1).convert_to<long>(), x(2).convert_to<long>()});
            }
            for (long x = -2; x <= a3 + 1; ++x) {
              for (long y = -2; y <= a3 + 1; ++y) {
                for (long h = -1; h <= a3 + 1; ++h) {
                  ++checked;
                  if (sys.contains(int_vector({x, y, h})) != inner.count({x, y, h})) {
                    return fail(std::string(family_name(f)) + " apex " + std::to_string(a1) + "," + std::to_string(a2) +
                                "," + std::to_string(a3));
                  }
                }
              }
            }
          }
        }
      }
    }
    return "ok: " + std::to_string(checked) + " points, 0 disagreements";
  });

  auto height_bound = [&](PyramidFamily f, long a3) {
    for (long a1 = 0; a1 < a3; ++a1) {
      for (long a2 = 0; a2 < a3; ++a2) {
        const auto body = pyramid_body(f, make_pyramid_spec(f, int_vector({a1, a2, a3})));
        if (is_latticefree(body, z)) return fail("lattice-free at apex " + std::to_string(a1) + "," + std::to_string(a2));
      }
    }
    return std::string();
  };
  checks.check(5, "kite simplices at height 13", [&] { return height_bound(PyramidFamily::KiteSimplex, 13); });
  checks.check(5, "sail simplices at height 9", [&] { return height_bound(PyramidFamily::SailSimplex, 9); });

  checks.check(6, "Pick identity", [&] {
    std::mt19937 rng(2024);
    for (int k = 0; k < 200; ++k) {
      const auto p = random_polygon(rng, 6);
      const auto c = pick_check(p);
      if (!c.holds) return fail("polygon " + std::to_string(k));
    }
    return std::string();
  });
  checks.check(6, "invariance under lattice-preserving maps", [&] {
    std::mt19937 rng(77);
    const auto& base = ms.empty() ? get("M1").polytope : ms[static_cast<std::size_t>(0)]->polytope;
    std::vector<const VPolytope*> bodies;
    for (const auto* e : ms) bodies.push_back(&e->polytope);
    if (bodies.empty()) bodies.push_back(&base);
    std::uniform_int_distribution<long> shift(-3, 3);
    for (int k = 0; k < 100; ++k) {
      const auto& p = *bodies[static_cast<std::size_t>(k) % bodies.size()];
      AffineUnimodularMap m{random_unimodular(rng, 3), int_vector({shift(rng), shift(rng), shift(rng)}), Int(1)};
      const auto q = transform(p, m);
      const auto a = classify_lattice_points(p, z), b = classify_lattice_points(q, z);
      if (a.interior.size() != b.interior.size() || a.boundary.size() != b.boundary.size() ||
          lattice_width(p, z).width != lattice_width(q, z).width) {
        return fail("trial " + std::to_string(k));
      }
    }
    return std::string();
  });
  checks.check(6, "area and width bounds", [&] {
    if (free_polygons.empty()) return fail("no lattice-free polygons from criterion 3");
    for (const auto& p : free_polygons) {
      if (auto v = area_width_violation(p); !v.empty()) return fail(v);
    }
    return "ok: " + std::to_string(free_polygons.size()) + " polygon(s)";
  });
  checks.check(6, "projections are not lattice-free", [&] {
    for (const auto* e : ms) {
      if (is_latticefree(project_drop_last(e->polytope), z)) return fail(e->id);
    }
    return std::string();
  });

  const Int s = opt.scale;
  checks.check(7, "y sequence", [&] {
    for (long t = 1; t <= 3; ++t) {
      const auto y = y_sequence(Int(t), 6).terms;
      for (std::size_t j = 1; j < y.size(); ++j) {
        if (y[j] != y[j - 1] * y[j - 1] - y[j - 1] + 1) return fail("recurrences disagree at s=" + std::to_string(t));
      }
      Int bound = t + 1;  // (s+1)^(2^(d-2)) for d = 2
      for (std::size_t d = 2; d <= 6; ++d) {
        if (y[d - 1] < bound) return fail("growth bound at s=" + std::to_string(t));
        bound *= bound;
      }
    }
    return std::string();
  });
  checks.check(7, "growth simplex volumes", [&] {
    for (long t = 1; t <= 3; ++t) {
      for (int d = 2; d <= 4; ++d) {
        const Int yd = y_sequence(Int(t), d).terms.back();
        Int fact = 1;
        for (int k = 2; k <= d; ++k) fact *= k;
        if (volume(s_simplex(Int(t), d)) != Rat((yd - 1) * (yd - 1)) / Rat(fact * t)) {
          return fail("s=" + std::to_string(t) + " d=" + std::to_string(d));
        }
      }
    }
    return std::string();
  });
  for (int d = 2; d <= 3; ++d) {
    checks.check(7, "S" + std::to_string(d) + " maximal (s=" + s.str() + ")", [&, d] {
      const LatticeSpec spec(s);
      const auto p = s_simplex(s, d);
      if (!is_latticefree(p, spec)) return fail("not lattice-free");
      const auto m = is_maximal_integral_latticefree(p, spec);
      if (!m.maximal_within_radius) return fail("enlarges to " + show(to_rational(*m.witness)));
      return "ok: radius " + m.radius.str();
    });
  }

  const Int qs = s < 3 ? Int(3) : s;
  checks.check(8, "Q2 separation (s=" + qs.str() + ")", [&] {
    const LatticeSpec spec(qs);
    const auto q = q2(qs);
    if (!is_integral(q)) return fail("not integral");
    if (!is_latticefree(q, spec)) return fail("not lattice-free");
    const auto m = is_maximal_latticefree_convex(q, spec);
    if (m.maximal) return fail("convex-maximal");
    std::size_t missing = 0;
    for (const auto& w : m.facet_witnesses) missing += !w.has_value();
    const auto im = is_maximal_integral_latticefree(q, spec, Int(4));
    if (!im.maximal_within_radius) return fail("integral enlargement " + show(to_rational(*im.witness)));
    return "ok: " + std::to_string(missing) + " facet(s) without a witness; maximal within radius 4";
  });
  return checks.take();
}

}  // namespace latfree
