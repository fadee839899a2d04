#include "latfree/enumeration.hpp"

#include "latfree/catalog.hpp"
#include "latfree/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

namespace latfree {

namespace {

constexpr std::pair<TaskKind, std::string_view> task_names[] = {
    {TaskKind::Pyramids, "pyramids"},         {TaskKind::Simplices, "simplices"},
    {TaskKind::PolygonsI1, "polygons-i1"},    {TaskKind::QuadsI2, "quads-i2"},
    {TaskKind::TrianglesI2, "triangles-i2"},  {TaskKind::R2Sets, "r2-sets"},
    {TaskKind::MaximalPolygons, "maximal-polygons"},
};

// Collects classes in order of first appearance.
class ClassCollector {
 public:
  void add(const VPolytope& p, std::string origin) {
    auto form = canonical_form(p);
    const std::string key = vertex_key(form.vertices);
    if (seen_.count(key)) return;
    seen_.emplace(key, survivors_.size());
    survivors_.push_back({p, std::move(form), std::nullopt, std::move(origin)});
  }
  std::vector<Survivor> take() { return std::move(survivors_); }

 private:
  std::map<std::string, std::size_t> seen_;
  std::vector<Survivor> survivors_;
};

// Depth-first search over subsets of pts in convex position, adding points in
// index order. A subset is only extended while viable(hull) holds, which must
// be monotone under enlarging the hull. visit sees every full-dimensional
// viable hull once per vertex set.
void convex_subsets(const std::vector<LatticePoint>& pts,
                    const std::function<bool(const VPolytope&)>& viable,
                    const std::function<void(const VPolytope&)>& visit) {
  std::vector<LatticePoint> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    for (std::size_t i = start; i < pts.size(); ++i) {
      chosen.push_back(pts[i]);
      const VPolytope h = hull(chosen);
      // Non-vertices stay non-vertices in every superset.
      if (h.vertex_count() == chosen.size() && (!h.full_dimensional() || viable(h))) {
        if (h.full_dimensional()) visit(h);
        rec(i + 1);
      }
      chosen.pop_back();
    }
  };
  rec(0);
}

std::vector<LatticePoint> grid(long x0, long x1, long y0, long y1) {
  std::vector<LatticePoint> pts;
  for (long x = x0; x <= x1; ++x) {
    for (long y = y0; y <= y1; ++y) pts.push_back(int_vector({x, y}));
  }
  return pts;
}

// Labels each survivor with the first equivalent entry of pool.
void label_survivors(std::vector<Survivor>& survivors, const std::vector<const CatalogEntry*>& pool) {
  std::vector<CanonicalForm> forms;
  for (const auto* e : pool) forms.push_back(canonical_form(e->polytope));
  for (auto& s : survivors) {
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (forms[k] == s.form) {
        s.catalog_id = pool[k]->id;
        break;
      }
    }
  }
}

std::vector<const CatalogEntry*> planar_pool(std::string_view prefix) {
  std::vector<const CatalogEntry*> pool;
  for (const auto* e : entries_with_prefix(prefix)) {
    if (e->dimension() == 2) pool.push_back(e);
  }
  return pool;
}

EnumerationResult run_polygons(const EnumerationTask& t) {
  EnumerationResult r;
  r.task = t;
  const LatticeSpec z;
  const bool maximal = t.kind == TaskKind::MaximalPolygons;
  const std::size_t limit = maximal ? 0 : 1;
  ClassCollector classes;
  convex_subsets(
      grid(t.box_min, t.box_max, t.box_min, t.box_max),
      [&](const VPolytope& h) { return lattice_points(h, z, Region::Interior).size() <= limit; },
      [&](const VPolytope& h) {
        ++r.candidates_examined;
        if (maximal) {
          if (!is_maximal_latticefree_convex(h, z).maximal) return;
        } else if (lattice_points(h, z, Region::Interior).size() != 1) {
          return;
        }
        ++r.raw_survivors;
        classes.add(h, "");
      });
  r.survivors = classes.take();
  label_survivors(r.survivors, maximal ? maximal_classes(2) : planar_pool("Fig-"));
  return r;
}

EnumerationResult run_i2(const EnumerationTask& t) {
  EnumerationResult r;
  r.task = t;
  const LatticeSpec z;
  const bool quads = t.kind == TaskKind::QuadsI2;
  const LatticePoint p1 = int_vector({1, 0}), p2 = int_vector({2, 0});
  auto interior_ok = [&](const std::vector<LatticePoint>& in) {
    for (const auto& x : in) {
      if (!equal(x, p1) && !equal(x, p2)) return false;
    }
    return true;
  };
  ClassCollector classes;
  convex_subsets(
      grid(t.box_min, t.box_max, -1, 1),
      [&](const VPolytope& h) { return interior_ok(lattice_points(h, z, Region::Interior)); },
      [&](const VPolytope& h) {
        if (h.vertex_count() != (quads ? 4u : 3u)) return;
        ++r.candidates_examined;
        const auto c = classify_lattice_points(h, z);
        if (c.interior.size() != 2) return;
        const std::size_t b = c.boundary.size();
        if (b < (quads ? 4u : 3u) || b > 6) return;
        if (lattice_width(h, z).width != 2) return;
        ++r.raw_survivors;
        classes.add(h, "");
      });
  r.survivors = classes.take();
  label_survivors(r.survivors, planar_pool("Fig-"));
  return r;
}

// Lattice points strictly inside segment [a, b].
std::size_t segment_relint_count(const LatticePoint& a, const LatticePoint& b) {
  return static_cast<std::size_t>(content(LatticePoint(b - a)) - 1);
}

bool on_segment(const RationalPoint& x, const RationalPoint& a, const RationalPoint& b, bool strict) {
  const RatVector d = b - a, e = x - a;
  if (d(0) * e(1) - d(1) * e(0) != 0) return false;
  const Rat t = d.dot(e) / d.dot(d);
  return strict ? (t > 0 && t < 1) : (t >= 0 && t <= 1);
}

RationalPoint centroid(const VPolytope& p) {
  RationalPoint c = RationalPoint::Zero(p.dim());
  for (const auto& v : p.vertices()) c += v;
  return RationalPoint(c / Rat(static_cast<long>(p.vertex_count())));
}

bool in_relint(const RationalPoint& x, const VPolytope& q) {
  if (q.full_dimensional()) {
    for (const auto& f : q.facet_list()) {
      if (f.normal.cast<Rat>().dot(x) >= f.rhs) return false;
    }
    return true;
  }
  if (q.affine_dim() == 1) return on_segment(x, q.vertex(0), q.vertex(1), true);
  return equal(x, q.vertex(0));
}

bool contains_point(const VPolytope& q, const RationalPoint& x) {
  if (q.full_dimensional()) return contains(q, x);
  if (q.affine_dim() == 1) return on_segment(x, q.vertex(0), q.vertex(1), false);
  return equal(x, q.vertex(0));
}

EnumerationResult run_r2(const EnumerationTask& t) {
  EnumerationResult r;
  r.task = t;
  const auto cands = r2_candidates(t.r2_center, t.box_max);
  r.candidates_examined = cands.size();
  ClassCollector classes;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cands.size() && minimal; ++j) {
      if (i != j && !(cands[i] == cands[j]) && relint_contained(cands[j], cands[i])) minimal = false;
    }
    if (!minimal) continue;
    ++r.raw_survivors;
    classes.add(cands[i], "");
  }
  r.survivors = classes.take();
  label_survivors(r.survivors, entries_with_prefix("R"));
  return r;
}

// Smallest lattice distance from a facet to the farthest vertex.
Int min_facet_height(const VPolytope& p) {
  Int best = -1;
  for (const auto& f : p.facet_list()) {
    Rat h = 0;
    for (const auto& v : p.vertices()) h = std::max(h, Rat(f.rhs - f.normal.cast<Rat>().dot(v)));
    const Int hi = numerator(h);
    if (best < 0 || hi < best) best = hi;
  }
  return best;
}

struct SweepCandidate {
  std::size_t base;
  LatticePoint apex;
};

EnumerationResult run_sweep(const EnumerationTask& t) {
  EnumerationResult r;
  r.task = t;
  const auto ids = sweep_base_ids(t.kind);
  std::vector<VPolytope> bases;
  for (const auto& id : ids) bases.push_back(get(id).polytope);
  std::vector<SweepCandidate> cands;
  for (std::size_t b = 0; b < bases.size(); ++b) {
    for (long h = t.height_min; h <= t.height_max; ++h) {
      for (long a1 = 0; a1 < h; ++a1) {
        for (long a2 = 0; a2 < h; ++a2) cands.push_back({b, int_vector({a1, a2, h})});
      }
    }
  }
  r.candidates_examined = cands.size();

  // Simplices with a facet of height below the range are reached by taking
  // that facet as the base, so only those with every facet high enough count.
  const bool simplices = t.kind == TaskKind::Simplices;
  std::vector<char> passed(cands.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    const LatticeSpec z;
    for (std::size_t i = next++; i < cands.size(); i = next++) {
      const auto body = pyramid_over(bases[cands[i].base], cands[i].apex);
      passed[i] = (!simplices || min_facet_height(body) >= t.height_min) &&
                  is_maximal_latticefree_convex(body, z).maximal;
    }
  };
  const unsigned jobs = std::max(1u, t.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ClassCollector classes;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!passed[i]) continue;
    ++r.raw_survivors;
    const auto& a = cands[i].apex;
    classes.add(pyramid_over(bases[cands[i].base], a),
                ids[cands[i].base] + " apex (" + a(0).str() + "," + a(1).str() + "," + a(2).str() + ")");
  }
  r.survivors = classes.take();
  label_survivors(r.survivors, m3_entries());
  return r;
}

}  // namespace

std::string_view task_name(TaskKind k) {
  for (const auto& [kind, name] : task_names) {
    if (kind == k) return name;
  }
  return "";
}

std::optional<TaskKind> parse_task(std::string_view name) {
  for (const auto& [kind, n] : task_names) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

EnumerationTask default_task(TaskKind k) {
  EnumerationTask t;
  t.kind = k;
  switch (k) {
    case TaskKind::Pyramids:
      t.height_min = 4;
      t.height_max = 10;
      t.expected = 0;
      break;
    case TaskKind::Simplices:
      t.height_min = 4;
      t.height_max = 12;
      t.expected = 2;
      break;
    case TaskKind::PolygonsI1:
      t.box_min = 0;
      t.box_max = 4;
      t.expected = 16;
      break;
    case TaskKind::QuadsI2:
      t.box_min = -1;
      t.box_max = 7;
      t.expected = 10;
      break;
    case TaskKind::TrianglesI2:
      t.box_min = -1;
      t.box_max = 7;
      t.expected = 3;
      break;
    case TaskKind::R2Sets:
      t.box_min = -4;
      t.box_max = 4;
      t.expected = 4;
      break;
    case TaskKind::MaximalPolygons:
      t.box_min = 0;
      t.box_max = 4;
      t.expected = 1;
      break;
  }
  return t;
}

std::vector<std::string> sweep_base_ids(TaskKind k) {
  std::vector<std::string> ids;
  if (k == TaskKind::Pyramids) {
    for (int i = 3; i <= 7; ++i) ids.push_back("Fig-quad1-" + std::to_string(i));
    for (int i = 1; i <= 10; ++i) ids.push_back("Fig-quad2-" + std::to_string(i));
  } else if (k == TaskKind::Simplices) {
    for (int i = 1; i <= 5; ++i) ids.push_back("Fig-tria1-" + std::to_string(i));
    for (int i = 1; i <= 3; ++i) ids.push_back("Fig-tria2-" + std::to_string(i));
  } else {
    throw GeometryError("sweep_base_ids: not a sweep task");
  }
  return ids;
}

VPolytope pyramid_over(const VPolytope& base, const LatticePoint& apex) {
  if (base.dim() != 2 || apex.size() != 3) throw GeometryError("pyramid_over: expected a planar base");
  std::vector<RationalPoint> pts;
  for (const auto& v : base.vertices()) {
    RationalPoint x(3);
    x << v(0), v(1), Rat(0);
    pts.push_back(x);
  }
  pts.push_back(to_rational(apex));
  return hull(pts);
}

std::vector<VPolytope> r2_candidates(const LatticePoint& a, long r) {
  std::vector<LatticePoint> box;
  for (long dx = -r; dx <= r; ++dx) {
    for (long dy = -r; dy <= r; ++dy) {
      if (dx != 0 || dy != 0) box.push_back(LatticePoint(a + int_vector({dx, dy})));
    }
  }
  const LatticeSpec z;
  std::vector<VPolytope> out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    // Segments: the single relative-interior point is the midpoint.
    if (segment_relint_count(a, box[i]) == 1) out.push_back(hull(std::vector<LatticePoint>{a, box[i]}));
    for (std::size_t j = i + 1; j < box.size(); ++j) {
      if (segment_relint_count(box[i], box[j]) != 0) continue;
      const auto tri = hull(std::vector<LatticePoint>{a, box[i], box[j]});
      if (!tri.full_dimensional()) continue;
      if (lattice_points(tri, z, Region::Interior).size() != 1) continue;
      out.push_back(tri);
    }
  }
  return out;
}

bool relint_contained(const VPolytope& p, const VPolytope& q) {
  for (const auto& v : p.vertices()) {
    if (!contains_point(q, v)) return false;
  }
  // p lies in q, so relint(p) sits inside relint(q) exactly when some point
  // of relint(p) does.
  return in_relint(centroid(p), q);
}

EnumerationResult run(const EnumerationTask& task) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationResult r;
  switch (task.kind) {
    case TaskKind::Pyramids:
    case TaskKind::Simplices:
      r = run_sweep(task);
      break;
    case TaskKind::PolygonsI1:
    case TaskKind::MaximalPolygons:
      r = run_polygons(task);
      break;
    case TaskKind::QuadsI2:
    case TaskKind::TrianglesI2:
      r = run_i2(task);
      break;
    case TaskKind::R2Sets:
      r = run_r2(task);
      break;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace latfree
