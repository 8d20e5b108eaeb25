#include "polydeza/generate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

#include "polydeza/analysis.hpp"
#include "polydeza/canonical.hpp"
#include "polydeza/errors.hpp"
#include "polydeza/fixtures.hpp"

namespace polydeza {
namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("POLYDEZA_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void check_split_site(const PlaneGraph& g, const QuadSplitSite& s, int min_arc) {
  if (s.v < 0 || s.v >= g.n())
    fail(ErrorKind::UnknownVertex, "split vertex " + std::to_string(s.v) + " out of range");
  int d = g.degree(s.v);
  if (s.i < 0 || s.i >= d || s.j < 0 || s.j >= d || s.i == s.j)
    fail(ErrorKind::IllegalSite, "pivot positions out of range or equal");
  int len1 = (s.j - s.i + d) % d + 1;
  int len2 = (s.i - s.j + d) % d + 1;
  if (len1 < min_arc || len2 < min_arc)
    fail(ErrorKind::IllegalSite,
         "arc keeps fewer than " + std::to_string(min_arc) + " vertices");
}

/* Shared splitting core: v keeps the inclusive arc i..j, a new vertex takes
 * the complementary arc; each pivot sees v then the new vertex in rotation
 * order at one end and the reverse at the other, so every rerouted face
 * closes. With `join` the two halves stay adjacent (triangulation variant).
 */
PlaneGraph split_vertex(const PlaneGraph& g, const QuadSplitSite& s, bool join) {
  const auto& rv = g.rotation(s.v);
  int d = g.degree(s.v);
  int len1 = (s.j - s.i + d) % d + 1;
  int len2 = (s.i - s.j + d) % d + 1;
  int a = rv[s.i], b = rv[s.j], v2 = g.n();
  std::vector<std::vector<int>> rot(static_cast<size_t>(g.n()) + 1);
  for (int x = 0; x < g.n(); ++x) rot[x] = g.rotation(x);
  rot[s.v].clear();
  for (int t = 0; t < len1; ++t) rot[s.v].push_back(rv[(s.i + t) % d]);
  for (int t = 0; t < len2; ++t) rot[v2].push_back(rv[(s.j + t) % d]);
  if (join) {
    rot[s.v].push_back(v2);
    rot[v2].push_back(s.v);
  }
  for (int t = 1; t + 1 < len2; ++t) {
    int x = rv[(s.j + t) % d];
    rot[x][g.index_of(x, s.v)] = v2;
  }
  auto& ra = rot[a];
  ra.insert(ra.begin() + g.index_of(a, s.v) + 1, v2);
  auto& rb = rot[b];
  rb.insert(rb.begin() + g.index_of(b, s.v), v2);
  return PlaneGraph::build(rot);
}

} // namespace

PlaneGraph quad_vertex_split(const PlaneGraph& g, const QuadSplitSite& site) {
  check_split_site(g, site, 3);
  return split_vertex(g, site, false);
}

PlaneGraph tri_vertex_split(const PlaneGraph& g, const QuadSplitSite& site) {
  check_split_site(g, site, 2);
  return split_vertex(g, site, true);
}

PlaneGraph quad_ring_insert(const PlaneGraph& g, int fi) {
  if (fi < 0 || fi >= g.f())
    fail(ErrorKind::IllegalSite, "face " + std::to_string(fi) + " out of range");
  if (g.face_len(fi) != 4) fail(ErrorKind::IllegalSite, "face is not quadrangular");
  std::vector<int> fv = g.face_vertices(fi);
  int base = g.n();
  std::vector<std::vector<int>> rot(static_cast<size_t>(g.n()) + 4);
  for (int x = 0; x < g.n(); ++x) rot[x] = g.rotation(x);
  for (int i = 0; i < 4; ++i) {
    int fcur = fv[i], fprev = fv[(i + 3) % 4];
    auto& r = rot[fcur];
    r.insert(r.begin() + g.index_of(fcur, fprev) + 1, base + i);
    rot[static_cast<size_t>(base) + i] = {base + (i + 1) % 4, fcur, base + (i + 3) % 4};
  }
  return PlaneGraph::build(rot);
}

namespace {

using Level = std::set<CanonicalCode>;

struct Route {
  bool quad = false;     /* quadrangulation route vs triangulation route */
  bool use_ring = true;  /* quadrangulations only */
};

void expand_one(const PlaneGraph& g, const Route& route, int max_n,
                std::vector<std::pair<int, CanonicalCode>>& out) {
  if (g.n() + 1 <= max_n) {
    int min_arc = route.quad ? 3 : 2;
    for (int v = 0; v < g.n(); ++v) {
      int d = g.degree(v);
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          if (j - i + 1 < min_arc || d - (j - i) + 1 < min_arc) continue;
          PlaneGraph child = split_vertex(g, {v, i, j}, !route.quad);
          if (route.quad && !connectivity_at_least(child.abstract(), 3)) continue;
          /* Without ring insertion the stream is the subclass free of
           * separating 4-cycles, so children leaving it are dropped. */
          if (route.quad && !route.use_ring && has_separating_four_cycle(child)) continue;
          out.emplace_back(child.n(), canonical_code(child));
        }
    }
  }
  if (route.quad && route.use_ring && g.n() + 4 <= max_n) {
    for (int fi = 0; fi < g.f(); ++fi) {
      PlaneGraph child = quad_ring_insert(g, fi);
      if (!connectivity_at_least(child.abstract(), 3)) continue;
      out.emplace_back(child.n(), canonical_code(child));
    }
  }
}

std::map<int, long> closure(const std::vector<PlaneGraph>& seeds, int min_order,
                            const Route& route, const GenOptions& opt,
                            const GraphSink& sink) {
  int threads = resolve_threads(opt.threads);
  std::map<int, Level> pending;
  for (const PlaneGraph& s : seeds)
    if (s.n() <= opt.max_n) pending[s.n()].insert(canonical_code(s));

  std::map<int, long> counts;
  for (int order = min_order; order <= opt.max_n; ++order) counts[order] = 0;

  while (!pending.empty()) {
    auto it = pending.begin();
    int order = it->first;
    std::vector<CanonicalCode> level(it->second.begin(), it->second.end());
    pending.erase(it);
    counts[order] = static_cast<long>(level.size());

    if (sink)
      for (const CanonicalCode& code : level) sink(decode_code(code));

    bool expandable = order + 1 <= opt.max_n ||
                      (route.quad && route.use_ring && order + 4 <= opt.max_n);
    if (!expandable) continue;

    int used = std::min<int>(threads, static_cast<int>(level.size()));
    if (used <= 1) {
      std::vector<std::pair<int, CanonicalCode>> found;
      for (const CanonicalCode& code : level)
        expand_one(decode_code(code), route, opt.max_n, found);
      for (auto& [o, code] : found) pending[o].insert(std::move(code));
    } else {
      std::vector<std::vector<std::pair<int, CanonicalCode>>> found(
          static_cast<size_t>(used));
      std::vector<std::thread> pool;
      for (int t = 0; t < used; ++t)
        pool.emplace_back([&, t] {
          size_t lo = level.size() * t / used, hi = level.size() * (t + 1) / used;
          for (size_t i = lo; i < hi; ++i)
            expand_one(decode_code(level[i]), route, opt.max_n, found[t]);
        });
      for (auto& th : pool) th.join();
      for (auto& chunk : found)
        for (auto& [o, code] : chunk) pending[o].insert(std::move(code));
    }
  }
  return counts;
}

std::map<int, long> shift_orders(const std::map<int, long>& counts, int from_min,
                                 const std::function<int(int)>& shift) {
  std::map<int, long> out;
  for (auto [n, c] : counts)
    if (n >= from_min) out[shift(n)] = c;
  return out;
}

} // namespace

std::map<int, long> gen_quadrangulations(const GenOptions& opt, const GraphSink& sink) {
  std::vector<PlaneGraph> seeds;
  for (int k = 3; 2 * k + 2 <= opt.max_n; ++k) seeds.push_back(pseudo_double_wheel(k));
  return closure(seeds, 8, {true, opt.use_ring_insert}, opt, sink);
}

std::map<int, long> gen_quartic_polyhedra(const GenOptions& opt, const GraphSink& sink) {
  GenOptions inner = opt;
  inner.max_n = opt.max_n + 2;
  GraphSink dual_sink;
  if (sink) dual_sink = [&sink](const PlaneGraph& g) { sink(dual_unchecked(g)); };
  auto counts = gen_quadrangulations(inner, dual_sink);
  return shift_orders(counts, 8, [](int n) { return n - 2; });
}

std::map<int, long> gen_triangulations(const GenOptions& opt, const GraphSink& sink) {
  std::vector<PlaneGraph> seeds{tetrahedron()};
  return closure(seeds, 4, {false, false}, opt, sink);
}

std::map<int, long> gen_cubic_polyhedra(const GenOptions& opt, const GraphSink& sink) {
  GenOptions inner = opt;
  inner.max_n = opt.max_n / 2 + 2;
  GraphSink dual_sink;
  if (sink) dual_sink = [&sink](const PlaneGraph& g) { sink(dual_unchecked(g)); };
  auto counts = gen_triangulations(inner, dual_sink);
  return shift_orders(counts, 4, [](int n) { return 2 * n - 4; });
}

} // namespace polydeza
