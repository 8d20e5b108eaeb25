#include "polydeza/analysis.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "polydeza/embed.hpp"
#include "polydeza/errors.hpp"

namespace polydeza {
namespace {

void check_vertex_in(const AbstractGraph& g, int v) {
  if (v < 0 || v >= g.n())
    fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " out of range");
}

int common_count(const AbstractGraph& g, int u, int v) {
  const uint64_t* ru = g.row(u);
  const uint64_t* rv = g.row(v);
  int c = 0;
  for (int w = 0; w < g.words(); ++w) c += std::popcount(ru[w] & rv[w]);
  return c;
}

/* Does removing some k-subset disconnect g? Assumes g connected, k < n. */
bool cut_of_size(const AbstractGraph& g, int k) {
  int n = g.n();
  std::vector<char> removed(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  auto disconnected = [&]() {
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
      if (!removed[v]) start = v;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[start] = 1;
    stack.assign(1, start);
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbours(u))
        if (!removed[v] && !seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    return reached < n - k;
  };
  auto choose = [&](auto&& self, int depth, int from) -> bool {
    if (depth == k) return disconnected();
    for (int v = from; v < n - (k - depth - 1); ++v) {
      removed[v] = 1;
      if (self(self, depth + 1, v + 1)) return true;
      removed[v] = 0;
    }
    return false;
  };
  return choose(choose, 0, 0);
}

bool is_complete(const AbstractGraph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != g.n() - 1) return false;
  return true;
}

} // namespace

std::vector<int> common_neighbours(const AbstractGraph& g, int u, int v) {
  check_vertex_in(g, u);
  check_vertex_in(g, v);
  if (u == v) fail(ErrorKind::SameVertex, "common neighbours need distinct vertices");
  std::vector<int> out;
  const auto& nu = g.neighbours(u);
  for (int w : nu)
    if (g.has_edge(v, w)) out.push_back(w);
  return out;
}

TypeProfile type_profile(const AbstractGraph& g) {
  if (g.n() < 2) fail(ErrorKind::TooSmall, "type profile needs at least two vertices");
  TypeProfile out;
  std::map<int, std::pair<int, int>> witness;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      int c = common_count(g, u, v);
      if (out.values.insert(c).second) witness[c] = {u, v};
    }
  out.witnesses.assign(witness.begin(), witness.end());
  return out;
}

std::optional<std::pair<int, int>> is_deza(const AbstractGraph& g) {
  if (g.n() < 2) fail(ErrorKind::TooSmall, "Deza test needs at least two vertices");
  if (g.regularity() < 0) return std::nullopt;
  int lo = -1, hi = -1;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      int c = common_count(g, u, v);
      if (lo < 0) {
        lo = hi = c;
      } else if (c < lo) {
        if (hi != lo && c != lo) return std::nullopt;
        lo = c;
      } else if (c > hi) {
        if (hi != lo && c != hi) return std::nullopt;
        hi = c;
      } else if (c != lo && c != hi) {
        return std::nullopt;
      }
    }
  return std::make_pair(lo, hi);
}

int vertex_connectivity(const AbstractGraph& g) {
  if (g.n() == 0) fail(ErrorKind::TooSmall, "connectivity of the empty graph");
  if (g.n() == 1) return 0;
  if (is_complete(g)) return g.n() - 1;
  if (!g.connected()) return 0;
  int delta = g.n();
  for (int v = 0; v < g.n(); ++v) delta = std::min(delta, g.degree(v));
  for (int k = 1; k < delta; ++k)
    if (cut_of_size(g, k)) return k;
  /* No cut below the minimum degree, and removing a minimum-degree vertex's
   * neighbourhood disconnects any non-complete graph. */
  return delta;
}

bool connectivity_at_least(const AbstractGraph& g, int k) {
  if (k <= 0) return true;
  if (g.n() == 0) fail(ErrorKind::TooSmall, "connectivity of the empty graph");
  if (is_complete(g)) return g.n() - 1 >= k;
  if (!g.connected()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) < k) return false;
  for (int j = 1; j < k; ++j)
    if (cut_of_size(g, j)) return false;
  return true;
}

std::optional<int> girth(const AbstractGraph& g) {
  int best = -1;
  std::vector<int> dist(static_cast<size_t>(g.n())), parent(static_cast<size_t>(g.n()));
  std::vector<int> queue;
  for (int r = 0; r < g.n(); ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[r] = 0;
    queue.assign(1, r);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (best > 0 && 2 * dist[u] >= best) break;
      for (int v : g.neighbours(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

PolyhedronCheck is_polyhedron(const AbstractGraph& g, int cap) {
  PolyhedronCheck out;
  if (g.n() < 4) {
    out.reason = "order below 4";
    return out;
  }
  if (g.n() > cap) {
    out.reason = "order above embedding cap";
    return out;
  }
  if (!g.connected()) {
    out.reason = "disconnected";
    return out;
  }
  auto emb = embed(g, cap);
  if (!emb) {
    out.reason = "not planar";
    return out;
  }
  if (!connectivity_at_least(g, 3)) {
    out.reason = "connectivity below 3";
    return out;
  }
  out.ok = true;
  out.embedding = std::move(emb);
  return out;
}

std::optional<K2rWitness> k2r_witness(const AbstractGraph& g, int r) {
  if (r < 1) fail(ErrorKind::BadConfig, "K(2,r) needs r >= 1");
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (common_count(g, u, v) < r) continue;
      K2rWitness w;
      w.u = u;
      w.v = v;
      w.commons = common_neighbours(g, u, v);
      w.commons.resize(static_cast<size_t>(r));
      return w;
    }
  return std::nullopt;
}

std::optional<SquarePyramidWitness> square_pyramid_witness(const AbstractGraph& g) {
  for (int a = 0; a < g.n(); ++a) {
    const auto& nbrs = g.neighbours(a);
    int d = static_cast<int>(nbrs.size());
    if (d < 4) continue;
    /* 4-cycle x-y-z-w inside N(a), x minimal on the cycle, y < w. */
    for (int xi = 0; xi < d; ++xi)
      for (int yi = 0; yi < d; ++yi) {
        int x = nbrs[xi], y = nbrs[yi];
        if (y <= x || !g.has_edge(x, y)) continue;
        for (int zi = 0; zi < d; ++zi) {
          int z = nbrs[zi];
          if (z == x || z == y || z < x || !g.has_edge(y, z)) continue;
          for (int wi = 0; wi < d; ++wi) {
            int w = nbrs[wi];
            if (w <= y || w == z || !g.has_edge(z, w) || !g.has_edge(w, x)) continue;
            return SquarePyramidWitness{a, {x, y, z, w}};
          }
        }
      }
  }
  return std::nullopt;
}

bool has_four_cycle(const AbstractGraph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (common_count(g, u, v) >= 2) return true;
  return false;
}

bool has_four_cycle_bruteforce(const AbstractGraph& g) {
  /* Cycle a-b-c-d with a minimal and b < d. */
  for (int a = 0; a < g.n(); ++a)
    for (int b : g.neighbours(a)) {
      if (b <= a) continue;
      for (int c : g.neighbours(b)) {
        if (c <= a) continue;
        for (int d : g.neighbours(c)) {
          if (d <= b || d == a) continue;
          if (g.has_edge(d, a)) return true;
        }
      }
    }
  return false;
}

FaceStats face_stats(const PlaneGraph& g) {
  FaceStats out;
  out.p = g.n();
  out.q = g.q();
  out.f = g.f();
  int max_deg = 0;
  for (int v = 0; v < g.n(); ++v) max_deg = std::max(max_deg, g.degree(v));
  out.p_by_degree.assign(static_cast<size_t>(max_deg) + 1, 0);
  for (int v = 0; v < g.n(); ++v) ++out.p_by_degree[g.degree(v)];
  out.f_by_length = g.face_length_histogram();
  for (int d = 0; d < g.dart_count(); ++d) {
    if (g.rev(d) < d) continue; /* one dart per edge */
    int t = (g.face_len(g.face_of(d)) == 3 ? 1 : 0) +
            (g.face_len(g.face_of(g.rev(d))) == 3 ? 1 : 0);
    if (t == 0)
      ++out.q0;
    else if (t == 1)
      ++out.q1;
    else
      ++out.q2;
  }
  return out;
}

QuinticTriangleReport quintic_triangle_report(const PlaneGraph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 5)
      fail(ErrorKind::PreconditionViolated,
           "not 5-regular: vertex " + std::to_string(v) + " has degree " +
               std::to_string(g.degree(v)));
  FaceStats s = face_stats(g);
  if (s.f4() > 0)
    fail(ErrorKind::PreconditionViolated,
         "quadrangular face present (" + std::to_string(s.f4()) + " of them)");
  QuinticTriangleReport out;
  out.q = s.q;
  out.q0 = s.q0;
  out.q2 = s.q2;
  long doubled = 30 + s.q + 2 * s.q0; /* 2 * (15 + q/2 + q0) */
  out.lower = (doubled + 1) / 2;
  out.holds = 2 * s.q2 >= doubled;
  out.lower_at_least_30 = doubled >= 60;
  out.tight = 2 * s.q2 == doubled;
  return out;
}

QuarticFaceReport quartic_face_report(const PlaneGraph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 4)
      fail(ErrorKind::PreconditionViolated,
           "not 4-regular: vertex " + std::to_string(v) + " has degree " +
               std::to_string(g.degree(v)));
  AbstractGraph a = g.abstract();
  if (!is_deza(a)) fail(ErrorKind::PreconditionViolated, "not a Deza graph");
  if (has_four_cycle(a))
    fail(ErrorKind::PreconditionViolated,
         "contains a 4-cycle, so it is one of the exceptional quartic Deza graphs");
  FaceStats s = face_stats(g);
  QuarticFaceReport out;
  out.f = s.f;
  out.f3 = s.f3();
  out.q = s.q;
  out.q1 = s.q1;
  out.lower_holds = 2L * out.f3 >= out.f + 8;       /* f3 >= f/2 + 4 */
  out.upper_holds = 3L * out.f3 <= 2L * out.f - 4;  /* f3 <= (2f-4)/3 */
  out.q1_holds = 4 * out.q1 >= 3 * out.q + 60;      /* q1 >= 3q/4 + 15 */
  out.lower_tight = 2L * out.f3 == out.f + 8;
  out.upper_tight = 3L * out.f3 == 2L * out.f - 4;
  out.q1_tight = 4 * out.q1 == 3 * out.q + 60;
  return out;
}

bool is_separating_cycle(const PlaneGraph& g, const std::vector<int>& cycle) {
  CycleSides sides = cycle_sides(g, cycle);
  return !sides.left.empty() && !sides.right.empty();
}

bool has_separating_four_cycle(const PlaneGraph& g) {
  AbstractGraph a = g.abstract();
  for (int u = 0; u < a.n(); ++u)
    for (int v = u + 1; v < a.n(); ++v) {
      std::vector<int> c = common_neighbours(a, u, v);
      for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
          if (is_separating_cycle(g, {u, c[i], v, c[j]})) return true;
    }
  return false;
}

long four_cycle_count_by_pairs(const AbstractGraph& g) {
  long twice = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      long c = common_count(g, u, v);
      twice += c * (c - 1) / 2;
    }
  return twice / 2;
}

} // namespace polydeza
