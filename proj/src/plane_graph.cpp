#include "polydeza/plane_graph.hpp"

#include <algorithm>
#include <string>

#include "polydeza/analysis.hpp"
#include "polydeza/errors.hpp"

namespace polydeza {

PlaneGraph PlaneGraph::build(const std::vector<std::vector<int>>& rotation) {
  PlaneGraph g;
  g.n_ = static_cast<int>(rotation.size());
  if (g.n_ == 0) fail(ErrorKind::TooSmall, "empty rotation system");
  g.rot_ = rotation;

  g.offset_.assign(static_cast<size_t>(g.n_) + 1, 0);
  for (int v = 0; v < g.n_; ++v)
    g.offset_[v + 1] = g.offset_[v] + static_cast<int>(rotation[v].size());
  int darts = g.offset_[g.n_];
  g.q_ = darts / 2;

  g.dart_tail_.resize(static_cast<size_t>(darts));
  g.dart_head_.resize(static_cast<size_t>(darts));
  for (int v = 0; v < g.n_; ++v) {
    std::vector<int> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k + 1 < sorted.size(); ++k)
      if (sorted[k] == sorted[k + 1])
        fail(ErrorKind::DuplicateNeighbour,
             "vertex " + std::to_string(v) + " lists " + std::to_string(sorted[k]) + " twice");
    for (size_t k = 0; k < rotation[v].size(); ++k) {
      int w = rotation[v][k];
      if (w < 0 || w >= g.n_)
        fail(ErrorKind::UnknownVertex,
             "vertex " + std::to_string(v) + " lists " + std::to_string(w));
      if (w == v) fail(ErrorKind::Loop, "vertex " + std::to_string(v));
      int d = g.offset_[v] + static_cast<int>(k);
      g.dart_tail_[d] = v;
      g.dart_head_[d] = w;
    }
  }

  g.rev_.assign(static_cast<size_t>(darts), -1);
  for (int d = 0; d < darts; ++d) {
    int r = g.dart_id(g.dart_head_[d], g.dart_tail_[d]);
    if (r < 0)
      fail(ErrorKind::AsymmetricDart,
           std::to_string(g.dart_tail_[d]) + " lists " + std::to_string(g.dart_head_[d]) +
               " without the reverse");
    g.rev_[d] = r;
  }

  /* Connectivity must be checked on its own: a disconnected system can still
   * satisfy n - q + f = 2 when a positive-genus piece compensates. */
  {
    std::vector<char> seen(static_cast<size_t>(g.n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.rot_[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != g.n_)
      fail(ErrorKind::Disconnected,
           std::to_string(reached) + " of " + std::to_string(g.n_) + " vertices reachable");
  }

  g.faces_ = trace_faces(g);
  /* A dartless graph passed the connectivity check, so it is a single
   * vertex; on the sphere it still bounds one face. */
  if (darts == 0) g.faces_.push_back({});
  g.face_of_.assign(static_cast<size_t>(darts), -1);
  for (size_t fi = 0; fi < g.faces_.size(); ++fi)
    for (int d : g.faces_[fi]) g.face_of_[d] = static_cast<int>(fi);

  long euler = g.n_ - g.q_ + static_cast<long>(g.faces_.size());
  if (euler != 2)
    fail(ErrorKind::NonSpherical, "n - q + f = " + std::to_string(euler));
  return g;
}

int PlaneGraph::dart_id(int tail, int head) const {
  int k = index_of(tail, head);
  return k < 0 ? -1 : offset_[tail] + k;
}

int PlaneGraph::sigma_next(int d) const {
  int v = dart_tail_[d];
  int k = d - offset_[v];
  int deg = static_cast<int>(rot_[v].size());
  return offset_[v] + (k + 1) % deg;
}

int PlaneGraph::sigma_prev(int d) const {
  int v = dart_tail_[d];
  int k = d - offset_[v];
  int deg = static_cast<int>(rot_[v].size());
  return offset_[v] + (k + deg - 1) % deg;
}

int PlaneGraph::index_of(int u, int v) const {
  if (u < 0 || u >= n_) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(u));
  const auto& r = rot_[u];
  for (size_t k = 0; k < r.size(); ++k)
    if (r[k] == v) return static_cast<int>(k);
  return -1;
}

int PlaneGraph::succ(int u, int v) const {
  int k = index_of(u, v);
  if (k < 0)
    fail(ErrorKind::UnknownVertex,
         std::to_string(v) + " not a neighbour of " + std::to_string(u));
  return rot_[u][(k + 1) % rot_[u].size()];
}

int PlaneGraph::pred(int u, int v) const {
  int k = index_of(u, v);
  if (k < 0)
    fail(ErrorKind::UnknownVertex,
         std::to_string(v) + " not a neighbour of " + std::to_string(u));
  return rot_[u][(k + rot_[u].size() - 1) % rot_[u].size()];
}

std::vector<int> PlaneGraph::face_vertices(int fi) const {
  std::vector<int> out;
  out.reserve(faces_[fi].size());
  for (int d : faces_[fi]) out.push_back(dart_tail_[d]);
  return out;
}

std::vector<int> PlaneGraph::face_length_histogram() const {
  std::vector<int> hist;
  for (const auto& face : faces_) {
    size_t len = face.size();
    if (hist.size() <= len) hist.resize(len + 1, 0);
    ++hist[len];
  }
  return hist;
}

AbstractGraph PlaneGraph::abstract() const { return AbstractGraph::from_adjacency(rot_); }

PlaneGraph build_plane(const std::vector<std::vector<int>>& rotation) {
  return PlaneGraph::build(rotation);
}

std::vector<std::vector<int>> trace_faces(const PlaneGraph& g) {
  std::vector<std::vector<int>> faces;
  int darts = g.dart_count();
  std::vector<char> used(static_cast<size_t>(darts), 0);
  for (int d0 = 0; d0 < darts; ++d0) {
    if (used[d0]) continue;
    std::vector<int> cycle;
    int d = d0;
    do {
      used[d] = 1;
      cycle.push_back(d);
      d = g.face_next(d);
    } while (d != d0);
    faces.push_back(std::move(cycle));
  }
  return faces;
}

PlaneGraph dual(const PlaneGraph& g) {
  AbstractGraph a = g.abstract();
  if (a.n() < 4) fail(ErrorKind::NotPolyhedral, "order below 4");
  if (!connectivity_at_least(a, 3)) fail(ErrorKind::NotPolyhedral, "connectivity below 3");
  return dual_unchecked(g);
}

PlaneGraph dual_unchecked(const PlaneGraph& g) {
  std::vector<std::vector<int>> rotation(static_cast<size_t>(g.f()));
  for (int fi = 0; fi < g.f(); ++fi) {
    const auto& cycle = g.faces()[fi];
    rotation[fi].reserve(cycle.size());
    for (int d : cycle) rotation[fi].push_back(g.face_of(g.rev(d)));
  }
  for (int fi = 0; fi < g.f(); ++fi) {
    std::vector<int> sorted = rotation[fi];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        std::find(sorted.begin(), sorted.end(), fi) != sorted.end())
      fail(ErrorKind::NotPolyhedral, "dual not simple at face " + std::to_string(fi));
  }
  return PlaneGraph::build(rotation);
}

CycleSides cycle_sides(const PlaneGraph& g, const std::vector<int>& cycle) {
  int len = static_cast<int>(cycle.size());
  if (len < 3) fail(ErrorKind::TooSmall, "cycle of length " + std::to_string(len));
  std::vector<char> on_cycle(static_cast<size_t>(g.n()), 0);
  std::vector<char> cycle_dart(static_cast<size_t>(g.dart_count()), 0);
  for (int i = 0; i < len; ++i) {
    int u = cycle[i], v = cycle[(i + 1) % len];
    if (on_cycle[u]) fail(ErrorKind::DuplicateNeighbour, "vertex " + std::to_string(u));
    on_cycle[u] = 1;
    int d = g.dart_id(u, v);
    if (d < 0)
      fail(ErrorKind::UnknownVertex,
           std::to_string(u) + "-" + std::to_string(v) + " not an edge");
    cycle_dart[d] = 1;
    cycle_dart[g.rev(d)] = 1;
  }

  /* Flood faces across non-cycle edges; the two regions are the face sets on
   * either side of the cycle. */
  std::vector<int> region(static_cast<size_t>(g.f()), -1);
  for (int which = 0; which < 2; ++which) {
    int u = cycle[which == 0 ? 0 : 1];
    int v = cycle[which == 0 ? 1 : 0];
    int seed = g.face_of(g.dart_id(u, v));
    if (region[seed] >= 0) {
      if (which == 1 && region[seed] == 0)
        fail(ErrorKind::Internal, "cycle does not bound two regions");
      continue;
    }
    std::vector<int> stack{seed};
    region[seed] = which;
    while (!stack.empty()) {
      int fi = stack.back();
      stack.pop_back();
      for (int d : g.faces()[fi]) {
        if (cycle_dart[d]) continue;
        int nf = g.face_of(g.rev(d));
        if (region[nf] < 0) {
          region[nf] = which;
          stack.push_back(nf);
        }
      }
    }
  }
  for (int fi = 0; fi < g.f(); ++fi)
    if (region[fi] < 0) fail(ErrorKind::Internal, "face outside both regions");

  CycleSides sides;
  std::vector<char> added(static_cast<size_t>(g.n()), 0);
  for (int fi = 0; fi < g.f(); ++fi) {
    auto& out = region[fi] == 0 ? sides.left : sides.right;
    for (int d : g.faces()[fi]) {
      int v = g.dart(d).tail;
      if (!on_cycle[v] && !added[v]) {
        added[v] = 1;
        out.push_back(v);
      }
    }
  }
  std::sort(sides.left.begin(), sides.left.end());
  std::sort(sides.right.begin(), sides.right.end());
  return sides;
}

} // namespace polydeza
