#include "polydeza/abstract_graph.hpp"

#include <algorithm>

#include "polydeza/errors.hpp"

namespace polydeza {

AbstractGraph::AbstractGraph(int n) {
  if (n < 0) fail(ErrorKind::BadConfig, "negative order " + std::to_string(n));
  n_ = n;
  words_ = (n + 63) / 64;
  adj_.assign(static_cast<size_t>(n), {});
  bits_.assign(static_cast<size_t>(n) * words_, 0);
}

AbstractGraph AbstractGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  AbstractGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

AbstractGraph AbstractGraph::from_adjacency(const std::vector<std::vector<int>>& adj) {
  AbstractGraph g(static_cast<int>(adj.size()));
  for (int u = 0; u < g.n_; ++u)
    for (int v : adj[u])
      if (u < v) g.add_edge(u, v);
  /* Mirror check: every directed listing must have appeared both ways. */
  for (int u = 0; u < g.n_; ++u) {
    for (int v : adj[u]) {
      if (!g.has_edge(u, v))
        fail(ErrorKind::AsymmetricDart,
             std::to_string(u) + " lists " + std::to_string(v) + " without the reverse");
    }
    if (adj[u].size() != g.adj_[u].size())
      fail(ErrorKind::DuplicateNeighbour, "vertex " + std::to_string(u));
  }
  return g;
}

void AbstractGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
}

bool AbstractGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void AbstractGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(ErrorKind::Loop, "vertex " + std::to_string(u));
  if (has_edge(u, v))
    fail(ErrorKind::DuplicateNeighbour,
         "edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
  bits_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t{1} << (u % 64);
  ++q_;
}

void AbstractGraph::remove_edge(int u, int v) {
  if (!has_edge(u, v))
    fail(ErrorKind::UnknownVertex,
         "edge " + std::to_string(u) + "-" + std::to_string(v) + " absent");
  adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
  adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
  bits_[static_cast<size_t>(u) * words_ + v / 64] &= ~(uint64_t{1} << (v % 64));
  bits_[static_cast<size_t>(v) * words_ + u / 64] &= ~(uint64_t{1} << (u % 64));
  --q_;
}

std::vector<std::pair<int, int>> AbstractGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(q_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int AbstractGraph::regularity() const {
  if (n_ == 0) return -1;
  int r = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != r) return -1;
  return r;
}

std::vector<std::vector<int>> AbstractGraph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

AbstractGraph AbstractGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1])
      fail(ErrorKind::DuplicateNeighbour, "vertex " + std::to_string(sorted[i]));
  std::vector<int> rank(static_cast<size_t>(n_), -1);
  for (size_t i = 0; i < sorted.size(); ++i) {
    check_vertex(sorted[i]);
    rank[sorted[i]] = static_cast<int>(i);
  }
  AbstractGraph g(static_cast<int>(sorted.size()));
  for (int u : sorted)
    for (int v : adj_[u])
      if (rank[v] >= 0 && u < v) g.add_edge(rank[u], rank[v]);
  return g;
}

AbstractGraph AbstractGraph::disjoint_union(const AbstractGraph& a, const AbstractGraph& b) {
  AbstractGraph g(a.n_ + b.n_);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.n_, v + a.n_);
  return g;
}

} // namespace polydeza
