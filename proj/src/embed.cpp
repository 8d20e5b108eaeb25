#include "polydeza/embed.hpp"

#include <algorithm>
#include <utility>

#include "polydeza/errors.hpp"

namespace polydeza {
namespace {

/* Biconnected blocks as edge lists (Tarjan's edge-stack algorithm). */
class BlockFinder {
public:
  explicit BlockFinder(const AbstractGraph& g)
      : g_(g), disc_(static_cast<size_t>(g.n()), 0), low_(static_cast<size_t>(g.n()), 0) {
    for (int v = 0; v < g.n(); ++v)
      if (!disc_[v]) dfs(v, -1);
  }

  std::vector<std::vector<std::pair<int, int>>> take() { return std::move(blocks_); }

private:
  void dfs(int u, int parent) {
    disc_[u] = low_[u] = ++timer_;
    for (int v : g_.neighbours(u)) {
      if (v == parent) continue;
      if (!disc_[v]) {
        stack_.emplace_back(u, v);
        dfs(v, u);
        low_[u] = std::min(low_[u], low_[v]);
        if (low_[v] >= disc_[u]) {
          std::vector<std::pair<int, int>> block;
          for (;;) {
            auto e = stack_.back();
            stack_.pop_back();
            block.push_back(e);
            if (e.first == u && e.second == v) break;
          }
          blocks_.push_back(std::move(block));
        }
      } else if (disc_[v] < disc_[u]) {
        stack_.emplace_back(u, v);
        low_[u] = std::min(low_[u], disc_[v]);
      }
    }
  }

  const AbstractGraph& g_;
  std::vector<int> disc_, low_;
  int timer_ = 0;
  std::vector<std::pair<int, int>> stack_;
  std::vector<std::vector<std::pair<int, int>>> blocks_;
};

/* Incremental face-insertion embedding of one 2-connected block: start from
 * any cycle, then repeatedly pick a fragment (chord, or component of the
 * unembedded part plus its attachment edges), check which faces contain all
 * its attachments, and route one path through the fragment into such a face.
 * A fragment with no admissible face certifies non-planarity; otherwise the
 * choice never matters for eventual success. */
class BlockEmbedder {
public:
  BlockEmbedder(int n, std::vector<std::vector<int>> adj)
      : n_(n), adj_(std::move(adj)), rot_(static_cast<size_t>(n)),
        in_h_(static_cast<size_t>(n), 0), h_edge_(static_cast<size_t>(n) * n, 0) {}

  /* Fills rotations; false when the block is non-planar. */
  bool run(std::vector<std::vector<int>>& rot_out) {
    seed_cycle();
    trace();
    for (;;) {
      auto frags = fragments();
      if (frags.empty()) break;
      int pick = -1;
      for (size_t i = 0; i < frags.size(); ++i) {
        frags[i].admissible = admissible_faces(frags[i]);
        if (frags[i].admissible.empty()) return false;
        if (frags[i].admissible.size() == 1 && pick < 0) pick = static_cast<int>(i);
      }
      if (pick < 0) pick = 0;
      insert(frags[pick], frags[pick].admissible.front());
      trace();
    }
    rot_out = rot_;
    return true;
  }

private:
  struct Fragment {
    std::vector<int> attachments; /* sorted H-vertices */
    std::vector<int> interior;    /* non-H vertices, empty for a chord */
    std::vector<int> admissible;  /* face indices */
  };

  bool h_edge(int u, int v) const { return h_edge_[static_cast<size_t>(u) * n_ + v]; }
  void mark_edge(int u, int v) {
    h_edge_[static_cast<size_t>(u) * n_ + v] = 1;
    h_edge_[static_cast<size_t>(v) * n_ + u] = 1;
  }

  void seed_cycle() {
    /* DFS until a back edge reaches an on-path ancestor; the parent chain
     * between the two endpoints is the seed cycle. */
    std::vector<int> parent(static_cast<size_t>(n_), -1), on_path(static_cast<size_t>(n_), 0);
    int from = -1, to = -1;
    auto dfs = [&](auto&& self, int u) -> bool {
      on_path[u] = 1;
      for (int v : adj_[u]) {
        if (v == parent[u]) continue;
        if (on_path[v]) {
          from = u;
          to = v;
          return true;
        }
        if (parent[v] < 0 && v != 0) {
          parent[v] = u;
          if (self(self, v)) return true;
        }
      }
      on_path[u] = 0;
      return false;
    };
    if (!dfs(dfs, 0)) fail(ErrorKind::Internal, "acyclic block of more than one edge");
    std::vector<int> path;
    for (int x = from; x != to; x = parent[x]) path.push_back(x);
    path.push_back(to);
    for (size_t i = 0; i < path.size(); ++i) {
      in_h_[path[i]] = 1;
      mark_edge(path[i], path[(i + 1) % path.size()]);
    }
    for (size_t i = 0; i < path.size(); ++i) {
      int prev = path[(i + path.size() - 1) % path.size()];
      int next = path[(i + 1) % path.size()];
      rot_[path[i]] = {prev, next};
    }
  }

  /* Faces of the embedded subgraph as vertex cycles. */
  void trace() {
    faces_.clear();
    std::vector<std::vector<char>> used(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) used[v].assign(rot_[v].size(), 0);
    for (int v = 0; v < n_; ++v)
      for (size_t k = 0; k < rot_[v].size(); ++k) {
        if (used[v][k]) continue;
        std::vector<int> cycle;
        int cu = v, ck = static_cast<int>(k);
        do {
          used[cu][ck] = 1;
          cycle.push_back(cu);
          int cv = rot_[cu][ck];
          /* next dart around the face: successor of cu in cv's rotation */
          int idx = -1;
          for (size_t j = 0; j < rot_[cv].size(); ++j)
            if (rot_[cv][j] == cu) idx = static_cast<int>(j);
          ck = (idx + 1) % static_cast<int>(rot_[cv].size());
          cu = cv;
        } while (!(cu == v && ck == static_cast<int>(k)));
        faces_.push_back(std::move(cycle));
      }
  }

  std::vector<Fragment> fragments() const {
    std::vector<Fragment> out;
    for (int u = 0; u < n_; ++u) {
      if (!in_h_[u]) continue;
      for (int v : adj_[u])
        if (u < v && in_h_[v] && !h_edge(u, v)) out.push_back({{u, v}, {}, {}});
    }
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
      if (in_h_[s] || seen[s]) continue;
      Fragment f;
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        f.interior.push_back(u);
        for (int v : adj_[u]) {
          if (in_h_[v]) {
            f.attachments.push_back(v);
          } else if (!seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
        }
      }
      std::sort(f.attachments.begin(), f.attachments.end());
      f.attachments.erase(std::unique(f.attachments.begin(), f.attachments.end()),
                          f.attachments.end());
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<int> admissible_faces(const Fragment& f) const {
    std::vector<int> out;
    for (size_t fi = 0; fi < faces_.size(); ++fi) {
      std::vector<int> sorted = faces_[fi];
      std::sort(sorted.begin(), sorted.end());
      if (std::includes(sorted.begin(), sorted.end(), f.attachments.begin(),
                        f.attachments.end()))
        out.push_back(static_cast<int>(fi));
    }
    return out;
  }

  /* Path between two distinct attachments through the fragment interior. */
  std::vector<int> route(const Fragment& f) const {
    if (f.interior.empty()) return {f.attachments[0], f.attachments[1]};
    int a = f.attachments[0];
    std::vector<char> inside(static_cast<size_t>(n_), 0);
    for (int v : f.interior) inside[v] = 1;
    std::vector<int> parent(static_cast<size_t>(n_), -1);
    std::vector<int> queue;
    for (int v : adj_[a])
      if (inside[v] && parent[v] < 0) {
        parent[v] = a;
        queue.push_back(v);
      }
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : adj_[u]) {
        if (in_h_[v] && v != a) {
          std::vector<int> path{v, u};
          for (int x = parent[u]; x != a; x = parent[x]) path.push_back(x);
          path.push_back(a);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (inside[v] && parent[v] < 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    fail(ErrorKind::Internal, "fragment with a single attachment");
  }

  void insert(const Fragment& f, int fi) {
    std::vector<int> path = route(f);
    int a = path.front(), b = path.back();
    const auto& face = faces_[fi];
    int m = static_cast<int>(face.size());
    int pred_a = -1, pred_b = -1;
    for (int i = 0; i < m; ++i) {
      if (face[i] == a) pred_a = face[(i + m - 1) % m];
      if (face[i] == b) pred_b = face[(i + m - 1) % m];
    }
    /* New neighbour sits in the face's corner at a, i.e. right after the
     * face predecessor of a in a's rotation. */
    auto insert_after = [&](int v, int after, int added) {
      auto& r = rot_[v];
      for (size_t k = 0; k < r.size(); ++k)
        if (r[k] == after) {
          r.insert(r.begin() + static_cast<long>(k) + 1, added);
          return;
        }
      fail(ErrorKind::Internal, "face predecessor missing from rotation");
    };
    insert_after(a, pred_a, path[1]);
    insert_after(b, pred_b, path[path.size() - 2]);
    for (size_t i = 1; i + 1 < path.size(); ++i) {
      rot_[path[i]] = {path[i - 1], path[i + 1]};
      in_h_[path[i]] = 1;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) mark_edge(path[i], path[i + 1]);
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> rot_;
  std::vector<char> in_h_;
  std::vector<char> h_edge_;
  std::vector<std::vector<int>> faces_;
};

/* Embedding of a connected graph without the public cap. */
std::optional<PlaneGraph> embed_connected(const AbstractGraph& g) {
  if (g.n() == 1) return PlaneGraph::build({{}});

  std::vector<std::vector<int>> rot(static_cast<size_t>(g.n()));
  for (auto& block : BlockFinder(g).take()) {
    if (block.size() == 1) {
      auto [u, v] = block[0];
      rot[u].push_back(v);
      rot[v].push_back(u);
      continue;
    }
    /* Local relabelling by rank of the block's vertex set. */
    std::vector<int> verts;
    for (auto [u, v] : block) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> rank(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < verts.size(); ++i) rank[verts[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(verts.size());
    for (auto [u, v] : block) {
      adj[rank[u]].push_back(rank[v]);
      adj[rank[v]].push_back(rank[u]);
    }
    std::vector<std::vector<int>> block_rot;
    if (!BlockEmbedder(static_cast<int>(verts.size()), std::move(adj)).run(block_rot))
      return std::nullopt;
    /* Blocks meet only at cut vertices; appending each block's rotation as a
     * contiguous run keeps the merged system spherical. */
    for (size_t i = 0; i < verts.size(); ++i)
      for (int w : block_rot[i]) rot[verts[i]].push_back(verts[w]);
  }
  return PlaneGraph::build(rot);
}

} // namespace

bool is_planar(const AbstractGraph& g) {
  if (g.n() == 0) return true;
  for (const auto& comp : g.components())
    if (!embed_connected(g.induced(comp)).has_value()) return false;
  return true;
}

std::optional<PlaneGraph> embed(const AbstractGraph& g, int cap) {
  if (g.n() == 0) fail(ErrorKind::TooSmall, "empty graph");
  if (g.n() > cap)
    fail(ErrorKind::TooLarge,
         "order " + std::to_string(g.n()) + " above cap " + std::to_string(cap));
  if (!g.connected()) fail(ErrorKind::Disconnected, "embedding requires a connected graph");
  return embed_connected(g);
}

} // namespace polydeza
