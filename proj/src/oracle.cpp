#include "polydeza/oracle.hpp"

#include <cstdint>
#include <utility>

#include "polydeza/abstract_graph.hpp"
#include "polydeza/analysis.hpp"
#include "polydeza/embed.hpp"
#include "polydeza/errors.hpp"

namespace polydeza {
namespace {

/* Orderly generation state. Edge slots are ordered colexicographically
 * ((i,j), i<j, sorted by (j,i)), and a labelled graph is canonical when its
 * slot bit vector is lexicographically maximal over all vertex permutations.
 * Removing the greatest slot of a canonical graph leaves a canonical graph,
 * so depth-first augmentation above the last slot, pruned to canonical
 * nodes, visits every isomorphism class exactly once. */
class OrderlySearch {
public:
  OrderlySearch(int r, int n) : r_(r), n_(n), deg_(static_cast<size_t>(n), 0),
                                adj_(static_cast<size_t>(n), 0) {
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) slots_.emplace_back(i, j);
    /* count_inc_[v][s] = slots at position >= s incident to v */
    int m = static_cast<int>(slots_.size());
    count_inc_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(m) + 1, 0));
    for (int v = 0; v < n; ++v)
      for (int s = m - 1; s >= 0; --s)
        count_inc_[v][s] = count_inc_[v][s + 1] +
                           (slots_[s].first == v || slots_[s].second == v ? 1 : 0);
  }

  std::set<CanonicalCode> run() {
    target_ = static_cast<long>(r_) * n_ / 2;
    dfs(-1, 0);
    return std::move(found_);
  }

private:
  bool edge_bit(int u, int v) const { return (adj_[u] >> v) & 1u; }

  /* Does some permutation produce a strictly larger bit vector? Candidates
   * are compared prefix-wise slot by slot; identical-row vertices (twins)
   * are interchangeable, so only the smallest unused twin is tried. */
  bool beaten(int k, std::vector<int>& perm, uint32_t used) {
    if (k == n_) return false;
    for (int x = 0; x < n_; ++x) {
      if ((used >> x) & 1u) continue;
      bool twin = false;
      for (int y = 0; y < x && !twin; ++y) {
        if ((used >> y) & 1u) continue;
        uint32_t off = ~((1u << x) | (1u << y));
        twin = (adj_[x] & off) == (adj_[y] & off);
      }
      if (twin) continue;
      int cmp = 0;
      for (int i = 0; i < k; ++i) {
        int a = (adj_[perm[i]] >> x) & 1;
        int b = (adj_[i] >> k) & 1;
        if (a != b) {
          cmp = a - b;
          break;
        }
      }
      if (cmp > 0) return true;
      if (cmp < 0) continue;
      perm[k] = x;
      if (beaten(k + 1, perm, used | (1u << x))) return true;
    }
    return false;
  }

  bool is_canonical() {
    std::vector<int> perm(static_cast<size_t>(n_));
    return !beaten(0, perm, 0);
  }

  void leaf() {
    for (int v = 0; v < n_; ++v)
      if (deg_[v] != r_) return;
    AbstractGraph g = AbstractGraph::from_edges(n_, edges_);
    if (!g.connected()) return;
    if (!connectivity_at_least(g, 3)) return;
    auto emb = embed(g, n_);
    if (!emb) return;
    found_.insert(canonical_code(*emb));
  }

  bool partial_planar() const {
    return is_planar(AbstractGraph::from_edges(n_, edges_));
  }

  void dfs(int last, long q) {
    if (q == target_) {
      leaf();
      return;
    }
    int m = static_cast<int>(slots_.size());
    for (int s = last + 1; s < m; ++s) {
      if (m - s < target_ - q) break;
      auto [i, j] = slots_[s];
      if (deg_[i] >= r_ || deg_[j] >= r_) continue;
      deg_[i]++;
      deg_[j]++;
      adj_[i] |= 1u << j;
      adj_[j] |= 1u << i;
      edges_.emplace_back(i, j);
      bool ok = true;
      for (int v = 0; v < n_ && ok; ++v)
        ok = count_inc_[v][s + 1] >= r_ - deg_[v];
      if (ok) ok = is_canonical();
      if (ok && q + 1 >= 12 && (q + 1) % 4 == 0) ok = partial_planar();
      if (ok) dfs(s, q + 1);
      edges_.pop_back();
      adj_[i] &= ~(1u << j);
      adj_[j] &= ~(1u << i);
      deg_[i]--;
      deg_[j]--;
    }
  }

  int r_, n_;
  long target_ = 0;
  std::vector<std::pair<int, int>> slots_;
  std::vector<std::vector<int>> count_inc_;
  std::vector<int> deg_;
  std::vector<uint32_t> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::set<CanonicalCode> found_;
};

} // namespace

std::set<CanonicalCode> oracle_regular_polyhedra(int r, int n) {
  if (r < 3 || r > 5) fail(ErrorKind::BadConfig, "regularity must be 3, 4 or 5");
  if (n < 4) fail(ErrorKind::TooSmall, "polyhedra need at least 4 vertices");
  if ((static_cast<long>(r) * n) % 2 != 0)
    fail(ErrorKind::BadConfig, "odd degree sum");
  int cap = r == 3 ? 14 : (r == 4 ? 13 : 12);
  if (n > cap)
    fail(ErrorKind::TooLarge, "census cap for this regularity is " + std::to_string(cap));
  return OrderlySearch(r, n).run();
}

} // namespace polydeza
