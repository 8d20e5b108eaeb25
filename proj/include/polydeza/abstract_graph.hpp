#pragma once

#include <cstdint>
#include <vector>

namespace polydeza {

/* Simple undirected graph without an embedding. Vertex ids are dense 0-based
 * ints. Neighbour lists are kept sorted; adjacency is mirrored into bitset
 * rows so common-neighbour counts reduce to AND + popcount. */
class AbstractGraph {
public:
  AbstractGraph() = default;
  explicit AbstractGraph(int n);

  static AbstractGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static AbstractGraph from_adjacency(const std::vector<std::vector<int>>& adj);

  int n() const { return n_; }
  long q() const { return q_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /* All edges as (u,v) with u < v, lexicographically sorted. */
  std::vector<std::pair<int, int>> edges() const;

  /* Common regularity degree, or -1 when degrees differ (or n == 0). */
  int regularity() const;

  int words() const { return words_; }
  const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

  /* Connected components as sorted vertex lists, sorted by smallest member. */
  std::vector<std::vector<int>> components() const;
  bool connected() const { return n_ <= 1 || components().size() == 1; }

  /* Induced subgraph on the given (sorted or unsorted) vertex set; vertices
   * are relabelled by rank. */
  AbstractGraph induced(const std::vector<int>& vertices) const;

  /* Disjoint union, second operand's ids shifted by n(). */
  static AbstractGraph disjoint_union(const AbstractGraph& a, const AbstractGraph& b);

private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  long q_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<uint64_t> bits_;
};

} // namespace polydeza
