#pragma once

#include <vector>

#include "polydeza/abstract_graph.hpp"

namespace polydeza {

/* Directed edge of a plane graph. Dart ids are dense: the k-th neighbour of
 * vertex v is dart offset(v) + k. */
struct Dart {
  int tail = -1;
  int head = -1;
};

/* Combinatorial sphere embedding: a simple connected graph together with a
 * cyclic neighbour order at every vertex. Construction validates symmetry,
 * simplicity, connectivity and sphericity (n - q + f = 2), and traces all
 * faces once. Immutable afterwards.
 *
 * Face tracing follows next(d) = sigma_head(rev(d)), so vertices x, v, y are
 * consecutive in this order on some face exactly when sigma_v(x) = y, where
 * sigma_v is the cyclic successor in v's rotation. */
class PlaneGraph {
public:
  PlaneGraph() = default;

  /* rotation[v] = neighbours of v in cyclic order. */
  static PlaneGraph build(const std::vector<std::vector<int>>& rotation);

  int n() const { return n_; }
  long q() const { return q_; }
  int f() const { return static_cast<int>(faces_.size()); }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }

  int dart_count() const { return static_cast<int>(dart_head_.size()); }
  int dart_offset(int v) const { return offset_[v]; }
  Dart dart(int d) const { return {dart_tail_[d], dart_head_[d]}; }
  int dart_id(int tail, int head) const; /* -1 when absent */
  int rev(int d) const { return rev_[d]; }
  int sigma_next(int d) const; /* next dart around tail */
  int sigma_prev(int d) const;
  int face_next(int d) const { return sigma_next(rev_[d]); }

  /* Position of v in u's rotation, or -1. */
  int index_of(int u, int v) const;
  bool has_edge(int u, int v) const { return index_of(u, v) >= 0; }
  /* Cyclic successor / predecessor of v in u's rotation. */
  int succ(int u, int v) const;
  int pred(int u, int v) const;

  /* Faces as dart cycles; face_of(d) is the face whose cycle contains d. */
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int face_of(int d) const { return face_of_[d]; }
  int face_len(int fi) const { return static_cast<int>(faces_[fi].size()); }
  /* Face boundary as vertex list (tails of the dart cycle). */
  std::vector<int> face_vertices(int fi) const;
  /* Count of faces of each length, indexed by length. */
  std::vector<int> face_length_histogram() const;

  AbstractGraph abstract() const;

private:
  int n_ = 0;
  long q_ = 0;
  std::vector<std::vector<int>> rot_;
  std::vector<int> offset_;
  std::vector<int> dart_tail_, dart_head_;
  std::vector<int> rev_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_;
};

/* Validating constructor exposed under the module's operation name. */
PlaneGraph build_plane(const std::vector<std::vector<int>>& rotation);

/* Faces of a rotation system as dart cycles, without constructing the graph.
 * Used internally by build; exposed for tests. */
std::vector<std::vector<int>> trace_faces(const PlaneGraph& g);

/* Geometric dual: one vertex per face, adjacent across each edge, rotation
 * per face boundary. Requires the input to be a polyhedron (3-connected);
 * rejects inputs whose dual would not be simple. */
PlaneGraph dual(const PlaneGraph& g);

/* Dual without the connectivity precondition, for callers whose invariants
 * already guarantee a polyhedral input (generator streams). Still rejects a
 * non-simple dual. */
PlaneGraph dual_unchecked(const PlaneGraph& g);

/* For a cycle (as vertex list) of g: the vertex sets strictly on each side,
 * computed by flood-filling faces across edges not on the cycle. Exactly two
 * sides exist for any cycle of a sphere embedding. */
struct CycleSides {
  std::vector<int> left;  /* side of the face containing dart c0->c1 */
  std::vector<int> right;
};
CycleSides cycle_sides(const PlaneGraph& g, const std::vector<int>& cycle);

} // namespace polydeza
