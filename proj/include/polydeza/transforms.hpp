#pragma once

#include <optional>
#include <utility>

#include "polydeza/abstract_graph.hpp"
#include "polydeza/analysis.hpp"
#include "polydeza/plane_graph.hpp"

namespace polydeza {

/* Medial graph: one vertex per edge, adjacent when consecutive on a face.
 * 4-regular with f(M) = f(G) + n(G). Input must be a polyhedron. */
PlaneGraph medial(const PlaneGraph& g);

/* Radial graph: vertices V + F, one edge per incidence, all faces
 * quadrangular with f(R) = q(G). Input must be a polyhedron. */
PlaneGraph radial(const PlaneGraph& g);

/* Line graph, abstract (no embedding): vertices are edges, adjacent when
 * sharing an endpoint. For cubic inputs this coincides with the medial. */
AbstractGraph line_graph(const AbstractGraph& g);

/* Inverse of medial on 4-regular polyhedra: the graph on faces joining pairs
 * that share a vertex but no edge splits into two components H and H*, with
 * medial(H) isomorphic to g and H* isomorphic to dual(H). Returns nullopt
 * when g is not a medial graph. The pair is ordered by canonical code. */
std::optional<std::pair<PlaneGraph, PlaneGraph>> medial_preimage(const PlaneGraph& g);

/* Splice site: vertices v, u, w consecutive in this order on a face of a
 * 4-regular polyhedron, i.e. succ_u(v) = w. */
struct TSite {
  int v = -1, u = -1, w = -1;
};

/* Three-vertex splice of two 4-regular polyhedra at one site each: adds
 * x, y, z between the hosts (deleting u1v1, u1w1, u2v2, u2w2 and wiring
 * x~{u1,v1,y,u2}, y~{x,z,w1,w2}, z~{u1,u2,v2,y}), producing a 4-regular
 * polyhedron on n1 + n2 + 3 vertices whose pair (x,z) has exactly the three
 * common neighbours {y,u1,u2}. Host vertex ids are preserved for g1 and
 * shifted by n1 for g2; x, y, z take the last three ids. */
PlaneGraph t_construct(const PlaneGraph& g1, TSite s1, const PlaneGraph& g2, TSite s2);

/* Inverse analysis at the first (lexicographic) pair with exactly three
 * common neighbours: either a square-pyramid witness (when two of the three
 * common neighbours are adjacent) or the recovered hosts with their splice
 * sites. Throws TypeMismatch when no pair has three common neighbours. */
struct TDecomposition {
  std::optional<SquarePyramidWitness> pyramid;
  std::optional<PlaneGraph> g1, g2;
  TSite s1, s2;
  std::pair<int, int> pair{-1, -1}; /* the analysed (a,b) */
};
TDecomposition t_decompose(const PlaneGraph& g);

} // namespace polydeza
