#pragma once

#include <functional>
#include <map>
#include <vector>

#include "polydeza/plane_graph.hpp"

namespace polydeza {

/* Vertex splitting in a quadrangulation: split v at pivot positions i < j in
 * its rotation (both inclusive arcs keeping >= 3 vertices); v1 takes the arc
 * rot[v][i..j], v2 the complementary arc, and [v1, a, v2, b] becomes a new
 * quadrangular face. Adds one vertex (v2 gets the largest id). */
struct QuadSplitSite {
  int v = -1, i = -1, j = -1;
};
PlaneGraph quad_vertex_split(const PlaneGraph& g, const QuadSplitSite& site);

/* Ring insertion: four new degree-3 vertices forming a quadrilateral inside
 * face fi, spoked to its four corners. Adds four vertices and creates a face
 * whose vertices all have degree 3. */
PlaneGraph quad_ring_insert(const PlaneGraph& g, int fi);

/* Vertex splitting in a triangulation: arcs keep >= 2 vertices, v1 and v2
 * stay adjacent, two new triangles appear at the pivots. */
PlaneGraph tri_vertex_split(const PlaneGraph& g, const QuadSplitSite& site);

struct GenOptions {
  int max_n = 0;
  bool use_ring_insert = true; /* quadrangulations: apply both expansions */
  int threads = 1;
};

using GraphSink = std::function<void(const PlaneGraph&)>;

/* Level-by-level closures with canonical-code deduplication. Graphs are
 * emitted in canonical-code order within each order (dual streams follow
 * their primal's order), so output is byte-identical for any thread count.
 * Returned map: order -> count, with explicit zero entries for empty orders.
 *
 * - quadrangulations: 3-connected quadrangulations of the sphere, from
 *   pseudo-double-wheels by vertex splitting (and ring insertion unless
 *   disabled, which restricts to the subclass without separating 4-cycles).
 * - quartic polyhedra: duals of the above (order shift: n_quad - 2).
 * - triangulations: from the tetrahedron by vertex splitting.
 * - cubic polyhedra: duals of triangulations (order shift: 2*n_tri - 4).
 */
std::map<int, long> gen_quadrangulations(const GenOptions& opt, const GraphSink& sink);
std::map<int, long> gen_quartic_polyhedra(const GenOptions& opt, const GraphSink& sink);
std::map<int, long> gen_triangulations(const GenOptions& opt, const GraphSink& sink);
std::map<int, long> gen_cubic_polyhedra(const GenOptions& opt, const GraphSink& sink);

} // namespace polydeza
