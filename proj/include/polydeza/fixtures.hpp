#pragma once

#include <string>
#include <vector>

#include "polydeza/plane_graph.hpp"

namespace polydeza {

/* Hand-built reference embeddings. Each is validated by build_plane. */
PlaneGraph tetrahedron();
PlaneGraph cube();
PlaneGraph octahedron();
PlaneGraph icosahedron();
PlaneGraph dodecahedron(); /* dual of the icosahedron */
PlaneGraph prism(int k);     /* k >= 3; prism(4) == cube */
PlaneGraph antiprism(int k); /* k >= 3; antiprism(3) == octahedron */

/* Cycle with hubs joined to alternating cycle vertices: the 3-connected
 * quadrangulation on 2k + 2 vertices whose dual is the k-antiprism. k >= 3. */
PlaneGraph pseudo_double_wheel(int k);

/* Snub of a polyhedron: one vertex per incidence corner, faces = rotated
 * face polygons + vertex polygons + two triangles per original edge.
 * snub(cube) and snub(dodecahedron) are the 5-regular fixtures. */
PlaneGraph snub(const PlaneGraph& g);

/* The 9-vertex 4-regular polyhedron of Deza type {1,2}: the medial of the
 * triangular prism. Exhaustive generation shows it is the only one of its
 * order with that profile. */
PlaneGraph nine_vertex_quartic();

/* Named corpus used by tests, the CLI `fixtures` command and the manifest. */
struct NamedFixture {
  std::string name;
  PlaneGraph graph;
};
std::vector<NamedFixture> fixture_corpus();

} // namespace polydeza
