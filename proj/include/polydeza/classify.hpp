#pragma once

#include <optional>
#include <set>
#include <string>

#include "polydeza/abstract_graph.hpp"
#include "polydeza/analysis.hpp"

namespace polydeza {

/* Structural classification of regular planar Deza graphs. A Deza graph is
 * regular with at most two distinct common-neighbour counts; the classifier
 * decides membership from structure (connectivity, regularity, face shapes,
 * short cycles, and a fixed list of exceptional polyhedra), never from the
 * type profile itself, so it can be checked against the direct profile
 * computation. */

enum class DezaFamily {
  NotDeza,
  Tetrahedron,          /* the one strongly regular polyhedron */
  CubicNoQuadFace,      /* cubic polyhedra without quadrangular faces */
  QuarticNoFourCycle,   /* quartic polyhedra without 4-cycles */
  Exceptional,          /* cube, octahedron, square antiprism, the 9-vertex
                           quartic, icosahedron */
  UnionK1,
  UnionK2,
  TriangleK3,
  UnionCyclesNoC4,
  UnionC4,
  UnionTetraCube,
  UnionIcosahedra,
  CubicNoFourCycleLowConn,   /* connectivity 1 or 2 */
  QuarticNoFourCycleLowConn, /* connectivity 1 or 2 */
};

struct DezaClass {
  DezaFamily family = DezaFamily::NotDeza;
  std::string detail;                       /* exceptional name, reason, etc. */
  std::optional<std::pair<int, int>> lambda_mu; /* observed {min, max} of A;
                                                   present iff not NotDeza */
};

/* Classify a regular planar simple graph into its family. The decision is
 * structural (connectivity, component shapes, face and cycle tests, canonical
 * match against the exceptional list), so the result can be cross-checked
 * against the direct profile computation. Throws NotRegular / NotPlanar for
 * out-of-scope input. */
DezaClass classify(const AbstractGraph& g);

/* Predicted type profile of an r-regular polyhedron that is neither the
 * tetrahedron nor one of the five exceptional polyhedra. For r=3 and r=4 the
 * prediction is exact; for r=5 it is a sandwich lower/upper pair. Throws
 * ExceptionalInput for the excluded graphs, NotRegular / NotPolyhedral for
 * inputs the prediction does not cover. */
struct TypePrediction {
  bool exact = true;
  std::set<int> profile;  /* exact, or the guaranteed lower set when !exact */
  std::set<int> upper;    /* superset bound when !exact */
};
TypePrediction predict_type(const PlaneGraph& g);

} // namespace polydeza
