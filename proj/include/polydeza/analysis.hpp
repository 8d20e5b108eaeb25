#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polydeza/abstract_graph.hpp"
#include "polydeza/plane_graph.hpp"

namespace polydeza {

/* Common neighbours N(u) intersect N(v) of distinct vertices u, v, ascending. */
std::vector<int> common_neighbours(const AbstractGraph& g, int u, int v);

/* Common-neighbour type profile A(G) = { i : some pair u != v has exactly i
 * common neighbours }, with one witness pair per value (the lexicographically
 * smallest). Requires n >= 2. */
struct TypeProfile {
  std::set<int> values;
  /* witness[i] = smallest (u,v) with that count, keyed as in values */
  std::vector<std::pair<int, std::pair<int, int>>> witnesses;
  bool contains(int i) const { return values.count(i) > 0; }
};
TypeProfile type_profile(const AbstractGraph& g);

/* Deza test: regular and at most two distinct common-neighbour counts.
 * Returns {lambda, mu} with lambda <= mu (equal when only one count occurs);
 * nullopt for irregular graphs or more than two counts. Requires n >= 2. */
std::optional<std::pair<int, int>> is_deza(const AbstractGraph& g);

/* Exact vertex connectivity by exhaustive removal of vertex subsets in
 * increasing size. Complete graphs yield n - 1. */
int vertex_connectivity(const AbstractGraph& g);

/* No vertex cut of size < k exists; complete graphs count as (n-1)-connected.
 * Cheaper than the exact value when only a threshold matters. */
bool connectivity_at_least(const AbstractGraph& g, int k);

/* Shortest cycle length; nullopt for forests. */
std::optional<int> girth(const AbstractGraph& g);

/* Polyhedron test: simple, planar, 3-connected, n >= 4. On success carries
 * the (unique up to reflection) sphere embedding. */
struct PolyhedronCheck {
  bool ok = false;
  std::string reason;
  std::optional<PlaneGraph> embedding;
};
PolyhedronCheck is_polyhedron(const AbstractGraph& g, int cap = 128);

/* Smallest pair (u,v) with at least r common neighbours (a K(2,r) subgraph),
 * together with r common neighbours as witness. */
struct K2rWitness {
  int u = -1, v = -1;
  std::vector<int> commons;
};
std::optional<K2rWitness> k2r_witness(const AbstractGraph& g, int r);

/* Smallest square-pyramid subgraph: apex adjacent to all of a 4-cycle. */
struct SquarePyramidWitness {
  int apex = -1;
  std::array<int, 4> base{};
};
std::optional<SquarePyramidWitness> square_pyramid_witness(const AbstractGraph& g);

/* Explicit 4-cycle presence. The default test counts common neighbours; the
 * brute-force variant enumerates vertex quadruples independently so suites
 * validating profile equivalences do not reuse the profile machinery. */
bool has_four_cycle(const AbstractGraph& g);
bool has_four_cycle_bruteforce(const AbstractGraph& g);

/* Face/edge census of an embedding: p_i = vertices of degree i, f_i = faces
 * of length i, q_j = edges lying on exactly j triangular faces. The identity
 * 2*q2 + q1 = 3*f3 always holds. */
struct FaceStats {
  int p = 0;
  long q = 0;
  int f = 0;
  std::vector<int> p_by_degree;
  std::vector<int> f_by_length;
  long q0 = 0, q1 = 0, q2 = 0;
  int f3() const { return f_by_length.size() > 3 ? f_by_length[3] : 0; }
  int f4() const { return f_by_length.size() > 4 ? f_by_length[4] : 0; }
  int f5() const { return f_by_length.size() > 5 ? f_by_length[5] : 0; }
};
FaceStats face_stats(const PlaneGraph& g);

/* Triangle-edge bound for connected 5-regular plane graphs without
 * quadrangular faces: q2 >= 15 + q/2 + q0 >= 30. Throws PreconditionViolated
 * (naming the failed condition) when the input is outside the bound's scope. */
struct QuinticTriangleReport {
  long q = 0, q0 = 0, q2 = 0;
  long lower = 0; /* 15 + q/2 + q0 */
  bool holds = false;       /* q2 >= lower */
  bool lower_at_least_30 = false;
  bool tight = false;       /* q2 == lower */
};
QuinticTriangleReport quintic_triangle_report(const PlaneGraph& g);

/* Face bounds for 4-regular planar Deza graphs other than the three
 * exceptional quartic ones: f/2 + 4 <= f3 <= (2f - 4)/3 and q1 >= 3q/4 + 15,
 * in exact integer arithmetic. Throws PreconditionViolated when the input is
 * not 4-regular, not Deza, or contains a 4-cycle (the exceptional quartic
 * Deza graphs are exactly the Deza members with a 4-cycle, so no fixture
 * table is needed for the scope test). */
struct QuarticFaceReport {
  int f = 0, f3 = 0;
  long q = 0, q1 = 0;
  bool lower_holds = false;  /* 2*f3 >= f + 8 */
  bool upper_holds = false;  /* 3*f3 <= 2f - 4 */
  bool q1_holds = false;     /* 4*q1 >= 3q + 60 */
  bool lower_tight = false;
  bool upper_tight = false;
  bool q1_tight = false;
};
QuarticFaceReport quartic_face_report(const PlaneGraph& g);

/* Separating cycle test: both open sides inhabited. The quad variant scans
 * all 4-cycles of a quadrangulation. */
bool is_separating_cycle(const PlaneGraph& g, const std::vector<int>& cycle);
bool has_separating_four_cycle(const PlaneGraph& g);

/* Independent 4-cycle census for simple bipartite quadrangulations:
 * sum over pairs of C(common,2) / 2. Non-facial == separating there. */
long four_cycle_count_by_pairs(const AbstractGraph& g);

} // namespace polydeza
