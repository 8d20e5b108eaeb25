#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "polydeza/analysis.hpp"
#include "polydeza/errors.hpp"
#include "polydeza/fixtures.hpp"
#include "polydeza/transforms.hpp"

using namespace polydeza;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

AbstractGraph cycle(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return AbstractGraph::from_edges(k, edges);
}

AbstractGraph path(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return AbstractGraph::from_edges(k, edges);
}

/* Apex joined to every vertex of a 4-cycle. */
AbstractGraph square_pyramid() {
  return AbstractGraph::from_edges(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

std::set<int> profile_of(const AbstractGraph& g) { return type_profile(g).values; }

} // namespace

TEST_CASE("common neighbours on reference pairs") {
  AbstractGraph t = tetrahedron().abstract();
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      CHECK(common_neighbours(t, u, v).size() == 2);

  AbstractGraph c5 = cycle(5);
  CHECK(common_neighbours(c5, 0, 1).empty());
  CHECK(common_neighbours(c5, 0, 2) == std::vector<int>{1});

  CHECK(kind_of([&] { common_neighbours(c5, 2, 2); }) == ErrorKind::SameVertex);
  CHECK(kind_of([&] { common_neighbours(c5, 0, 9); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("type profiles of the Platonic solids") {
  CHECK(profile_of(tetrahedron().abstract()) == std::set<int>{2});
  CHECK(profile_of(cube().abstract()) == std::set<int>{0, 2});
  CHECK(profile_of(octahedron().abstract()) == std::set<int>{2, 4});
  CHECK(profile_of(icosahedron().abstract()) == std::set<int>{0, 2});
  CHECK(profile_of(dodecahedron().abstract()) == std::set<int>{0, 1});

  CHECK(profile_of(antiprism(4).abstract()) == std::set<int>{1, 2});
  CHECK(profile_of(nine_vertex_quartic().abstract()) == std::set<int>{1, 2});
  CHECK(profile_of(prism(5).abstract()) == std::set<int>{0, 1, 2});
}

TEST_CASE("profile witnesses attain their counts") {
  for (const auto& f : fixture_corpus()) {
    TypeProfile p = type_profile(f.graph.abstract());
    CHECK(p.witnesses.size() == p.values.size());
    for (const auto& [count, pair] : p.witnesses) {
      CHECK(p.values.count(count) == 1);
      CHECK(static_cast<int>(
                common_neighbours(f.graph.abstract(), pair.first, pair.second).size()) ==
            count);
    }
  }
}

TEST_CASE("Deza test agrees with the profile") {
  auto lm = is_deza(tetrahedron().abstract());
  REQUIRE(lm.has_value());
  CHECK(*lm == std::pair<int, int>{2, 2});
  CHECK(*is_deza(cube().abstract()) == std::pair<int, int>{0, 2});
  CHECK(*is_deza(octahedron().abstract()) == std::pair<int, int>{2, 4});
  CHECK(*is_deza(antiprism(4).abstract()) == std::pair<int, int>{1, 2});
  CHECK(*is_deza(dodecahedron().abstract()) == std::pair<int, int>{0, 1});

  CHECK(!is_deza(prism(5).abstract()).has_value());  /* three counts */
  CHECK(!is_deza(path(4)).has_value());               /* not regular */
}

TEST_CASE("vertex connectivity on reference graphs") {
  CHECK(vertex_connectivity(cube().abstract()) == 3);
  CHECK(vertex_connectivity(octahedron().abstract()) == 4);
  CHECK(vertex_connectivity(icosahedron().abstract()) == 5);
  CHECK(vertex_connectivity(tetrahedron().abstract()) == 3);
  CHECK(vertex_connectivity(cycle(5)) == 2);
  CHECK(vertex_connectivity(path(3)) == 1);
  CHECK(vertex_connectivity(AbstractGraph::from_edges(4, {{0, 1}, {2, 3}})) == 0);

  for (const auto& f : fixture_corpus()) {
    int exact = vertex_connectivity(f.graph.abstract());
    for (int k = 0; k <= exact + 1; ++k)
      CHECK(connectivity_at_least(f.graph.abstract(), k) == (k <= exact));
  }
}

TEST_CASE("girth on reference graphs") {
  CHECK(*girth(cube().abstract()) == 4);
  CHECK(*girth(dodecahedron().abstract()) == 5);
  CHECK(*girth(icosahedron().abstract()) == 3);
  CHECK(*girth(cycle(7)) == 7);
  CHECK(!girth(path(5)).has_value());
}

TEST_CASE("polyhedron test") {
  PolyhedronCheck ok = is_polyhedron(cube().abstract());
  CHECK(ok.ok);
  REQUIRE(ok.embedding.has_value());
  CHECK(ok.embedding->f() == 6);

  CHECK(!is_polyhedron(cycle(4)).ok);              /* connectivity 2 */
  CHECK(!is_polyhedron(path(4)).ok);
  CHECK(!is_polyhedron(AbstractGraph(7)).ok);      /* disconnected, too sparse */
  AbstractGraph k5 = AbstractGraph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(!is_polyhedron(k5).ok);                    /* not planar */
}

TEST_CASE("subgraph witnesses") {
  auto k24 = k2r_witness(octahedron().abstract(), 4);
  REQUIRE(k24.has_value());
  CHECK(k24->commons.size() == 4);
  CHECK(!k2r_witness(cube().abstract(), 3).has_value());
  CHECK(k2r_witness(cube().abstract(), 2).has_value());
  CHECK(k2r_witness(octahedron().abstract(), 3).has_value());

  CHECK(square_pyramid_witness(square_pyramid()).has_value());
  auto w = square_pyramid_witness(octahedron().abstract());
  REQUIRE(w.has_value());
  for (int i = 0; i < 4; ++i) {
    CHECK(octahedron().abstract().has_edge(w->apex, w->base[i]));
    CHECK(octahedron().abstract().has_edge(w->base[i], w->base[(i + 1) % 4]));
  }
  CHECK(!square_pyramid_witness(cube().abstract()).has_value());
  CHECK(!square_pyramid_witness(icosahedron().abstract()).has_value());
}

TEST_CASE("4-cycle detection routes agree") {
  std::vector<AbstractGraph> samples = {cycle(4), cycle(5), path(6),
                                        tetrahedron().abstract(),
                                        square_pyramid()};
  for (const auto& f : fixture_corpus()) samples.push_back(f.graph.abstract());
  for (const auto& g : samples)
    CHECK(has_four_cycle(g) == has_four_cycle_bruteforce(g));

  CHECK(has_four_cycle(cube().abstract()));
  CHECK(has_four_cycle(tetrahedron().abstract()));  /* K4 contains C4 */
  CHECK(!has_four_cycle(dodecahedron().abstract()));
  CHECK(!has_four_cycle(cycle(5)));
}

TEST_CASE("face statistics and the triangle-edge identity") {
  FaceStats cs = face_stats(cube());
  CHECK(cs.p == 8);
  CHECK(cs.q == 12);
  CHECK(cs.f == 6);
  CHECK(cs.f4() == 6);
  CHECK(cs.q0 == 12);

  FaceStats is = face_stats(icosahedron());
  CHECK(is.q2 == 30);
  CHECK(is.q0 == 0);
  CHECK(is.q1 == 0);

  for (const auto& f : fixture_corpus()) {
    FaceStats st = face_stats(f.graph);
    CHECK(2 * st.q2 + st.q1 == 3L * st.f3());
    CHECK(st.q0 + st.q1 + st.q2 == st.q);
    int psum = 0, fsum = 0;
    for (int c : st.p_by_degree) psum += c;
    for (int c : st.f_by_length) fsum += c;
    CHECK(psum == st.p);
    CHECK(fsum == st.f);
  }
}

TEST_CASE("quintic triangle bound report") {
  QuinticTriangleReport icosa = quintic_triangle_report(icosahedron());
  CHECK(icosa.q2 == 30);
  CHECK(icosa.lower == 30);
  CHECK(icosa.holds);
  CHECK(icosa.tight);
  CHECK(icosa.lower_at_least_30);

  QuinticTriangleReport sd = quintic_triangle_report(snub(dodecahedron()));
  CHECK(sd.q == 150);
  CHECK(sd.q0 == 0);
  CHECK(sd.q2 == 90);
  CHECK(sd.lower == 90);
  CHECK(sd.tight);

  /* snub cube has quadrangular faces, outside the bound's scope */
  CHECK(kind_of([] { quintic_triangle_report(snub(cube())); }) ==
        ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { quintic_triangle_report(cube()); }) ==
        ErrorKind::PreconditionViolated);
}

TEST_CASE("quartic face bound report") {
  PlaneGraph id = medial(dodecahedron());
  QuarticFaceReport rep = quartic_face_report(id);
  CHECK(rep.f == 32);
  CHECK(rep.f3 == 20);
  CHECK(rep.q == 60);
  CHECK(rep.q1 == 60);
  CHECK(rep.lower_holds);
  CHECK(rep.upper_holds);
  CHECK(rep.q1_holds);
  CHECK(rep.lower_tight);  /* 2*20 == 32 + 8 */
  CHECK(rep.upper_tight);  /* 3*20 == 2*32 - 4 */
  CHECK(rep.q1_tight);     /* 4*60 == 3*60 + 60 */

  /* the exceptional quartic members carry 4-cycles, outside the scope */
  CHECK(kind_of([] { quartic_face_report(octahedron()); }) ==
        ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { quartic_face_report(cube()); }) ==
        ErrorKind::PreconditionViolated);
}

TEST_CASE("separating cycles") {
  /* all 4-cycles of the cube are faces, hence non-separating */
  CHECK(!has_separating_four_cycle(cube()));
  CHECK(!has_separating_four_cycle(pseudo_double_wheel(4)));

  PlaneGraph c = cube();
  std::vector<int> face = c.face_vertices(0);
  CHECK(!is_separating_cycle(c, face));

  CHECK(four_cycle_count_by_pairs(cube().abstract()) == 6);
  CHECK(four_cycle_count_by_pairs(pseudo_double_wheel(3).abstract()) == 6);
}
