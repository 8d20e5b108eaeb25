#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "polydeza/analysis.hpp"
#include "polydeza/canonical.hpp"
#include "polydeza/embed.hpp"
#include "polydeza/errors.hpp"
#include "polydeza/fixtures.hpp"
#include "polydeza/plane_graph.hpp"
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

PlaneGraph plane_cycle(int k) {
  std::vector<std::vector<int>> rot(k);
  for (int i = 0; i < k; ++i) rot[i] = {(i + k - 1) % k, (i + 1) % k};
  return build_plane(rot);
}

AbstractGraph wheel4() {
  return AbstractGraph::from_edges(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

/* First splice site of g: three consecutive face vertices. */
TSite first_site(const PlaneGraph& g) {
  const auto& cycle = g.faces()[0];
  TSite s;
  s.v = g.dart(cycle[0]).tail;
  s.u = g.dart(cycle[1]).tail;
  s.w = g.dart(cycle[1]).head;
  return s;
}

std::string hex(const PlaneGraph& g) { return code_hex(canonical_code(g)); }

} // namespace

TEST_CASE("medial graphs of reference polyhedra") {
  CHECK(hex(medial(tetrahedron())) == hex(octahedron()));
  CHECK(hex(medial(prism(3))) == hex(nine_vertex_quartic()));

  /* the corpus carries the medials of the cube and the dodecahedron */
  auto corpus = fixture_corpus();
  auto named = [&](const std::string& name) -> const PlaneGraph& {
    for (const auto& f : corpus)
      if (f.name == name) return f.graph;
    FAIL("fixture missing: " << name);
    return corpus[0].graph;
  };
  CHECK(hex(medial(cube())) == hex(named("cuboctahedron")));
  CHECK(hex(medial(octahedron())) == hex(named("cuboctahedron")));
  CHECK(hex(medial(dodecahedron())) == hex(named("icosidodecahedron")));
  CHECK(hex(medial(icosahedron())) == hex(named("icosidodecahedron")));

  for (const PlaneGraph& g : {tetrahedron(), cube(), dodecahedron(), prism(3),
                              antiprism(4)}) {
    PlaneGraph m = medial(g);
    CHECK(m.n() == g.q());
    CHECK(m.abstract().regularity() == 4);
    CHECK(m.f() == g.f() + g.n());
    CHECK(hex(m) == hex(medial(dual(g))));
  }

  PlaneGraph id = medial(dodecahedron());
  CHECK(id.n() == 30);
  CHECK(id.q() == 60);
  CHECK(id.f() == 32);
  CHECK(id.face_length_histogram()[3] == 20);
  CHECK(id.face_length_histogram()[5] == 12);

  CHECK(kind_of([] { medial(plane_cycle(4)); }) == ErrorKind::NotPolyhedral);
}

TEST_CASE("radial graphs of reference polyhedra") {
  CHECK(hex(radial(tetrahedron())) == hex(cube()));

  for (const PlaneGraph& g : {tetrahedron(), cube(), dodecahedron(), prism(3)}) {
    PlaneGraph r = radial(g);
    CHECK(r.n() == g.n() + g.f());
    CHECK(r.q() == 2 * g.q());
    CHECK(r.f() == g.q());
    auto hist = r.face_length_histogram();
    CHECK(hist[4] == r.f());
    CHECK(hex(r) == hex(radial(dual(g))));
  }

  CHECK(radial(cube()).n() == 14);
  CHECK(kind_of([] { radial(plane_cycle(4)); }) == ErrorKind::NotPolyhedral);
}

TEST_CASE("line graphs coincide with medials on cubic inputs") {
  AbstractGraph lk4 = line_graph(tetrahedron().abstract());
  auto emb = embed(lk4);
  REQUIRE(emb.has_value());
  CHECK(hex(*emb) == hex(octahedron()));

  for (const PlaneGraph& g : {dodecahedron(), prism(3), prism(5)}) {
    AbstractGraph lg = line_graph(g.abstract());
    auto le = embed(lg, lg.n());
    REQUIRE(le.has_value());
    CHECK(hex(*le) == hex(medial(g)));
  }

  /* line graph of a quartic input is 6-regular, no longer the medial */
  CHECK(line_graph(octahedron().abstract()).regularity() == 6);
}

TEST_CASE("medial preimage inverts medial") {
  for (const PlaneGraph& host : {cube(), dodecahedron(), prism(3), prism(5),
                                 antiprism(4)}) {
    auto pm = medial_preimage(medial(host));
    REQUIRE(pm.has_value());
    std::set<std::string> got = {hex(pm->first), hex(pm->second)};
    std::set<std::string> want = {hex(host), hex(dual(host))};
    CHECK(got == want);
    CHECK(canonical_code(pm->first) <= canonical_code(pm->second));
  }

  /* octahedron = medial(tetrahedron), and the tetrahedron is self-dual */
  auto pm = medial_preimage(octahedron());
  REQUIRE(pm.has_value());
  CHECK(hex(pm->first) == hex(tetrahedron()));
  CHECK(hex(pm->second) == hex(tetrahedron()));

  /* the square antiprism is the medial of the square pyramid (self-dual) */
  auto sp = embed(wheel4());
  REQUIRE(sp.has_value());
  auto apm = medial_preimage(antiprism(4));
  REQUIRE(apm.has_value());
  CHECK(hex(apm->first) == hex(*sp));
  CHECK(hex(apm->second) == hex(*sp));

  /* non-quartic input is never a medial */
  CHECK(!medial_preimage(cube()).has_value());
  CHECK(!medial_preimage(icosahedron()).has_value());
}

TEST_CASE("three-vertex splice builds a quartic polyhedron with a 3-common pair") {
  PlaneGraph o = octahedron();
  TSite s1 = first_site(o);
  TSite s2 = first_site(o);
  PlaneGraph g = t_construct(o, s1, o, s2);

  CHECK(g.n() == 15);
  CHECK(g.abstract().regularity() == 4);
  CHECK(connectivity_at_least(g.abstract(), 3));

  /* x, y, z take the last three ids; (x,z) shares exactly {y, u1, u2} */
  int x = 12, y = 13, z = 14;
  std::vector<int> commons = common_neighbours(g.abstract(), x, z);
  std::set<int> expect = {y, s1.u, 6 + s2.u};
  CHECK(std::set<int>(commons.begin(), commons.end()) == expect);
  CHECK(type_profile(g.abstract()).values == std::set<int>{0, 1, 2, 3});

  /* a type {0,1,2,3} polyhedron is never a medial graph */
  CHECK(!medial_preimage(g).has_value());

  /* site validation */
  TSite bad = s1;
  bad.w = o.succ(s1.u, o.succ(s1.u, s1.v));
  CHECK(kind_of([&] { t_construct(o, bad, o, s2); }) == ErrorKind::SiteNotOnFace);
  CHECK(kind_of([&] {
          t_construct(cube(), first_site(cube()), cube(), first_site(cube()));
        }) == ErrorKind::NotQuartic);
}

TEST_CASE("splice decomposition round trip") {
  PlaneGraph o = octahedron();
  PlaneGraph g = t_construct(o, first_site(o), o, first_site(o));

  TDecomposition d = t_decompose(g);
  if (d.pyramid) {
    const auto& w = *d.pyramid;
    for (int i = 0; i < 4; ++i) {
      CHECK(g.abstract().has_edge(w.apex, w.base[i]));
      CHECK(g.abstract().has_edge(w.base[i], w.base[(i + 1) % 4]));
    }
  } else {
    REQUIRE(d.g1.has_value());
    REQUIRE(d.g2.has_value());
    PlaneGraph re = t_construct(*d.g1, d.s1, *d.g2, d.s2);
    CHECK(hex(re) == hex(g));
  }

  /* no pair has exactly three common neighbours in the octahedron */
  CHECK(kind_of([&] { t_decompose(octahedron()); }) == ErrorKind::TypeMismatch);
  CHECK(kind_of([&] { t_decompose(nine_vertex_quartic()); }) == ErrorKind::TypeMismatch);
}

TEST_CASE("snub fixtures") {
  CHECK(hex(snub(tetrahedron())) == hex(icosahedron()));

  PlaneGraph sc = snub(cube());
  CHECK(sc.n() == 24);
  CHECK(sc.q() == 60);
  CHECK(sc.f() == 38);
  CHECK(sc.abstract().regularity() == 5);
  CHECK(sc.face_length_histogram()[4] == 6);

  PlaneGraph sd = snub(dodecahedron());
  CHECK(sd.n() == 60);
  CHECK(sd.q() == 150);
  CHECK(sd.f() == 92);
  CHECK(sd.abstract().regularity() == 5);
  CHECK(sd.face_length_histogram()[5] == 12);
  CHECK(sd.face_length_histogram()[3] == 80);
}
