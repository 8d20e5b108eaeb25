#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "polydeza/analysis.hpp"
#include "polydeza/canonical.hpp"
#include "polydeza/classify.hpp"
#include "polydeza/errors.hpp"
#include "polydeza/fixtures.hpp"
#include "polydeza/generate.hpp"
#include "polydeza/suites.hpp"
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

AbstractGraph complete(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return AbstractGraph::from_edges(k, edges);
}

AbstractGraph union_of(const std::vector<AbstractGraph>& parts) {
  AbstractGraph g = parts[0];
  for (size_t i = 1; i < parts.size(); ++i)
    g = AbstractGraph::disjoint_union(g, parts[i]);
  return g;
}

/* Two host copies, one edge removed in each, deficient ends cross-joined:
 * regularity is preserved and connectivity drops to 2. */
AbstractGraph cross_joined_pair(const AbstractGraph& host) {
  int u = 0, v = host.neighbours(0)[0];
  AbstractGraph block = host;
  block.remove_edge(u, v);
  AbstractGraph g = AbstractGraph::disjoint_union(block, block);
  g.add_edge(u, host.n() + u);
  g.add_edge(v, host.n() + v);
  return g;
}

DezaFamily family_of(const AbstractGraph& g) { return classify(g).family; }

TSite first_site(const PlaneGraph& g) {
  const auto& cyc = g.faces()[0];
  return {g.dart(cyc[0]).tail, g.dart(cyc[1]).tail, g.dart(cyc[1]).head};
}

} // namespace

TEST_CASE("classification of the polyhedral families") {
  CHECK(family_of(tetrahedron().abstract()) == DezaFamily::Tetrahedron);
  CHECK(family_of(dodecahedron().abstract()) == DezaFamily::CubicNoQuadFace);
  CHECK(family_of(medial(dodecahedron()).abstract()) == DezaFamily::QuarticNoFourCycle);

  DezaClass cube_class = classify(cube().abstract());
  CHECK(cube_class.family == DezaFamily::Exceptional);
  CHECK(cube_class.detail == "cube");
  CHECK(classify(octahedron().abstract()).detail == "octahedron");
  CHECK(classify(antiprism(4).abstract()).detail == "square antiprism");
  CHECK(classify(nine_vertex_quartic().abstract()).detail == "9-vertex quartic");
  CHECK(classify(icosahedron().abstract()).detail == "icosahedron");

  /* cubic with quadrangular faces and quartic with 4-cycles are not Deza */
  CHECK(family_of(prism(3).abstract()) == DezaFamily::NotDeza);
  CHECK(family_of(prism(5).abstract()) == DezaFamily::NotDeza);
  CHECK(family_of(medial(cube()).abstract()) == DezaFamily::NotDeza);
  CHECK(family_of(antiprism(5).abstract()) == DezaFamily::NotDeza);

  /* quintic polyhedra other than the icosahedron are not Deza */
  CHECK(family_of(snub(cube()).abstract()) == DezaFamily::NotDeza);
  CHECK(family_of(snub(dodecahedron()).abstract()) == DezaFamily::NotDeza);
}

TEST_CASE("classification of disconnected and low-connectivity families") {
  CHECK(family_of(AbstractGraph(1)) == DezaFamily::NotDeza); /* no pair */
  CHECK(family_of(AbstractGraph(4)) == DezaFamily::UnionK1);
  CHECK(family_of(complete(2)) == DezaFamily::UnionK2);
  CHECK(family_of(union_of({complete(2), complete(2)})) == DezaFamily::UnionK2);
  CHECK(family_of(complete(3)) == DezaFamily::TriangleK3);
  CHECK(family_of(cycle(5)) == DezaFamily::UnionCyclesNoC4);
  CHECK(family_of(union_of({cycle(3), cycle(5), cycle(6)})) ==
        DezaFamily::UnionCyclesNoC4);
  CHECK(family_of(cycle(4)) == DezaFamily::UnionC4);
  CHECK(family_of(union_of({cycle(4), cycle(4)})) == DezaFamily::UnionC4);
  CHECK(family_of(union_of({cycle(4), cycle(6)})) == DezaFamily::NotDeza);

  AbstractGraph tetra = tetrahedron().abstract();
  AbstractGraph box = cube().abstract();
  CHECK(family_of(union_of({tetra, tetra})) == DezaFamily::UnionTetraCube);
  CHECK(family_of(union_of({tetra, box})) == DezaFamily::UnionTetraCube);
  CHECK(family_of(union_of({box, box})) == DezaFamily::UnionTetraCube);

  AbstractGraph icosa = icosahedron().abstract();
  CHECK(family_of(union_of({icosa, icosa})) == DezaFamily::UnionIcosahedra);

  AbstractGraph dodeca = dodecahedron().abstract();
  CHECK(family_of(union_of({dodeca, dodeca})) == DezaFamily::CubicNoFourCycleLowConn);
  CHECK(family_of(cross_joined_pair(dodeca)) == DezaFamily::CubicNoFourCycleLowConn);
  CHECK(family_of(union_of({box, dodeca})) == DezaFamily::NotDeza);

  AbstractGraph icosidodeca = medial(dodecahedron()).abstract();
  CHECK(family_of(cross_joined_pair(icosidodeca)) ==
        DezaFamily::QuarticNoFourCycleLowConn);

  AbstractGraph octa = octahedron().abstract();
  CHECK(family_of(union_of({octa, octa})) == DezaFamily::NotDeza);
  AbstractGraph nine = nine_vertex_quartic().abstract();
  CHECK(family_of(union_of({nine, nine})) == DezaFamily::NotDeza);
}

TEST_CASE("classification agrees with the direct Deza test") {
  std::vector<AbstractGraph> members;
  for (const auto& f : fixture_corpus()) members.push_back(f.graph.abstract());
  members.push_back(cycle(4));
  members.push_back(cycle(5));
  members.push_back(union_of({cycle(4), cycle(5)}));
  members.push_back(union_of({tetrahedron().abstract(), cube().abstract()}));
  members.push_back(cross_joined_pair(dodecahedron().abstract()));
  for (const AbstractGraph& g : members) {
    if (g.regularity() < 0) { /* irregular graphs are never Deza */
      CHECK(!is_deza(g).has_value());
      continue;
    }
    DezaClass c = classify(g);
    auto direct = is_deza(g);
    CHECK((c.family != DezaFamily::NotDeza) == direct.has_value());
    if (direct) {
      REQUIRE(c.lambda_mu.has_value());
      CHECK(*c.lambda_mu == *direct);
    }
  }
}

TEST_CASE("classification rejects out-of-scope input") {
  CHECK(kind_of([] {
          classify(AbstractGraph::from_edges(3, {{0, 1}, {1, 2}}));
        }) == ErrorKind::NotRegular);
  CHECK(kind_of([] { classify(complete(5)); }) == ErrorKind::NotPlanar);
}

TEST_CASE("type prediction is exact for cubic and quartic polyhedra") {
  TypePrediction d = predict_type(dodecahedron());
  CHECK(d.exact);
  CHECK(d.profile == std::set<int>{0, 1});

  TypePrediction pp = predict_type(prism(5));
  CHECK(pp.exact);
  CHECK(pp.profile == std::set<int>{0, 1, 2});

  TypePrediction id = predict_type(medial(dodecahedron()));
  CHECK(id.exact);
  CHECK(id.profile == std::set<int>{0, 1});

  TypePrediction co = predict_type(medial(cube()));
  CHECK(co.exact);
  CHECK(co.profile == std::set<int>{0, 1, 2});

  PlaneGraph o = octahedron();
  PlaneGraph spliced = t_construct(o, first_site(o), o, first_site(o));
  TypePrediction sp = predict_type(spliced);
  CHECK(sp.exact);
  CHECK(sp.profile == std::set<int>{0, 1, 2, 3});

  /* predictions match the observed profiles */
  for (const PlaneGraph& g : {dodecahedron(), prism(5), medial(dodecahedron()),
                              medial(cube()), spliced})
    CHECK(predict_type(g).profile == type_profile(g.abstract()).values);
}

TEST_CASE("type prediction sandwiches quintic polyhedra") {
  TypePrediction sc = predict_type(snub(cube()));
  CHECK(!sc.exact);
  CHECK(sc.profile == std::set<int>{0, 1, 2});
  CHECK(sc.upper == std::set<int>{0, 1, 2, 3, 4});
  std::set<int> observed = type_profile(snub(cube()).abstract()).values;
  CHECK(std::includes(observed.begin(), observed.end(), sc.profile.begin(),
                      sc.profile.end()));
  CHECK(std::includes(sc.upper.begin(), sc.upper.end(), observed.begin(),
                      observed.end()));
}

TEST_CASE("type prediction excludes the exceptional polyhedra") {
  for (const PlaneGraph& g : {tetrahedron(), cube(), octahedron(), antiprism(4),
                              nine_vertex_quartic(), icosahedron()})
    CHECK(kind_of([&] { predict_type(g); }) == ErrorKind::ExceptionalInput);
  CHECK(kind_of([] { predict_type(prism(3)); }) != ErrorKind::ExceptionalInput);
}

TEST_CASE("quartic Deza census up to order 9") {
  GenOptions opt;
  opt.max_n = 9;
  std::set<std::string> deza_found;
  gen_quartic_polyhedra(opt, [&](const PlaneGraph& g) {
    if (is_deza(g.abstract())) deza_found.insert(code_hex(canonical_code(g)));
  });
  std::set<std::string> expect = {code_hex(canonical_code(octahedron())),
                                  code_hex(canonical_code(antiprism(4))),
                                  code_hex(canonical_code(nine_vertex_quartic()))};
  CHECK(deza_found == expect);
}

TEST_CASE("verification suites pass on the fixture corpus") {
  for (const std::string& suite :
       {"type-prediction", "deza-tables", "two-iff-four-cycle", "zero-in-profile",
        "profile-bound", "one-in-profile", "quintic-zero"}) {
    SuiteReport rep = run_suite(suite, "fixtures");
    CHECK(rep.pass());
    CHECK(rep.checked == 17);
  }

  SuiteReport quintic = run_suite("quintic-triangle-bound", "fixtures:5regular");
  CHECK(quintic.pass());
  CHECK(quintic.checked == 3);

  SuiteReport k2r = run_suite("k2r-free", "fixtures");
  CHECK(k2r.pass());
  bool excluded = false;
  for (const auto& note : k2r.notes)
    if (note.find("octahedron excluded") != std::string::npos) excluded = true;
  CHECK(excluded);
}

TEST_CASE("verification suites pass on the low-connectivity table") {
  SuiteReport rep = run_suite("deza-tables", "table2");
  for (const auto& v : rep.violations)
    MESSAGE(v.code_hex, " expected ", v.expected, " observed ", v.observed);
  CHECK(rep.pass());
  CHECK(rep.checked == 21);

  SuiteReport zero = run_suite("zero-in-profile", "table2");
  CHECK(zero.pass());
  SuiteReport two = run_suite("two-iff-four-cycle", "table2");
  CHECK(two.pass());
}

TEST_CASE("medial suites pass on cubic fixtures") {
  SuiteReport med = run_suite("medial-characterization", "fixtures:3regular");
  CHECK(med.pass());
  SuiteReport tri = run_suite("max-triangles", "fixtures:3regular");
  CHECK(tri.pass());
  SuiteReport min = run_suite("min-triangles", "fixtures:3regular");
  CHECK(min.pass());
}

TEST_CASE("unknown suites and malformed populations are rejected") {
  CHECK(kind_of([] { run_suite("no-such-suite", "fixtures"); }) ==
        ErrorKind::UnknownSuite);
  CHECK(kind_of([] { run_suite("deza-tables", "fixtures:no-such-tag"); }) ==
        ErrorKind::BadConfig);
  CHECK(kind_of([] { run_suite("deza-tables", "quartic:x"); }) == ErrorKind::BadConfig);
  CHECK(kind_of([] { run_suite("deza-tables", "bogus:4"); }) == ErrorKind::BadConfig);
  CHECK(kind_of([] { run_suite("generators", "fixtures"); }) == ErrorKind::BadConfig);
  CHECK(kind_of([] { run_suite("deza-tables", "file:/no/such/path.plc"); }) ==
        ErrorKind::IoError);
}
