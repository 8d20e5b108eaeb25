#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "polydeza/canonical.hpp"
#include "polydeza/codecs.hpp"
#include "polydeza/embed.hpp"
#include "polydeza/errors.hpp"
#include "polydeza/fixtures.hpp"
#include "polydeza/plane_graph.hpp"

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

/* K4 with the rotation that embeds it as the tetrahedron. */
std::vector<std::vector<int>> k4_rotation() {
  return {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
}

AbstractGraph complete(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return AbstractGraph::from_edges(k, edges);
}

/* Cycle C_k embedded with two faces. */
PlaneGraph plane_cycle(int k) {
  std::vector<std::vector<int>> rot(k);
  for (int i = 0; i < k; ++i) rot[i] = {(i + k - 1) % k, (i + 1) % k};
  return build_plane(rot);
}

} // namespace

TEST_CASE("build validates rotation systems") {
  CHECK_NOTHROW(build_plane(k4_rotation()));
  /* single vertex: one face, Euler 1 - 0 + 1 = 2 */
  PlaneGraph trivial = build_plane({{}});
  CHECK(trivial.n() == 1);
  CHECK(trivial.f() == 1);

  CHECK(kind_of([] { build_plane({{1}, {}}); }) == ErrorKind::AsymmetricDart);
  CHECK(kind_of([] { build_plane({{1, 1}, {0, 0}}); }) == ErrorKind::DuplicateNeighbour);
  CHECK(kind_of([] { build_plane({{0, 1}, {0}}); }) == ErrorKind::Loop);
  CHECK(kind_of([] { build_plane({{5}, {0}}); }) == ErrorKind::UnknownVertex);
  CHECK(kind_of([] { build_plane({{1}, {0}, {3}, {2}}); }) == ErrorKind::Disconnected);

  /* K5 has no genus-0 rotation system at all */
  std::vector<std::vector<int>> k5(5);
  for (int v = 0; v < 5; ++v)
    for (int u = 0; u < 5; ++u)
      if (u != v) k5[v].push_back(u);
  CHECK(kind_of([&] { build_plane(k5); }) == ErrorKind::NonSpherical);
}

TEST_CASE("face tracing satisfies Euler and length accounting") {
  for (const auto& f : fixture_corpus()) {
    const PlaneGraph& g = f.graph;
    CHECK(g.n() - g.q() + g.f() == 2);
    long dart_total = 0;
    for (int fi = 0; fi < g.f(); ++fi) dart_total += g.face_len(fi);
    CHECK(dart_total == 2 * g.q());
    /* every dart on exactly one face */
    std::vector<int> seen(g.dart_count(), 0);
    for (const auto& cycle : g.faces())
      for (int d : cycle) seen[d]++;
    for (int d = 0; d < g.dart_count(); ++d) CHECK(seen[d] == 1);
  }

  CHECK(tetrahedron().f() == 4);
  CHECK(tetrahedron().face_length_histogram()[3] == 4);
  CHECK(cube().f() == 6);
  CHECK(cube().face_length_histogram()[4] == 6);
  CHECK(dodecahedron().f() == 12);
  CHECK(dodecahedron().face_length_histogram()[5] == 12);
  CHECK(icosahedron().f() == 20);
  CHECK(octahedron().f() == 8);
}

TEST_CASE("rotation order determines face membership") {
  PlaneGraph g = cube();
  /* x, v, y consecutive on a face exactly when succ(v, x) == y */
  for (int v = 0; v < g.n(); ++v)
    for (int x : g.rotation(v)) {
      int y = g.succ(v, x);
      int d = g.dart_id(x, v);
      int next = g.face_next(d);
      CHECK(g.dart(next).tail == v);
      CHECK(g.dart(next).head == y);
    }
}

TEST_CASE("canonical codes are invariant under relabelling and reflection") {
  PlaneGraph c = cube();
  CanonicalCode base = canonical_code(c);

  /* relabel: map v -> (v + 3) % 8 */
  std::vector<std::vector<int>> rot(8);
  for (int v = 0; v < 8; ++v)
    for (int u : c.rotation(v)) rot[(v + 3) % 8].push_back((u + 3) % 8);
  CHECK(canonical_code(build_plane(rot)) == base);

  /* mirror image: reverse every rotation */
  std::vector<std::vector<int>> mir(8);
  for (int v = 0; v < 8; ++v)
    mir[v].assign(c.rotation(v).rbegin(), c.rotation(v).rend());
  CHECK(canonical_code(build_plane(mir)) == base);

  CHECK(canonical_code(octahedron()) != base);
  CHECK(canonical_code(prism(4)) == base);
  CHECK(canonical_code(antiprism(3)) == canonical_code(octahedron()));
  CHECK(canonical_code(pseudo_double_wheel(3)) == base);
}

TEST_CASE("decode rebuilds the canonical representative") {
  for (const auto& f : fixture_corpus()) {
    CanonicalCode code = canonical_code(f.graph);
    PlaneGraph rebuilt = decode_code(code);
    CHECK(rebuilt.n() == f.graph.n());
    CHECK(canonical_code(rebuilt) == code);
  }
}

TEST_CASE("canonical codes reject oversized graphs") {
  CHECK(kind_of([] { canonical_code(plane_cycle(300)); }) == ErrorKind::OrderOverflow);
  std::ostringstream out;
  CHECK(kind_of([&] { write_planar_code(out, plane_cycle(300)); }) ==
        ErrorKind::OrderOverflow);
}

TEST_CASE("planar_code round trip is byte exact") {
  std::ostringstream out;
  write_planar_code_header(out);
  for (const auto& f : fixture_corpus()) write_planar_code(out, f.graph);
  std::string bytes = out.str();

  std::istringstream in(bytes);
  std::vector<PlaneGraph> back = read_planar_code_all(in);
  REQUIRE(back.size() == fixture_corpus().size());

  std::ostringstream again;
  write_planar_code_header(again);
  for (const auto& g : back) write_planar_code(again, g);
  CHECK(again.str() == bytes);

  /* the embedding itself survives, not just the abstract graph */
  for (size_t i = 0; i < back.size(); ++i)
    CHECK(back[i].rotations() == fixture_corpus()[i].graph.rotations());
}

TEST_CASE("planar_code rejects malformed streams") {
  auto parse = [](const std::string& bytes) {
    std::istringstream in(bytes);
    read_planar_code_all(in);
  };
  CHECK(kind_of([&] { parse("not a header"); }) == ErrorKind::MalformedPlanarCode);

  std::ostringstream out;
  write_planar_code_header(out);
  write_planar_code(out, tetrahedron());
  std::string good = out.str();
  CHECK(kind_of([&] { parse(good.substr(0, good.size() - 3)); }) ==
        ErrorKind::MalformedPlanarCode);
}

TEST_CASE("graph6 round trip preserves the abstract graph") {
  for (const auto& f : fixture_corpus()) {
    AbstractGraph a = f.graph.abstract();
    std::string line = to_graph6(a);
    AbstractGraph b = from_graph6(line);
    CHECK(b.n() == a.n());
    CHECK(b.edges() == a.edges());
    CHECK(to_graph6(b) == line);
  }
  CHECK(kind_of([] { from_graph6("\x01\x02"); }) == ErrorKind::MalformedGraph6);
  std::istringstream in(">>graph6<<\n" + to_graph6(complete(4)) + "\n");
  int count = 0;
  read_graph6(in, [&](AbstractGraph&& g) {
    CHECK(g.n() == 4);
    ++count;
  });
  CHECK(count == 1);
}

TEST_CASE("embedding recovers planar graphs and rejects non-planar ones") {
  auto emb = embed(complete(4));
  REQUIRE(emb.has_value());
  CHECK(emb->f() == 4);

  CHECK(!embed(complete(5)).has_value());
  CHECK(!is_planar(complete(5)));
  CHECK(is_planar(complete(4)));

  AbstractGraph octa = octahedron().abstract();
  auto octa_emb = embed(octa);
  REQUIRE(octa_emb.has_value());
  CHECK(octa_emb->f() == 8);
  CHECK(canonical_code(*octa_emb) == canonical_code(octahedron()));

  AbstractGraph two = AbstractGraph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(is_planar(two));
  CHECK(kind_of([&] { embed(two); }) == ErrorKind::Disconnected);
  CHECK(kind_of([] { embed(complete(4), 3); }) == ErrorKind::TooLarge);
}

TEST_CASE("duality pairs the Platonic solids") {
  CHECK(canonical_code(dual(tetrahedron())) == canonical_code(tetrahedron()));
  CHECK(canonical_code(dual(cube())) == canonical_code(octahedron()));
  CHECK(canonical_code(dual(octahedron())) == canonical_code(cube()));
  CHECK(canonical_code(dual(dodecahedron())) == canonical_code(icosahedron()));
  CHECK(canonical_code(dual(icosahedron())) == canonical_code(dodecahedron()));

  for (const auto& f : fixture_corpus()) {
    PlaneGraph d = dual(f.graph);
    CHECK(d.n() == f.graph.f());
    CHECK(d.f() == f.graph.n());
    CHECK(canonical_code(dual(d)) == canonical_code(f.graph));
  }

  CHECK(kind_of([] { dual(plane_cycle(4)); }) == ErrorKind::NotPolyhedral);
}

TEST_CASE("cycle sides split the sphere") {
  PlaneGraph c = cube();
  /* a face boundary has an empty side */
  std::vector<int> face = c.face_vertices(0);
  CycleSides sides = cycle_sides(c, face);
  int inner = static_cast<int>(sides.left.size());
  int outer = static_cast<int>(sides.right.size());
  CHECK(std::min(inner, outer) == 0);
  CHECK(std::max(inner, outer) == 4);

  /* an equatorial 4-cycle of the octahedron splits 1 + 1 */
  PlaneGraph o = octahedron();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      if (a == b || o.has_edge(a, b)) continue;
      /* a and b are antipodal; their common neighbours form the equator */
      std::vector<int> cyc;
      for (int v = 0; v < 6; ++v)
        if (o.has_edge(a, v) && o.has_edge(b, v)) cyc.push_back(v);
      REQUIRE(cyc.size() == 4);
      /* order the equator as a cycle */
      if (!o.has_edge(cyc[1], cyc[0])) std::swap(cyc[1], cyc[2]);
      if (!o.has_edge(cyc[2], cyc[1])) std::swap(cyc[2], cyc[3]);
      REQUIRE(o.has_edge(cyc[3], cyc[0]));
      CycleSides s = cycle_sides(o, cyc);
      CHECK(s.left.size() == 1);
      CHECK(s.right.size() == 1);
    }
}

TEST_CASE("fixture corpus is complete and well formed") {
  auto corpus = fixture_corpus();
  CHECK(corpus.size() == 17);
  for (const auto& f : corpus) {
    CHECK(!f.name.empty());
    CHECK(f.graph.n() >= 4);
  }
  CHECK(nine_vertex_quartic().n() == 9);
  CHECK(nine_vertex_quartic().abstract().regularity() == 4);
  CHECK(snub(tetrahedron()).n() == 12);
  CHECK(canonical_code(snub(tetrahedron())) == canonical_code(icosahedron()));
  CHECK(kind_of([] { prism(2); }) == ErrorKind::KTooSmall);
  CHECK(kind_of([] { antiprism(2); }) == ErrorKind::KTooSmall);
  CHECK(kind_of([] { pseudo_double_wheel(2); }) == ErrorKind::KTooSmall);
}
