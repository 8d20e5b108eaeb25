#include "polydeza/fixtures.hpp"

#include "polydeza/errors.hpp"
#include "polydeza/transforms.hpp"

namespace polydeza {

PlaneGraph tetrahedron() {
  return PlaneGraph::build({{3, 1, 2}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}});
}

PlaneGraph cube() { return prism(4); }

PlaneGraph octahedron() { return antiprism(3); }

PlaneGraph icosahedron() {
  /* North pole 0, upper ring 1..5, lower ring 6..10, south pole 11. */
  auto t = [](int i) { return 1 + (i + 5) % 5; };
  auto b = [](int i) { return 6 + (i + 5) % 5; };
  std::vector<std::vector<int>> rot(12);
  rot[0] = {5, 4, 3, 2, 1};
  rot[11] = {6, 7, 8, 9, 10};
  for (int i = 0; i < 5; ++i) {
    rot[t(i)] = {t(i - 1), 0, t(i + 1), b(i + 1), b(i)};
    rot[b(i)] = {t(i), b(i + 1), 11, b(i - 1), t(i - 1)};
  }
  return PlaneGraph::build(rot);
}

PlaneGraph dodecahedron() { return dual(icosahedron()); }

PlaneGraph prism(int k) {
  if (k < 3) fail(ErrorKind::KTooSmall, "prism needs k >= 3");
  /* Bottom ring 0..k-1, top ring k..2k-1. */
  std::vector<std::vector<int>> rot(2 * static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    int prev = (i + k - 1) % k, next = (i + 1) % k;
    rot[i] = {prev, next, k + i};
    rot[k + i] = {i, k + next, k + prev};
  }
  return PlaneGraph::build(rot);
}

PlaneGraph antiprism(int k) {
  if (k < 3) fail(ErrorKind::KTooSmall, "antiprism needs k >= 3");
  /* Top ring 0..k-1, bottom ring k..2k-1; t_i sits between b_i and b_{i+1}. */
  std::vector<std::vector<int>> rot(2 * static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    int prev = (i + k - 1) % k, next = (i + 1) % k;
    rot[i] = {prev, next, k + next, k + i};
    rot[k + i] = {i, k + next, k + prev, prev};
  }
  return PlaneGraph::build(rot);
}

PlaneGraph pseudo_double_wheel(int k) {
  if (k < 3) fail(ErrorKind::KTooSmall, "pseudo double wheel needs k >= 3");
  /* Cycle 0..2k-1, even hub 2k joined to even vertices, odd hub 2k+1. */
  int m = 2 * k, he = m, ho = m + 1;
  std::vector<std::vector<int>> rot(static_cast<size_t>(m) + 2);
  auto c = [m](int j) { return (j + m) % m; };
  for (int i = 0; i < k; ++i) {
    rot[2 * i] = {c(2 * i + 1), he, c(2 * i - 1)};
    rot[2 * i + 1] = {c(2 * i + 2), c(2 * i), ho};
  }
  for (int i = 0; i < k; ++i) rot[he].push_back(2 * i);
  for (int i = k - 1; i >= 0; --i) rot[ho].push_back(2 * i + 1);
  return PlaneGraph::build(rot);
}

PlaneGraph snub(const PlaneGraph& g) {
  /* One snub vertex per dart; around it: the two vertex-polygon neighbours,
   * the twist partner across the original edge, and the two face-polygon
   * neighbours. */
  int nd = g.dart_count();
  std::vector<std::vector<int>> rot(static_cast<size_t>(nd));
  for (int d = 0; d < nd; ++d)
    rot[d] = {g.rev(g.sigma_prev(d)), g.rev(d), g.rev(g.sigma_prev(g.rev(d))),
              g.rev(g.face_next(d)), g.face_next(d)};
  return PlaneGraph::build(rot);
}

PlaneGraph nine_vertex_quartic() { return medial(prism(3)); }

std::vector<NamedFixture> fixture_corpus() {
  std::vector<NamedFixture> out;
  out.push_back({"tetrahedron", tetrahedron()});
  out.push_back({"cube", cube()});
  out.push_back({"octahedron", octahedron()});
  out.push_back({"dodecahedron", dodecahedron()});
  out.push_back({"icosahedron", icosahedron()});
  out.push_back({"triangular-prism", prism(3)});
  out.push_back({"pentagonal-prism", prism(5)});
  out.push_back({"square-antiprism", antiprism(4)});
  out.push_back({"pentagonal-antiprism", antiprism(5)});
  out.push_back({"nine-vertex-quartic", nine_vertex_quartic()});
  out.push_back({"cuboctahedron", medial(cube())});
  out.push_back({"icosidodecahedron", medial(dodecahedron())});
  out.push_back({"snub-cube", snub(cube())});
  out.push_back({"snub-dodecahedron", snub(dodecahedron())});
  out.push_back({"pseudo-double-wheel-3", pseudo_double_wheel(3)});
  out.push_back({"pseudo-double-wheel-4", pseudo_double_wheel(4)});
  out.push_back({"pseudo-double-wheel-5", pseudo_double_wheel(5)});
  return out;
}

} // namespace polydeza
