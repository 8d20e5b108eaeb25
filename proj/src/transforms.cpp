#include "polydeza/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polydeza/canonical.hpp"
#include "polydeza/errors.hpp"

namespace polydeza {
namespace {

void require_polyhedron(const PlaneGraph& g, const char* op) {
  if (g.n() < 4)
    fail(ErrorKind::NotPolyhedral, std::string(op) + ": order below 4");
  if (!connectivity_at_least(g.abstract(), 3))
    fail(ErrorKind::NotPolyhedral, std::string(op) + ": connectivity below 3");
}

void require_quartic(const PlaneGraph& g, const char* op) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 4)
      fail(ErrorKind::NotQuartic, std::string(op) + ": vertex " + std::to_string(v) +
                                      " has degree " + std::to_string(g.degree(v)));
}

} // namespace

PlaneGraph medial(const PlaneGraph& g) {
  require_polyhedron(g, "medial");
  /* One medial vertex per edge, indexed by the smaller dart id. */
  std::vector<int> eid(static_cast<size_t>(g.dart_count()), -1);
  int m = 0;
  for (int d = 0; d < g.dart_count(); ++d)
    if (d < g.rev(d)) {
      eid[d] = m;
      eid[g.rev(d)] = m;
      ++m;
    }
  /* Around the midpoint of u-v: the next edge of the face left of u->v, the
   * previous edge at u, the next edge at u, the previous edge of v (the left
   * face's other neighbour), counterclockwise. */
  std::vector<std::vector<int>> rot(static_cast<size_t>(m));
  for (int d = 0; d < g.dart_count(); ++d) {
    if (d >= g.rev(d)) continue;
    int r = g.rev(d);
    rot[eid[d]] = {eid[g.sigma_next(r)], eid[g.sigma_prev(d)], eid[g.sigma_next(d)],
                   eid[g.sigma_prev(r)]};
  }
  return PlaneGraph::build(rot);
}

PlaneGraph radial(const PlaneGraph& g) {
  require_polyhedron(g, "radial");
  /* The radial (vertex-face incidence) graph is the planar dual of the
   * medial: medial vertices are g's edges and medial faces correspond to
   * g's vertices and faces, which is exactly the radial's vertex set. */
  return dual(medial(g));
}

AbstractGraph line_graph(const AbstractGraph& g) {
  auto edges = g.edges();
  std::map<std::pair<int, int>, int> id;
  for (size_t i = 0; i < edges.size(); ++i) id[edges[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> le;
  for (int v = 0; v < g.n(); ++v) {
    const auto& nb = g.neighbours(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int e1 = id[std::minmax(v, nb[i])];
        int e2 = id[std::minmax(v, nb[j])];
        le.emplace_back(std::min(e1, e2), std::max(e1, e2));
      }
  }
  return AbstractGraph::from_edges(static_cast<int>(edges.size()), le);
}

std::optional<std::pair<PlaneGraph, PlaneGraph>> medial_preimage(const PlaneGraph& g) {
  /* Medial graphs are exactly certain 4-regular polyhedra, so anything else
   * simply has no preimage rather than being an error. */
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 4) return std::nullopt;
  if (g.n() < 4 || !connectivity_at_least(g.abstract(), 3)) return std::nullopt;

  /* In a medial graph the four faces around a vertex alternate between the
   * two preimage sides, so each vertex pairs its opposite corner faces.
   * Same-side faces never share an edge; pairs that do are discarded. */
  int F = g.f();
  std::vector<std::set<int>> touching(static_cast<size_t>(F));
  for (int d = 0; d < g.dart_count(); ++d)
    touching[g.face_of(d)].insert(g.face_of(g.rev(d)));

  std::vector<int> comp(static_cast<size_t>(F));
  for (int i = 0; i < F; ++i) comp[i] = i;
  auto root = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  std::vector<int> partner(static_cast<size_t>(g.dart_count()), -1);
  for (int v = 0; v < g.n(); ++v) {
    int off = g.dart_offset(v);
    for (int k = 0; k < 2; ++k) {
      int fa = g.face_of(off + k), fb = g.face_of(off + k + 2);
      if (touching[fa].count(fb)) continue;
      partner[off + k] = fb;
      partner[off + k + 2] = fa;
      comp[root(fa)] = root(fb);
    }
  }
  std::set<int> roots;
  for (int i = 0; i < F; ++i) roots.insert(root(i));
  if (roots.size() != 2) return std::nullopt;

  try {
    std::array<PlaneGraph, 2> sides;
    int si = 0;
    for (int r : roots) {
      std::vector<int> members;
      for (int i = 0; i < F; ++i)
        if (root(i) == r) members.push_back(i);
      std::vector<int> rank(static_cast<size_t>(F), -1);
      for (size_t i = 0; i < members.size(); ++i) rank[members[i]] = static_cast<int>(i);
      std::vector<std::vector<int>> rot(members.size());
      for (size_t i = 0; i < members.size(); ++i) {
        for (int d : g.faces()[members[i]]) {
          if (partner[d] < 0 || rank[partner[d]] < 0) return std::nullopt;
          rot[i].push_back(rank[partner[d]]);
        }
        std::vector<int> sorted = rot[i];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
          return std::nullopt;
      }
      sides[si++] = PlaneGraph::build(rot);
    }
    for (const PlaneGraph& h : sides)
      if (h.n() < 4 || !connectivity_at_least(h.abstract(), 3)) return std::nullopt;
    if (canonical_code(sides[1]) != canonical_code(dual(sides[0]))) return std::nullopt;
    if (canonical_code(medial(sides[0])) != canonical_code(g)) return std::nullopt;
    if (canonical_code(sides[1]) < canonical_code(sides[0])) std::swap(sides[0], sides[1]);
    return std::make_pair(std::move(sides[0]), std::move(sides[1]));
  } catch (const Error&) {
    return std::nullopt;
  }
}

PlaneGraph t_construct(const PlaneGraph& g1, TSite s1, const PlaneGraph& g2, TSite s2) {
  require_quartic(g1, "t-construct host 1");
  require_polyhedron(g1, "t-construct host 1");
  require_quartic(g2, "t-construct host 2");
  require_polyhedron(g2, "t-construct host 2");
  auto check_site = [](const PlaneGraph& g, TSite s, const char* which) {
    for (int x : {s.v, s.u, s.w})
      if (x < 0 || x >= g.n())
        fail(ErrorKind::UnknownVertex,
             std::string(which) + ": site vertex " + std::to_string(x) + " out of range");
    if (g.index_of(s.u, s.v) < 0 || g.index_of(s.u, s.w) < 0 || g.succ(s.u, s.v) != s.w)
      fail(ErrorKind::SiteNotOnFace,
           std::string(which) + ": vertices are not consecutive on a face");
  };
  check_site(g1, s1, "t-construct site 1");
  check_site(g2, s2, "t-construct site 2");

  int n1 = g1.n(), n2 = g2.n();
  int x = n1 + n2, y = x + 1, z = x + 2;
  std::vector<std::vector<int>> rot(static_cast<size_t>(n1 + n2) + 3);
  for (int v = 0; v < n1; ++v) rot[v] = g1.rotation(v);
  for (int v = 0; v < n2; ++v) {
    rot[static_cast<size_t>(n1) + v] = g2.rotation(v);
    for (int& w : rot[static_cast<size_t>(n1) + v]) w += n1;
  }
  int u1 = s1.u, v1 = s1.v, w1 = s1.w;
  int u2 = n1 + s2.u, v2 = n1 + s2.v, w2 = n1 + s2.w;
  /* Reroute the four host edges at the sites into the new triple; slot
   * positions are preserved so every new face closes up. */
  rot[u1][g1.index_of(s1.u, s1.v)] = x;
  rot[u1][g1.index_of(s1.u, s1.w)] = z;
  rot[v1][g1.index_of(s1.v, s1.u)] = x;
  rot[w1][g1.index_of(s1.w, s1.u)] = y;
  rot[u2][g2.index_of(s2.u, s2.v)] = z;
  rot[u2][g2.index_of(s2.u, s2.w)] = x;
  rot[v2][g2.index_of(s2.v, s2.u)] = z;
  rot[w2][g2.index_of(s2.w, s2.u)] = y;
  rot[x] = {u1, v1, y, u2};
  rot[y] = {x, w1, z, w2};
  rot[z] = {u1, u2, v2, y};
  PlaneGraph out = PlaneGraph::build(rot);
  if (!connectivity_at_least(out.abstract(), 3))
    fail(ErrorKind::Internal, "splice lost 3-connectivity");
  return out;
}

TDecomposition t_decompose(const PlaneGraph& g) {
  require_quartic(g, "t-decompose");
  require_polyhedron(g, "t-decompose");
  AbstractGraph a = g.abstract();

  int pa = -1, pb = -1;
  for (int u = 0; u < a.n() && pa < 0; ++u)
    for (int v = u + 1; v < a.n(); ++v)
      if (common_neighbours(a, u, v).size() == 3) {
        pa = u;
        pb = v;
        break;
      }
  if (pa < 0)
    fail(ErrorKind::TypeMismatch, "no pair with exactly three common neighbours");

  TDecomposition out;
  out.pair = {pa, pb};
  std::vector<int> commons = common_neighbours(a, pa, pb);

  /* A common neighbour adjacent to the other two caps a square pyramid. */
  int apex = -1;
  bool any_adjacent = false;
  for (int i = 0; i < 3 && apex < 0; ++i) {
    int adj = 0;
    for (int j = 0; j < 3; ++j)
      if (j != i && a.has_edge(commons[i], commons[j])) {
        ++adj;
        any_adjacent = true;
      }
    if (adj == 2) apex = commons[i];
  }
  if (apex >= 0) {
    std::vector<int> others;
    for (int c : commons)
      if (c != apex) others.push_back(c);
    out.pyramid = SquarePyramidWitness{apex, {pa, others[0], pb, others[1]}};
    return out;
  }
  if (any_adjacent)
    fail(ErrorKind::Internal, "single adjacency among the three common neighbours");

  /* Splice case: the pair and two of the commons bound a quadrilateral face;
   * the third common is the middle of the connecting triple. */
  int face_idx = -1, mid = -1;
  for (int fi = 0; fi < g.f(); ++fi) {
    if (g.face_len(fi) != 4) continue;
    std::vector<int> fv = g.face_vertices(fi);
    if (std::find(fv.begin(), fv.end(), pa) == fv.end()) continue;
    if (std::find(fv.begin(), fv.end(), pb) == fv.end()) continue;
    int on_face = 0, off_face = -1;
    for (int c : commons) {
      if (std::find(fv.begin(), fv.end(), c) != fv.end())
        ++on_face;
      else
        off_face = c;
    }
    if (on_face != 2) continue;
    if (face_idx >= 0) fail(ErrorKind::Internal, "two quadrilateral faces through the pair");
    face_idx = fi;
    mid = off_face;
  }
  if (face_idx < 0)
    fail(ErrorKind::Internal, "no quadrilateral face through the pair and two commons");

  std::vector<int> fv = g.face_vertices(face_idx);
  auto successor = [&](int v) {
    for (int i = 0; i < 4; ++i)
      if (fv[i] == v) return fv[(i + 1) % 4];
    fail(ErrorKind::Internal, "face lost a vertex");
  };
  int u1 = successor(pa), u2 = successor(pb);

  /* Components of the graph minus the pair and its commons. */
  std::vector<int> which(static_cast<size_t>(a.n()), -1);
  for (int v : {pa, pb, commons[0], commons[1], commons[2]}) which[v] = -2;
  int ncomp = 0;
  for (int s = 0; s < a.n(); ++s) {
    if (which[s] != -1) continue;
    if (ncomp == 2) fail(ErrorKind::Internal, "more than two components around the triple");
    which[s] = ncomp;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : a.neighbours(u))
        if (which[v] == -1) {
          which[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  if (ncomp != 2) fail(ErrorKind::Internal, "splice sides did not separate");

  auto side_of = [&](int v, const char* what) {
    if (v < 0 || which[v] < 0)
      fail(ErrorKind::Internal, std::string(what) + " fell into the removed triple");
    return which[v];
  };
  auto extras = [&](int v, int skip1, int skip2) {
    std::vector<int> out_extras;
    for (int w : a.neighbours(v))
      if (w != skip1 && w != skip2) out_extras.push_back(w);
    return out_extras;
  };

  std::vector<int> eu1 = extras(u1, pa, pb), eu2 = extras(u2, pa, pb);
  if (eu1.size() != 2 || eu2.size() != 2)
    fail(ErrorKind::Internal, "common neighbour degree broke");
  int comp1 = side_of(eu1[0], "first side");
  if (side_of(eu1[1], "first side") != comp1 || side_of(eu2[0], "second side") == comp1 ||
      side_of(eu2[1], "second side") == comp1)
    fail(ErrorKind::Internal, "connector neighbours straddle the sides");

  std::vector<int> wm = extras(mid, pa, pb);
  if (wm.size() != 2) fail(ErrorKind::Internal, "middle vertex degree broke");
  if (side_of(wm[0], "middle") == side_of(wm[1], "middle"))
    fail(ErrorKind::Internal, "middle vertex leans on one side");
  int w1 = side_of(wm[0], "middle") == comp1 ? wm[0] : wm[1];
  int w2 = wm[0] == w1 ? wm[1] : wm[0];

  std::vector<int> va = extras(pa, commons[0], -1), vb = extras(pb, commons[0], -1);
  auto fourth = [&](std::vector<int>& cand) {
    for (int v : cand)
      if (v != commons[1] && v != commons[2]) return v;
    fail(ErrorKind::Internal, "pair vertex has no outside neighbour");
  };
  int v1 = fourth(va), v2 = fourth(vb);
  if (side_of(v1, "first outside neighbour") != comp1 ||
      side_of(v2, "second outside neighbour") == comp1)
    fail(ErrorKind::Internal, "outside neighbours straddle the sides");

  /* Rebuild one side: component vertices keep their rotations, the connector
   * takes the pair slots back as the site edges. */
  auto build_side = [&](int cid, int u, int a_end, int b_end, int v, int w, TSite& site) {
    std::vector<int> verts;
    for (int x = 0; x < a.n(); ++x)
      if (which[x] == cid) verts.push_back(x);
    verts.push_back(u);
    std::sort(verts.begin(), verts.end());
    std::vector<int> rank(static_cast<size_t>(a.n()), -1);
    for (size_t i = 0; i < verts.size(); ++i) rank[verts[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> rot(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
      int x = verts[i];
      std::vector<int> r = g.rotation(x);
      if (x == u) {
        r[g.index_of(u, a_end)] = v;
        r[g.index_of(u, b_end)] = w;
      } else if (x == v) {
        r[g.index_of(v, a_end)] = u;
      }
      if (x == w) r[g.index_of(w, mid)] = u;
      for (int& y : r) {
        if (rank[y] < 0)
          fail(ErrorKind::Internal, "side vertex still references the removed triple");
        y = rank[y];
      }
      rot[i] = std::move(r);
    }
    PlaneGraph side;
    try {
      side = PlaneGraph::build(rot);
    } catch (const Error& e) {
      fail(ErrorKind::Internal, std::string("side rebuild failed: ") + e.what());
    }
    if (!connectivity_at_least(side.abstract(), 3))
      fail(ErrorKind::Internal, "rebuilt side lost 3-connectivity");
    site = {rank[v], rank[u], rank[w]};
    return side;
  };

  out.g1 = build_side(comp1, u1, pa, pb, v1, w1, out.s1);
  out.g2 = build_side(1 - comp1, u2, pb, pa, v2, w2, out.s2);
  return out;
}

} // namespace polydeza
