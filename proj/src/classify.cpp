#include "polydeza/classify.hpp"

#include <map>
#include <utility>

#include "polydeza/canonical.hpp"
#include "polydeza/embed.hpp"
#include "polydeza/errors.hpp"
#include "polydeza/fixtures.hpp"
#include "polydeza/plane_graph.hpp"

namespace polydeza {
namespace {

/* The six polyhedra that every classification and prediction statement
 * excludes explicitly: the strongly regular tetrahedron plus the five whose
 * profiles break the generic pattern. Matched by canonical code. */
const std::map<CanonicalCode, std::pair<DezaFamily, std::string>>& exceptional_polyhedra() {
  static const std::map<CanonicalCode, std::pair<DezaFamily, std::string>> table = [] {
    std::map<CanonicalCode, std::pair<DezaFamily, std::string>> t;
    t[canonical_code(tetrahedron())] = {DezaFamily::Tetrahedron, "tetrahedron"};
    t[canonical_code(cube())] = {DezaFamily::Exceptional, "cube"};
    t[canonical_code(octahedron())] = {DezaFamily::Exceptional, "octahedron"};
    t[canonical_code(antiprism(4))] = {DezaFamily::Exceptional, "square antiprism"};
    t[canonical_code(nine_vertex_quartic())] = {DezaFamily::Exceptional, "9-vertex quartic"};
    t[canonical_code(icosahedron())] = {DezaFamily::Exceptional, "icosahedron"};
    return t;
  }();
  return table;
}

std::optional<CanonicalCode> code_of(const AbstractGraph& g) {
  auto emb = embed(g, g.n());
  if (!emb) return std::nullopt;
  return canonical_code(*emb);
}

bool component_matches(const AbstractGraph& comp, const PlaneGraph& model) {
  if (comp.n() != model.n()) return false;
  auto code = code_of(comp);
  return code && *code == canonical_code(model);
}

DezaClass make(DezaFamily family, std::string detail) {
  DezaClass c;
  c.family = family;
  c.detail = std::move(detail);
  return c;
}

} // namespace

DezaClass classify(const AbstractGraph& g) {
  if (g.n() == 0) return make(DezaFamily::NotDeza, "no vertices");
  int r = g.regularity();
  if (r < 0) fail(ErrorKind::NotRegular, "degrees differ");
  if (!is_planar(g)) fail(ErrorKind::NotPlanar, "graph is not planar");
  if (g.n() == 1) return make(DezaFamily::NotDeza, "single vertex has no vertex pair");

  DezaClass result;
  if (g.n() >= 4 && g.connected() && connectivity_at_least(g, 3)) {
    auto code = code_of(g);
    if (!code) fail(ErrorKind::Internal, "planar graph failed to embed");
    const auto& table = exceptional_polyhedra();
    if (auto hit = table.find(*code); hit != table.end()) {
      result = make(hit->second.first, hit->second.second);
    } else if (r == 3) {
      PlaneGraph emb = *embed(g, g.n());
      result = face_stats(emb).f4() > 0
                   ? make(DezaFamily::NotDeza, "cubic polyhedron with a quadrangular face")
                   : make(DezaFamily::CubicNoQuadFace, "cubic polyhedron, no quadrangular faces");
    } else if (r == 4) {
      result = has_four_cycle(g)
                   ? make(DezaFamily::NotDeza, "quartic polyhedron with a 4-cycle")
                   : make(DezaFamily::QuarticNoFourCycle, "quartic polyhedron, no 4-cycles");
    } else if (r == 5) {
      result = make(DezaFamily::NotDeza, "quintic polyhedron other than the icosahedron");
    } else {
      result = make(DezaFamily::NotDeza, "regularity outside 3..5");
    }
  } else {
    /* connectivity 0, 1 or 2 */
    auto comps = g.components();
    switch (r) {
      case 0:
        result = make(DezaFamily::UnionK1, "isolated vertices");
        break;
      case 1:
        result = make(DezaFamily::UnionK2, "perfect matching");
        break;
      case 2: {
        if (comps.size() == 1 && g.n() == 3) {
          result = make(DezaFamily::TriangleK3, "triangle");
          break;
        }
        bool any4 = false, all4 = true;
        for (const auto& c : comps) {
          if (c.size() == 4)
            any4 = true;
          else
            all4 = false;
        }
        if (all4)
          result = make(DezaFamily::UnionC4, "union of 4-cycles");
        else if (!any4)
          result = make(DezaFamily::UnionCyclesNoC4, "union of cycles, none of length 4");
        else
          result = make(DezaFamily::NotDeza, "4-cycles mixed with other cycle lengths");
        break;
      }
      case 3: {
        bool all_tetra_cube = true;
        for (const auto& c : comps) {
          AbstractGraph comp = g.induced(c);
          if (component_matches(comp, tetrahedron()) || component_matches(comp, cube()))
            continue;
          all_tetra_cube = false;
          break;
        }
        if (all_tetra_cube)
          result = make(DezaFamily::UnionTetraCube, "union of tetrahedra and cubes");
        else if (!has_four_cycle(g))
          result = make(DezaFamily::CubicNoFourCycleLowConn,
                        "cubic, no 4-cycles, connectivity at most 2");
        else
          result = make(DezaFamily::NotDeza, "cubic with a 4-cycle and connectivity at most 2");
        break;
      }
      case 4:
        result = !has_four_cycle(g)
                     ? make(DezaFamily::QuarticNoFourCycleLowConn,
                            "quartic, no 4-cycles, connectivity at most 2")
                     : make(DezaFamily::NotDeza,
                            "quartic with a 4-cycle and connectivity at most 2");
        break;
      case 5: {
        bool all_icosa = true;
        for (const auto& c : comps)
          if (!component_matches(g.induced(c), icosahedron())) {
            all_icosa = false;
            break;
          }
        result = all_icosa
                     ? make(DezaFamily::UnionIcosahedra, "union of icosahedra")
                     : make(DezaFamily::NotDeza,
                            "quintic, connectivity at most 2, not all icosahedra");
        break;
      }
      default:
        result = make(DezaFamily::NotDeza, "regularity above 5 in a planar graph");
        break;
    }
  }

  if (result.family != DezaFamily::NotDeza) {
    TypeProfile profile = type_profile(g);
    result.lambda_mu = {*profile.values.begin(), *profile.values.rbegin()};
  }
  return result;
}

TypePrediction predict_type(const PlaneGraph& g) {
  AbstractGraph a = g.abstract();
  int r = a.regularity();
  if (r < 0) fail(ErrorKind::NotRegular, "degrees differ");
  if (a.n() < 4) fail(ErrorKind::NotPolyhedral, "order below 4");
  if (!connectivity_at_least(a, 3)) fail(ErrorKind::NotPolyhedral, "connectivity below 3");

  const auto& table = exceptional_polyhedra();
  if (auto hit = table.find(canonical_code(g)); hit != table.end())
    fail(ErrorKind::ExceptionalInput, hit->second.second);

  TypePrediction pred;
  if (r == 3) {
    pred.profile = face_stats(g).f4() > 0 ? std::set<int>{0, 1, 2} : std::set<int>{0, 1};
  } else if (r == 4) {
    if (!has_four_cycle(a))
      pred.profile = {0, 1};
    else if (!k2r_witness(a, 3))
      pred.profile = {0, 1, 2};
    else
      pred.profile = {0, 1, 2, 3};
  } else if (r == 5) {
    pred.exact = false;
    pred.profile = {0, 1, 2};
    pred.upper = {0, 1, 2, 3, 4};
  } else {
    fail(ErrorKind::Internal, "regular polyhedron with regularity outside 3..5");
  }
  if (pred.exact) pred.upper = pred.profile;
  return pred;
}

} // namespace polydeza
