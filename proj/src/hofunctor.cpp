#include "catnerve/hofunctor.hpp"

#include "catnerve/error.hpp"
#include "catnerve/nerve.hpp"

namespace catnerve {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

std::vector<HoRelInstance> horel_instances(TruncSSet const& x) {
  if (x.dim() < 2) {
    throw InvalidArgument("horel_instances: needs dimension at least 2");
  }
  std::vector<HoRelInstance> out;
  for (int s = 0; s < static_cast<int>(x.size(2)); ++s) {
    int diagonal = x.face(2, 1, s);
    int first = x.face(2, 2, s);
    int second = x.face(2, 0, s);
    int start = x.face(1, 1, first);
    out.push_back({s, Path{start, {diagonal}}, Path{start, {first, second}}});
  }
  return out;
}

HomotopyCategory ho2(TruncSSet const& x, std::size_t fuel) {
  if (x.dim() != 2) {
    throw InvalidArgument("ho2: complex must be 2-truncated");
  }
  auto q = one_truncation(x);
  Presentation p{q.quiver, {}};
  // Reflexivity relations first so that degenerate 2-simplices reduce to
  // trivial equations before orientation.
  for (std::size_t v = 0; v < q.refl.size(); ++v) {
    p.relations.push_back(Relation{edge_path(q.quiver, q.refl[v]), Path{static_cast<int>(v), {}}});
  }
  for (auto const& inst : horel_instances(x)) {
    p.relations.push_back(Relation{inst.lhs, inst.rhs});
  }
  HomotopyCategory out{orient_and_complete(std::move(p), fuel), {}};
  for (std::size_t e = 0; e < q.quiver.edges.size(); ++e) {
    out.quotient.push_back(out.category.normalize(edge_path(q.quiver, static_cast<int>(e))));
  }
  return out;
}

HomotopyCategory ho(TruncSSet const& x, std::size_t fuel) {
  if (x.dim() < 2) {
    throw InvalidArgument("ho: needs dimension at least 2");
  }
  return ho2(truncate(x, 2), fuel);
}

GeneratorMap ho2_map(SimplicialMap const& f, TruncSSet const& target) {
  if (f.components.size() < 2) {
    throw InvalidArgument("ho2_map: map must have an edge component");
  }
  GeneratorMap g{f.components[0], {}};
  // Edges of the source quiver are level-1 simplices; their images are
  // one-edge paths in the target's free reflexive category.
  for (int e : f.components[1]) {
    g.generator_images.push_back(Path{target.face(1, 1, e), {e}});
  }
  return g;
}

PhiIso phi_iso(FinCat const& c) {
  NerveIndex index(c, 1);
  PhiIso phi;
  for (auto const& ch : index.level(0)) {
    phi.forward.vertex_map.push_back(ch.objects.front());
  }
  for (auto const& ch : index.level(1)) {
    phi.forward.edge_map.push_back(ch.morphisms.front());
  }
  phi.inverse.vertex_map.assign(c.object_count(), -1);
  phi.inverse.edge_map.assign(c.morphism_count(), -1);
  for (std::size_t v = 0; v < phi.forward.vertex_map.size(); ++v) {
    phi.inverse.vertex_map[uz(phi.forward.vertex_map[v])] = static_cast<int>(v);
  }
  for (std::size_t e = 0; e < phi.forward.edge_map.size(); ++e) {
    phi.inverse.edge_map[uz(phi.forward.edge_map[e])] = static_cast<int>(e);
  }
  auto nerve_side = one_truncation(nerve2(c));
  auto cat_side = forget_cat_to_reflquiver(c);
  auto fwd = validate_refl_prefunctor(phi.forward, nerve_side, cat_side);
  auto inv = validate_refl_prefunctor(phi.inverse, cat_side, nerve_side);
  if (!fwd || !inv) {
    throw InternalError("phi_iso: comparison is not an isomorphism of reflexive quivers");
  }
  return phi;
}

Report check_phi_naturality(CatFunctor const& f, FinCat const& c, FinCat const& d) {
  Report r("hofunctor.phi-naturality");
  auto phi_c = phi_iso(c);
  auto phi_d = phi_iso(d);
  auto nf = nerve_map(f, c, d, 2);
  Prefunctor top{nf.components[0], nf.components[1]};
  Prefunctor uf{f.object_map, f.morphism_map};
  if (compose(top, phi_d.forward) != compose(phi_c.forward, uf)) {
    r.fail("naturality square does not commute");
  }
  return r;
}

Counit counit(FinCat const& c, std::size_t fuel, std::size_t bound) {
  auto nc = nerve2(c);
  auto phi = phi_iso(c);
  auto h = ho2(nc, fuel);
  for (auto const& inst : horel_instances(nc)) {
    int first = phi.forward.edge_map[uz(inst.rhs.edges[0])];
    int second = phi.forward.edge_map[uz(inst.rhs.edges[1])];
    if (c.compose(first, second) != phi.forward.edge_map[uz(inst.lhs.edges[0])]) {
      throw InternalError("counit: relation from 2-simplex " + nc.name(2, inst.simplex) +
                          " fails in the category");
    }
  }
  for (int v = 0; v < static_cast<int>(nc.size(0)); ++v) {
    if (phi.forward.edge_map[uz(nc.degen(0, 0, v))] != c.identity(phi.forward.vertex_map[uz(v)])) {
      throw InternalError("counit: reflexivity loop is not sent to an identity");
    }
  }
  Counit out{to_fincat(h.category, bound), {}, false};
  out.functor.object_map = phi.forward.vertex_map;
  for (auto const& p : out.source.normal_forms) {
    Path in_c{phi.forward.vertex_map[uz(p.start)], {}};
    for (int e : p.edges) {
      in_c.edges.push_back(phi.forward.edge_map[uz(e)]);
    }
    out.functor.morphism_map.push_back(evaluate_path(c, in_c));
  }
  out.isomorphism = is_isomorphism(out.functor, out.source.category, c);
  return out;
}

Unit unit(TruncSSet const& x, std::size_t fuel, std::size_t bound) {
  auto h = ho2(x, fuel);
  Unit out{to_fincat(h.category, bound), {}};
  Prefunctor f;
  for (std::size_t v = 0; v < x.size(0); ++v) {
    f.vertex_map.push_back(static_cast<int>(v));
  }
  for (auto const& p : h.quotient) {
    f.edge_map.push_back(out.target.index.at(p));
  }
  out.map = to_nerve2_mk(x, out.target.category, f);
  return out;
}

Report check_triangles_nerve_adj(TruncSSet const& x, FinCat const& c, std::size_t fuel,
                                 std::size_t bound) {
  Report r("hofunctor.triangles");

  // nerve2(eps_C) . eta_{nerve2 C} = id
  auto nc = nerve2(c);
  auto eta_n = unit(nc, fuel, bound);
  auto eps = counit(c, fuel, bound);
  if (eta_n.target.normal_forms != eps.source.normal_forms) {
    throw InternalError("check_triangles_nerve_adj: ho2(nerve2 C) materialized inconsistently");
  }
  auto composite = compose(eta_n.map, nerve_map(eps.functor, eps.source.category, c, 2));
  if (!to_nerve2_ext(composite, identity_map(nc))) {
    r.fail("triangle at nerve2 C does not reduce to the identity");
    return r;
  }

  // eps_{ho2 X} . ho2(eta_X) = id, compared on generators of ho2 X
  auto hx = ho2(x, fuel);
  auto eta_x = unit(x, fuel, bound);
  auto const& h = eta_x.target.category;
  auto eps_h = counit(h, fuel, bound);
  auto hn = ho2(nerve2(h), fuel);
  auto lifted = ho2_map(eta_x.map, nerve2(h));
  for (std::size_t e = 0; e < x.size(1); ++e) {
    auto const& image = lifted.generator_images[e];
    int in_source = eps_h.source.morphism_of(hn.category, image);
    int in_h = eps_h.functor.morphism_map[uz(in_source)];
    auto const& back = eta_x.target.normal_forms[uz(in_h)];
    auto verdict = eq(hx.category, back, edge_path(hx.category.quiver(), static_cast<int>(e)));
    if (verdict.is_unknown()) {
      r.inconclusive("triangle at ho2 X undecided on generator " + x.name(1, static_cast<int>(e)) +
                     ": " + to_string(verdict));
    } else if (!verdict.is_equal()) {
      r.fail("triangle at ho2 X fails on generator " + x.name(1, static_cast<int>(e)));
      return r;
    }
  }
  return r;
}

SimplicialMap transpose_to_map(TruncSSet const& x, HomotopyCategory const& h, FinCat const& c,
                               FpFunctor const& g) {
  Prefunctor f{g.object_map, {}};
  for (auto const& p : h.quotient) {
    f.edge_map.push_back(evaluate(g, h.category, c, p));
  }
  return to_nerve2_mk(x, c, f);
}

FpFunctor transpose_to_functor(FinCat const& c, SimplicialMap const& f) {
  auto phi = phi_iso(c);
  FpFunctor g;
  for (int v : f.components.at(0)) {
    g.object_map.push_back(phi.forward.vertex_map[uz(v)]);
  }
  for (int e : f.components.at(1)) {
    g.generator_map.push_back(phi.forward.edge_map[uz(e)]);
  }
  return g;
}

Report check_hom_bijection(TruncSSet const& x, FinCat const& c, std::size_t guard,
                           std::size_t fuel) {
  Report r("hofunctor.hom-bijection");
  auto h = ho2(x, fuel);
  auto functors = enumerate_fp_functors(h.category, c, guard);
  auto maps = enumerate_maps(x, nerve2(c), guard);
  r.note("|Fun(ho2 X, C)| = " + std::to_string(functors.size()) + ", |Hom(X, nerve2 C)| = " +
         std::to_string(maps.size()));
  if (functors.size() != maps.size()) {
    r.fail("hom-set sizes differ");
    return r;
  }
  for (auto const& g : functors) {
    auto f = transpose_to_map(x, h, c, g);
    if (transpose_to_functor(c, f) != g) {
      r.fail("transposes are not inverse on a functor");
      return r;
    }
  }
  for (auto const& f : maps) {
    auto g = transpose_to_functor(c, f);
    if (!respects_relations(g, h.category, c)) {
      r.fail("transpose of a simplicial map does not respect the homotopy relations");
      return r;
    }
    if (!to_nerve2_ext(transpose_to_map(x, h, c, g), f)) {
      r.fail("transposes are not inverse on a simplicial map");
      return r;
    }
  }
  return r;
}

}  // namespace catnerve
