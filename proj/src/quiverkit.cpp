#include "catnerve/quiverkit.hpp"

#include <functional>

#include "catnerve/error.hpp"

namespace catnerve {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

Report validate(ReflQuiver const& q) {
  Report r = validate(q.quiver);
  r.check = "reflquiver";
  if (!r) {
    return r;
  }
  if (q.refl.size() != q.quiver.vertices.size()) {
    r.fail("one reflexivity loop per vertex required");
    return r;
  }
  for (std::size_t v = 0; v < q.refl.size(); ++v) {
    int e = q.refl[v];
    if (e < 0 || uz(e) >= q.quiver.edges.size() ||
        q.quiver.edges[uz(e)].src != static_cast<int>(v) ||
        q.quiver.edges[uz(e)].tgt != static_cast<int>(v)) {
      r.fail("refl(" + q.quiver.vertices[v] + ") is not a loop at that vertex");
      return r;
    }
  }
  return r;
}

Report validate_prefunctor(Prefunctor const& f, Quiver const& q, Quiver const& r) {
  Report rep{"prefunctor"};
  if (f.vertex_map.size() != q.vertices.size() || f.edge_map.size() != q.edges.size()) {
    rep.fail("maps have wrong size");
    return rep;
  }
  for (int v : f.vertex_map) {
    if (v < 0 || uz(v) >= r.vertices.size()) {
      rep.fail("vertex image out of range");
      return rep;
    }
  }
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    int img = f.edge_map[e];
    if (img < 0 || uz(img) >= r.edges.size()) {
      rep.fail("edge image out of range");
      return rep;
    }
    if (r.edges[uz(img)].src != f.vertex_map[uz(q.edges[e].src)] ||
        r.edges[uz(img)].tgt != f.vertex_map[uz(q.edges[e].tgt)]) {
      rep.fail("endpoints not preserved at edge " + q.edges[e].name);
      return rep;
    }
  }
  return rep;
}

Report validate_refl_prefunctor(Prefunctor const& f, ReflQuiver const& q, ReflQuiver const& r) {
  Report rep = validate_prefunctor(f, q.quiver, r.quiver);
  rep.check = "refl-prefunctor";
  if (!rep) {
    return rep;
  }
  for (std::size_t v = 0; v < q.refl.size(); ++v) {
    if (f.edge_map[uz(q.refl[v])] != r.refl[uz(f.vertex_map[v])]) {
      rep.fail("reflexivity loop not preserved at " + q.quiver.vertices[v]);
      return rep;
    }
  }
  return rep;
}

Prefunctor compose(Prefunctor const& f, Prefunctor const& g) {
  Prefunctor out;
  for (int v : f.vertex_map) {
    out.vertex_map.push_back(g.vertex_map.at(uz(v)));
  }
  for (int e : f.edge_map) {
    out.edge_map.push_back(g.edge_map.at(uz(e)));
  }
  return out;
}

std::vector<Prefunctor> enumerate_refl_prefunctors(ReflQuiver const& q, ReflQuiver const& r,
                                                   std::size_t guard) {
  auto const& qe = q.quiver.edges;
  auto const& re = r.quiver.edges;
  auto nv = q.quiver.vertices.size();
  std::vector<bool> is_refl(qe.size(), false);
  for (int e : q.refl) {
    is_refl[uz(e)] = true;
  }
  std::vector<Prefunctor> out;
  Prefunctor cur{std::vector<int>(nv, -1), std::vector<int>(qe.size(), -1)};
  std::size_t nodes = 0;
  auto tick = [&] {
    if (++nodes > guard) {
      throw GuardExceeded("enumerate_refl_prefunctors: search exceeded guard of " +
                          std::to_string(guard) + " nodes");
    }
  };
  std::function<void(std::size_t)> assign_edge = [&](std::size_t e) {
    if (e == qe.size()) {
      out.push_back(cur);
      return;
    }
    if (is_refl[e]) {
      cur.edge_map[e] = r.refl[uz(cur.vertex_map[uz(qe[e].src)])];
      assign_edge(e + 1);
      return;
    }
    int s = cur.vertex_map[uz(qe[e].src)];
    int t = cur.vertex_map[uz(qe[e].tgt)];
    for (std::size_t x = 0; x < re.size(); ++x) {
      if (re[x].src == s && re[x].tgt == t) {
        tick();
        cur.edge_map[e] = static_cast<int>(x);
        assign_edge(e + 1);
      }
    }
  };
  std::function<void(std::size_t)> assign_vertex = [&](std::size_t v) {
    if (v == nv) {
      assign_edge(0);
      return;
    }
    for (std::size_t w = 0; w < r.quiver.vertices.size(); ++w) {
      tick();
      cur.vertex_map[v] = static_cast<int>(w);
      assign_vertex(v + 1);
    }
  };
  assign_vertex(0);
  return out;
}

FpCat free_category(Quiver const& q, std::size_t fuel) {
  return orient_and_complete(Presentation{q, {}}, fuel);
}

FreeReflCategory free_refl_category(ReflQuiver const& q, std::size_t fuel) {
  auto rep = validate(q);
  if (!rep) {
    throw InvalidArgument(rep.notes.front());
  }
  Presentation p{q.quiver, {}};
  for (std::size_t v = 0; v < q.refl.size(); ++v) {
    p.relations.push_back(Relation{edge_path(q.quiver, q.refl[v]), Path{static_cast<int>(v), {}}});
  }
  FreeReflCategory out{orient_and_complete(std::move(p), fuel), {}};
  for (std::size_t e = 0; e < q.quiver.edges.size(); ++e) {
    out.quotient.push_back(out.category.normalize(edge_path(q.quiver, static_cast<int>(e))));
  }
  return out;
}

ReflQuiver forget_cat_to_reflquiver(FinCat const& c) {
  ReflQuiver q;
  q.quiver.vertices = c.objects();
  for (auto const& m : c.morphisms()) {
    q.quiver.edges.push_back(Edge{m.name, m.src, m.tgt});
  }
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    q.refl.push_back(c.identity(static_cast<int>(a)));
  }
  return q;
}

int evaluate_path(FinCat const& c, Path const& p) {
  if (p.start < 0 || uz(p.start) >= c.object_count()) {
    throw InvalidArgument("evaluate_path: start vertex out of range");
  }
  int acc = c.identity(p.start);
  for (int f : p.edges) {
    if (f < 0 || uz(f) >= c.morphism_count()) {
      throw InvalidArgument("evaluate_path: morphism id out of range");
    }
    acc = c.compose(acc, f);
  }
  return acc;
}

Report check_triangle_identities_reflquiv(FinCat const& c, ReflQuiver const& q) {
  Report r{"reflquiv-triangles"};

  // Triangle at the free side: Fr Q -> Fr Ur Fr Q -> Fr Q is the identity.
  auto free_q = free_refl_category(q);
  auto const& fq = free_q.category;
  // unit: edge e of Q |-> class of e, an edge of Ur Fr Q
  auto const& unit = free_q.quotient;
  for (std::size_t v = 0; v < q.refl.size(); ++v) {
    if (!unit[uz(q.refl[v])].empty()) {
      r.fail("unit does not send refl(" + q.quiver.vertices[v] + ") to an identity");
      return r;
    }
  }
  for (std::size_t e = 0; e < q.quiver.edges.size(); ++e) {
    // Fr(unit) sends generator e to the one-edge path [unit(e)] of classes;
    // the counit at Fr Q composes that path inside Fr Q.
    Path composite = fq.normalize(unit[e]);
    auto verdict = eq(fq, composite, edge_path(q.quiver, static_cast<int>(e)));
    if (verdict.is_unknown()) {
      r.inconclusive("triangle at Fr Q undecided on generator " + q.quiver.edges[e].name);
    } else if (!verdict.is_equal()) {
      r.fail("triangle at Fr Q fails on generator " + q.quiver.edges[e].name);
      return r;
    }
  }

  // Triangle at the forgetful side: Ur C -> Ur Fr Ur C -> Ur C is the identity.
  auto uc = forget_cat_to_reflquiver(c);
  auto free_c = free_refl_category(uc);
  for (auto const& rel : free_c.category.presentation().relations) {
    if (evaluate_path(c, rel.lhs) != evaluate_path(c, rel.rhs)) {
      r.fail("counit at C does not respect the reflexivity relations");
      return r;
    }
  }
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    int back = evaluate_path(c, free_c.quotient[f]);
    if (back != static_cast<int>(f)) {
      r.fail("triangle at Ur C fails on morphism " + c.morphism_name(static_cast<int>(f)));
      return r;
    }
  }
  return r;
}

}  // namespace catnerve
