#include "catnerve/colimit.hpp"

#include <map>

#include "catnerve/error.hpp"
#include "catnerve/nerve.hpp"
#include "catnerve/union_find.hpp"

namespace catnerve {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

template <typename P, typename A>
Report check_shape(Diagram<P, A> const& d, char const* name) {
  Report r(name);
  if (d.nodes.size() != d.shape.object_count() || d.arrows.size() != d.shape.morphism_count()) {
    r.fail("diagram needs one node per shape object and one arrow per shape morphism");
  }
  return r;
}

/// Generic functoriality check given per-arrow predicates.
template <typename P, typename A, typename IsIdentity, typename Composes>
void check_functoriality(Diagram<P, A> const& d, Report& r, IsIdentity is_identity,
                         Composes composes) {
  auto const& j = d.shape;
  for (int a = 0; a < static_cast<int>(j.object_count()) && r.ok(); ++a) {
    if (!is_identity(d.arrows[uz(j.identity(a))], a)) {
      r.fail("arrow at identity of " + j.object_name(a) + " is not an identity");
    }
  }
  for (int u = 0; u < static_cast<int>(j.morphism_count()) && r.ok(); ++u) {
    for (int v = 0; v < static_cast<int>(j.morphism_count()) && r.ok(); ++v) {
      if (j.tgt(u) == j.src(v) &&
          !composes(d.arrows[uz(u)], d.arrows[uz(v)], d.arrows[uz(j.compose(u, v))])) {
        r.fail("arrows do not respect composite " + j.morphism_name(u) + "." + j.morphism_name(v));
      }
    }
  }
}

std::vector<std::string> class_names(std::vector<std::vector<std::string>> const& members_names,
                                     std::vector<std::vector<std::string>> const& members_nodes) {
  // members_*[c][0] belongs to the representative
  std::map<std::string, int> count;
  for (auto const& m : members_names) {
    ++count[m.front()];
  }
  std::vector<std::string> out;
  for (std::size_t c = 0; c < members_names.size(); ++c) {
    auto const& n = members_names[c].front();
    out.push_back(count[n] > 1 ? n + "@" + members_nodes[c].front() : n);
  }
  return out;
}

}  // namespace

Report validate(SetDiagram const& d) {
  Report r = check_shape(d, "colimit.set-diagram");
  if (!r) {
    return r;
  }
  auto const& j = d.shape;
  for (int u = 0; u < static_cast<int>(j.morphism_count()); ++u) {
    auto const& f = d.arrows[uz(u)];
    auto const& from = d.nodes[uz(j.src(u))];
    auto const& to = d.nodes[uz(j.tgt(u))];
    if (f.size() != from.size()) {
      r.fail("arrow " + j.morphism_name(u) + " has wrong domain size");
      return r;
    }
    for (int x : f) {
      if (x < 0 || uz(x) >= to.size()) {
        r.fail("arrow " + j.morphism_name(u) + " leaves its codomain");
        return r;
      }
    }
  }
  check_functoriality(
      d, r,
      [](Function const& f, int) {
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (f[i] != static_cast<int>(i)) {
            return false;
          }
        }
        return true;
      },
      [](Function const& f, Function const& g, Function const& h) {
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (g[uz(f[i])] != h[i]) {
            return false;
          }
        }
        return true;
      });
  return r;
}

Report validate(SSetDiagram const& d) {
  Report r = check_shape(d, "colimit.sset-diagram");
  if (!r) {
    return r;
  }
  for (auto const& x : d.nodes) {
    if (x.dim() != d.nodes.front().dim()) {
      r.fail("nodes have different dimensions");
      return r;
    }
    r.merge(validate(x));
  }
  auto const& j = d.shape;
  for (int u = 0; u < static_cast<int>(j.morphism_count()) && r.ok(); ++u) {
    auto m = validate_map(d.arrows[uz(u)], d.nodes[uz(j.src(u))], d.nodes[uz(j.tgt(u))]);
    if (!m) {
      r.fail("arrow " + j.morphism_name(u) + ": " + m.notes.front());
    }
  }
  if (!r) {
    return r;
  }
  check_functoriality(
      d, r, [&](SimplicialMap const& f, int a) { return f == identity_map(d.nodes[uz(a)]); },
      [](SimplicialMap const& f, SimplicialMap const& g, SimplicialMap const& h) {
        return compose(f, g) == h;
      });
  return r;
}

Report validate(CatDiagram const& d) {
  Report r = check_shape(d, "colimit.cat-diagram");
  if (!r) {
    return r;
  }
  for (auto const& c : d.nodes) {
    r.merge(validate(c));
  }
  auto const& j = d.shape;
  for (int u = 0; u < static_cast<int>(j.morphism_count()) && r.ok(); ++u) {
    auto m = validate_functor(d.arrows[uz(u)], d.nodes[uz(j.src(u))], d.nodes[uz(j.tgt(u))]);
    if (!m) {
      r.fail("arrow " + j.morphism_name(u) + ": " + m.notes.front());
    }
  }
  if (!r) {
    return r;
  }
  check_functoriality(
      d, r, [&](CatFunctor const& f, int a) { return f == identity_functor(d.nodes[uz(a)]); },
      [](CatFunctor const& f, CatFunctor const& g, CatFunctor const& h) {
        return compose(f, g) == h;
      });
  return r;
}

SetColimit colim_set(SetDiagram const& d) {
  auto rep = validate(d);
  if (!rep) {
    throw InvalidArgument(rep.notes.front());
  }
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (auto const& node : d.nodes) {
    offset.push_back(total);
    total += node.size();
  }
  UnionFind uf(total);
  auto const& j = d.shape;
  for (int u = 0; u < static_cast<int>(j.morphism_count()); ++u) {
    auto s = offset[uz(j.src(u))];
    auto t = offset[uz(j.tgt(u))];
    auto const& f = d.arrows[uz(u)];
    for (std::size_t i = 0; i < f.size(); ++i) {
      uf.unite(s + i, t + uz(f[i]));
    }
  }
  std::vector<int> class_of(total, -1);
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<std::string>> nodes;
  SetColimit out;
  for (std::size_t node = 0; node < d.nodes.size(); ++node) {
    for (std::size_t i = 0; i < d.nodes[node].size(); ++i) {
      auto g = offset[node] + i;
      auto root = uf.find(g);
      if (class_of[root] < 0) {
        class_of[root] = static_cast<int>(names.size());
        names.emplace_back();
        nodes.emplace_back();
      }
      names[uz(class_of[root])].push_back(d.nodes[node].elements[i]);
      nodes[uz(class_of[root])].push_back(j.object_name(static_cast<int>(node)));
    }
  }
  out.apex.elements = class_names(names, nodes);
  for (std::size_t node = 0; node < d.nodes.size(); ++node) {
    Function leg;
    for (std::size_t i = 0; i < d.nodes[node].size(); ++i) {
      leg.push_back(class_of[uf.find(offset[node] + i)]);
    }
    out.legs.push_back(std::move(leg));
  }
  return out;
}

SSetColimit colim_sset(SSetDiagram const& d) {
  auto rep = validate(d);
  if (!rep) {
    throw InvalidArgument(rep.notes.front());
  }
  if (d.nodes.empty()) {
    throw InvalidArgument("colim_sset: empty diagram has no dimension");
  }
  int dim = d.nodes.front().dim();
  std::vector<SetColimit> levels;
  for (int k = 0; k <= dim; ++k) {
    SetDiagram level{d.shape, {}, {}};
    for (auto const& x : d.nodes) {
      level.nodes.push_back(FinSet{x.names(k)});
    }
    for (auto const& f : d.arrows) {
      level.arrows.push_back(f.components[uz(k)]);
    }
    levels.push_back(colim_set(level));
  }
  // Induced action on classes, checked against every member.
  auto induce = [&](int from, int to, auto const& action, std::string const& what) {
    std::vector<int> out(levels[uz(from)].apex.size(), -1);
    for (std::size_t node = 0; node < d.nodes.size(); ++node) {
      for (std::size_t x = 0; x < d.nodes[node].size(from); ++x) {
        int cls = levels[uz(from)].legs[node][x];
        int image = levels[uz(to)].legs[node][uz(action(d.nodes[node], static_cast<int>(x)))];
        if (out[uz(cls)] < 0) {
          out[uz(cls)] = image;
        } else if (out[uz(cls)] != image) {
          throw InternalError("colim_sset: " + what + " depends on the representative of class " +
                              levels[uz(from)].apex.elements[uz(cls)]);
        }
      }
    }
    return out;
  };
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<std::vector<int>>> faces(uz(dim) + 1);
  std::vector<std::vector<std::vector<int>>> degens(uz(dim));
  for (int k = 0; k <= dim; ++k) {
    names.push_back(levels[uz(k)].apex.elements);
  }
  for (int k = 1; k <= dim; ++k) {
    for (int i = 0; i <= k; ++i) {
      faces[uz(k)].push_back(induce(
          k, k - 1, [&](TruncSSet const& x, int s) { return x.face(k, i, s); },
          "face " + std::to_string(k) + " " + std::to_string(i)));
    }
  }
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i <= k; ++i) {
      degens[uz(k)].push_back(induce(
          k, k + 1, [&](TruncSSet const& x, int s) { return x.degen(k, i, s); },
          "degen " + std::to_string(k) + " " + std::to_string(i)));
    }
  }
  SSetColimit out{TruncSSet(dim, std::move(names), std::move(faces), std::move(degens)), {}};
  for (std::size_t node = 0; node < d.nodes.size(); ++node) {
    SimplicialMap leg;
    for (int k = 0; k <= dim; ++k) {
      leg.components.push_back(levels[uz(k)].legs[node]);
    }
    out.legs.push_back(std::move(leg));
  }
  return out;
}

CatColimit colim_cat(CatDiagram const& d, std::size_t fuel) {
  auto rep = validate(d);
  if (!rep) {
    throw InvalidArgument(rep.notes.front());
  }
  SSetDiagram nerves{d.shape, {}, {}};
  for (auto const& c : d.nodes) {
    nerves.nodes.push_back(nerve2(c));
  }
  auto const& j = d.shape;
  for (int u = 0; u < static_cast<int>(j.morphism_count()); ++u) {
    nerves.arrows.push_back(
        nerve_map(d.arrows[uz(u)], d.nodes[uz(j.src(u))], d.nodes[uz(j.tgt(u))], 2));
  }
  auto sset = colim_sset(nerves);
  CatColimit out{ho2(sset.apex, fuel), {}};
  auto const& q = out.presentation.category.quiver();
  for (std::size_t node = 0; node < d.nodes.size(); ++node) {
    auto const& c = d.nodes[node];
    auto const& leg = sset.legs[node];
    // inverse counit at the node (phi^-1), then ho2 of the simplicial leg
    auto phi = phi_iso(c);
    GeneratorMap g;
    for (std::size_t a = 0; a < c.object_count(); ++a) {
      g.object_map.push_back(leg.components[0][uz(phi.inverse.vertex_map[a])]);
    }
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      int edge = leg.components[1][uz(phi.inverse.edge_map[f])];
      g.generator_images.push_back(out.presentation.category.normalize(edge_path(q, edge)));
    }
    out.legs.push_back(std::move(g));
  }
  return out;
}

Report check_cocone(CatDiagram const& d, CatColimit const& colimit) {
  Report r("colimit.cocone");
  auto const& cat = colimit.presentation.category;
  auto const& j = d.shape;
  for (int u = 0; u < static_cast<int>(j.morphism_count()); ++u) {
    auto const& from = colimit.legs[uz(j.src(u))];
    auto const& to = colimit.legs[uz(j.tgt(u))];
    auto const& arrow = d.arrows[uz(u)];
    auto const& c = d.nodes[uz(j.src(u))];
    for (std::size_t a = 0; a < c.object_count(); ++a) {
      if (to.object_map[uz(arrow.object_map[a])] != from.object_map[a]) {
        r.fail("objects do not commute along " + j.morphism_name(u));
        return r;
      }
    }
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      auto verdict = eq(cat, to.generator_images[uz(arrow.morphism_map[f])],
                        from.generator_images[f]);
      if (verdict.is_unknown()) {
        r.inconclusive("undecided along " + j.morphism_name(u));
      } else if (!verdict.is_equal()) {
        r.fail("morphism " + c.morphism_name(static_cast<int>(f)) + " does not commute along " +
               j.morphism_name(u));
        return r;
      }
    }
  }
  return r;
}

Report validate(CatDiagram const& d, Cocone const& cocone) {
  Report r("colimit.probe-cocone");
  if (cocone.legs.size() != d.nodes.size()) {
    r.fail("one leg per node required");
    return r;
  }
  for (std::size_t node = 0; node < d.nodes.size(); ++node) {
    auto v = validate_functor(cocone.legs[node], d.nodes[node], cocone.apex);
    if (!v) {
      r.fail("leg " + d.shape.object_name(static_cast<int>(node)) + ": " + v.notes.front());
      return r;
    }
  }
  auto const& j = d.shape;
  for (int u = 0; u < static_cast<int>(j.morphism_count()); ++u) {
    if (compose(d.arrows[uz(u)], cocone.legs[uz(j.tgt(u))]) != cocone.legs[uz(j.src(u))]) {
      r.fail("legs do not commute along " + j.morphism_name(u));
      return r;
    }
  }
  return r;
}

ProbeResult verify_colimit_probe(CatDiagram const& d, CatColimit const& colimit,
                                 Cocone const& probe, std::size_t guard) {
  ProbeResult out{validate(d, probe), {}};
  out.report.check = "colimit.probe";
  if (!out.report) {
    return out;
  }
  auto const& cat = colimit.presentation.category;
  for (auto& m : enumerate_fp_functors(cat, probe.apex, guard)) {
    bool commutes = true;
    for (std::size_t node = 0; node < d.nodes.size() && commutes; ++node) {
      auto const& leg = colimit.legs[node];
      auto const& target = probe.legs[node];
      for (std::size_t a = 0; a < leg.object_map.size() && commutes; ++a) {
        commutes = m.object_map[uz(leg.object_map[a])] == target.object_map[a];
      }
      for (std::size_t f = 0; f < leg.generator_images.size() && commutes; ++f) {
        commutes = evaluate(m, cat, probe.apex, leg.generator_images[f]) == target.morphism_map[f];
      }
    }
    if (commutes) {
      out.mediators.push_back(std::move(m));
    }
  }
  out.report.note(std::to_string(out.mediators.size()) + " mediating functor(s)");
  if (out.mediators.size() != 1) {
    out.report.fail("expected exactly one mediator, found " +
                    std::to_string(out.mediators.size()));
  }
  return out;
}

Report verify_colimit_cat(CatDiagram const& d, CatColimit const& colimit,
                          std::vector<Cocone> const& probes, std::size_t guard) {
  Report r("colimit.universal-property");
  for (std::size_t p = 0; p < probes.size(); ++p) {
    auto result = verify_colimit_probe(d, colimit, probes[p], guard);
    result.report.check = "probe " + std::to_string(p);
    r.merge(result.report);
  }
  return r;
}

Cocone colimit_cocone(CatColimit const& colimit, FinitizedCat const& finite) {
  Cocone out{finite.category, {}};
  auto const& cat = colimit.presentation.category;
  for (auto const& leg : colimit.legs) {
    CatFunctor f{leg.object_map, {}};
    for (auto const& p : leg.generator_images) {
      f.morphism_map.push_back(finite.morphism_of(cat, p));
    }
    out.legs.push_back(std::move(f));
  }
  return out;
}

}  // namespace catnerve
