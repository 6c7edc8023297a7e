#include "catnerve/nerve.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "catnerve/error.hpp"

namespace catnerve {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

std::string chain_name(FinCat const& c, ComposableChain const& ch) {
  if (ch.morphisms.empty()) {
    return c.object_name(ch.objects.front());
  }
  if (ch.morphisms.size() == 1) {
    return c.morphism_name(ch.morphisms.front());
  }
  std::string s = "[";
  for (std::size_t i = 0; i < ch.morphisms.size(); ++i) {
    if (i > 0) {
      s += "/";
    }
    s += c.morphism_name(ch.morphisms[i]);
  }
  return s + "]";
}

int lookup(NerveIndex const& index, ComposableChain const& ch) {
  if (ch.morphisms.empty()) {
    return ch.objects.front();
  }
  return index.id(ch.morphisms);
}

}  // namespace

NerveIndex::NerveIndex(FinCat const& c, int dim) {
  if (dim < 0 || dim > max_simplex_dim) {
    throw InvalidArgument("nerve: dimension out of range");
  }
  for (int k = 0; k <= dim; ++k) {
    levels_.push_back(chains(c, k));
    if (k == 0) {
      continue;
    }
    for (std::size_t i = 0; i < levels_.back().size(); ++i) {
      ids_.emplace(levels_.back()[i].morphisms, static_cast<int>(i));
    }
  }
}

int NerveIndex::id(std::vector<int> const& morphisms) const {
  auto it = ids_.find(morphisms);
  return it == ids_.end() ? -1 : it->second;
}

ComposableChain reindex(FinCat const& c, ComposableChain const& chain, MonotoneMap const& alpha) {
  if (static_cast<std::size_t>(alpha.tgt()) != chain.morphisms.size()) {
    throw InvalidArgument("reindex: " + alpha.to_string() + " does not match chain length " +
                          std::to_string(chain.morphisms.size()));
  }
  ComposableChain out;
  for (int v : alpha.values()) {
    out.objects.push_back(chain.objects[uz(v)]);
  }
  for (int i = 0; i < alpha.src(); ++i) {
    int from = alpha(i);
    int to = alpha(i + 1);
    int acc = c.identity(chain.objects[uz(from)]);
    for (int j = from; j < to; ++j) {
      acc = c.compose(acc, chain.morphisms[uz(j)]);
    }
    out.morphisms.push_back(acc);
  }
  return out;
}

TruncSSet nerve(FinCat const& c, int dim) {
  NerveIndex index(c, dim);
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<std::vector<int>>> faces(uz(dim) + 1);
  std::vector<std::vector<std::vector<int>>> degens(uz(dim));
  for (int k = 0; k <= dim; ++k) {
    std::vector<std::string> level;
    for (auto const& ch : index.level(k)) {
      level.push_back(chain_name(c, ch));
    }
    names.push_back(std::move(level));
  }
  for (int k = 1; k <= dim; ++k) {
    for (int i = 0; i <= k; ++i) {
      std::vector<int> m;
      for (auto const& ch : index.level(k)) {
        m.push_back(lookup(index, reindex(c, ch, delta(i, k - 1))));
      }
      faces[uz(k)].push_back(std::move(m));
    }
  }
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i <= k; ++i) {
      std::vector<int> m;
      for (auto const& ch : index.level(k)) {
        m.push_back(lookup(index, reindex(c, ch, sigma(i, k))));
      }
      degens[uz(k)].push_back(std::move(m));
    }
  }
  return TruncSSet(dim, std::move(names), std::move(faces), std::move(degens));
}

TruncSSet nerve2(FinCat const& c) { return truncate(nerve(c, max_simplex_dim), 2); }

SimplicialMap nerve_map(CatFunctor const& f, FinCat const& c, FinCat const& d, int dim) {
  NerveIndex src(c, dim);
  NerveIndex tgt(d, dim);
  SimplicialMap out;
  for (int k = 0; k <= dim; ++k) {
    std::vector<int> comp;
    for (auto const& ch : src.level(k)) {
      ComposableChain image;
      for (int a : ch.objects) {
        image.objects.push_back(f.object_map.at(uz(a)));
      }
      for (int g : ch.morphisms) {
        image.morphisms.push_back(f.morphism_map.at(uz(g)));
      }
      comp.push_back(lookup(tgt, image));
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

SimplicialMap to_nerve2_mk(TruncSSet const& x, FinCat const& c, Prefunctor const& f) {
  if (x.dim() != 2) {
    throw InvalidArgument("to_nerve2_mk: source must be 2-truncated");
  }
  auto uc = forget_cat_to_reflquiver(c);
  auto rep = validate_refl_prefunctor(f, one_truncation(x), uc);
  if (!rep) {
    throw InvalidArgument("to_nerve2_mk: " + rep.notes.front());
  }
  NerveIndex index(c, 2);
  SimplicialMap out;
  out.components.push_back(f.vertex_map);
  out.components.push_back(f.edge_map);
  std::vector<int> top;
  for (int s = 0; s < static_cast<int>(x.size(2)); ++s) {
    int first = f.edge_map[uz(x.face(2, 2, s))];
    int second = f.edge_map[uz(x.face(2, 0, s))];
    int diagonal = f.edge_map[uz(x.face(2, 1, s))];
    if (c.compose(first, second) != diagonal) {
      throw ValidationError("to_nerve2_mk: at 2-simplex " + x.name(2, s) + ", " +
                            c.morphism_name(diagonal) + " is not the composite of " +
                            c.morphism_name(first) + " then " + c.morphism_name(second));
    }
    top.push_back(index.id({first, second}));
  }
  out.components.push_back(std::move(top));
  auto nc = nerve2(c);
  auto check = validate_map(out, x, nc);
  if (!check) {
    throw InternalError("to_nerve2_mk: lifted map is not simplicial: " + check.notes.front());
  }
  return out;
}

bool to_nerve2_ext(SimplicialMap const& f, SimplicialMap const& g) {
  if (f.components.size() != 3 || g.components.size() != 3) {
    throw InvalidArgument("to_nerve2_ext: maps must be 2-truncated");
  }
  if (f.components[0] != g.components[0] || f.components[1] != g.components[1]) {
    return false;
  }
  if (f.components[2] != g.components[2]) {
    throw InternalError(
        "to_nerve2_ext: maps into a 2-truncated nerve agree on vertices and edges but not on "
        "2-simplices");
  }
  return true;
}

Report check_strict_segal(TruncSSet const& x, int k) {
  Report r("nerve.strict-segal k=" + std::to_string(k));
  if (k < 0 || k > x.dim()) {
    throw InvalidArgument("check_strict_segal: level out of range");
  }
  std::vector<Path> paths;
  if (k == 0) {
    for (std::size_t v = 0; v < x.size(0); ++v) {
      paths.push_back(Path{static_cast<int>(v), {}});
    }
  } else {
    paths = paths_of_length(one_truncation(x).quiver, uz(k));
  }
  std::map<Path, int> preimage;
  for (int s = 0; s < static_cast<int>(x.size(k)); ++s) {
    auto p = spine(x, k, s);
    auto [it, inserted] = preimage.emplace(p, s);
    if (!inserted) {
      r.fail("simplices " + x.name(k, it->second) + " and " + x.name(k, s) +
             " share a spine");
      return r;
    }
  }
  for (auto const& p : paths) {
    if (!preimage.contains(p)) {
      Quiver q = k == 0 ? Quiver{x.names(0), {}} : one_truncation(x).quiver;
      r.fail("path " + format_path(q, p) + " has no filler");
      return r;
    }
  }
  return r;
}

bool MatchingObject::unit_injective() const {
  std::vector<int> sorted = unit;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool MatchingObject::unit_surjective() const {
  std::vector<bool> hit(families.size(), false);
  for (int u : unit) {
    hit[uz(u)] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

MatchingObject matching_object(TruncSSet const& x, int n, std::size_t guard) {
  if (n < 3 || n > max_simplex_dim) {
    throw InvalidArgument("matching_object: n must be 3 or 4");
  }
  if (x.dim() < n || x.dim() < 2) {
    throw InvalidArgument("matching_object: complex must have dimension at least n");
  }
  MatchingObject m;
  m.n = n;
  for (int j = 0; j <= 2; ++j) {
    auto maps = enumerate({j}, {n});
    m.arrows.insert(m.arrows.end(), maps.begin(), maps.end());
  }
  // Assign arrows ending at smaller vertices first so that compatibility
  // prunes as early as possible.
  std::stable_sort(m.arrows.begin(), m.arrows.end(), [](auto const& a, auto const& b) {
    return std::make_tuple(a.values().back(), a.src(), a.values()) <
           std::make_tuple(b.values().back(), b.src(), b.values());
  });
  std::map<MonotoneMap, int> position;
  for (std::size_t a = 0; a < m.arrows.size(); ++a) {
    position.emplace(m.arrows[a], static_cast<int>(a));
  }
  // constraint (a, beta, c): x_c = act(beta, x_a), checked at max(a, c)
  struct Constraint {
    int a;
    MonotoneMap beta;
    int c;
  };
  std::vector<std::vector<Constraint>> constraints(m.arrows.size());
  for (std::size_t a = 0; a < m.arrows.size(); ++a) {
    int j = m.arrows[a].src();
    for (int i = 0; i <= 2; ++i) {
      for (auto const& beta : enumerate({i}, {j})) {
        if (beta.is_identity()) {
          continue;
        }
        int c = position.at(compose(beta, m.arrows[a]));
        int last = std::max(static_cast<int>(a), c);
        constraints[uz(last)].push_back({static_cast<int>(a), beta, c});
      }
    }
  }
  std::vector<int> cur(m.arrows.size(), -1);
  std::size_t nodes = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t a) {
    if (a == m.arrows.size()) {
      m.families.push_back(cur);
      return;
    }
    int level = m.arrows[a].src();
    for (int s = 0; s < static_cast<int>(x.size(level)); ++s) {
      if (++nodes > guard) {
        throw GuardExceeded("matching_object: search exceeded guard of " +
                            std::to_string(guard) + " nodes");
      }
      cur[a] = s;
      bool ok = true;
      for (auto const& con : constraints[a]) {
        if (cur[uz(con.c)] != act(x, con.beta, cur[uz(con.a)])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        assign(a + 1);
      }
    }
    cur[a] = -1;
  };
  assign(0);
  std::map<std::vector<int>, int> family_index;
  for (std::size_t f = 0; f < m.families.size(); ++f) {
    family_index.emplace(m.families[f], static_cast<int>(f));
  }
  for (int s = 0; s < static_cast<int>(x.size(n)); ++s) {
    std::vector<int> fam;
    for (auto const& alpha : m.arrows) {
      fam.push_back(act(x, alpha, s));
    }
    auto it = family_index.find(fam);
    if (it == family_index.end()) {
      throw InternalError("matching_object: image of " + x.name(n, s) +
                          " is not a compatible family");
    }
    m.unit.push_back(it->second);
  }
  return m;
}

Report check_coskeletal2(TruncSSet const& x, std::size_t guard) {
  if (x.dim() != max_simplex_dim) {
    throw InvalidArgument("check_coskeletal2: complex must be 4-truncated");
  }
  Report r("nerve.coskeletal2");
  for (int n = 3; n <= 4; ++n) {
    auto m = matching_object(x, n, guard);
    r.note("n=" + std::to_string(n) + ": " + std::to_string(x.size(n)) + " simplices, " +
           std::to_string(m.families.size()) + " compatible families");
    if (!m.unit_injective()) {
      r.fail("unit at level " + std::to_string(n) + " is not injective");
    }
    if (!m.unit_surjective()) {
      r.fail("unit at level " + std::to_string(n) + " is not surjective");
    }
  }
  return r;
}

CatFunctor nerve2_full_lift(FinCat const& c, FinCat const& d, SimplicialMap const& f) {
  auto nc = nerve2(c);
  auto nd = nerve2(d);
  auto rep = validate_map(f, nc, nd);
  if (!rep) {
    throw InvalidArgument("nerve2_full_lift: " + rep.notes.front());
  }
  NerveIndex src(c, 2);
  NerveIndex tgt(d, 2);
  CatFunctor g{f.components[0], f.components[1]};
  for (int h = 0; h < static_cast<int>(c.morphism_count()); ++h) {
    for (int k = 0; k < static_cast<int>(c.morphism_count()); ++k) {
      if (c.tgt(h) != c.src(k)) {
        continue;
      }
      auto const& image = tgt.chain(2, f.components[2][uz(src.id({h, k}))]);
      if (image.morphisms[0] != g.morphism_map[uz(h)] ||
          image.morphisms[1] != g.morphism_map[uz(k)] ||
          g.morphism_map[uz(c.compose(h, k))] !=
              d.compose(image.morphisms[0], image.morphisms[1])) {
        throw InternalError("nerve2_full_lift: composite of " + c.morphism_name(h) + ", " +
                            c.morphism_name(k) + " is not preserved");
      }
    }
  }
  auto functor = validate_functor(g, c, d);
  if (!functor) {
    throw InternalError("nerve2_full_lift: " + functor.notes.front());
  }
  if (!to_nerve2_ext(nerve_map(g, c, d, 2), f)) {
    throw InternalError("nerve2_full_lift: nerve of the lift differs from the input");
  }
  return g;
}

}  // namespace catnerve
