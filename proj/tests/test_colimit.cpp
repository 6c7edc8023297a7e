#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "catnerve/corpus.hpp"
#include "catnerve/error.hpp"
#include "catnerve/colimit.hpp"
#include "catnerve/nerve.hpp"
#include "oracles.hpp"

using namespace catnerve;

namespace {

SetDiagram set_diagram(FinCat const& shape, std::vector<FinSet> nodes,
                       std::map<std::string, Function> const& arrows) {
  SetDiagram d{shape, std::move(nodes), {}};
  for (std::size_t f = 0; f < shape.morphism_count(); ++f) {
    int fi = static_cast<int>(f);
    if (shape.is_identity(fi)) {
      Function id(d.nodes[static_cast<std::size_t>(shape.src(fi))].size());
      std::iota(id.begin(), id.end(), 0);
      d.arrows.push_back(id);
    } else {
      d.arrows.push_back(arrows.at(shape.morphism_name(fi)));
    }
  }
  return d;
}

FinSet set_of(std::initializer_list<char const*> names) {
  FinSet s;
  for (auto const* n : names) {
    s.elements.emplace_back(n);
  }
  return s;
}

/// Components of the graph on the disjoint union with an edge x -- d(f)(x).
std::vector<std::vector<int>> zigzag_classes(SetDiagram const& d) {
  std::vector<std::pair<int, int>> elements;
  for (std::size_t j = 0; j < d.nodes.size(); ++j) {
    for (std::size_t x = 0; x < d.nodes[j].size(); ++x) {
      elements.push_back({static_cast<int>(j), static_cast<int>(x)});
    }
  }
  auto index = [&](int j, int x) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] == std::pair{j, x}) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };
  std::vector<std::vector<int>> adj(elements.size());
  for (std::size_t f = 0; f < d.arrows.size(); ++f) {
    int s = d.shape.src(static_cast<int>(f));
    int t = d.shape.tgt(static_cast<int>(f));
    for (std::size_t x = 0; x < d.arrows[f].size(); ++x) {
      int a = index(s, static_cast<int>(x));
      int b = index(t, d.arrows[f][x]);
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
  }
  std::vector<int> comp(elements.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (comp[i] >= 0) {
      continue;
    }
    std::vector<int> stack{static_cast<int>(i)};
    comp[i] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<int>> out(d.nodes.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out[static_cast<std::size_t>(elements[i].first)].push_back(comp[i]);
  }
  return out;
}

std::vector<SetDiagram> set_diagrams() {
  return {
      set_diagram(corpus::parallel_pair(), {set_of({"p", "q"}), set_of({"x", "y", "z"})},
                  {{"u", {0, 1}}, {"v", {1, 2}}}),
      set_diagram(corpus::span(), {set_of({"p"}), set_of({"x", "y"}), set_of({"z"})},
                  {{"l", {0}}, {"r", {0}}}),
      set_diagram(corpus::discrete(2), {set_of({"p", "q"}), set_of({"p"})}, {}),
      set_diagram(corpus::parallel_pair(), {set_of({"p"}), set_of({"x", "y"})},
                  {{"u", {0}}, {"v", {0}}}),
  };
}

}  // namespace

TEST_CASE("set colimits match the zigzag relation") {
  for (auto const& d : set_diagrams()) {
    REQUIRE(validate(d).ok());
    auto colim = colim_set(d);
    auto classes = zigzag_classes(d);
    std::set<int> hit;
    std::map<int, int> to_oracle;
    for (std::size_t j = 0; j < d.nodes.size(); ++j) {
      for (std::size_t x = 0; x < d.nodes[j].size(); ++x) {
        int c = colim.legs[j][x];
        hit.insert(c);
        auto [it, fresh] = to_oracle.emplace(c, classes[j][x]);
        CHECK(it->second == classes[j][x]);
      }
    }
    CHECK(hit.size() == colim.apex.size());
    std::set<int> oracle_classes;
    for (auto const& [c, o] : to_oracle) {
      oracle_classes.insert(o);
    }
    CHECK(oracle_classes.size() == colim.apex.size());
    std::set<std::string> names(colim.apex.elements.begin(), colim.apex.elements.end());
    CHECK(names.size() == colim.apex.size());
  }
}

TEST_CASE("set colimit names") {
  auto coprod = colim_set(set_diagrams()[2]);
  CHECK(coprod.apex.size() == 3);
  CHECK(coprod.apex.elements[0] == "p@a");
  auto coeq = colim_set(set_diagrams()[0]);
  CHECK(coeq.apex.size() == 1);
}

TEST_CASE("set colimits are idempotent on a colimit cocone") {
  auto colim = colim_set(set_diagrams()[0]);
  Function id(colim.apex.size());
  std::iota(id.begin(), id.end(), 0);
  auto again =
      set_diagram(corpus::parallel_pair(), {colim.apex, colim.apex}, {{"u", id}, {"v", id}});
  auto twice = colim_set(again);
  CHECK(twice.apex.size() == colim.apex.size());
  CHECK(twice.legs[0] == id);
}

TEST_CASE("invalid set diagrams are rejected") {
  auto d = set_diagrams()[0];
  d.arrows[static_cast<std::size_t>(*d.shape.find_morphism("u"))] = {0, 7};
  CHECK_FALSE(validate(d).ok());
}

TEST_CASE("simplicial set colimits") {
  auto x = corpus::circle();
  CHECK(validate(x).ok());
  CHECK(x.size(0) == 1);
  CHECK(x.size(1) == 2);
  CHECK(x.size(2) == 3);
  auto d1 = standard_simplex(1, 2);
  SSetDiagram coprod{corpus::discrete(2), {d1, d1}, {identity_map(d1), identity_map(d1)}};
  REQUIRE(validate(coprod).ok());
  auto c = colim_sset(coprod);
  CHECK(validate(c.apex).ok());
  CHECK(c.apex.size(0) == 4);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(validate_map(c.legs[j], d1, c.apex).ok());
  }
}

TEST_CASE("category colimits form cocones") {
  for (auto const& fx : corpus::colimit_fixtures()) {
    CAPTURE(fx.name);
    REQUIRE(validate(fx.diagram).ok());
    auto colim = colim_cat(fx.diagram);
    CHECK(colim.presentation.category.complete());
    CHECK(check_cocone(fx.diagram, colim).ok());
    CHECK(verify_colimit_cat(fx.diagram, colim, fx.probes).ok());
    for (auto const& probe : fx.probes) {
      auto r = verify_colimit_probe(fx.diagram, colim, probe);
      CHECK(r.report.ok());
      CHECK(r.mediators.size() == 1);
    }
  }
}

TEST_CASE("category colimits agree with the direct presentation") {
  for (auto const& fx : corpus::colimit_fixtures()) {
    CAPTURE(fx.name);
    auto const& d = fx.diagram;
    std::vector<std::vector<int>> objs;
    std::vector<std::vector<int>> mors;
    for (auto const& f : d.arrows) {
      objs.push_back(f.object_map);
      mors.push_back(f.morphism_map);
    }
    auto direct = oracle::direct_colimit(d.nodes, d.shape, objs, mors);
    auto oc = orient_and_complete(direct.presentation);
    REQUIRE(oc.complete());
    auto colim = colim_cat(d);
    if (fx.name == "coeq") {
      CHECK_THROWS_AS(to_fincat(oc), NonFinitableError);
      CHECK(match_presentations(colim.presentation.category, oc).has_value());
      continue;
    }
    auto a = to_fincat(colim.presentation.category);
    auto b = to_fincat(oc);
    CHECK(a.category.morphism_count() == b.category.morphism_count());
    CHECK(find_isomorphism(a.category, b.category).has_value());
  }
}

TEST_CASE("a wrong apex fails the probes") {
  // Two points do not have the walking arrow as coproduct.
  auto fx = corpus::coproduct();
  CatColimit wrong{ho2(nerve2(fin_ordinal(1))), {}};
  REQUIRE(wrong.presentation.category.object_count() == 2);
  for (int j = 0; j < 2; ++j) {
    wrong.legs.push_back({{j}, {Path{j, {}}}});
  }
  CHECK(check_cocone(fx.diagram, wrong).ok());
  auto const& probe = fx.probes[3];
  REQUIRE(probe.apex.object_count() == 1);
  auto r = verify_colimit_probe(fx.diagram, wrong, probe);
  CHECK(r.mediators.size() == 2);
  CHECK_FALSE(r.report.ok());
  CHECK_FALSE(verify_colimit_cat(fx.diagram, wrong, fx.probes).ok());
}
