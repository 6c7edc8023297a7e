#include <doctest.h>

#include <map>

#include "catnerve/corpus.hpp"
#include "catnerve/error.hpp"
#include "catnerve/hofunctor.hpp"
#include "catnerve/nerve.hpp"
#include "catnerve/quiverkit.hpp"
#include "catnerve/rewrite.hpp"
#include "oracles.hpp"

using namespace catnerve;

namespace {

Presentation one_object(std::vector<std::string> const& gens,
                        std::vector<std::pair<std::vector<int>, std::vector<int>>> const& rels) {
  Presentation p;
  p.quiver.vertices = {"*"};
  for (auto const& g : gens) {
    p.quiver.edges.push_back({g, 0, 0});
  }
  for (auto const& [l, r] : rels) {
    p.relations.push_back({Path{0, l}, Path{0, r}});
  }
  return p;
}

/// x^3 = 1, y^2 = 1, y x = x x y
Presentation symmetric3() {
  return one_object({"x", "y"}, {{{0, 0, 0}, {}}, {{1, 1}, {}}, {{1, 0}, {0, 0, 1}}});
}

Presentation klein4() {
  return one_object({"a", "b"}, {{{0, 0}, {}}, {{1, 1}, {}}, {{1, 0}, {0, 1}}});
}

Presentation free_loop() { return one_object({"e"}, {}); }

struct Named {
  std::string name;
  FpCat category;
  std::size_t closure_bound;
};

std::vector<Named> presentations() {
  std::vector<Named> out;
  for (auto const& [name, c] : corpus::categories()) {
    out.push_back({"ho2 nerve2 " + name, ho2(nerve2(c)).category, 6});
  }
  for (auto const& x : corpus::complexes()) {
    out.push_back({"ho2 " + x.name, ho2(x.complex).category, 6});
  }
  out.push_back({"s3", orient_and_complete(symmetric3()), 8});
  out.push_back({"klein4", orient_and_complete(klein4()), 8});
  out.push_back({"free loop", orient_and_complete(free_loop()), 6});
  return out;
}

std::vector<Path> paths_up_to(Quiver const& q, std::size_t n) {
  std::vector<Path> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto ps = paths_of_length(q, len);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

}  // namespace

TEST_CASE("shortlex order") {
  CHECK(shortlex_less({1}, {0, 0}));
  CHECK(shortlex_less({0, 1}, {1, 0}));
  CHECK_FALSE(shortlex_less({0, 1}, {0, 1}));
  CHECK(shortlex_less({}, {0}));
}

TEST_CASE("corpus presentations complete") {
  for (auto const& p : presentations()) {
    CAPTURE(p.name);
    CHECK(p.category.complete());
  }
}

TEST_CASE("normalize is idempotent") {
  for (auto const& p : presentations()) {
    CAPTURE(p.name);
    auto const& c = p.category;
    for (auto const& path : paths_up_to(c.quiver(), 5)) {
      auto nf = c.normalize(path);
      CHECK(c.normalize(nf) == nf);
      CHECK(c.is_normal(nf));
      CHECK(c.target(nf) == c.target(path));
    }
  }
}

TEST_CASE("traces replay to the normal form") {
  for (auto const& p : presentations()) {
    CAPTURE(p.name);
    auto const& c = p.category;
    for (auto const& path : paths_up_to(c.quiver(), 4)) {
      RewriteTrace trace;
      auto nf = c.normalize(path, &trace);
      CHECK(replay(c, path, trace) == nf);
      CHECK(parse_trace(serialize_trace(trace)) == trace);
    }
  }
  auto c = orient_and_complete(klein4());
  RewriteTrace bogus{{0, 0}};
  CHECK_THROWS_AS(replay(c, Path{0, {1}}, bogus), InvalidArgument);
}

TEST_CASE("eq agrees with bounded congruence closure on complete systems") {
  for (auto const& p : presentations()) {
    CAPTURE(p.name);
    auto const& c = p.category;
    auto closure = oracle::congruence_closure(c.presentation(), p.closure_bound);
    // nf -> closure class and closure class -> nf must both be functions
    std::map<Path, int> by_nf;
    std::map<int, Path> by_class;
    for (auto const& path : paths_up_to(c.quiver(), 4)) {
      auto nf = c.normalize(path);
      int cls = closure.find(path);
      auto [a, fresh_a] = by_nf.emplace(nf, cls);
      auto [b, fresh_b] = by_class.emplace(cls, nf);
      CHECK_MESSAGE(a->second == cls, "normal form " << c.format(nf) << " spans two classes");
      CHECK_MESSAGE(b->second == nf, "class of " << c.format(path) << " has two normal forms");
    }
  }
}

TEST_CASE("eq is a congruence") {
  for (auto const& p : presentations()) {
    CAPTURE(p.name);
    auto const& c = p.category;
    auto const& q = c.quiver();
    auto paths = paths_up_to(q, 3);
    for (auto const& x : paths) {
      for (auto const& y : paths) {
        if (x.start != y.start || c.target(x) != c.target(y) || !eq(c, x, y).is_equal()) {
          continue;
        }
        for (std::size_t e = 0; e < q.edges.size(); ++e) {
          auto g = edge_path(q, static_cast<int>(e));
          if (q.edges[e].src == c.target(x)) {
            CHECK(eq(c, concat(q, x, g), concat(q, y, g)).is_equal());
          }
          if (q.edges[e].tgt == x.start) {
            CHECK(eq(c, concat(q, g, x), concat(q, g, y)).is_equal());
          }
        }
      }
    }
  }
}

TEST_CASE("completion of the symmetric group") {
  auto c = orient_and_complete(symmetric3());
  REQUIRE(c.complete());
  auto f = to_fincat(c);
  CHECK(f.category.morphism_count() == 6);
  CHECK(validate(f.category).ok());
  CHECK(eq(c, Path{0, {1, 0, 1}}, Path{0, {0, 0}}).is_equal());
  CHECK(eq(c, Path{0, {0}}, Path{0, {1}}).is_not_equal());
}

TEST_CASE("incomplete systems never answer not-equal") {
  auto c = orient_and_complete(symmetric3(), 1);
  if (c.complete()) {
    return;  // nothing to test at this fuel
  }
  auto closure = oracle::congruence_closure(c.presentation(), 8);
  auto paths = paths_up_to(c.quiver(), 3);
  std::size_t unknown = 0;
  for (auto const& x : paths) {
    for (auto const& y : paths) {
      auto v = eq(c, x, y);
      CHECK_FALSE(v.is_not_equal());
      if (v.is_equal()) {
        CHECK(closure.find(x) == closure.find(y));
      }
      unknown += v.is_unknown() ? 1 : 0;
    }
  }
  CHECK(unknown > 0);
}

TEST_CASE("eq rejects non-parallel paths") {
  auto c = ho2(corpus::triangle_boundary()).category;
  auto const& q = c.quiver();
  int e01 = -1;
  int e12 = -1;
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    e01 = q.edges[e].name == "01" ? static_cast<int>(e) : e01;
    e12 = q.edges[e].name == "12" ? static_cast<int>(e) : e12;
  }
  CHECK_THROWS_AS(eq(c, edge_path(q, e01), edge_path(q, e12)), InvalidArgument);
}

TEST_CASE("materialization") {
  CHECK_THROWS_AS(to_fincat(orient_and_complete(free_loop())), NonFinitableError);
  auto k = to_fincat(orient_and_complete(klein4()));
  CHECK(k.category.morphism_count() == 4);
  CHECK(k.normal_forms.size() == 4);
  auto incomplete = orient_and_complete(symmetric3(), 1);
  if (!incomplete.complete()) {
    CHECK_THROWS_AS(to_fincat(incomplete), InvalidArgument);
  }
}

TEST_CASE("functors out of presentations match the brute-force count") {
  std::vector<Presentation> ps{symmetric3(), klein4(), free_loop()};
  for (auto const& x : corpus::complexes()) {
    ps.push_back(ho2(x.complex).category.presentation());
  }
  for (auto const& p : ps) {
    auto c = orient_and_complete(p);
    for (auto const& [dn, d] : corpus::categories()) {
      CAPTURE(dn);
      auto fs = enumerate_fp_functors(c, d);
      CHECK(fs.size() == oracle::count_presented_functors(p, d));
      for (auto const& f : fs) {
        CHECK(respects_relations(f, c, d));
      }
    }
  }
  CHECK(enumerate_fp_functors(orient_and_complete(symmetric3()), cyclic_group(2)).size() == 2);
  CHECK(enumerate_fp_functors(orient_and_complete(free_loop()), cyclic_group(3)).size() == 3);
}

TEST_CASE("presentation matching") {
  auto bn = orient_and_complete(free_loop());
  auto circle = ho(corpus::circle()).category;
  CHECK(match_presentations(circle, bn).has_value());
  CHECK(match_presentations(bn, circle).has_value());
  auto z2 = orient_and_complete(one_object({"t"}, {{{0, 0}, {}}}));
  CHECK_FALSE(match_presentations(bn, z2).has_value());
  CHECK_FALSE(match_presentations(orient_and_complete(klein4()), bn).has_value());
}
