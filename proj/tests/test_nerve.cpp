#include <doctest.h>

#include "catnerve/corpus.hpp"
#include "catnerve/error.hpp"
#include "catnerve/nerve.hpp"
#include "catnerve/quiverkit.hpp"
#include "oracles.hpp"

using namespace catnerve;

TEST_CASE("nerve levels count composable chains") {
  for (auto const& [name, c] : corpus::categories()) {
    CAPTURE(name);
    auto n = nerve(c, 3);
    CHECK(validate(n).ok());
    CHECK(n.size(0) == c.object_count());
    CHECK(n.size(1) == c.morphism_count());
    CHECK(n.size(2) == oracle::composable_pairs(c));
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      CHECK(n.name(1, static_cast<int>(f)) == c.morphism_name(static_cast<int>(f)));
    }
  }
}

TEST_CASE("nerve of a functor is a simplicial map") {
  auto cats = corpus::categories();
  for (auto const& [cn, c] : cats) {
    for (auto const& [dn, d] : cats) {
      if (c.morphism_count() > 6 || d.morphism_count() > 6) {
        continue;
      }
      CAPTURE(cn);
      CAPTURE(dn);
      for (auto const& f : enumerate_functors(c, d)) {
        auto nf = nerve_map(f, c, d, 3);
        CHECK(validate_map(nf, nerve(c, 3), nerve(d, 3)).ok());
      }
    }
  }
  auto c = fin_ordinal(2);
  auto id = identity_functor(c);
  CHECK(nerve_map(id, c, c, 2) == identity_map(nerve2(c)));
}

TEST_CASE("nerve map respects composition") {
  auto a = fin_ordinal(1);
  auto b = fin_ordinal(2);
  auto c = cyclic_group(2);
  for (auto const& f : enumerate_functors(a, b)) {
    for (auto const& g : enumerate_functors(b, c)) {
      CHECK(nerve_map(compose(f, g), a, c, 2) ==
            compose(nerve_map(f, a, b, 2), nerve_map(g, b, c, 2)));
    }
  }
}

TEST_CASE("nerves are strictly Segal and coskeletal") {
  for (auto const& [name, c] : corpus::categories()) {
    CAPTURE(name);
    auto n = nerve(c, 4);
    for (int k = 2; k <= 4; ++k) {
      CHECK(check_strict_segal(n, k).ok());
    }
    CHECK(check_coskeletal2(n).ok());
  }
}

TEST_CASE("the boundary of the triangle is not Segal") {
  auto b = corpus::triangle_boundary(4);
  CHECK_FALSE(check_strict_segal(b, 2).ok());
}

TEST_CASE("matching object detects non-coskeletal complexes") {
  auto x = corpus::coskeletal_counterexample();
  auto m = matching_object(x, 3);
  CHECK(m.unit_injective());
  CHECK_FALSE(m.unit_surjective());
  CHECK_FALSE(check_coskeletal2(x).ok());
  CHECK_THROWS_AS(check_coskeletal2(corpus::circle()), InvalidArgument);
}

TEST_CASE("maps into nerves from reflexive prefunctors") {
  auto x = standard_simplex(2, 2);
  auto c = fin_ordinal(2);
  auto q = one_truncation(x);
  auto u = forget_cat_to_reflquiver(c);
  std::size_t built = 0;
  for (auto const& f : enumerate_refl_prefunctors(q, u)) {
    SimplicialMap m;
    try {
      m = to_nerve2_mk(x, c, f);
    } catch (ValidationError const&) {
      continue;
    }
    ++built;
    CHECK(validate_map(m, x, nerve2(c)).ok());
    CHECK(m.components[1] == f.edge_map);
    auto n = nerve2(c);
    int top = x.find(2, "012");
    auto sp = spine(n, 2, m.components[2][static_cast<std::size_t>(top)]);
    auto xs = spine(x, 2, top);
    CHECK(sp.edges[0] == f.edge_map[static_cast<std::size_t>(xs.edges[0])]);
    CHECK(sp.edges[1] == f.edge_map[static_cast<std::size_t>(xs.edges[1])]);
  }
  CHECK(built == enumerate_maps(x, nerve2(c)).size());
}

TEST_CASE("to_nerve2_mk rejects prefunctors that break a 2-simplex") {
  auto x = standard_simplex(2, 2);
  auto c = cyclic_group(2);
  auto q = one_truncation(x);
  int t = *c.find_morphism("t");
  Prefunctor f;
  f.vertex_map.assign(x.size(0), 0);
  for (std::size_t e = 0; e < x.size(1); ++e) {
    f.edge_map.push_back(is_degenerate(x, 1, static_cast<int>(e)) ? c.identity(0) : t);
  }
  REQUIRE(validate_refl_prefunctor(f, q, forget_cat_to_reflquiver(c)).ok());
  CHECK_THROWS_AS(to_nerve2_mk(x, c, f), ValidationError);
}

TEST_CASE("maps into nerve2 are determined by their edges") {
  auto x = corpus::triangle_boundary();
  auto c = fin_ordinal(2);
  auto maps = enumerate_maps(x, nerve2(c));
  for (auto const& f : maps) {
    for (auto const& g : maps) {
      CHECK(to_nerve2_ext(f, g) == (f == g));
    }
  }
}

TEST_CASE("nerve2 is fully faithful") {
  auto c = fin_ordinal(2);
  auto d = cyclic_group(2);
  auto maps = enumerate_maps(nerve2(c), nerve2(d));
  CHECK(maps.size() == enumerate_functors(c, d).size());
  for (auto const& m : maps) {
    auto f = nerve2_full_lift(c, d, m);
    CHECK(validate_functor(f, c, d).ok());
    CHECK(nerve_map(f, c, d, 2) == m);
  }
}
