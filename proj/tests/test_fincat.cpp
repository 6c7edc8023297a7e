#include <doctest.h>

#include <set>

#include "catnerve/corpus.hpp"
#include "catnerve/error.hpp"
#include "catnerve/fincat.hpp"
#include "oracles.hpp"

using namespace catnerve;

TEST_CASE("constructors validate") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(validate(fin_ordinal(n)).ok());
  }
  for (int n = 1; n <= 4; ++n) {
    CHECK(validate(cyclic_group(n)).ok());
  }
  for (auto const& [an, a] : corpus::categories()) {
    for (auto const& [bn, b] : corpus::categories()) {
      if (a.morphism_count() * b.morphism_count() <= 40) {
        CHECK_MESSAGE(validate(product(a, b).category).ok(), an << " x " << bn);
      }
    }
  }
}

TEST_CASE("chain counts agree with direct counting") {
  for (auto const& [name, c] : corpus::categories()) {
    CAPTURE(name);
    CHECK(chains(c, 1).size() == c.morphism_count());
    CHECK(chains(c, 2).size() == oracle::composable_pairs(c));
    CHECK(chains(c, 0).size() == c.object_count());
  }
}

TEST_CASE("product projections are jointly injective") {
  auto p = product(fin_ordinal(1), cyclic_group(3));
  std::set<std::pair<int, int>> seen;
  for (std::size_t f = 0; f < p.category.morphism_count(); ++f) {
    seen.emplace(p.first.morphism_map[f], p.second.morphism_map[f]);
  }
  CHECK(seen.size() == p.category.morphism_count());
  CHECK(validate_functor(p.first, p.category, fin_ordinal(1)).ok());
  CHECK(validate_functor(p.second, p.category, cyclic_group(3)).ok());
}

TEST_CASE("functor enumeration matches the brute-force count") {
  for (auto const& [cn, c] : corpus::categories()) {
    for (auto const& [dn, d] : corpus::categories()) {
      CAPTURE(cn);
      CAPTURE(dn);
      auto fs = enumerate_functors(c, d);
      CHECK(fs.size() == oracle::count_functors(c, d));
      CHECK(std::is_sorted(fs.begin(), fs.end()));
      for (auto const& f : fs) {
        CHECK(validate_functor(f, c, d).ok());
      }
    }
  }
  CHECK(enumerate_functors(cyclic_group(2), cyclic_group(4)).size() == 2);
  CHECK(enumerate_functors(fin_ordinal(1), fin_ordinal(2)).size() == 6);
}

TEST_CASE("validation catches corrupted tables") {
  auto c = fin_ordinal(2);
  auto f = *c.find_morphism("0<1");
  auto g = *c.find_morphism("1<2");
  // f followed by id(1) should be f
  auto bad = c.with_composite(f, c.identity(1), g);
  auto r = validate(bad);
  CHECK(r.verdict == Verdict::fail);
  CHECK_FALSE(r.notes.empty());

  auto z = cyclic_group(3);
  auto t = *z.find_morphism("t");
  auto broken = z.with_composite(t, t, z.identity(0));
  CHECK_FALSE(validate(broken).ok());
}

TEST_CASE("builder reports missing composites") {
  FinCatBuilder b;
  int x = b.add_object("x");
  int y = b.add_object("y");
  int z = b.add_object("z");
  b.add_morphism("f", x, y);
  b.add_morphism("g", y, z);
  CHECK_THROWS_AS(b.build(), ValidationError);
  CHECK(b.identity(x) == 0);
}

TEST_CASE("isomorphism search") {
  auto sq = corpus::commutative_square();
  CHECK(find_isomorphism(product(fin_ordinal(1), fin_ordinal(1)).category, sq).has_value());
  CHECK_FALSE(find_isomorphism(fin_ordinal(3), sq).has_value());
  auto iso = find_isomorphism(cyclic_group(3), cyclic_group(3));
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(*iso, cyclic_group(3), cyclic_group(3)));
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_functors(fin_ordinal(3), fin_ordinal(3), 5), GuardExceeded);
}

TEST_CASE("compose rejects non-composable arrows") {
  auto c = fin_ordinal(1);
  auto f = *c.find_morphism("0<1");
  CHECK_THROWS_AS(c.compose(f, f), InvalidArgument);
  CHECK(c.hom(0, 1) == std::vector<int>{f});
  CHECK(c.hom(1, 0).empty());
}
