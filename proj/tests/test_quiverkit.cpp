#include <doctest.h>

#include "catnerve/corpus.hpp"
#include "catnerve/error.hpp"
#include "catnerve/quiverkit.hpp"
#include "catnerve/sset.hpp"
#include "oracles.hpp"

using namespace catnerve;

namespace {

std::vector<Path> paths_up_to(Quiver const& q, std::size_t n) {
  std::vector<Path> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto ps = paths_of_length(q, len);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<ReflQuiver> refl_quivers() {
  std::vector<ReflQuiver> out;
  for (auto const& x : corpus::complexes()) {
    out.push_back(one_truncation(x.complex));
  }
  for (auto const& c : corpus::categories()) {
    out.push_back(forget_cat_to_reflquiver(c.category));
  }
  return out;
}

}  // namespace

TEST_CASE("reflexive quivers validate") {
  for (auto const& q : refl_quivers()) {
    CHECK(validate(q).ok());
  }
  ReflQuiver bad = one_truncation(standard_simplex(1, 2));
  bad.refl[0] = bad.refl[1];
  CHECK_FALSE(validate(bad).ok());
  ReflQuiver short_refl = one_truncation(standard_simplex(1, 2));
  short_refl.refl.pop_back();
  CHECK_FALSE(validate(short_refl).ok());
}

TEST_CASE("free reflexive category kills reflexivity loops") {
  for (auto const& q : refl_quivers()) {
    auto f = free_refl_category(q);
    REQUIRE(f.category.complete());
    for (std::size_t v = 0; v < q.refl.size(); ++v) {
      int vi = static_cast<int>(v);
      CHECK(eq(f.category, edge_path(q.quiver, q.refl[v]), Path{vi, {}}).is_equal());
    }
    CHECK(f.quotient.size() == q.quiver.edges.size());
  }
}

TEST_CASE("free category has no relations") {
  Quiver q{{"a", "b"}, {{"f", 0, 1}, {"g", 0, 1}, {"h", 1, 1}}};
  auto c = free_category(q);
  CHECK(c.complete());
  CHECK(c.rules().empty());
  CHECK(eq(c, Path{0, {0}}, Path{0, {1}}).is_not_equal());
}

TEST_CASE("counit respects the quotient") {
  for (auto const& [name, c] : corpus::categories()) {
    CAPTURE(name);
    auto u = forget_cat_to_reflquiver(c);
    auto f = free_refl_category(u);
    auto paths = paths_up_to(u.quiver, 3);
    for (auto const& p : paths) {
      CHECK(evaluate_path(c, f.category.normalize(p)) == evaluate_path(c, p));
      for (auto const& r : paths) {
        if (p.start == r.start && path_end(u.quiver, p) == path_end(u.quiver, r) &&
            eq(f.category, p, r).is_equal()) {
          CHECK(evaluate_path(c, p) == evaluate_path(c, r));
        }
      }
    }
  }
}

TEST_CASE("reflexive prefunctors correspond to functors out of the free category") {
  for (auto const& q : refl_quivers()) {
    auto f = free_refl_category(q);
    for (auto const& [name, c] : corpus::categories()) {
      CAPTURE(name);
      auto prefunctors = enumerate_refl_prefunctors(q, forget_cat_to_reflquiver(c));
      auto expected = oracle::count_presented_functors(f.category.presentation(), c);
      CHECK(prefunctors.size() == expected);
      CHECK(enumerate_fp_functors(f.category, c).size() == expected);
      for (auto const& p : prefunctors) {
        CHECK(validate_refl_prefunctor(p, q, forget_cat_to_reflquiver(c)).ok());
      }
    }
  }
}

TEST_CASE("prefunctor validation rejects mismatched endpoints") {
  Quiver q{{"a", "b"}, {{"f", 0, 1}}};
  Quiver r{{"x", "y"}, {{"g", 0, 1}, {"h", 1, 0}}};
  CHECK(validate_prefunctor({{0, 1}, {0}}, q, r).ok());
  CHECK_FALSE(validate_prefunctor({{0, 1}, {1}}, q, r).ok());
  CHECK_FALSE(validate_prefunctor({{0}, {0}}, q, r).ok());
}

TEST_CASE("triangle identities for the reflexive quiver adjunction") {
  for (auto const& [name, c] : corpus::categories()) {
    for (auto const& q : refl_quivers()) {
      CHECK_MESSAGE(check_triangle_identities_reflquiv(c, q).ok(), name);
    }
  }
}
