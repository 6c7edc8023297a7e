#include <doctest.h>

#include <string>

#include "catnerve/corpus.hpp"
#include "catnerve/error.hpp"
#include "catnerve/nerve.hpp"
#include "catnerve/simplex.hpp"
#include "catnerve/sset.hpp"
#include "oracles.hpp"

using namespace catnerve;

namespace {

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  }
  return r;
}

std::vector<TruncSSet> samples() {
  std::vector<TruncSSet> out;
  for (auto const& x : corpus::complexes()) {
    out.push_back(x.complex);
  }
  out.push_back(nerve2(fin_ordinal(2)));
  out.push_back(nerve2(cyclic_group(2)));
  out.push_back(standard_simplex(2, 4));
  out.push_back(corpus::coskeletal_counterexample());
  return out;
}

}  // namespace

TEST_CASE("corpus complexes validate") {
  for (auto const& x : samples()) {
    CHECK(validate(x).ok());
    CHECK(validate_actions(x).ok());
  }
}

TEST_CASE("a broken face table fails validation") {
  auto x = standard_simplex(2, 2);
  auto names = std::vector<std::vector<std::string>>{x.names(0), x.names(1), x.names(2)};
  std::vector<std::vector<std::vector<int>>> faces(3);
  std::vector<std::vector<std::vector<int>>> degens(2);
  for (int k = 1; k <= 2; ++k) {
    for (int i = 0; i <= k; ++i) {
      faces[static_cast<std::size_t>(k)].push_back(x.face_map(k, i));
    }
  }
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i <= k; ++i) {
      degens[static_cast<std::size_t>(k)].push_back(x.degen_map(k, i));
    }
  }
  int s = x.find(2, "012");
  faces[2][0][static_cast<std::size_t>(s)] = x.find(1, "01");
  TruncSSet broken(2, names, faces, degens);
  auto r = validate(broken);
  REQUIRE_FALSE(r.ok());
  bool names_identity = false;
  for (auto const& n : r.notes) {
    names_identity = names_identity || n.find("identity") != std::string::npos;
  }
  CHECK(names_identity);
}

TEST_CASE("standard simplex level sizes") {
  for (int p = 0; p <= 3; ++p) {
    auto x = standard_simplex(p, 4);
    for (int k = 0; k <= 4; ++k) {
      CHECK(x.size(k) == binomial(p + k + 1, k + 1));
    }
  }
}

TEST_CASE("degenerate simplices of the standard simplex") {
  for (int p = 0; p <= 3; ++p) {
    auto x = standard_simplex(p, 4);
    for (int k = 0; k <= 4; ++k) {
      std::size_t nondegenerate = 0;
      for (std::size_t s = 0; s < x.size(k); ++s) {
        nondegenerate += is_degenerate(x, k, static_cast<int>(s)) ? 0 : 1;
      }
      CHECK(nondegenerate == binomial(p + 1, k + 1));
    }
  }
}

TEST_CASE("maps agree with the brute-force count") {
  auto xs = samples();
  for (auto const& x : xs) {
    if (x.dim() != 2) {
      continue;
    }
    for (auto const& y : xs) {
      if (y.dim() != 2) {
        continue;
      }
      auto maps = enumerate_maps(x, y);
      CHECK(maps.size() == oracle::count_sset_maps(x, y));
      for (auto const& f : maps) {
        CHECK(validate_map(f, x, y).ok());
      }
    }
  }
}

TEST_CASE("maps are natural for every simplicial operator") {
  auto x = corpus::triangle_boundary();
  auto y = nerve2(fin_ordinal(2));
  for (auto const& f : enumerate_maps(x, y)) {
    for (auto const& alpha : enumerate_all(2)) {
      for (std::size_t s = 0; s < x.size(alpha.tgt()); ++s) {
        int si = static_cast<int>(s);
        auto const& src_level = f.components[static_cast<std::size_t>(alpha.src())];
        auto const& tgt_level = f.components[static_cast<std::size_t>(alpha.tgt())];
        CHECK(src_level[static_cast<std::size_t>(act(x, alpha, si))] ==
              act(y, alpha, tgt_level[s]));
      }
    }
  }
}

TEST_CASE("identity and composition of maps") {
  auto x = corpus::circle();
  auto id = identity_map(x);
  CHECK(validate_map(id, x, x).ok());
  for (auto const& f : enumerate_maps(x, x)) {
    CHECK(compose(id, f) == f);
    CHECK(compose(f, id) == f);
  }
}

TEST_CASE("truncation and spines") {
  auto x = standard_simplex(3, 4);
  auto t = truncate(x, 2);
  CHECK(t.dim() == 2);
  CHECK(validate(t).ok());
  auto q = one_truncation(x);
  int top = x.find(3, "0123");
  auto sp = spine(x, 3, top);
  CHECK(sp.length() == 3);
  CHECK(format_path(q.quiver, sp) == "01.12.23");
}

TEST_CASE("subcomplexes") {
  auto b = corpus::triangle_boundary();
  CHECK(b.find(2, "012") < 0);
  CHECK(b.find(1, "02") >= 0);
  CHECK(corpus::circle().size(0) == 1);
  CHECK_THROWS_AS(standard_simplex(1, 5), InvalidArgument);
}
