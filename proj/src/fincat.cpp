#include "catnerve/fincat.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "catnerve/error.hpp"

namespace catnerve {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

FinCat::FinCat(std::vector<std::string> objects, std::vector<MorphismInfo> morphisms,
               std::vector<int> identities, std::vector<int> table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      table_(std::move(table)) {
  auto n = static_cast<int>(objects_.size());
  auto m = static_cast<int>(morphisms_.size());
  if (identities_.size() != objects_.size()) {
    throw InvalidArgument("FinCat: one identity per object required");
  }
  if (table_.size() != morphisms_.size() * morphisms_.size()) {
    throw InvalidArgument("FinCat: composition table has wrong size");
  }
  for (auto const& f : morphisms_) {
    if (f.src < 0 || f.src >= n || f.tgt < 0 || f.tgt >= n) {
      throw InvalidArgument("FinCat: morphism " + f.name + " has endpoint out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    int i = identities_[uz(a)];
    if (i < 0 || i >= m || morphisms_[uz(i)].src != a || morphisms_[uz(i)].tgt != a) {
      throw InvalidArgument("FinCat: identity of " + objects_[uz(a)] + " is not an endomorphism");
    }
  }
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      int h = table_[slot(f, g)];
      bool composable = morphisms_[uz(f)].tgt == morphisms_[uz(g)].src;
      if (!composable) {
        if (h != -1) {
          throw InvalidArgument("FinCat: table entry for non-composable pair " +
                                morphisms_[uz(f)].name + ", " + morphisms_[uz(g)].name);
        }
        continue;
      }
      if (h < 0 || h >= m) {
        throw InvalidArgument("FinCat: composite of " + morphisms_[uz(f)].name + ", " +
                              morphisms_[uz(g)].name + " out of range");
      }
      if (morphisms_[uz(h)].src != morphisms_[uz(f)].src ||
          morphisms_[uz(h)].tgt != morphisms_[uz(g)].tgt) {
        throw InvalidArgument("FinCat: composite of " + morphisms_[uz(f)].name + ", " +
                              morphisms_[uz(g)].name + " has wrong endpoints");
      }
    }
  }
  index_homs();
}

void FinCat::index_homs() {
  auto n = objects_.size();
  homs_.assign(n * n, {});
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    homs_[uz(morphisms_[f].src) * n + uz(morphisms_[f].tgt)].push_back(static_cast<int>(f));
  }
}

int FinCat::compose(int f, int g) const {
  if (tgt(f) != src(g)) {
    throw InvalidArgument("FinCat::compose: " + morphism_name(f) + " and " + morphism_name(g) +
                          " are not composable");
  }
  return table_[slot(f, g)];
}

std::vector<int> const& FinCat::hom(int a, int b) const {
  return homs_.at(idx(a) * objects_.size() + idx(b));
}

std::optional<int> FinCat::find_object(std::string const& name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) {
    return std::nullopt;
  }
  return static_cast<int>(it - objects_.begin());
}

std::optional<int> FinCat::find_morphism(std::string const& name) const {
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    if (morphisms_[f].name == name) {
      return static_cast<int>(f);
    }
  }
  return std::nullopt;
}

FinCat FinCat::with_composite(int f, int g, int h) const {
  FinCat copy = *this;
  copy.table_.at(slot(f, g)) = h;
  return copy;
}

int FinCatBuilder::add_object(std::string name) {
  int a = static_cast<int>(objects_.size());
  std::string id_name = "id(" + name + ")";
  objects_.push_back(std::move(name));
  identities_.push_back(static_cast<int>(morphisms_.size()));
  morphisms_.push_back({std::move(id_name), a, a});
  return a;
}

int FinCatBuilder::add_morphism(std::string name, int src, int tgt) {
  auto n = static_cast<int>(objects_.size());
  if (src < 0 || src >= n || tgt < 0 || tgt >= n) {
    throw InvalidArgument("FinCatBuilder: endpoint out of range for " + name);
  }
  morphisms_.push_back({std::move(name), src, tgt});
  return static_cast<int>(morphisms_.size()) - 1;
}

FinCatBuilder& FinCatBuilder::set_composite(int f, int g, int h) {
  composites_.emplace_back(f, g, h);
  return *this;
}

FinCat FinCatBuilder::build() const {
  auto m = morphisms_.size();
  std::vector<int> table(m * m, -1);
  auto is_id = [&](int f) {
    return identities_[uz(morphisms_[uz(f)].src)] == f;
  };
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      if (morphisms_[f].tgt != morphisms_[g].src) {
        continue;
      }
      if (is_id(static_cast<int>(f))) {
        table[f * m + g] = static_cast<int>(g);
      } else if (is_id(static_cast<int>(g))) {
        table[f * m + g] = static_cast<int>(f);
      }
    }
  }
  for (auto [f, g, h] : composites_) {
    if (f < 0 || g < 0 || h < 0 || uz(f) >= m || uz(g) >= m || uz(h) >= m) {
      throw InvalidArgument("FinCatBuilder: composite id out of range");
    }
    if (morphisms_[uz(f)].tgt != morphisms_[uz(g)].src) {
      throw InvalidArgument("FinCatBuilder: " + morphisms_[uz(f)].name + " and " +
                            morphisms_[uz(g)].name + " are not composable");
    }
    table[uz(f) * m + uz(g)] = h;
  }
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      if (morphisms_[f].tgt == morphisms_[g].src && table[f * m + g] < 0) {
        throw ValidationError("missing composite " + morphisms_[f].name + "." +
                              morphisms_[g].name);
      }
    }
  }
  return FinCat(objects_, morphisms_, identities_, std::move(table));
}

Report validate(FinCat const& c) {
  Report r{"fincat.validate"};
  auto m = static_cast<int>(c.morphism_count());
  for (int f = 0; f < m; ++f) {
    int a = c.src(f);
    int b = c.tgt(f);
    if (c.compose(c.identity(a), f) != f) {
      r.fail("left unit law fails for " + c.morphism_name(f));
      return r;
    }
    if (c.compose(f, c.identity(b)) != f) {
      r.fail("right unit law fails for " + c.morphism_name(f));
      return r;
    }
  }
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (c.tgt(f) != c.src(g)) {
        continue;
      }
      int fg = c.compose(f, g);
      for (int h = 0; h < m; ++h) {
        if (c.tgt(g) != c.src(h)) {
          continue;
        }
        if (c.compose(fg, h) != c.compose(f, c.compose(g, h))) {
          r.fail("associativity fails for (" + c.morphism_name(f) + ", " + c.morphism_name(g) +
                 ", " + c.morphism_name(h) + ")");
          return r;
        }
      }
    }
  }
  return r;
}

FinCat fin_ordinal(int n) {
  if (n < 0) {
    throw InvalidArgument("fin_ordinal: negative size");
  }
  FinCatBuilder b;
  for (int i = 0; i <= n; ++i) {
    b.add_object(std::to_string(i));
  }
  // arrow[i][j] for i < j
  std::vector<std::vector<int>> arrow(uz(n) + 1, std::vector<int>(uz(n) + 1, -1));
  for (int i = 0; i <= n; ++i) {
    arrow[uz(i)][uz(i)] = b.identity(i);
    for (int j = i + 1; j <= n; ++j) {
      arrow[uz(i)][uz(j)] = b.add_morphism(std::to_string(i) + "<" + std::to_string(j), i, j);
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        b.set_composite(arrow[uz(i)][uz(j)], arrow[uz(j)][uz(k)], arrow[uz(i)][uz(k)]);
      }
    }
  }
  return b.build();
}

FinCat terminal_category() { return fin_ordinal(0); }

FinCat cyclic_group(int n) {
  if (n < 1) {
    throw InvalidArgument("cyclic_group: order must be positive");
  }
  FinCatBuilder b;
  b.add_object("*");
  std::vector<int> elem{b.identity(0)};
  for (int k = 1; k < n; ++k) {
    elem.push_back(b.add_morphism(k == 1 ? "t" : "t^" + std::to_string(k), 0, 0));
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      b.set_composite(elem[uz(i)], elem[uz(j)], elem[uz((i + j) % n)]);
    }
  }
  return b.build();
}

Report validate_functor(CatFunctor const& f, FinCat const& c, FinCat const& d) {
  Report r{"fincat.functor"};
  if (f.object_map.size() != c.object_count() || f.morphism_map.size() != c.morphism_count()) {
    r.fail("functor maps have wrong size");
    return r;
  }
  for (int x : f.object_map) {
    if (x < 0 || uz(x) >= d.object_count()) {
      r.fail("object image out of range");
      return r;
    }
  }
  for (int x : f.morphism_map) {
    if (x < 0 || uz(x) >= d.morphism_count()) {
      r.fail("morphism image out of range");
      return r;
    }
  }
  auto m = static_cast<int>(c.morphism_count());
  for (int g = 0; g < m; ++g) {
    int fg = f.morphism_map[uz(g)];
    if (d.src(fg) != f.object_map[uz(c.src(g))] || d.tgt(fg) != f.object_map[uz(c.tgt(g))]) {
      r.fail("endpoints not preserved at " + c.morphism_name(g));
      return r;
    }
  }
  for (int a = 0; a < static_cast<int>(c.object_count()); ++a) {
    if (f.morphism_map[uz(c.identity(a))] != d.identity(f.object_map[uz(a)])) {
      r.fail("identity not preserved at " + c.object_name(a));
      return r;
    }
  }
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) {
      if (c.tgt(g) != c.src(h)) {
        continue;
      }
      if (f.morphism_map[uz(c.compose(g, h))] !=
          d.compose(f.morphism_map[uz(g)], f.morphism_map[uz(h)])) {
        r.fail("composition not preserved at " + c.morphism_name(g) + "." + c.morphism_name(h));
        return r;
      }
    }
  }
  return r;
}

CatFunctor identity_functor(FinCat const& c) {
  CatFunctor f;
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    f.object_map.push_back(static_cast<int>(a));
  }
  for (std::size_t g = 0; g < c.morphism_count(); ++g) {
    f.morphism_map.push_back(static_cast<int>(g));
  }
  return f;
}

CatFunctor compose(CatFunctor const& f, CatFunctor const& g) {
  CatFunctor out;
  for (int x : f.object_map) {
    out.object_map.push_back(g.object_map.at(uz(x)));
  }
  for (int x : f.morphism_map) {
    out.morphism_map.push_back(g.morphism_map.at(uz(x)));
  }
  return out;
}

namespace {

bool is_bijection(std::vector<int> const& map, std::size_t target_size) {
  if (map.size() != target_size) {
    return false;
  }
  std::vector<bool> hit(target_size, false);
  for (int x : map) {
    if (x < 0 || uz(x) >= target_size || hit[uz(x)]) {
      return false;
    }
    hit[uz(x)] = true;
  }
  return true;
}

}  // namespace

bool is_isomorphism(CatFunctor const& f, FinCat const& c, FinCat const& d) {
  return validate_functor(f, c, d).ok() && is_bijection(f.object_map, d.object_count()) &&
         is_bijection(f.morphism_map, d.morphism_count());
}

Product product(FinCat const& c, FinCat const& d) {
  auto nc = c.object_count();
  auto nd = d.object_count();
  auto mc = c.morphism_count();
  auto md = d.morphism_count();
  std::vector<std::string> objects;
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nd; ++b) {
      objects.push_back(c.object_name(static_cast<int>(a)) + "|" +
                        d.object_name(static_cast<int>(b)));
    }
  }
  std::vector<MorphismInfo> morphisms;
  for (std::size_t f = 0; f < mc; ++f) {
    for (std::size_t g = 0; g < md; ++g) {
      int fi = static_cast<int>(f);
      int gi = static_cast<int>(g);
      int s = c.src(fi) * static_cast<int>(nd) + d.src(gi);
      int t = c.tgt(fi) * static_cast<int>(nd) + d.tgt(gi);
      std::string name = c.is_identity(fi) && d.is_identity(gi)
                             ? "id(" + objects[uz(s)] + ")"
                             : c.morphism_name(fi) + "|" + d.morphism_name(gi);
      morphisms.push_back({std::move(name), s, t});
    }
  }
  std::vector<int> identities;
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nd; ++b) {
      identities.push_back(c.identity(static_cast<int>(a)) * static_cast<int>(md) +
                           d.identity(static_cast<int>(b)));
    }
  }
  auto m = mc * md;
  std::vector<int> table(m * m, -1);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      int f1 = static_cast<int>(x / md);
      int g1 = static_cast<int>(x % md);
      int f2 = static_cast<int>(y / md);
      int g2 = static_cast<int>(y % md);
      if (c.tgt(f1) == c.src(f2) && d.tgt(g1) == d.src(g2)) {
        table[x * m + y] = c.compose(f1, f2) * static_cast<int>(md) + d.compose(g1, g2);
      }
    }
  }
  Product p{FinCat(std::move(objects), std::move(morphisms), std::move(identities),
                   std::move(table)),
            {},
            {}};
  for (std::size_t a = 0; a < nc * nd; ++a) {
    p.first.object_map.push_back(static_cast<int>(a / nd));
    p.second.object_map.push_back(static_cast<int>(a % nd));
  }
  for (std::size_t x = 0; x < m; ++x) {
    p.first.morphism_map.push_back(static_cast<int>(x / md));
    p.second.morphism_map.push_back(static_cast<int>(x % md));
  }
  return p;
}

std::vector<CatFunctor> enumerate_functors(FinCat const& c, FinCat const& d, std::size_t guard) {
  auto nc = static_cast<int>(c.object_count());
  auto mc = static_cast<int>(c.morphism_count());
  std::vector<int> non_ids;
  for (int f = 0; f < mc; ++f) {
    if (!c.is_identity(f)) {
      non_ids.push_back(f);
    }
  }
  // Position of each morphism in assignment order; identities come first.
  std::vector<int> order(uz(mc), -1);
  for (std::size_t k = 0; k < non_ids.size(); ++k) {
    order[uz(non_ids[k])] = static_cast<int>(k);
  }
  // Composition constraints checked once their last member is assigned.
  std::vector<std::vector<std::tuple<int, int, int>>> checks(non_ids.size());
  for (int f = 0; f < mc; ++f) {
    for (int g = 0; g < mc; ++g) {
      if (c.tgt(f) != c.src(g)) {
        continue;
      }
      int h = c.compose(f, g);
      int last = std::max({order[uz(f)], order[uz(g)], order[uz(h)]});
      if (last >= 0) {
        checks[uz(last)].emplace_back(f, g, h);
      }
    }
  }

  std::vector<CatFunctor> out;
  CatFunctor cur{std::vector<int>(uz(nc), -1), std::vector<int>(uz(mc), -1)};
  std::size_t nodes = 0;
  auto tick = [&] {
    if (++nodes > guard) {
      throw GuardExceeded("enumerate_functors: search exceeded guard of " +
                          std::to_string(guard) + " nodes");
    }
  };

  std::function<void(std::size_t)> assign_morphism = [&](std::size_t k) {
    if (k == non_ids.size()) {
      out.push_back(cur);
      return;
    }
    int f = non_ids[k];
    for (int candidate :
         d.hom(cur.object_map[uz(c.src(f))], cur.object_map[uz(c.tgt(f))])) {
      tick();
      cur.morphism_map[uz(f)] = candidate;
      bool ok = true;
      for (auto [g, h, gh] : checks[k]) {
        if (d.compose(cur.morphism_map[uz(g)], cur.morphism_map[uz(h)]) !=
            cur.morphism_map[uz(gh)]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        assign_morphism(k + 1);
      }
    }
    cur.morphism_map[uz(f)] = -1;
  };

  std::function<void(int)> assign_object = [&](int a) {
    if (a == nc) {
      for (int x = 0; x < nc; ++x) {
        cur.morphism_map[uz(c.identity(x))] = d.identity(cur.object_map[uz(x)]);
      }
      assign_morphism(0);
      return;
    }
    for (int b = 0; b < static_cast<int>(d.object_count()); ++b) {
      tick();
      cur.object_map[uz(a)] = b;
      bool ok = true;
      for (int f : non_ids) {
        int s = c.src(f);
        int t = c.tgt(f);
        if (std::max(s, t) == a &&
            d.hom(cur.object_map[uz(s)], cur.object_map[uz(t)]).empty()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        assign_object(a + 1);
      }
    }
    cur.object_map[uz(a)] = -1;
  };

  assign_object(0);
  return out;
}

std::optional<CatFunctor> find_isomorphism(FinCat const& c, FinCat const& d, std::size_t guard) {
  if (c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count()) {
    return std::nullopt;
  }
  for (auto& f : enumerate_functors(c, d, guard)) {
    if (is_isomorphism(f, c, d)) {
      return std::move(f);
    }
  }
  return std::nullopt;
}

std::vector<ComposableChain> chains(FinCat const& c, int k) {
  if (k < 0) {
    throw InvalidArgument("chains: negative length");
  }
  std::vector<ComposableChain> out;
  if (k == 0) {
    for (std::size_t a = 0; a < c.object_count(); ++a) {
      out.push_back({{static_cast<int>(a)}, {}});
    }
    return out;
  }
  ComposableChain cur;
  std::function<void()> extend = [&] {
    if (static_cast<int>(cur.morphisms.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      int fi = static_cast<int>(f);
      if (!cur.morphisms.empty() && c.src(fi) != cur.objects.back()) {
        continue;
      }
      bool first = cur.morphisms.empty();
      if (first) {
        cur.objects.push_back(c.src(fi));
      }
      cur.morphisms.push_back(fi);
      cur.objects.push_back(c.tgt(fi));
      extend();
      cur.objects.pop_back();
      cur.morphisms.pop_back();
      if (first) {
        cur.objects.pop_back();
      }
    }
  };
  extend();
  return out;
}

}  // namespace catnerve
