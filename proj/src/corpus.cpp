#include "catnerve/corpus.hpp"

#include "catnerve/error.hpp"

namespace catnerve::corpus {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

std::string value_name(std::vector<int> const& v) {
  std::string out;
  for (int x : v) {
    out += std::to_string(x);
  }
  return out;
}

/// The map between standard simplices induced by a monotone map of vertices.
SimplicialMap vertex_map_extension(TruncSSet const& from, TruncSSet const& to,
                                   std::vector<int> const& vertices) {
  SimplicialMap out;
  for (int k = 0; k <= from.dim(); ++k) {
    std::vector<int> level;
    for (auto const& name : from.names(k)) {
      std::vector<int> image;
      for (char ch : name) {
        image.push_back(vertices[uz(ch - '0')]);
      }
      level.push_back(to.find(k, value_name(image)));
    }
    out.components.push_back(std::move(level));
  }
  return out;
}

CatFunctor constant_object(FinCat const& c, FinCat const& d, int object) {
  CatFunctor f{std::vector<int>(c.object_count(), object),
               std::vector<int>(c.morphism_count(), d.identity(object))};
  return f;
}

/// The functor Fin(1) -> c picking `object`.
CatFunctor point_functor(FinCat const& c, int object) {
  return constant_object(terminal_category(), c, object);
}

int morphism(FinCat const& c, std::string const& name) {
  auto f = c.find_morphism(name);
  if (!f) {
    throw InternalError("corpus: no morphism " + name);
  }
  return *f;
}

CatFunctor arrow_to(FinCat const& d, int f) {
  return CatFunctor{{d.src(f), d.tgt(f)}, {d.identity(d.src(f)), d.identity(d.tgt(f)), f}};
}

template <typename P, typename A>
Diagram<P, A> with_identities(FinCat shape, std::vector<P> nodes,
                              std::vector<std::pair<std::string, A>> arrows,
                              A (*identity)(P const&)) {
  Diagram<P, A> d{std::move(shape), std::move(nodes), {}};
  d.arrows.resize(d.shape.morphism_count());
  for (int a = 0; a < static_cast<int>(d.shape.object_count()); ++a) {
    d.arrows[uz(d.shape.identity(a))] = identity(d.nodes[uz(a)]);
  }
  for (auto& [name, arrow] : arrows) {
    d.arrows[uz(morphism(d.shape, name))] = std::move(arrow);
  }
  return d;
}

CatFunctor identity_of(FinCat const& c) { return identity_functor(c); }
SimplicialMap identity_of_sset(TruncSSet const& x) { return identity_map(x); }

}  // namespace

FinCat walking_arrow() { return fin_ordinal(1); }

FinCat commutative_square() { return product(walking_arrow(), walking_arrow()).category; }

std::vector<NamedCategory> categories() {
  return {
      {"terminal", terminal_category()}, {"fin2", fin_ordinal(1)},  {"fin3", fin_ordinal(2)},
      {"fin4", fin_ordinal(3)},          {"z2", cyclic_group(2)},
      {"square", commutative_square()},
  };
}

FinCat parallel_pair() {
  FinCatBuilder b;
  int a = b.add_object("a");
  int c = b.add_object("b");
  b.add_morphism("u", a, c);
  b.add_morphism("v", a, c);
  return b.build();
}

FinCat span() {
  FinCatBuilder b;
  int a = b.add_object("a");
  int l = b.add_object("b");
  int r = b.add_object("c");
  b.add_morphism("l", a, l);
  b.add_morphism("r", a, r);
  return b.build();
}

FinCat discrete(int n) {
  FinCatBuilder b;
  for (int i = 0; i < n; ++i) {
    b.add_object(std::string(1, static_cast<char>('a' + i)));
  }
  return b.build();
}

TruncSSet circle() {
  auto point = standard_simplex(0, 2);
  auto interval = standard_simplex(1, 2);
  auto d = with_identities<TruncSSet, SimplicialMap>(
      parallel_pair(), {point, interval},
      {{"u", vertex_map_extension(point, interval, {0})},
       {"v", vertex_map_extension(point, interval, {1})}},
      identity_of_sset);
  return colim_sset(d).apex;
}

TruncSSet triangle_boundary(int dim) { return simplex_subcomplex(2, 1, dim); }

TruncSSet coskeletal_counterexample() { return simplex_subcomplex(3, 2, 4); }

std::vector<NamedComplex> complexes() {
  return {
      {"delta0", standard_simplex(0, 2)}, {"delta1", standard_simplex(1, 2)},
      {"delta2", standard_simplex(2, 2)}, {"s1", circle()},
      {"boundary2", triangle_boundary(2)},
  };
}

ColimitFixture coequalizer() {
  auto point = terminal_category();
  auto arrow = walking_arrow();
  ColimitFixture out{
      "coeq",
      with_identities<FinCat, CatFunctor>(parallel_pair(), {point, arrow},
                                          {{"u", point_functor(arrow, 0)},
                                           {"v", point_functor(arrow, 1)}},
                                          identity_of),
      {}};
  for (int n : {1, 2, 3}) {
    auto z = cyclic_group(n);
    int gen = n == 1 ? z.identity(0) : morphism(z, "t");
    out.probes.push_back({z, {point_functor(z, 0), arrow_to(z, gen)}});
  }
  return out;
}

ColimitFixture coproduct() {
  auto point = terminal_category();
  ColimitFixture out{"coproduct",
                     with_identities<FinCat, CatFunctor>(discrete(2), {point, point}, {},
                                                         identity_of),
                     {}};
  auto arrow = walking_arrow();
  out.probes.push_back({arrow, {point_functor(arrow, 0), point_functor(arrow, 1)}});
  out.probes.push_back({arrow, {point_functor(arrow, 1), point_functor(arrow, 1)}});
  auto t = terminal_category();
  out.probes.push_back({t, {point_functor(t, 0), point_functor(t, 0)}});
  auto z = cyclic_group(2);
  out.probes.push_back({z, {point_functor(z, 0), point_functor(z, 0)}});
  return out;
}

ColimitFixture pushout() {
  auto point = terminal_category();
  auto arrow = walking_arrow();
  ColimitFixture out{"pushout",
                     with_identities<FinCat, CatFunctor>(
                         span(), {point, arrow, arrow},
                         {{"l", point_functor(arrow, 1)}, {"r", point_functor(arrow, 0)}},
                         identity_of),
                     {}};
  auto fin3 = fin_ordinal(2);
  out.probes.push_back(
      {fin3, {point_functor(fin3, 1), arrow_to(fin3, morphism(fin3, "0<1")),
              arrow_to(fin3, morphism(fin3, "1<2"))}});
  out.probes.push_back({arrow, {point_functor(arrow, 1), arrow_to(arrow, morphism(arrow, "0<1")),
                                arrow_to(arrow, arrow.identity(1))}});
  auto z = cyclic_group(2);
  out.probes.push_back(
      {z, {point_functor(z, 0), arrow_to(z, morphism(z, "t")), arrow_to(z, morphism(z, "t"))}});
  auto z3 = cyclic_group(3);
  out.probes.push_back({z3, {point_functor(z3, 0), arrow_to(z3, morphism(z3, "t")),
                             arrow_to(z3, morphism(z3, "t^2"))}});
  return out;
}

std::vector<ColimitFixture> colimit_fixtures() { return {coequalizer(), coproduct(), pushout()}; }

}  // namespace catnerve::corpus
