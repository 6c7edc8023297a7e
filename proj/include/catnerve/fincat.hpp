#pragma once

// Finite categories given by explicit composition tables.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catnerve/report.hpp"

namespace catnerve {

inline constexpr std::size_t default_guard = 1'000'000;

struct MorphismInfo {
  std::string name;
  int src = 0;
  int tgt = 0;
  bool operator==(MorphismInfo const&) const = default;
};

/// A finite category with dense object and morphism ids.
///
/// Composition is diagrammatic: compose(f, g) is "f then g" and requires
/// tgt(f) == src(g). The table is total on composable pairs.
class FinCat {
 public:
  FinCat() = default;

  /// Checks shapes and index ranges only (throws InvalidArgument); the unit
  /// and associativity laws are checked by validate().
  FinCat(std::vector<std::string> objects, std::vector<MorphismInfo> morphisms,
         std::vector<int> identities, std::vector<int> table);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }

  std::string const& object_name(int a) const { return objects_.at(idx(a)); }
  std::string const& morphism_name(int f) const { return morphisms_.at(idx(f)).name; }
  std::vector<std::string> const& objects() const noexcept { return objects_; }
  std::vector<MorphismInfo> const& morphisms() const noexcept { return morphisms_; }

  int src(int f) const { return morphisms_.at(idx(f)).src; }
  int tgt(int f) const { return morphisms_.at(idx(f)).tgt; }
  int identity(int a) const { return identities_.at(idx(a)); }
  bool is_identity(int f) const { return identity(src(f)) == f; }

  /// Throws InvalidArgument if tgt(f) != src(g).
  int compose(int f, int g) const;

  /// Morphism ids a -> b in increasing order.
  std::vector<int> const& hom(int a, int b) const;

  std::optional<int> find_object(std::string const& name) const;
  std::optional<int> find_morphism(std::string const& name) const;

  /// Returns a copy whose table entry (f, g) is overwritten; no law checks.
  FinCat with_composite(int f, int g, int h) const;

  bool operator==(FinCat const&) const = default;

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
  std::size_t slot(int f, int g) const { return idx(f) * morphisms_.size() + idx(g); }
  void index_homs();

  std::vector<std::string> objects_;
  std::vector<MorphismInfo> morphisms_;
  std::vector<int> identities_;
  std::vector<int> table_;  // -1 where not composable
  std::vector<std::vector<int>> homs_;
};

/// Incremental construction. Each object gets an identity named "id(a)";
/// composites with identities are filled in by build().
class FinCatBuilder {
 public:
  int add_object(std::string name);
  int add_morphism(std::string name, int src, int tgt);
  int identity(int a) const { return identities_.at(static_cast<std::size_t>(a)); }
  FinCatBuilder& set_composite(int f, int g, int h);
  /// Throws ValidationError if a composable pair of non-identities has no
  /// composite.
  FinCat build() const;

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismInfo> morphisms_;
  std::vector<int> identities_;
  std::vector<std::tuple<int, int, int>> composites_;
};

/// Exhaustive unit and associativity check; reports the first violation.
Report validate(FinCat const& c);

/// The ordinal category [n]: objects 0..n, a unique arrow i -> j iff i <= j.
FinCat fin_ordinal(int n);

FinCat terminal_category();

/// The cyclic group of order `n` as a one-object category.
FinCat cyclic_group(int n);

struct CatFunctor {
  std::vector<int> object_map;
  std::vector<int> morphism_map;
  auto operator<=>(CatFunctor const&) const = default;
};

Report validate_functor(CatFunctor const& f, FinCat const& c, FinCat const& d);

CatFunctor identity_functor(FinCat const& c);

/// Diagrammatic: first `f`, then `g`.
CatFunctor compose(CatFunctor const& f, CatFunctor const& g);

bool is_isomorphism(CatFunctor const& f, FinCat const& c, FinCat const& d);

struct Product {
  FinCat category;
  CatFunctor first;
  CatFunctor second;
};

Product product(FinCat const& c, FinCat const& d);

/// All functors c -> d in lexicographic order of (object map, morphism map).
/// Throws GuardExceeded after `guard` search nodes.
std::vector<CatFunctor> enumerate_functors(FinCat const& c, FinCat const& d,
                                           std::size_t guard = default_guard);

std::optional<CatFunctor> find_isomorphism(FinCat const& c, FinCat const& d,
                                           std::size_t guard = default_guard);

struct ComposableChain {
  std::vector<int> objects;    // c_0, ..., c_k
  std::vector<int> morphisms;  // f_i : c_{i-1} -> c_i
  auto operator<=>(ComposableChain const&) const = default;
};

/// All chains of k composable morphisms, ordered lexicographically by their
/// morphism ids (by object id when k = 0). chains(c, 1) lists morphisms in id
/// order.
std::vector<ComposableChain> chains(FinCat const& c, int k);

}  // namespace catnerve
