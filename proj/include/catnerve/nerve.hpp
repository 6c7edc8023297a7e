#pragma once

// Nerves of finite categories, maps into 2-truncated nerves, the strict
// Segal condition, and 2-coskeletality via matching objects.

#include <cstddef>
#include <map>
#include <vector>

#include "catnerve/fincat.hpp"
#include "catnerve/quiverkit.hpp"
#include "catnerve/report.hpp"
#include "catnerve/simplex.hpp"
#include "catnerve/sset.hpp"

namespace catnerve {

/// Level k of the nerve is chains(c, k); this indexes chains both ways.
/// Level-0 ids are object ids and level-1 ids are morphism ids.
class NerveIndex {
 public:
  NerveIndex(FinCat const& c, int dim);

  int dim() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  std::vector<ComposableChain> const& level(int k) const { return levels_.at(uz(k)); }
  ComposableChain const& chain(int k, int id) const { return levels_.at(uz(k)).at(uz(id)); }
  /// Id of the chain with the given morphisms (k >= 1); -1 if absent.
  int id(std::vector<int> const& morphisms) const;

 private:
  static std::size_t uz(int i) { return static_cast<std::size_t>(i); }

  std::vector<std::vector<ComposableChain>> levels_;
  std::map<std::vector<int>, int> ids_;
};

/// Restriction of a chain along alpha: the i-th arrow of the result is the
/// composite of the segment from alpha(i) to alpha(i+1).
ComposableChain reindex(FinCat const& c, ComposableChain const& chain, MonotoneMap const& alpha);

TruncSSet nerve(FinCat const& c, int dim);

/// truncate(nerve(c, 4), 2).
TruncSSet nerve2(FinCat const& c);

/// The nerve of a functor, componentwise on chains.
SimplicialMap nerve_map(CatFunctor const& f, FinCat const& c, FinCat const& d, int dim);

/// Lifts a reflexive prefunctor one_truncation(x) -> Ur c to a map
/// x -> nerve2(c). Throws ValidationError naming the first 2-simplex whose
/// diagonal is not the composite of its spine.
SimplicialMap to_nerve2_mk(TruncSSet const& x, FinCat const& c, Prefunctor const& f);

/// Equality of two maps into nerve2(c), decided on levels 0 and 1. Throws
/// InternalError if those agree but level 2 does not.
bool to_nerve2_ext(SimplicialMap const& f, SimplicialMap const& g);

/// Whether the spine map from k-simplices to length-k edge paths is a
/// bijection.
Report check_strict_segal(TruncSSet const& x, int k);

struct MatchingObject {
  int n = 0;
  /// Every monotone map [j] -> [n] with j <= 2, in the order families use.
  std::vector<MonotoneMap> arrows;
  /// Each family assigns arrows[a] a simplex at level arrows[a].src().
  std::vector<std::vector<int>> families;
  /// unit[x] is the family index of simplex x at level n.
  std::vector<int> unit;

  bool unit_injective() const;
  bool unit_surjective() const;
};

/// Enumerates all compatible families over [n] and the canonical map from
/// level n. Requires x.dim() >= n and 3 <= n <= 4.
MatchingObject matching_object(TruncSSet const& x, int n, std::size_t guard = default_guard);

/// Requires x.dim() == 4; passes iff the unit maps at n = 3 and 4 are
/// bijections.
Report check_coskeletal2(TruncSSet const& x, std::size_t guard = default_guard);

/// Recovers the functor c -> d underlying a map nerve2(c) -> nerve2(d).
/// Throws InternalError if functoriality cannot be certified.
CatFunctor nerve2_full_lift(FinCat const& c, FinCat const& d, SimplicialMap const& f);

}  // namespace catnerve
