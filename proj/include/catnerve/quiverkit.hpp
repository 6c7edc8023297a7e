#pragma once

// Reflexive quivers, prefunctors, and the free (reflexive) category
// constructions together with the forgetful functor from finite categories.

#include <cstddef>
#include <vector>

#include "catnerve/fincat.hpp"
#include "catnerve/path.hpp"
#include "catnerve/report.hpp"
#include "catnerve/rewrite.hpp"

namespace catnerve {

/// A quiver with a chosen loop refl[v] at every vertex v.
struct ReflQuiver {
  Quiver quiver;
  std::vector<int> refl;
  bool operator==(ReflQuiver const&) const = default;
};

Report validate(ReflQuiver const& q);

/// Vertex and edge maps; endpoint preservation is checked separately.
struct Prefunctor {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  auto operator<=>(Prefunctor const&) const = default;
};

Report validate_prefunctor(Prefunctor const& f, Quiver const& q, Quiver const& r);
Report validate_refl_prefunctor(Prefunctor const& f, ReflQuiver const& q, ReflQuiver const& r);

/// Diagrammatic: first `f`, then `g`.
Prefunctor compose(Prefunctor const& f, Prefunctor const& g);

/// All reflexive prefunctors q -> r, ordered by vertex map and then edge map
/// lexicographically.
std::vector<Prefunctor> enumerate_refl_prefunctors(ReflQuiver const& q, ReflQuiver const& r,
                                                   std::size_t guard = default_guard);

/// The path category: no relations, equality is syntactic.
FpCat free_category(Quiver const& q, std::size_t fuel = default_fuel);

struct FreeReflCategory {
  FpCat category;
  /// Image of each edge under the quotient from the free category: the
  /// normal form of the one-edge path (empty for reflexivity loops).
  std::vector<Path> quotient;
};

/// Free category on the underlying quiver modulo refl[v] = id(v).
FreeReflCategory free_refl_category(ReflQuiver const& q, std::size_t fuel = default_fuel);

/// Vertices are objects, edges are all morphisms, refl picks identities.
/// Edge ids coincide with morphism ids.
ReflQuiver forget_cat_to_reflquiver(FinCat const& c);

/// Counit of the free/forgetful adjunction: composes a path of morphisms.
int evaluate_path(FinCat const& c, Path const& p);

/// Builds the unit at `q` and the counit at `c` and checks both triangle
/// identities generator by generator.
Report check_triangle_identities_reflquiv(FinCat const& c, ReflQuiver const& q);

}  // namespace catnerve
