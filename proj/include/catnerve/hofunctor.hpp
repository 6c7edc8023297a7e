#pragma once

// The homotopy category of a 2-truncated simplicial set, the comparison of
// the two reflexive quivers underlying a category, and instance-wise checks
// of the adjunction between ho2 and the 2-truncated nerve.

#include <cstddef>
#include <vector>

#include "catnerve/fincat.hpp"
#include "catnerve/quiverkit.hpp"
#include "catnerve/report.hpp"
#include "catnerve/rewrite.hpp"
#include "catnerve/sset.hpp"

namespace catnerve {

/// The relation contributed by one 2-simplex: its diagonal edge equals the
/// composite of the edge 0->1 followed by the edge 1->2.
struct HoRelInstance {
  int simplex = 0;
  Path lhs;
  Path rhs;
};

std::vector<HoRelInstance> horel_instances(TruncSSet const& x);

struct HomotopyCategory {
  FpCat category;
  /// q_X on generators: the normal form of each edge.
  std::vector<Path> quotient;
};

/// Free reflexive category on the underlying reflexive quiver modulo one
/// relation per 2-simplex. Requires x.dim() == 2.
HomotopyCategory ho2(TruncSSet const& x, std::size_t fuel = default_fuel);

/// ho2(truncate(x, 2)); requires x.dim() >= 2.
HomotopyCategory ho(TruncSSet const& x, std::size_t fuel = default_fuel);

/// A functor between presented categories given by generator images.
struct GeneratorMap {
  std::vector<int> object_map;
  std::vector<Path> generator_images;
};

/// ho2 of a simplicial map into `target`, on generators.
GeneratorMap ho2_map(SimplicialMap const& f, TruncSSet const& target);

/// The isomorphism between one_truncation(nerve2 c) and Ur c.
struct PhiIso {
  Prefunctor forward;  // nerve side -> category side
  Prefunctor inverse;
};

PhiIso phi_iso(FinCat const& c);

/// Naturality square phi_D . U(nerve2 F) == Ur F . phi_C.
Report check_phi_naturality(CatFunctor const& f, FinCat const& c, FinCat const& d);

struct Counit {
  FinitizedCat source;  // to_fincat(ho2(nerve2 c))
  CatFunctor functor;   // source.category -> c
  bool isomorphism = false;
};

/// Throws InternalError if a relation of ho2(nerve2 c) fails in c.
Counit counit(FinCat const& c, std::size_t fuel = default_fuel,
              std::size_t bound = default_finite_bound);

struct Unit {
  FinitizedCat target;  // to_fincat(ho2 x)
  SimplicialMap map;    // x -> nerve2(target.category)
};

/// Throws NonFinitableError when ho2 x is not finite within `bound`.
Unit unit(TruncSSet const& x, std::size_t fuel = default_fuel,
          std::size_t bound = default_finite_bound);

/// Both triangle identities, at nerve2 c and at ho2 x.
Report check_triangles_nerve_adj(TruncSSet const& x, FinCat const& c,
                                 std::size_t fuel = default_fuel,
                                 std::size_t bound = default_finite_bound);

/// Fun(ho2 x, c) against maps x -> nerve2 c: equal sizes and mutually
/// inverse transposes.
Report check_hom_bijection(TruncSSet const& x, FinCat const& c, std::size_t guard = default_guard,
                           std::size_t fuel = default_fuel);

/// The left transpose: a functor out of ho2 x becomes a map into nerve2 c.
SimplicialMap transpose_to_map(TruncSSet const& x, HomotopyCategory const& h, FinCat const& c,
                               FpFunctor const& g);

/// The right transpose: a map into nerve2 c becomes a functor out of ho2 x.
FpFunctor transpose_to_functor(FinCat const& c, SimplicialMap const& f);

}  // namespace catnerve
