#pragma once

// Truncated simplicial sets, stored by their face and degeneracy actions.
// The action of an arbitrary monotone map is derived through its canonical
// epi-mono factorization.

#include <cstddef>
#include <string>
#include <vector>

#include "catnerve/fincat.hpp"
#include "catnerve/path.hpp"
#include "catnerve/quiverkit.hpp"
#include "catnerve/report.hpp"
#include "catnerve/simplex.hpp"

namespace catnerve {

class TruncSSet {
 public:
  TruncSSet() = default;

  /// `faces[k][i]` (1 <= k <= dim, 0 <= i <= k) is the action of delta^i,
  /// sending level k to level k-1. `degens[k][i]` (0 <= k < dim, 0 <= i <= k)
  /// is the action of sigma^i, sending level k to level k+1. Only shapes and
  /// ranges are checked here (InvalidArgument); see validate().
  TruncSSet(int dim, std::vector<std::vector<std::string>> names,
            std::vector<std::vector<std::vector<int>>> faces,
            std::vector<std::vector<std::vector<int>>> degens);

  int dim() const noexcept { return dim_; }
  std::size_t size(int k) const { return names_.at(uz(k)).size(); }
  std::vector<std::string> const& names(int k) const { return names_.at(uz(k)); }
  std::string const& name(int k, int x) const { return names_.at(uz(k)).at(uz(x)); }
  int find(int k, std::string const& name) const;

  int face(int k, int i, int x) const { return faces_.at(uz(k)).at(uz(i)).at(uz(x)); }
  int degen(int k, int i, int x) const { return degens_.at(uz(k)).at(uz(i)).at(uz(x)); }
  std::vector<int> const& face_map(int k, int i) const { return faces_.at(uz(k)).at(uz(i)); }
  std::vector<int> const& degen_map(int k, int i) const { return degens_.at(uz(k)).at(uz(i)); }

  bool operator==(TruncSSet const&) const = default;

 private:
  static std::size_t uz(int i) { return static_cast<std::size_t>(i); }

  int dim_ = 0;
  std::vector<std::vector<std::string>> names_{{}};
  std::vector<std::vector<std::vector<int>>> faces_{{}};
  std::vector<std::vector<std::vector<int>>> degens_;
};

/// Exhaustive check of the simplicial identities; the first violated
/// identity is named in the report.
Report validate(TruncSSet const& x);

/// Checks that derived actions are contravariantly functorial:
/// act(compose(a, b), x) == act(a, act(b, x)) for all composable a, b.
Report validate_actions(TruncSSet const& x);

/// Contravariant action of `alpha` on a simplex at level alpha.tgt().
int act(TruncSSet const& x, MonotoneMap const& alpha, int simplex);

/// True iff `simplex` at level k is in the image of some degeneracy.
bool is_degenerate(TruncSSet const& x, int k, int simplex);

/// Level-indexed functions X_k -> Y_k.
struct SimplicialMap {
  std::vector<std::vector<int>> components;
  auto operator<=>(SimplicialMap const&) const = default;
};

/// Naturality against every face and degeneracy.
Report validate_map(SimplicialMap const& f, TruncSSet const& x, TruncSSet const& y);

SimplicialMap identity_map(TruncSSet const& x);

/// Diagrammatic: first `f`, then `g`.
SimplicialMap compose(SimplicialMap const& f, SimplicialMap const& g);

/// The underlying reflexive quiver: vertices X_0, edges X_1 from delta^1
/// to delta^0, refl(v) = sigma^0(v).
ReflQuiver one_truncation(TruncSSet const& x);

/// The path of edges through consecutive vertices of a k-simplex.
Path spine(TruncSSet const& x, int k, int simplex);

TruncSSet truncate(TruncSSet const& x, int m);
SimplicialMap truncate(SimplicialMap const& f, int m);

/// All simplicial maps x -> y in lexicographic order of components. Throws
/// GuardExceeded after `guard` search nodes.
std::vector<SimplicialMap> enumerate_maps(TruncSSet const& x, TruncSSet const& y,
                                          std::size_t guard = default_guard);

/// The subcomplex of the standard p-simplex, truncated at `dim`, whose
/// k-simplices are the monotone maps [k] -> [p] with at most `max_image`+1
/// distinct values. Simplices are named by their value strings ("012").
TruncSSet simplex_subcomplex(int p, int max_image, int dim);

/// The standard p-simplex truncated at `dim`.
TruncSSet standard_simplex(int p, int dim);

}  // namespace catnerve
