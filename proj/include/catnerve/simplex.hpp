#pragma once

// The truncated simplex category: finite ordinals [n] = {0, ..., n} and
// weakly increasing maps between them.

#include <compare>
#include <string>
#include <vector>

namespace catnerve {

/// Largest ordinal [n] the library works with.
inline constexpr int max_simplex_dim = 4;

/// The object [len] of the simplex category.
struct SimplexOb {
  int len = 0;
  auto operator<=>(SimplexOb const&) const = default;
};

/// A weakly increasing map [src] -> [tgt], stored by its values.
class MonotoneMap {
 public:
  MonotoneMap() = default;
  /// Throws InvalidArgument unless `values` is weakly increasing, has
  /// src + 1 entries, and every entry is <= tgt.
  MonotoneMap(int src, int tgt, std::vector<int> values);

  static MonotoneMap identity(int n);

  int src() const noexcept { return src_; }
  int tgt() const noexcept { return tgt_; }
  std::vector<int> const& values() const noexcept { return values_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

  bool is_injective() const noexcept;
  bool is_surjective() const noexcept;
  bool is_identity() const noexcept { return src_ == tgt_ && is_injective(); }

  std::string to_string() const;

  auto operator<=>(MonotoneMap const&) const = default;

 private:
  int src_ = 0;
  int tgt_ = 0;
  std::vector<int> values_{0};
};

/// Diagrammatic composite: first `f`, then `g`. Requires f.tgt() == g.src().
MonotoneMap compose(MonotoneMap const& f, MonotoneMap const& g);

/// Face map: the injection [n] -> [n+1] whose image omits `i` (0 <= i <= n+1).
MonotoneMap delta(int i, int n);

/// Degeneracy map: the surjection [n+1] -> [n] hitting `i` twice (0 <= i <= n).
MonotoneMap sigma(int i, int n);

/// All monotone maps [m] -> [n] in lexicographic order of values.
std::vector<MonotoneMap> enumerate(SimplexOb m, SimplexOb n);

/// Every morphism of the simplex category truncated at `bound`.
std::vector<MonotoneMap> enumerate_all(int bound);

/// Canonical epi-mono factorization f = compose(epi, mono).
///
/// In applicative notation, epi = sigma^{s_0} o ... o sigma^{s_{q-1}} with
/// s strictly increasing, and mono = delta^{d_0} o ... o delta^{d_{p-1}} with
/// d strictly decreasing. Acting contravariantly on a simplex x, one applies
/// faces d_0, d_1, ... and then degeneracies s_0, s_1, ... in list order.
struct EpiMono {
  MonotoneMap epi;
  MonotoneMap mono;
  std::vector<int> sigmas;
  std::vector<int> deltas;
};

EpiMono epi_mono_factor(MonotoneMap const& f);

/// Rebuilds a map from a factorization's generator lists.
MonotoneMap recompose(int src, EpiMono const& factors);

}  // namespace catnerve
