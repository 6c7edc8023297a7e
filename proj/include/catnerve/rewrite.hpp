#pragma once

// Finitely presented categories and their word problem.
//
// Morphisms are paths in a generating quiver. Relations are oriented into
// rewrite rules under the length-lexicographic order on edge-id sequences
// (longer words rewrite to shorter ones; equal lengths compare edge ids), and
// completed Knuth-Bendix style until every critical pair is joinable or the
// fuel runs out.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catnerve/fincat.hpp"
#include "catnerve/path.hpp"

namespace catnerve {

inline constexpr std::size_t default_fuel = 10'000;
inline constexpr std::size_t default_finite_bound = 16;

using Word = std::vector<int>;

struct Relation {
  Path lhs;
  Path rhs;
  bool operator==(Relation const&) const = default;
};

/// Objects are the quiver's vertices, generators its edges.
struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
  bool operator==(Presentation const&) const = default;
};

struct Rule {
  Word lhs;
  Word rhs;
  std::string origin;
};

struct RewriteStep {
  std::size_t position = 0;
  std::size_t rule = 0;
  bool operator==(RewriteStep const&) const = default;
};

using RewriteTrace = std::vector<RewriteStep>;

/// True iff `a` precedes `b` in the length-lexicographic order.
bool shortlex_less(Word const& a, Word const& b);

/// A presentation together with its (possibly incomplete) rewriting system.
/// Frozen after orient_and_complete; every query is const.
class FpCat {
 public:
  Presentation const& presentation() const noexcept { return presentation_; }
  Quiver const& quiver() const noexcept { return presentation_.quiver; }
  std::size_t object_count() const noexcept { return presentation_.quiver.vertices.size(); }
  std::size_t generator_count() const noexcept { return presentation_.quiver.edges.size(); }

  std::vector<Rule> const& rules() const noexcept { return rules_; }
  bool complete() const noexcept { return complete_; }
  std::size_t fuel() const noexcept { return fuel_; }
  std::size_t fuel_used() const noexcept { return fuel_used_; }

  /// Leftmost-innermost normal form. Throws InvalidArgument if `p` is not a
  /// path over the generators.
  Path normalize(Path const& p, RewriteTrace* trace = nullptr) const;
  bool is_normal(Path const& p) const;

  /// Generators that are their own normal form.
  std::vector<int> reduced_generators() const;

  /// Rules whose left side has at least two letters; the rest eliminate a
  /// generator (for instance a reflexivity loop) outright.
  std::vector<std::size_t> relation_rules() const;

  int target(Path const& p) const { return path_end(quiver(), p); }
  std::string format(Path const& p) const { return format_path(quiver(), p); }

 private:
  friend FpCat orient_and_complete(Presentation presentation, std::size_t fuel);

  Presentation presentation_;
  std::vector<Rule> rules_;
  bool complete_ = false;
  std::size_t fuel_ = default_fuel;
  std::size_t fuel_used_ = 0;
};

/// Throws InvalidArgument when a relation's sides are not parallel paths.
/// Relations whose sides coincide are dropped as trivial.
FpCat orient_and_complete(Presentation presentation, std::size_t fuel = default_fuel);

Path normalize(FpCat const& c, Path const& p);

enum class UnknownReason { none, fuel_exhausted, non_confluent };

struct EqVerdict {
  enum class Kind { equal, not_equal, unknown };
  Kind kind = Kind::unknown;
  UnknownReason reason = UnknownReason::none;

  static EqVerdict equal() { return {Kind::equal, UnknownReason::none}; }
  static EqVerdict not_equal() { return {Kind::not_equal, UnknownReason::none}; }
  static EqVerdict unknown(UnknownReason r) { return {Kind::unknown, r}; }

  bool is_equal() const noexcept { return kind == Kind::equal; }
  bool is_not_equal() const noexcept { return kind == Kind::not_equal; }
  bool is_unknown() const noexcept { return kind == Kind::unknown; }
  bool operator==(EqVerdict const&) const = default;
};

std::string to_string(EqVerdict v);

/// Equal when the normal forms coincide (or a bounded two-sided search
/// joins the paths), NotEqual when the system is complete and the normal
/// forms differ, Unknown otherwise. Throws InvalidArgument if the paths are
/// not parallel.
EqVerdict eq(FpCat const& c, Path const& p, Path const& q);

/// Re-applies a trace, checking every step is a genuine rule instance.
/// Throws InvalidArgument on the first bad step.
Path replay(FpCat const& c, Path const& p, RewriteTrace const& trace);

/// One step per line: `<position> <rule id>`.
std::string serialize_trace(RewriteTrace const& trace);
RewriteTrace parse_trace(std::string const& text);

/// Every normal form of length at most `max_length`.
std::vector<Path> normal_forms_up_to(FpCat const& c, std::size_t max_length);

/// A finite category materialized from a complete presentation; morphism
/// ids index `normal_forms`.
struct FinitizedCat {
  FinCat category;
  std::vector<Path> normal_forms;
  std::map<Path, int> index;

  /// Morphism id of the class of `p` (normalized first).
  int morphism_of(FpCat const& c, Path const& p) const;
};

/// Throws InvalidArgument if `c` is not complete and NonFinitableError if
/// some hom-set has a normal form of length `bound`.
FinitizedCat to_fincat(FpCat const& c, std::size_t bound = default_finite_bound);

/// A functor from a presented category into a finite one, given on
/// generators.
struct FpFunctor {
  std::vector<int> object_map;
  std::vector<int> generator_map;
  auto operator<=>(FpFunctor const&) const = default;
};

int evaluate(FpFunctor const& f, FpCat const& c, FinCat const& d, Path const& p);

/// Checks endpoint preservation and every defining relation.
bool respects_relations(FpFunctor const& f, FpCat const& c, FinCat const& d);

/// All functors c -> d, lexicographic in (object map, generator map).
std::vector<FpFunctor> enumerate_fp_functors(FpCat const& c, FinCat const& d,
                                             std::size_t guard = default_guard);

}  // namespace catnerve

namespace catnerve {

/// A bijection between objects and between reduced generators of two
/// complete presentations under which each side's relation rules hold in
/// the other.
struct PresentationMatch {
  std::vector<int> object_map;
  std::vector<int> generator_map;  // indexed by generator id of the source; -1 if eliminated
};

std::optional<PresentationMatch> match_presentations(FpCat const& a, FpCat const& b,
                                                     std::size_t guard = default_guard);

}  // namespace catnerve
