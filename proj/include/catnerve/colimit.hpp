#pragma once

// Colimits of finite diagrams: of finite sets by union-find, of truncated
// simplicial sets levelwise, and of finite categories by taking nerves,
// forming the simplicial colimit and applying ho2.

#include <cstddef>
#include <string>
#include <vector>

#include "catnerve/fincat.hpp"
#include "catnerve/hofunctor.hpp"
#include "catnerve/report.hpp"
#include "catnerve/rewrite.hpp"
#include "catnerve/sset.hpp"

namespace catnerve {

/// A functor from `shape` into some category of payloads. `arrows` is
/// indexed by morphism id of the shape, identities included.
template <typename Payload, typename Arrow>
struct Diagram {
  FinCat shape;
  std::vector<Payload> nodes;
  std::vector<Arrow> arrows;
};

struct FinSet {
  std::vector<std::string> elements;
  std::size_t size() const noexcept { return elements.size(); }
  bool operator==(FinSet const&) const = default;
};

using Function = std::vector<int>;
using SetDiagram = Diagram<FinSet, Function>;
using SSetDiagram = Diagram<TruncSSet, SimplicialMap>;
using CatDiagram = Diagram<FinCat, CatFunctor>;

Report validate(SetDiagram const& d);
Report validate(SSetDiagram const& d);
Report validate(CatDiagram const& d);

struct SetColimit {
  FinSet apex;
  std::vector<Function> legs;
};

/// Disjoint union modulo x ~ arrow(x). Classes are numbered by their
/// smallest member in node-major order.
SetColimit colim_set(SetDiagram const& d);

struct SSetColimit {
  TruncSSet apex;
  std::vector<SimplicialMap> legs;
};

/// Levelwise colimit. Throws InternalError if an induced action depends on
/// the chosen representative.
SSetColimit colim_sset(SSetDiagram const& d);

struct CatColimit {
  HomotopyCategory presentation;
  std::vector<GeneratorMap> legs;  // node morphism -> normal-form path
};

CatColimit colim_cat(CatDiagram const& d, std::size_t fuel = default_fuel);

/// The colimit legs commute with every diagram arrow, up to eq.
Report check_cocone(CatDiagram const& d, CatColimit const& colimit);

struct Cocone {
  FinCat apex;
  std::vector<CatFunctor> legs;
};

Report validate(CatDiagram const& d, Cocone const& cocone);

struct ProbeResult {
  Report report;
  std::vector<FpFunctor> mediators;
};

/// Enumerates functors out of the colimit into the probe's apex and keeps
/// those commuting with every leg; passes iff exactly one remains.
ProbeResult verify_colimit_probe(CatDiagram const& d, CatColimit const& colimit,
                                 Cocone const& probe, std::size_t guard = default_guard);

Report verify_colimit_cat(CatDiagram const& d, CatColimit const& colimit,
                          std::vector<Cocone> const& probes, std::size_t guard = default_guard);

/// The colimit cocone itself, materialized (requires a finite colimit).
Cocone colimit_cocone(CatColimit const& colimit, FinitizedCat const& finite);

}  // namespace catnerve
