#pragma once
// Built-in fixtures: small categories, simplicial complexes and colimit
// diagrams with probes.

#include <string>
#include <vector>

#include "catnerve/colimit.hpp"
#include "catnerve/fincat.hpp"
#include "catnerve/sset.hpp"

namespace catnerve::corpus {

struct NamedCategory {
  std::string name;
  FinCat category;
};

struct NamedComplex {
  std::string name;
  TruncSSet complex;  // dim 4 where the data allows, else dim 2
};

struct ColimitFixture {
  std::string name;
  CatDiagram diagram;
  std::vector<Cocone> probes;
};

/// Walking arrow 0 -> 1, i.e. fin_ordinal(1).
FinCat walking_arrow();
FinCat commutative_square();

/// terminal, fin2, fin3, fin4, z2, square.
std::vector<NamedCategory> categories();

/// The circle: the coequalizer of the two endpoint inclusions of a point
/// into the standard 1-simplex, truncated at dim 2. Vertex "0", edge "01".
TruncSSet circle();
/// Boundary of the 2-simplex (three vertices, three edges, no filler).
TruncSSet triangle_boundary(int dim = 2);
/// The 2-skeleton of the 3-simplex at dim 4: not 2-coskeletal.
TruncSSet coskeletal_counterexample();

/// Standard simplices of dim 0..2 (truncated at 2), the circle and the
/// triangle boundary.
std::vector<NamedComplex> complexes();

/// Fin(1) paired with Fin(2) along both endpoint inclusions.
ColimitFixture coequalizer();
ColimitFixture coproduct();
/// Two walking arrows glued target-to-source.
ColimitFixture pushout();
std::vector<ColimitFixture> colimit_fixtures();

/// A finite diagram shape: the parallel pair a => b.
FinCat parallel_pair();
/// The span b <- a -> c.
FinCat span();
/// Two objects, identities only.
FinCat discrete(int n);

}  // namespace catnerve::corpus
