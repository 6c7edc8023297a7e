#pragma once
// Graphviz renderings. Categories are drawn as multigraphs without their
// identities; simplicial sets as one rank per level with face edges.

#include <string>

#include "catnerve/fincat.hpp"
#include "catnerve/rewrite.hpp"
#include "catnerve/sset.hpp"

namespace catnerve {

std::string to_dot(std::string const& name, FinCat const& c);
/// Draws the generators that are their own normal form.
std::string to_dot(std::string const& name, FpCat const& c);
std::string to_dot(std::string const& name, TruncSSet const& x);

}  // namespace catnerve
