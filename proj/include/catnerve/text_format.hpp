#pragma once
// The line-oriented text format for categories, simplicial sets, diagrams
// and cocones. See docs/FORMAT.md for the grammar.

#include <string>

#include "catnerve/workspace.hpp"

namespace catnerve {

/// Parses `text` and adds its bindings to `ws`; names referenced by diagrams
/// and cocones must already be bound (earlier in the text or in `ws`).
/// Throws ParseError for syntax errors and ValidationError for well-formed
/// input that violates a law. Returns the names defined, in order.
std::vector<std::string> parse_into(Workspace& ws, std::string const& text);

Workspace parse(std::string const& text);

/// Parses a path "e1.e2" or "id(v)" over a quiver. Throws InvalidArgument.
Path parse_path(Quiver const& q, std::string const& text);

/// Renderings that parse back to an equal value.
std::string write_text(std::string const& name, FinCat const& c);
std::string write_text(std::string const& name, FpCat const& c);
std::string write_text(std::string const& name, TruncSSet const& x);

}  // namespace catnerve
