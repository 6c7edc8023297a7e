#pragma once
// JSON export and import of workspace bindings, and the fingerprints used
// to compare a binding with its re-imported copy.

#include <string>
#include <vector>

#include "catnerve/workspace.hpp"

namespace catnerve {

inline constexpr char const* workspace_schema = "catnerve.workspace/1";
inline constexpr char const* report_schema = "catnerve.report/1";

/// The named bindings and everything they reference, dependencies first.
std::string export_json(Workspace const& ws, std::vector<std::string> const& names);

/// Adds the document's bindings to `ws`. A name already bound to a value
/// with the same fingerprint is skipped. Throws ParseError on malformed
/// JSON or a schema mismatch and ValidationError on law violations.
std::vector<std::string> parse_json_into(Workspace& ws, std::string const& text);

/// Level counts, action tables, composition tables and normal-form samples
/// rendered as one string.
std::string fingerprint(Value const& v);

}  // namespace catnerve
