#pragma once

// Quivers and paths in them. Shared by the free-category constructions,
// the rewriting engine and the simplicial spine machinery.

#include <compare>
#include <string>
#include <vector>

#include "catnerve/report.hpp"

namespace catnerve {

struct Edge {
  std::string name;
  int src = 0;
  int tgt = 0;
  bool operator==(Edge const&) const = default;
};

/// A finite directed multigraph with dense vertex and edge ids.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }
  bool operator==(Quiver const&) const = default;
};

/// A path: a start vertex plus a sequence of consecutive edges. The empty
/// sequence is the identity at `start`.
struct Path {
  int start = 0;
  std::vector<int> edges;

  bool empty() const noexcept { return edges.empty(); }
  std::size_t length() const noexcept { return edges.size(); }
  auto operator<=>(Path const&) const = default;
};

Report validate(Quiver const& q);

/// True iff `p` is a well-formed path in `q`.
bool is_path(Quiver const& q, Path const& p);

/// Target vertex of a path. Throws InvalidArgument if `p` is not a path.
int path_end(Quiver const& q, Path const& p);

/// Diagrammatic concatenation; throws InvalidArgument on endpoint mismatch.
Path concat(Quiver const& q, Path const& p, Path const& r);

Path edge_path(Quiver const& q, int e);

/// Renders `e1.e2.e3`, or `id(v)` for an empty path.
std::string format_path(Quiver const& q, Path const& p);

/// All paths of exactly `length` edges, ordered by start vertex and then
/// lexicographically by edge ids.
std::vector<Path> paths_of_length(Quiver const& q, std::size_t length);

}  // namespace catnerve
