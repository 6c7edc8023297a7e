#include "catnerve/path.hpp"

#include "catnerve/error.hpp"

namespace catnerve {

Report validate(Quiver const& q) {
  Report r{"quiver"};
  auto n = static_cast<int>(q.vertices.size());
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    auto const& edge = q.edges[e];
    if (edge.src < 0 || edge.src >= n || edge.tgt < 0 || edge.tgt >= n) {
      r.fail("edge " + edge.name + " references a missing vertex");
      return r;
    }
  }
  return r;
}

bool is_path(Quiver const& q, Path const& p) {
  auto n = static_cast<int>(q.vertices.size());
  auto m = static_cast<int>(q.edges.size());
  if (p.start < 0 || p.start >= n) {
    return false;
  }
  int at = p.start;
  for (int e : p.edges) {
    if (e < 0 || e >= m || q.edges[static_cast<std::size_t>(e)].src != at) {
      return false;
    }
    at = q.edges[static_cast<std::size_t>(e)].tgt;
  }
  return true;
}

int path_end(Quiver const& q, Path const& p) {
  if (!is_path(q, p)) {
    throw InvalidArgument("not a path: " + std::to_string(p.edges.size()) +
                          " edges from vertex " + std::to_string(p.start));
  }
  return p.edges.empty() ? p.start : q.edges[static_cast<std::size_t>(p.edges.back())].tgt;
}

Path concat(Quiver const& q, Path const& p, Path const& r) {
  if (path_end(q, p) != r.start) {
    throw InvalidArgument("concat: " + format_path(q, p) + " does not end where " +
                          format_path(q, r) + " starts");
  }
  Path out = p;
  out.edges.insert(out.edges.end(), r.edges.begin(), r.edges.end());
  return out;
}

Path edge_path(Quiver const& q, int e) {
  if (e < 0 || static_cast<std::size_t>(e) >= q.edges.size()) {
    throw InvalidArgument("edge id out of range: " + std::to_string(e));
  }
  return Path{q.edges[static_cast<std::size_t>(e)].src, {e}};
}

std::string format_path(Quiver const& q, Path const& p) {
  if (p.edges.empty()) {
    auto v = static_cast<std::size_t>(p.start);
    return "id(" + (v < q.vertices.size() ? q.vertices[v] : std::to_string(p.start)) + ")";
  }
  std::string s;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i > 0) {
      s += '.';
    }
    auto e = static_cast<std::size_t>(p.edges[i]);
    s += e < q.edges.size() ? q.edges[e].name : std::to_string(p.edges[i]);
  }
  return s;
}

std::vector<Path> paths_of_length(Quiver const& q, std::size_t length) {
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    frontier.push_back(Path{static_cast<int>(v), {}});
  }
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Path> next;
    for (auto const& p : frontier) {
      int end = path_end(q, p);
      for (std::size_t e = 0; e < q.edges.size(); ++e) {
        if (q.edges[e].src == end) {
          Path ext = p;
          ext.edges.push_back(static_cast<int>(e));
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

}  // namespace catnerve
