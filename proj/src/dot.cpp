#include "catnerve/dot.hpp"

#include <sstream>

namespace catnerve {

namespace {

std::string quote(std::string const& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
    }
    out += ch;
  }
  return out + "\"";
}

std::string header(std::string const& name) {
  return "digraph " + quote(name) + " {\n  rankdir=LR;\n  node [shape=circle];\n";
}

}  // namespace

std::string to_dot(std::string const& name, FinCat const& c) {
  std::ostringstream out;
  out << header(name);
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    out << "  o" << a << " [label=" << quote(c.object_name(static_cast<int>(a))) << "];\n";
  }
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    int fi = static_cast<int>(f);
    if (!c.is_identity(fi)) {
      out << "  o" << c.src(fi) << " -> o" << c.tgt(fi) << " [label=" << quote(c.morphism_name(fi))
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(std::string const& name, FpCat const& c) {
  auto const& q = c.quiver();
  std::ostringstream out;
  out << header(name);
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    out << "  o" << v << " [label=" << quote(q.vertices[v]) << "];\n";
  }
  for (int e : c.reduced_generators()) {
    auto const& edge = q.edges[static_cast<std::size_t>(e)];
    out << "  o" << edge.src << " -> o" << edge.tgt << " [label=" << quote(edge.name) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(std::string const& name, TruncSSet const& x) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int k = 0; k <= x.dim(); ++k) {
    out << "  { rank=same;";
    for (std::size_t s = 0; s < x.size(k); ++s) {
      out << " l" << k << '_' << s;
    }
    out << " }\n";
    for (std::size_t s = 0; s < x.size(k); ++s) {
      int si = static_cast<int>(s);
      out << "  l" << k << '_' << s << " [label=" << quote(x.name(k, si))
          << (is_degenerate(x, k, si) ? ", style=dotted" : "") << "];\n";
    }
  }
  for (int k = 1; k <= x.dim(); ++k) {
    for (std::size_t s = 0; s < x.size(k); ++s) {
      for (int i = 0; i <= k; ++i) {
        out << "  l" << k - 1 << '_' << x.face(k, i, static_cast<int>(s)) << " -> l" << k << '_'
            << s << " [label=\"d" << i << "\", arrowhead=none];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace catnerve
