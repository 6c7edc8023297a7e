#include "catnerve/sset.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "catnerve/error.hpp"

namespace catnerve {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

std::string level_name(TruncSSet const& x, int k, int s) {
  return x.name(k, s) + " (level " + std::to_string(k) + ")";
}

}  // namespace

TruncSSet::TruncSSet(int dim, std::vector<std::vector<std::string>> names,
                     std::vector<std::vector<std::vector<int>>> faces,
                     std::vector<std::vector<std::vector<int>>> degens)
    : dim_(dim), names_(std::move(names)), faces_(std::move(faces)), degens_(std::move(degens)) {
  if (dim_ < 0 || dim_ > max_simplex_dim) {
    throw InvalidArgument("TruncSSet: dimension " + std::to_string(dim_) + " outside 0.." +
                          std::to_string(max_simplex_dim));
  }
  if (names_.size() != uz(dim_) + 1) {
    throw InvalidArgument("TruncSSet: expected " + std::to_string(dim_ + 1) + " levels");
  }
  if (faces_.size() != uz(dim_) + 1 || degens_.size() != uz(dim_)) {
    throw InvalidArgument("TruncSSet: face/degeneracy tables have wrong shape");
  }
  auto check = [&](std::vector<int> const& map, int from, int to, std::string const& what) {
    if (map.size() != size(from)) {
      throw InvalidArgument("TruncSSet: " + what + " has " + std::to_string(map.size()) +
                            " entries, level " + std::to_string(from) + " has " +
                            std::to_string(size(from)));
    }
    for (int y : map) {
      if (y < 0 || uz(y) >= size(to)) {
        throw InvalidArgument("TruncSSet: " + what + " value out of range");
      }
    }
  };
  if (!faces_[0].empty()) {
    throw InvalidArgument("TruncSSet: level 0 has no faces");
  }
  for (int k = 1; k <= dim_; ++k) {
    if (faces_[uz(k)].size() != uz(k) + 1) {
      throw InvalidArgument("TruncSSet: level " + std::to_string(k) + " needs " +
                            std::to_string(k + 1) + " face maps");
    }
    for (int i = 0; i <= k; ++i) {
      check(faces_[uz(k)][uz(i)], k, k - 1,
            "face " + std::to_string(k) + " " + std::to_string(i));
    }
  }
  for (int k = 0; k < dim_; ++k) {
    if (degens_[uz(k)].size() != uz(k) + 1) {
      throw InvalidArgument("TruncSSet: level " + std::to_string(k) + " needs " +
                            std::to_string(k + 1) + " degeneracy maps");
    }
    for (int i = 0; i <= k; ++i) {
      check(degens_[uz(k)][uz(i)], k, k + 1,
            "degen " + std::to_string(k) + " " + std::to_string(i));
    }
  }
}

int TruncSSet::find(int k, std::string const& name) const {
  auto const& level = names_.at(uz(k));
  auto it = std::find(level.begin(), level.end(), name);
  return it == level.end() ? -1 : static_cast<int>(it - level.begin());
}

Report validate(TruncSSet const& x) {
  Report r("sset.validate");
  int n = x.dim();
  auto d = [&](int k, int i, int s) { return x.face(k, i, s); };
  auto s = [&](int k, int i, int v) { return x.degen(k, i, v); };
  // d_i d_j = d_{j-1} d_i for i < j
  for (int k = 2; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      for (int i = 0; i < j; ++i) {
        for (int v = 0; v < static_cast<int>(x.size(k)); ++v) {
          if (d(k - 1, i, d(k, j, v)) != d(k - 1, j - 1, d(k, i, v))) {
            r.fail("identity d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
                   std::to_string(j - 1) + " d" + std::to_string(i) + " fails at " +
                   level_name(x, k, v));
            return r;
          }
        }
      }
    }
  }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int k = 0; k + 2 <= n; ++k) {
    for (int j = 0; j <= k; ++j) {
      for (int i = 0; i <= j; ++i) {
        for (int v = 0; v < static_cast<int>(x.size(k)); ++v) {
          if (s(k + 1, i, s(k, j, v)) != s(k + 1, j + 1, s(k, i, v))) {
            r.fail("identity s" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                   std::to_string(j + 1) + " s" + std::to_string(i) + " fails at " +
                   level_name(x, k, v));
            return r;
          }
        }
      }
    }
  }
  // mixed identities, x at level k, s_j x at level k+1, then d_i
  for (int k = 0; k + 1 <= n; ++k) {
    for (int j = 0; j <= k; ++j) {
      for (int i = 0; i <= k + 1; ++i) {
        for (int v = 0; v < static_cast<int>(x.size(k)); ++v) {
          int lhs = d(k + 1, i, s(k, j, v));
          int rhs = 0;
          std::string name;
          if (i < j) {
            rhs = s(k - 1, j - 1, d(k, i, v));
            name = "d" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                   std::to_string(j - 1) + " d" + std::to_string(i);
          } else if (i == j || i == j + 1) {
            rhs = v;
            name = "d" + std::to_string(i) + " s" + std::to_string(j) + " = id";
          } else {
            rhs = s(k - 1, j, d(k, i - 1, v));
            name = "d" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                   std::to_string(j) + " d" + std::to_string(i - 1);
          }
          if (lhs != rhs) {
            r.fail("identity " + name + " fails at " + level_name(x, k, v));
            return r;
          }
        }
      }
    }
  }
  return r;
}

int act(TruncSSet const& x, MonotoneMap const& alpha, int simplex) {
  if (alpha.tgt() > x.dim() || alpha.src() > x.dim()) {
    throw InvalidArgument("act: " + alpha.to_string() + " leaves the truncation");
  }
  if (simplex < 0 || uz(simplex) >= x.size(alpha.tgt())) {
    throw InvalidArgument("act: simplex id out of range at level " +
                          std::to_string(alpha.tgt()));
  }
  auto factors = epi_mono_factor(alpha);
  int level = alpha.tgt();
  int cur = simplex;
  for (int i : factors.deltas) {
    cur = x.face(level, i, cur);
    --level;
  }
  for (int i : factors.sigmas) {
    cur = x.degen(level, i, cur);
    ++level;
  }
  return cur;
}

Report validate_actions(TruncSSet const& x) {
  Report r("sset.actions");
  auto maps = enumerate_all(x.dim());
  for (auto const& a : maps) {
    for (auto const& b : maps) {
      if (a.tgt() != b.src()) {
        continue;
      }
      auto ab = compose(a, b);
      for (int v = 0; v < static_cast<int>(x.size(b.tgt())); ++v) {
        if (act(x, ab, v) != act(x, a, act(x, b, v))) {
          r.fail("action of " + ab.to_string() + " differs from " + a.to_string() + " after " +
                 b.to_string() + " at " + level_name(x, b.tgt(), v));
          return r;
        }
      }
    }
  }
  return r;
}

bool is_degenerate(TruncSSet const& x, int k, int simplex) {
  if (k == 0) {
    return false;
  }
  for (int i = 0; i < k; ++i) {
    auto const& m = x.degen_map(k - 1, i);
    if (std::find(m.begin(), m.end(), simplex) != m.end()) {
      return true;
    }
  }
  return false;
}

Report validate_map(SimplicialMap const& f, TruncSSet const& x, TruncSSet const& y) {
  Report r("sset.map");
  if (x.dim() != y.dim() || f.components.size() != uz(x.dim()) + 1) {
    r.fail("dimension mismatch");
    return r;
  }
  for (int k = 0; k <= x.dim(); ++k) {
    auto const& c = f.components[uz(k)];
    if (c.size() != x.size(k)) {
      r.fail("component " + std::to_string(k) + " has wrong size");
      return r;
    }
    for (int v : c) {
      if (v < 0 || uz(v) >= y.size(k)) {
        r.fail("component " + std::to_string(k) + " value out of range");
        return r;
      }
    }
  }
  for (int k = 1; k <= x.dim(); ++k) {
    for (int i = 0; i <= k; ++i) {
      for (int v = 0; v < static_cast<int>(x.size(k)); ++v) {
        if (f.components[uz(k - 1)][uz(x.face(k, i, v))] !=
            y.face(k, i, f.components[uz(k)][uz(v)])) {
          r.fail("not natural for d" + std::to_string(i) + " at " + level_name(x, k, v));
          return r;
        }
      }
    }
  }
  for (int k = 0; k < x.dim(); ++k) {
    for (int i = 0; i <= k; ++i) {
      for (int v = 0; v < static_cast<int>(x.size(k)); ++v) {
        if (f.components[uz(k + 1)][uz(x.degen(k, i, v))] !=
            y.degen(k, i, f.components[uz(k)][uz(v)])) {
          r.fail("not natural for s" + std::to_string(i) + " at " + level_name(x, k, v));
          return r;
        }
      }
    }
  }
  return r;
}

SimplicialMap identity_map(TruncSSet const& x) {
  SimplicialMap f;
  for (int k = 0; k <= x.dim(); ++k) {
    std::vector<int> c(x.size(k));
    for (std::size_t v = 0; v < c.size(); ++v) {
      c[v] = static_cast<int>(v);
    }
    f.components.push_back(std::move(c));
  }
  return f;
}

SimplicialMap compose(SimplicialMap const& f, SimplicialMap const& g) {
  if (f.components.size() != g.components.size()) {
    throw InvalidArgument("compose: simplicial maps of different dimension");
  }
  SimplicialMap out;
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    std::vector<int> c;
    for (int v : f.components[k]) {
      c.push_back(g.components[k].at(uz(v)));
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

ReflQuiver one_truncation(TruncSSet const& x) {
  if (x.dim() < 1) {
    throw InvalidArgument("one_truncation: needs dimension at least 1");
  }
  ReflQuiver q;
  q.quiver.vertices = x.names(0);
  for (int e = 0; e < static_cast<int>(x.size(1)); ++e) {
    q.quiver.edges.push_back(Edge{x.name(1, e), x.face(1, 1, e), x.face(1, 0, e)});
  }
  q.refl = x.degen_map(0, 0);
  return q;
}

Path spine(TruncSSet const& x, int k, int simplex) {
  if (k < 0 || k > x.dim()) {
    throw InvalidArgument("spine: level out of range");
  }
  Path p{act(x, MonotoneMap(0, k, {0}), simplex), {}};
  for (int i = 0; i < k; ++i) {
    p.edges.push_back(act(x, MonotoneMap(1, k, {i, i + 1}), simplex));
  }
  return p;
}

TruncSSet truncate(TruncSSet const& x, int m) {
  if (m < 0 || m > x.dim()) {
    throw InvalidArgument("truncate: bound out of range");
  }
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<std::vector<int>>> faces;
  std::vector<std::vector<std::vector<int>>> degens;
  for (int k = 0; k <= m; ++k) {
    names.push_back(x.names(k));
    std::vector<std::vector<int>> fk;
    for (int i = 0; k > 0 && i <= k; ++i) {
      fk.push_back(x.face_map(k, i));
    }
    faces.push_back(std::move(fk));
    if (k < m) {
      std::vector<std::vector<int>> dk;
      for (int i = 0; i <= k; ++i) {
        dk.push_back(x.degen_map(k, i));
      }
      degens.push_back(std::move(dk));
    }
  }
  return TruncSSet(m, std::move(names), std::move(faces), std::move(degens));
}

SimplicialMap truncate(SimplicialMap const& f, int m) {
  if (m < 0 || uz(m) >= f.components.size()) {
    throw InvalidArgument("truncate: bound out of range");
  }
  return SimplicialMap{{f.components.begin(), f.components.begin() + m + 1}};
}

std::vector<SimplicialMap> enumerate_maps(TruncSSet const& x, TruncSSet const& y,
                                          std::size_t guard) {
  if (x.dim() != y.dim()) {
    throw InvalidArgument("enumerate_maps: dimensions differ");
  }
  int n = x.dim();
  // For each simplex, the (source, index) pairs of degeneracies hitting it.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> degen_sources(uz(n) + 1);
  for (int k = 0; k <= n; ++k) {
    degen_sources[uz(k)].resize(x.size(k));
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i <= k; ++i) {
      for (int v = 0; v < static_cast<int>(x.size(k)); ++v) {
        degen_sources[uz(k + 1)][uz(x.degen(k, i, v))].emplace_back(v, i);
      }
    }
  }
  std::vector<SimplicialMap> out;
  SimplicialMap cur;
  for (int k = 0; k <= n; ++k) {
    cur.components.emplace_back(x.size(k), -1);
  }
  std::size_t nodes = 0;
  auto fits = [&](int k, int v, int w) {
    for (int i = 0; k > 0 && i <= k; ++i) {
      if (y.face(k, i, w) != cur.components[uz(k - 1)][uz(x.face(k, i, v))]) {
        return false;
      }
    }
    for (auto [src, i] : degen_sources[uz(k)][uz(v)]) {
      if (y.degen(k - 1, i, cur.components[uz(k - 1)][uz(src)]) != w) {
        return false;
      }
    }
    return true;
  };
  std::function<void(int, int)> assign = [&](int k, int v) {
    if (k > n) {
      out.push_back(cur);
      return;
    }
    if (v == static_cast<int>(x.size(k))) {
      assign(k + 1, 0);
      return;
    }
    for (int w = 0; w < static_cast<int>(y.size(k)); ++w) {
      if (++nodes > guard) {
        throw GuardExceeded("enumerate_maps: search exceeded guard of " + std::to_string(guard) +
                            " nodes");
      }
      if (fits(k, v, w)) {
        cur.components[uz(k)][uz(v)] = w;
        assign(k, v + 1);
      }
    }
    cur.components[uz(k)][uz(v)] = -1;
  };
  assign(0, 0);
  return out;
}

TruncSSet simplex_subcomplex(int p, int max_image, int dim) {
  if (p < 0 || dim < 0 || dim > max_simplex_dim) {
    throw InvalidArgument("simplex_subcomplex: bad arguments");
  }
  std::vector<std::vector<MonotoneMap>> levels;
  std::vector<std::map<MonotoneMap, int>> index(uz(dim) + 1);
  std::vector<std::vector<std::string>> names;
  for (int k = 0; k <= dim; ++k) {
    std::vector<MonotoneMap> level;
    std::vector<std::string> level_names;
    for (auto& a : enumerate({k}, {p})) {
      auto const& v = a.values();
      std::vector<int> copy = v;
      auto count = std::unique(copy.begin(), copy.end()) - copy.begin();
      if (count > max_image + 1) {
        continue;
      }
      std::string name;
      for (int x : v) {
        name += std::to_string(x);
      }
      index[uz(k)].emplace(a, static_cast<int>(level.size()));
      level.push_back(std::move(a));
      level_names.push_back(std::move(name));
    }
    levels.push_back(std::move(level));
    names.push_back(std::move(level_names));
  }
  std::vector<std::vector<std::vector<int>>> faces(uz(dim) + 1);
  std::vector<std::vector<std::vector<int>>> degens(uz(dim));
  for (int k = 1; k <= dim; ++k) {
    for (int i = 0; i <= k; ++i) {
      std::vector<int> m;
      for (auto const& a : levels[uz(k)]) {
        m.push_back(index[uz(k - 1)].at(compose(delta(i, k - 1), a)));
      }
      faces[uz(k)].push_back(std::move(m));
    }
  }
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i <= k; ++i) {
      std::vector<int> m;
      for (auto const& a : levels[uz(k)]) {
        m.push_back(index[uz(k + 1)].at(compose(sigma(i, k), a)));
      }
      degens[uz(k)].push_back(std::move(m));
    }
  }
  return TruncSSet(dim, std::move(names), std::move(faces), std::move(degens));
}

TruncSSet standard_simplex(int p, int dim) { return simplex_subcomplex(p, p, dim); }

}  // namespace catnerve
