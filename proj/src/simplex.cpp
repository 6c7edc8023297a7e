#include "catnerve/simplex.hpp"

#include <algorithm>

#include "catnerve/error.hpp"

namespace catnerve {

MonotoneMap::MonotoneMap(int src, int tgt, std::vector<int> values)
    : src_(src), tgt_(tgt), values_(std::move(values)) {
  if (src < 0 || tgt < 0) {
    throw InvalidArgument("MonotoneMap: negative ordinal");
  }
  if (values_.size() != static_cast<std::size_t>(src) + 1) {
    throw InvalidArgument("MonotoneMap: expected " + std::to_string(src + 1) +
                          " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > tgt) {
      throw InvalidArgument("MonotoneMap: value out of range in " + to_string());
    }
    if (i > 0 && values_[i - 1] > values_[i]) {
      throw InvalidArgument("MonotoneMap: not monotone: " + to_string());
    }
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    v[static_cast<std::size_t>(i)] = i;
  }
  return MonotoneMap(n, n, std::move(v));
}

bool MonotoneMap::is_injective() const noexcept {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool MonotoneMap::is_surjective() const noexcept {
  return values_.front() == 0 && values_.back() == tgt_ &&
         std::adjacent_find(values_.begin(), values_.end(),
                            [](int a, int b) { return b > a + 1; }) == values_.end();
}

std::string MonotoneMap::to_string() const {
  std::string s = "[" + std::to_string(src_) + "]->[" + std::to_string(tgt_) + "](";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += std::to_string(values_[i]);
  }
  return s + ")";
}

MonotoneMap compose(MonotoneMap const& f, MonotoneMap const& g) {
  if (f.tgt() != g.src()) {
    throw InvalidArgument("compose: endpoint mismatch " + f.to_string() + " then " +
                          g.to_string());
  }
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) {
    v.push_back(g(x));
  }
  return MonotoneMap(f.src(), g.tgt(), std::move(v));
}

MonotoneMap delta(int i, int n) {
  if (n < 0 || i < 0 || i > n + 1) {
    throw InvalidArgument("delta: index " + std::to_string(i) + " out of range for [" +
                          std::to_string(n) + "]");
  }
  std::vector<int> v;
  for (int j = 0; j <= n; ++j) {
    v.push_back(j < i ? j : j + 1);
  }
  return MonotoneMap(n, n + 1, std::move(v));
}

MonotoneMap sigma(int i, int n) {
  if (n < 0 || i < 0 || i > n) {
    throw InvalidArgument("sigma: index " + std::to_string(i) + " out of range for [" +
                          std::to_string(n) + "]");
  }
  std::vector<int> v;
  for (int j = 0; j <= n + 1; ++j) {
    v.push_back(j <= i ? j : j - 1);
  }
  return MonotoneMap(n + 1, n, std::move(v));
}

std::vector<MonotoneMap> enumerate(SimplexOb m, SimplexOb n) {
  if (m.len < 0 || n.len < 0) {
    throw InvalidArgument("enumerate: negative ordinal");
  }
  std::vector<MonotoneMap> out;
  std::vector<int> v(static_cast<std::size_t>(m.len) + 1, 0);
  // Odometer over weakly increasing sequences, lexicographic order.
  while (true) {
    out.emplace_back(m.len, n.len, v);
    int pos = m.len;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == n.len) {
      --pos;
    }
    if (pos < 0) {
      break;
    }
    int next = v[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k <= m.len; ++k) {
      v[static_cast<std::size_t>(k)] = next;
    }
  }
  return out;
}

std::vector<MonotoneMap> enumerate_all(int bound) {
  std::vector<MonotoneMap> out;
  for (int m = 0; m <= bound; ++m) {
    for (int n = 0; n <= bound; ++n) {
      auto maps = enumerate({m}, {n});
      out.insert(out.end(), maps.begin(), maps.end());
    }
  }
  return out;
}

EpiMono epi_mono_factor(MonotoneMap const& f) {
  auto const& v = f.values();
  std::vector<int> image;
  std::vector<int> epi_values;
  std::vector<int> sigmas;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (image.empty() || image.back() != v[i]) {
      image.push_back(v[i]);
    } else {
      sigmas.push_back(static_cast<int>(i) - 1);
    }
    epi_values.push_back(static_cast<int>(image.size()) - 1);
  }
  int k = static_cast<int>(image.size()) - 1;
  std::vector<int> deltas;
  for (int j = f.tgt(); j >= 0; --j) {
    if (!std::binary_search(image.begin(), image.end(), j)) {
      deltas.push_back(j);
    }
  }
  return EpiMono{MonotoneMap(f.src(), k, std::move(epi_values)),
                 MonotoneMap(k, f.tgt(), std::move(image)), std::move(sigmas),
                 std::move(deltas)};
}

MonotoneMap recompose(int src, EpiMono const& factors) {
  // Applicative composites are built innermost first, i.e. the diagrammatic
  // order is the reverse of each list.
  MonotoneMap acc = MonotoneMap::identity(src);
  for (auto it = factors.sigmas.rbegin(); it != factors.sigmas.rend(); ++it) {
    acc = compose(acc, sigma(*it, acc.tgt() - 1));
  }
  for (auto it = factors.deltas.rbegin(); it != factors.deltas.rend(); ++it) {
    acc = compose(acc, delta(*it, acc.tgt()));
  }
  return acc;
}

}  // namespace catnerve
