#include "catnerve/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "catnerve/error.hpp"

namespace catnerve {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

bool matches_at(Word const& w, std::size_t pos, Word const& pattern) {
  return pos + pattern.size() <= w.size() &&
         std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<long>(pos));
}

Word splice(Word const& w, std::size_t pos, std::size_t len, Word const& insert) {
  Word out(w.begin(), w.begin() + static_cast<long>(pos));
  out.insert(out.end(), insert.begin(), insert.end());
  out.insert(out.end(), w.begin() + static_cast<long>(pos + len), w.end());
  return out;
}

/// Finds the leftmost-innermost redex: the one ending earliest, shortest
/// left side first, lowest rule id on ties.
bool find_redex(std::vector<Rule> const& rules, Word const& w, RewriteStep& step) {
  for (std::size_t end = 1; end <= w.size(); ++end) {
    std::size_t best_len = 0;
    bool found = false;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      auto len = rules[r].lhs.size();
      if (len == 0 || len > end) {
        continue;
      }
      if ((!found || len < best_len) && matches_at(w, end - len, rules[r].lhs)) {
        found = true;
        best_len = len;
        step = {end - len, r};
      }
    }
    if (found) {
      return true;
    }
  }
  return false;
}

Word rewrite_word(std::vector<Rule> const& rules, Word w, RewriteTrace* trace) {
  RewriteStep step;
  while (find_redex(rules, w, step)) {
    auto const& rule = rules[step.rule];
    w = splice(w, step.position, rule.lhs.size(), rule.rhs);
    if (trace != nullptr) {
      trace->push_back(step);
    }
  }
  return w;
}

bool reducible(std::vector<Rule> const& rules, Word const& w) {
  RewriteStep step;
  return find_redex(rules, w, step);
}

class Completion {
 public:
  explicit Completion(std::size_t fuel) : fuel_(fuel) {}

  void add_equation(Word u, Word v, std::string origin) {
    u = rewrite_word(rules_, std::move(u), nullptr);
    v = rewrite_word(rules_, std::move(v), nullptr);
    if (u == v) {
      return;
    }
    if (shortlex_less(u, v)) {
      std::swap(u, v);
    }
    std::size_t k = rules_.size();
    rules_.push_back(Rule{std::move(u), std::move(v), std::move(origin)});
    for (std::size_t r = 0; r <= k; ++r) {
      pending_.emplace_back(k, r);
      if (r != k) {
        pending_.emplace_back(r, k);
      }
    }
  }

  /// Returns true iff every critical pair was processed within the fuel.
  bool run() {
    while (!pending_.empty()) {
      if (used_ >= fuel_) {
        return false;
      }
      auto [a, b] = pending_.front();
      pending_.pop_front();
      ++used_;
      resolve(a, b);
    }
    return true;
  }

  std::vector<Rule>& rules() { return rules_; }
  std::size_t used() const { return used_; }

 private:
  void resolve(std::size_t a, std::size_t b) {
    // Copies: add_equation may reallocate rules_.
    Word la = rules_[a].lhs;
    Word ra = rules_[a].rhs;
    Word lb = rules_[b].lhs;
    Word rb = rules_[b].rhs;
    std::string tag = "overlap(" + std::to_string(a) + "," + std::to_string(b) + ")";
    // lb inside la
    if (a != b && lb.size() <= la.size()) {
      for (std::size_t p = 0; p + lb.size() <= la.size(); ++p) {
        if (matches_at(la, p, lb)) {
          add_equation(ra, splice(la, p, lb.size(), rb), tag);
        }
      }
    }
    // proper suffix of la equal to a proper prefix of lb
    std::size_t max_overlap = std::min(la.size(), lb.size());
    for (std::size_t o = 1; o < max_overlap; ++o) {
      if (std::equal(la.end() - static_cast<long>(o), la.end(), lb.begin())) {
        Word left = ra;
        left.insert(left.end(), lb.begin() + static_cast<long>(o), lb.end());
        Word right(la.begin(), la.end() - static_cast<long>(o));
        right.insert(right.end(), rb.begin(), rb.end());
        add_equation(std::move(left), std::move(right), tag);
      }
    }
  }

  std::size_t fuel_;
  std::size_t used_ = 0;
  std::vector<Rule> rules_;
  std::deque<std::pair<std::size_t, std::size_t>> pending_;
};

/// Interreduction of a convergent system: drop rules whose left side is
/// reducible by another rule, then normalize right sides.
std::vector<Rule> interreduce(std::vector<Rule> const& rules) {
  std::vector<Rule> kept;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < rules.size() && !redundant; ++j) {
      if (i == j) {
        continue;
      }
      auto const& li = rules[i].lhs;
      auto const& lj = rules[j].lhs;
      if (lj.size() > li.size() || (lj == li && j > i)) {
        continue;
      }
      for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
        if (matches_at(li, p, lj)) {
          redundant = true;
          break;
        }
      }
    }
    if (!redundant) {
      kept.push_back(rules[i]);
    }
  }
  for (auto& rule : kept) {
    rule.rhs = rewrite_word(rules, rule.rhs, nullptr);
  }
  return kept;
}

}  // namespace

bool shortlex_less(Word const& a, Word const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

FpCat orient_and_complete(Presentation presentation, std::size_t fuel) {
  auto report = validate(presentation.quiver);
  if (!report) {
    throw InvalidArgument("presentation: " + report.notes.front());
  }
  auto const& q = presentation.quiver;
  for (std::size_t i = 0; i < presentation.relations.size(); ++i) {
    auto const& rel = presentation.relations[i];
    if (!is_path(q, rel.lhs) || !is_path(q, rel.rhs)) {
      throw InvalidArgument("relation " + std::to_string(i) + " is not made of paths");
    }
    if (rel.lhs.start != rel.rhs.start || path_end(q, rel.lhs) != path_end(q, rel.rhs)) {
      throw InvalidArgument("relation " + format_path(q, rel.lhs) + " = " +
                            format_path(q, rel.rhs) + " has mismatched endpoints");
    }
  }
  Completion completion(fuel);
  for (std::size_t i = 0; i < presentation.relations.size(); ++i) {
    auto const& rel = presentation.relations[i];
    completion.add_equation(rel.lhs.edges, rel.rhs.edges, "relation " + std::to_string(i));
  }
  FpCat c;
  c.complete_ = completion.run();
  c.fuel_ = fuel;
  c.fuel_used_ = completion.used();
  c.rules_ = c.complete_ ? interreduce(completion.rules()) : std::move(completion.rules());
  c.presentation_ = std::move(presentation);
  return c;
}

Path FpCat::normalize(Path const& p, RewriteTrace* trace) const {
  if (!is_path(quiver(), p)) {
    throw InvalidArgument("normalize: not a path over the generators");
  }
  return Path{p.start, rewrite_word(rules_, p.edges, trace)};
}

bool FpCat::is_normal(Path const& p) const { return !reducible(rules_, p.edges); }

std::vector<int> FpCat::reduced_generators() const {
  std::vector<int> out;
  for (std::size_t e = 0; e < generator_count(); ++e) {
    if (!reducible(rules_, Word{static_cast<int>(e)})) {
      out.push_back(static_cast<int>(e));
    }
  }
  return out;
}

std::vector<std::size_t> FpCat::relation_rules() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    if (rules_[r].lhs.size() >= 2) {
      out.push_back(r);
    }
  }
  return out;
}

Path normalize(FpCat const& c, Path const& p) { return c.normalize(p); }

std::string to_string(EqVerdict v) {
  switch (v.kind) {
    case EqVerdict::Kind::equal:
      return "Equal";
    case EqVerdict::Kind::not_equal:
      return "NotEqual";
    case EqVerdict::Kind::unknown:
      return v.reason == UnknownReason::fuel_exhausted ? "Unknown(fuel-exhausted)"
                                                       : "Unknown(non-confluent)";
  }
  return "?";
}

namespace {

/// Words reachable from `w` by one rule application in either direction,
/// capped at `max_len` letters.
std::vector<Word> neighbours(FpCat const& c, int start, Word const& w, std::size_t max_len) {
  auto const& q = c.quiver();
  std::vector<Word> out;
  // vertex before position i
  std::vector<int> at(w.size() + 1);
  at[0] = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    at[i + 1] = q.edges[uz(w[i])].tgt;
  }
  for (auto const& rule : c.rules()) {
    for (std::size_t p = 0; p + rule.lhs.size() <= w.size(); ++p) {
      if (matches_at(w, p, rule.lhs)) {
        out.push_back(splice(w, p, rule.lhs.size(), rule.rhs));
      }
    }
    if (rule.rhs.size() > w.size() ||
        w.size() - rule.rhs.size() + rule.lhs.size() > max_len) {
      continue;
    }
    int lhs_start = q.edges[uz(rule.lhs.front())].src;
    for (std::size_t p = 0; p + rule.rhs.size() <= w.size(); ++p) {
      if (rule.rhs.empty() ? at[p] == lhs_start : matches_at(w, p, rule.rhs)) {
        out.push_back(splice(w, p, rule.rhs.size(), rule.lhs));
      }
    }
  }
  return out;
}

}  // namespace

EqVerdict eq(FpCat const& c, Path const& p, Path const& q) {
  auto const& quiver = c.quiver();
  if (!is_path(quiver, p) || !is_path(quiver, q)) {
    throw InvalidArgument("eq: arguments must be paths over the generators");
  }
  if (p.start != q.start || path_end(quiver, p) != path_end(quiver, q)) {
    throw InvalidArgument("eq: " + c.format(p) + " and " + c.format(q) + " are not parallel");
  }
  auto np = c.normalize(p);
  auto nq = c.normalize(q);
  if (np == nq) {
    return EqVerdict::equal();
  }
  if (c.complete()) {
    return EqVerdict::not_equal();
  }
  std::size_t max_lhs = 0;
  for (auto const& r : c.rules()) {
    max_lhs = std::max(max_lhs, r.lhs.size());
  }
  std::size_t cap = std::max(np.length(), nq.length()) + max_lhs;
  std::set<Word> seen[2] = {{np.edges}, {nq.edges}};
  std::vector<Word> frontier[2] = {{np.edges}, {nq.edges}};
  std::size_t budget = c.fuel();
  while (!frontier[0].empty() || !frontier[1].empty()) {
    for (int side = 0; side < 2; ++side) {
      std::vector<Word> next;
      for (auto const& w : frontier[side]) {
        for (auto& n : neighbours(c, p.start, w, cap)) {
          if (seen[1 - side].contains(n)) {
            return EqVerdict::equal();
          }
          if (seen[side].insert(n).second) {
            if (budget == 0) {
              return EqVerdict::unknown(UnknownReason::fuel_exhausted);
            }
            --budget;
            next.push_back(std::move(n));
          }
        }
      }
      frontier[side] = std::move(next);
    }
  }
  return EqVerdict::unknown(UnknownReason::non_confluent);
}

Path replay(FpCat const& c, Path const& p, RewriteTrace const& trace) {
  if (!is_path(c.quiver(), p)) {
    throw InvalidArgument("replay: not a path");
  }
  Word w = p.edges;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    auto const& step = trace[i];
    if (step.rule >= c.rules().size()) {
      throw InvalidArgument("replay: step " + std::to_string(i) + " names unknown rule");
    }
    auto const& rule = c.rules()[step.rule];
    if (!matches_at(w, step.position, rule.lhs)) {
      throw InvalidArgument("replay: step " + std::to_string(i) + " does not match rule " +
                            std::to_string(step.rule));
    }
    w = splice(w, step.position, rule.lhs.size(), rule.rhs);
  }
  return Path{p.start, std::move(w)};
}

std::string serialize_trace(RewriteTrace const& trace) {
  std::string out;
  for (auto const& s : trace) {
    out += std::to_string(s.position) + " " + std::to_string(s.rule) + "\n";
  }
  return out;
}

RewriteTrace parse_trace(std::string const& text) {
  RewriteTrace out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::istringstream ls(line);
    long long pos = -1;
    long long rule = -1;
    std::string rest;
    if (!(ls >> pos >> rule) || pos < 0 || rule < 0 || (ls >> rest)) {
      throw ParseError("expected '<position> <rule id>'", line_no, 1);
    }
    out.push_back({static_cast<std::size_t>(pos), static_cast<std::size_t>(rule)});
  }
  return out;
}

std::vector<Path> normal_forms_up_to(FpCat const& c, std::size_t max_length) {
  auto const& q = c.quiver();
  std::vector<Path> out;
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    layer.push_back(Path{static_cast<int>(v), {}});
  }
  out.insert(out.end(), layer.begin(), layer.end());
  for (std::size_t len = 1; len <= max_length && !layer.empty(); ++len) {
    std::vector<Path> next;
    for (auto const& p : layer) {
      int end = path_end(q, p);
      for (std::size_t e = 0; e < q.edges.size(); ++e) {
        if (q.edges[e].src != end) {
          continue;
        }
        Path ext = p;
        ext.edges.push_back(static_cast<int>(e));
        // Prefixes are already irreducible, so only suffix redexes matter.
        bool irreducible = true;
        for (auto const& rule : c.rules()) {
          auto n = rule.lhs.size();
          if (n <= ext.edges.size() && matches_at(ext.edges, ext.edges.size() - n, rule.lhs)) {
            irreducible = false;
            break;
          }
        }
        if (irreducible) {
          next.push_back(std::move(ext));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

int FinitizedCat::morphism_of(FpCat const& c, Path const& p) const {
  auto it = index.find(c.normalize(p));
  if (it == index.end()) {
    throw InvalidArgument("morphism_of: normal form not in the materialized category");
  }
  return it->second;
}

FinitizedCat to_fincat(FpCat const& c, std::size_t bound) {
  if (!c.complete()) {
    throw InvalidArgument("to_fincat: rewriting system is not complete");
  }
  auto const& q = c.quiver();
  auto forms = normal_forms_up_to(c, bound);
  for (auto const& p : forms) {
    if (p.length() == bound) {
      throw NonFinitableError("hom-set " + q.vertices[uz(p.start)] + " -> " +
                              q.vertices[uz(path_end(q, p))] + " has a normal form of length " +
                              std::to_string(bound) + " (" + c.format(p) + ")");
    }
  }
  std::sort(forms.begin(), forms.end(), [&](Path const& a, Path const& b) {
    auto ka = std::make_tuple(a.start, path_end(q, a), a.length());
    auto kb = std::make_tuple(b.start, path_end(q, b), b.length());
    if (ka != kb) {
      return ka < kb;
    }
    return a.edges < b.edges;
  });
  FinitizedCat out;
  std::vector<MorphismInfo> morphisms;
  std::vector<int> identities(q.vertices.size(), -1);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto const& p = forms[i];
    out.index.emplace(p, static_cast<int>(i));
    morphisms.push_back({c.format(p), p.start, path_end(q, p)});
    if (p.empty()) {
      identities[uz(p.start)] = static_cast<int>(i);
    }
  }
  auto m = forms.size();
  std::vector<int> table(m * m, -1);
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      if (morphisms[f].tgt == morphisms[g].src) {
        table[f * m + g] = out.index.at(c.normalize(concat(q, forms[f], forms[g])));
      }
    }
  }
  out.category = FinCat(q.vertices, std::move(morphisms), std::move(identities), std::move(table));
  out.normal_forms = std::move(forms);
  return out;
}

int evaluate(FpFunctor const& f, FpCat const& c, FinCat const& d, Path const& p) {
  if (!is_path(c.quiver(), p)) {
    throw InvalidArgument("evaluate: not a path");
  }
  int acc = d.identity(f.object_map.at(uz(p.start)));
  for (int e : p.edges) {
    acc = d.compose(acc, f.generator_map.at(uz(e)));
  }
  return acc;
}

bool respects_relations(FpFunctor const& f, FpCat const& c, FinCat const& d) {
  auto const& q = c.quiver();
  if (f.object_map.size() != q.vertices.size() || f.generator_map.size() != q.edges.size()) {
    return false;
  }
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    int g = f.generator_map[e];
    if (g < 0 || uz(g) >= d.morphism_count() || d.src(g) != f.object_map[uz(q.edges[e].src)] ||
        d.tgt(g) != f.object_map[uz(q.edges[e].tgt)]) {
      return false;
    }
  }
  for (auto const& rel : c.presentation().relations) {
    if (evaluate(f, c, d, rel.lhs) != evaluate(f, c, d, rel.rhs)) {
      return false;
    }
  }
  return true;
}

std::vector<FpFunctor> enumerate_fp_functors(FpCat const& c, FinCat const& d, std::size_t guard) {
  auto const& q = c.quiver();
  auto const& relations = c.presentation().relations;
  auto nv = q.vertices.size();
  auto ne = q.edges.size();
  // A relation is checked when its highest generator is assigned; relations
  // between identities only are checked once objects are placed.
  std::vector<std::vector<std::size_t>> checks(ne + 1);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    int last = -1;
    for (int e : relations[r].lhs.edges) {
      last = std::max(last, e);
    }
    for (int e : relations[r].rhs.edges) {
      last = std::max(last, e);
    }
    checks[last < 0 ? ne : uz(last)].push_back(r);
  }
  std::vector<FpFunctor> out;
  FpFunctor cur{std::vector<int>(nv, -1), std::vector<int>(ne, -1)};
  std::size_t nodes = 0;
  auto tick = [&] {
    if (++nodes > guard) {
      throw GuardExceeded("enumerate_fp_functors: search exceeded guard of " +
                          std::to_string(guard) + " nodes");
    }
  };
  auto holds = [&](std::size_t r) {
    return evaluate(cur, c, d, relations[r].lhs) == evaluate(cur, c, d, relations[r].rhs);
  };
  std::function<void(std::size_t)> assign_generator = [&](std::size_t e) {
    if (e == ne) {
      out.push_back(cur);
      return;
    }
    auto const& edge = q.edges[e];
    for (int g : d.hom(cur.object_map[uz(edge.src)], cur.object_map[uz(edge.tgt)])) {
      tick();
      cur.generator_map[e] = g;
      if (std::all_of(checks[e].begin(), checks[e].end(), holds)) {
        assign_generator(e + 1);
      }
    }
    cur.generator_map[e] = -1;
  };
  std::function<void(std::size_t)> assign_object = [&](std::size_t v) {
    if (v == nv) {
      if (std::all_of(checks[ne].begin(), checks[ne].end(), holds)) {
        assign_generator(0);
      }
      return;
    }
    for (std::size_t b = 0; b < d.object_count(); ++b) {
      tick();
      cur.object_map[v] = static_cast<int>(b);
      bool ok = true;
      for (auto const& edge : q.edges) {
        auto s = uz(edge.src);
        auto t = uz(edge.tgt);
        if (std::max(s, t) == v && d.hom(cur.object_map[s], cur.object_map[t]).empty()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        assign_object(v + 1);
      }
    }
    cur.object_map[v] = -1;
  };
  assign_object(0);
  return out;
}

}  // namespace catnerve

namespace catnerve {

namespace {

std::optional<Path> map_path(std::vector<int> const& objects, std::vector<int> const& gens,
                             Path const& p) {
  Path out{objects.at(static_cast<std::size_t>(p.start)), {}};
  for (int e : p.edges) {
    int img = gens.at(static_cast<std::size_t>(e));
    if (img < 0) {
      return std::nullopt;
    }
    out.edges.push_back(img);
  }
  return out;
}

bool relations_transfer(FpCat const& a, FpCat const& b, std::vector<int> const& objects,
                        std::vector<int> const& gens) {
  for (auto r : a.relation_rules()) {
    auto const& rule = a.rules()[r];
    int start = a.quiver().edges[static_cast<std::size_t>(rule.lhs.front())].src;
    auto lhs = map_path(objects, gens, Path{start, rule.lhs});
    auto rhs = map_path(objects, gens, Path{start, rule.rhs});
    if (!lhs || !rhs || !is_path(b.quiver(), *lhs) || !is_path(b.quiver(), *rhs) ||
        path_end(b.quiver(), *lhs) != path_end(b.quiver(), *rhs) || !eq(b, *lhs, *rhs).is_equal()) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<PresentationMatch> match_presentations(FpCat const& a, FpCat const& b,
                                                     std::size_t guard) {
  if (!a.complete() || !b.complete() || a.object_count() != b.object_count()) {
    return std::nullopt;
  }
  auto ga = a.reduced_generators();
  auto gb = b.reduced_generators();
  if (ga.size() != gb.size() || a.relation_rules().size() != b.relation_rules().size()) {
    return std::nullopt;
  }
  auto n = a.object_count();
  std::vector<int> objects(n);
  for (std::size_t i = 0; i < n; ++i) {
    objects[i] = static_cast<int>(i);
  }
  std::size_t nodes = 0;
  std::optional<PresentationMatch> found;
  do {
    std::vector<int> gens(a.generator_count(), -1);
    std::vector<bool> used(b.generator_count(), false);
    std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
      if (k == ga.size()) {
        std::vector<int> inverse_objects(n);
        for (std::size_t i = 0; i < n; ++i) {
          inverse_objects[static_cast<std::size_t>(objects[i])] = static_cast<int>(i);
        }
        std::vector<int> inverse_gens(b.generator_count(), -1);
        for (int e : ga) {
          inverse_gens[static_cast<std::size_t>(gens[static_cast<std::size_t>(e)])] = e;
        }
        return relations_transfer(a, b, objects, gens) &&
               relations_transfer(b, a, inverse_objects, inverse_gens);
      }
      auto const& edge = a.quiver().edges[static_cast<std::size_t>(ga[k])];
      for (int cand : gb) {
        auto const& target = b.quiver().edges[static_cast<std::size_t>(cand)];
        if (used[static_cast<std::size_t>(cand)] ||
            target.src != objects[static_cast<std::size_t>(edge.src)] ||
            target.tgt != objects[static_cast<std::size_t>(edge.tgt)]) {
          continue;
        }
        if (++nodes > guard) {
          throw GuardExceeded("match_presentations: search exceeded guard");
        }
        used[static_cast<std::size_t>(cand)] = true;
        gens[static_cast<std::size_t>(ga[k])] = cand;
        if (assign(k + 1)) {
          return true;
        }
        used[static_cast<std::size_t>(cand)] = false;
        gens[static_cast<std::size_t>(ga[k])] = -1;
      }
      return false;
    };
    if (assign(0)) {
      found = PresentationMatch{objects, gens};
      break;
    }
  } while (std::next_permutation(objects.begin(), objects.end()));
  return found;
}

}  // namespace catnerve
