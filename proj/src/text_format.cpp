#include "catnerve/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "catnerve/error.hpp"
#include "catnerve/quiverkit.hpp"

namespace catnerve {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

enum class Tok { word, punct, newline, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

bool is_special(char ch) {
  return ch == '{' || ch == '}' || ch == ':' || ch == ';' || ch == ',' || ch == '=' || ch == '.';
}

std::vector<Token> tokenize(std::string const& text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') {
        advance(1);
      }
    } else if (ch == '\n') {
      out.push_back({Tok::newline, "\\n", line, col});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
    } else if (text.compare(i, 2, "->") == 0) {
      out.push_back({Tok::punct, "->", line, col});
      advance(2);
    } else if (is_special(ch)) {
      out.push_back({Tok::punct, std::string(1, ch), line, col});
      advance(1);
    } else {
      Token t{Tok::word, "", line, col};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             !is_special(text[i]) && text[i] != '#' && text.compare(i, 2, "->") != 0) {
        t.text += text[i];
        advance(1);
      }
      out.push_back(std::move(t));
    }
  }
  out.push_back({Tok::end, "end of input", line, col});
  return out;
}

/// A reference to a name together with where it was written.
struct Name {
  std::string text;
  Token at;
};

struct Mapping {
  Name from;
  Name to;  // a path for gen entries
};

struct ArrowSpec {
  std::vector<Mapping> obj;
  std::vector<Mapping> gen;
  std::map<int, std::vector<Mapping>> levels;
  Token at;
};

class Parser {
 public:
  Parser(Workspace& ws, std::string const& text) : ws_(ws), toks_(tokenize(text)) {}

  std::vector<std::string> run() {
    std::vector<std::string> names;
    skip_newlines();
    while (peek().kind != Tok::end) {
      auto kw = expect_word("a declaration keyword");
      if (kw.text == "category") {
        names.push_back(category());
      } else if (kw.text == "sset") {
        names.push_back(sset());
      } else if (kw.text == "diagram") {
        names.push_back(diagram());
      } else if (kw.text == "cocone") {
        names.push_back(cocone());
      } else {
        fail(kw, "unknown declaration '" + kw.text + "'");
      }
      skip_newlines();
    }
    return names;
  }

 private:
  Token const& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] static void fail(Token const& t, std::string const& msg) {
    throw ParseError(msg, t.line, t.column);
  }

  bool at_punct(char const* p) const { return peek().kind == Tok::punct && peek().text == p; }

  void skip_newlines() {
    while (peek().kind == Tok::newline || at_punct(";")) {
      next();
    }
  }

  Token expect_word(std::string const& what) {
    auto t = next();
    if (t.kind != Tok::word) {
      fail(t, "expected " + what + ", found '" + t.text + "'");
    }
    return t;
  }

  Token expect(char const* p) {
    auto t = next();
    if (t.kind != Tok::punct || t.text != p) {
      fail(t, std::string("expected '") + p + "', found '" + t.text + "'");
    }
    return t;
  }

  int expect_int(std::string const& what) {
    auto t = expect_word(what);
    if (t.text.empty() ||
        !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(c); })) {
      fail(t, "expected " + what + ", found '" + t.text + "'");
    }
    return std::stoi(t.text);
  }

  bool statement_end() const {
    return peek().kind == Tok::newline || peek().kind == Tok::end || at_punct(";") ||
           at_punct("}");
  }

  void end_statement() {
    if (!statement_end()) {
      fail(peek(), "unexpected '" + peek().text + "'");
    }
  }

  /// item (',' newline* item)*
  template <typename F>
  void comma_list(F item) {
    if (statement_end()) {
      return;
    }
    item();
    while (at_punct(",")) {
      next();
      while (peek().kind == Tok::newline) {
        next();
      }
      item();
    }
    end_statement();
  }

  Name path_text() {
    auto first = expect_word("a path");
    Name n{first.text, first};
    while (at_punct(".")) {
      next();
      n.text += "." + expect_word("an arrow name").text;
    }
    return n;
  }

  void bind(Token const& at, std::string const& name, Value value) {
    if (ws_.find(name)) {
      fail(at, "name '" + name + "' is already bound");
    }
    ws_.add(Binding{name, std::move(value), std::to_string(at.line)});
  }

  Binding const& lookup(Token const& t) {
    auto const* b = ws_.find(t.text);
    if (!b) {
      fail(t, "unknown name '" + t.text + "'");
    }
    return *b;
  }

  // ---- category ------------------------------------------------------------

  std::string category() {
    auto name = expect_word("a category name");
    expect("{");
    std::vector<Token> objects;
    std::vector<std::tuple<Token, Token, Token>> arrows;
    std::vector<std::pair<Name, Name>> relations;
    std::vector<std::tuple<Token, Token, Token>> table;
    bool presented = false;
    skip_newlines();
    while (!at_punct("}")) {
      auto section = expect_word("a section name");
      expect(":");
      if (section.text == "objects") {
        while (!statement_end()) {
          objects.push_back(expect_word("an object name"));
        }
      } else if (section.text == "arrows") {
        comma_list([&] {
          auto a = expect_word("an arrow name");
          expect(":");
          auto s = expect_word("a source object");
          expect("->");
          auto t = expect_word("a target object");
          arrows.emplace_back(a, s, t);
        });
      } else if (section.text == "relations") {
        presented = true;
        comma_list([&] {
          auto l = path_text();
          expect("=");
          relations.emplace_back(l, path_text());
        });
      } else if (section.text == "table") {
        comma_list([&] {
          auto f = expect_word("an arrow name");
          expect(".");
          auto g = expect_word("an arrow name");
          expect("=");
          table.emplace_back(f, g, expect_word("an arrow name"));
        });
      } else {
        fail(section, "unknown section '" + section.text + "'");
      }
      end_statement();
      skip_newlines();
    }
    expect("}");
    if (presented && !table.empty()) {
      fail(name, "a category has either relations or a table, not both");
    }

    std::map<std::string, int> object_id;
    for (auto const& o : objects) {
      if (!object_id.emplace(o.text, static_cast<int>(object_id.size())).second) {
        fail(o, "duplicate object '" + o.text + "'");
      }
    }
    auto obj = [&](Token const& t) {
      auto it = object_id.find(t.text);
      if (it == object_id.end()) {
        fail(t, "unknown object '" + t.text + "'");
      }
      return it->second;
    };

    if (presented) {
      Presentation p;
      for (auto const& o : objects) {
        p.quiver.vertices.push_back(o.text);
      }
      std::map<std::string, int> seen;
      for (auto const& [a, s, t] : arrows) {
        if (a.text.rfind("id(", 0) == 0 || !seen.emplace(a.text, 0).second) {
          fail(a, "arrow name '" + a.text + "' is reserved or duplicated");
        }
        p.quiver.edges.push_back(Edge{a.text, obj(s), obj(t)});
      }
      for (auto const& [l, r] : relations) {
        p.relations.push_back({path(p.quiver, l), path(p.quiver, r)});
        if (p.relations.back().lhs.start != p.relations.back().rhs.start ||
            path_end(p.quiver, p.relations.back().lhs) !=
                path_end(p.quiver, p.relations.back().rhs)) {
          fail(l.at, "relation sides " + l.text + " and " + r.text + " are not parallel");
        }
      }
      bind(name, name.text, orient_and_complete(std::move(p)));
      return name.text;
    }

    FinCatBuilder b;
    std::map<std::string, int> morphism_id;
    for (auto const& o : objects) {
      int a = b.add_object(o.text);
      morphism_id.emplace("id(" + o.text + ")", b.identity(a));
    }
    for (auto const& [a, s, t] : arrows) {
      if (morphism_id.count(a.text)) {
        fail(a, "arrow name '" + a.text + "' is reserved or duplicated");
      }
      morphism_id.emplace(a.text, b.add_morphism(a.text, obj(s), obj(t)));
    }
    auto mor = [&](Token const& t) {
      auto it = morphism_id.find(t.text);
      if (it == morphism_id.end()) {
        fail(t, "unknown arrow '" + t.text + "'");
      }
      return it->second;
    };
    for (auto const& [f, g, h] : table) {
      b.set_composite(mor(f), mor(g), mor(h));
    }
    FinCat c;
    try {
      c = b.build();
    } catch (InvalidArgument const& e) {
      fail(name, e.what());
    }
    auto r = validate(c);
    if (!r) {
      throw ValidationError("category " + name.text + ": " + r.notes.front());
    }
    bind(name, name.text, std::move(c));
    return name.text;
  }

  Path path(Quiver const& q, Name const& n) {
    try {
      return parse_path(q, n.text);
    } catch (InvalidArgument const& e) {
      fail(n.at, e.what());
    }
  }

  // ---- sset ----------------------------------------------------------------

  std::string sset() {
    auto name = expect_word("an sset name");
    auto dim_kw = expect_word("'dim'");
    if (dim_kw.text != "dim") {
      fail(dim_kw, "expected 'dim'");
    }
    auto dim_tok = peek();
    int dim = expect_int("a dimension");
    if (dim < 0 || dim > max_simplex_dim) {
      fail(dim_tok, "dimension must be between 0 and " + std::to_string(max_simplex_dim));
    }
    expect("{");
    std::vector<std::vector<std::string>> names(uz(dim) + 1);
    std::vector<std::map<std::string, int>> ids(uz(dim) + 1);
    std::vector<std::vector<std::vector<int>>> faces(uz(dim) + 1);
    std::vector<std::vector<std::vector<int>>> degens(uz(dim));
    struct Pending {
      bool face;
      int k;
      int i;
      Token from;
      Token to;
    };
    std::vector<Pending> pending;
    skip_newlines();
    while (!at_punct("}")) {
      auto head = expect_word("a level number, 'face' or 'degen'");
      if (head.text == "face" || head.text == "degen") {
        bool face = head.text == "face";
        auto kt = peek();
        int k = expect_int("a level");
        auto it = peek();
        int i = expect_int("an index");
        if (face ? (k < 1 || k > dim) : (k < 0 || k >= dim)) {
          fail(kt, "level out of range for " + head.text);
        }
        if (i < 0 || i > k) {
          fail(it, "index out of range for " + head.text);
        }
        expect(":");
        comma_list([&] {
          auto from = expect_word("a simplex");
          expect("->");
          pending.push_back({face, k, i, from, expect_word("a simplex")});
        });
      } else {
        int k = -1;
        if (!head.text.empty() &&
            std::all_of(head.text.begin(), head.text.end(),
                        [](char c) { return std::isdigit(c); })) {
          k = std::stoi(head.text);
        }
        if (k < 0 || k > dim) {
          fail(head, "expected a level between 0 and " + std::to_string(dim));
        }
        expect(":");
        while (!statement_end()) {
          auto s = expect_word("a simplex name");
          if (!ids[uz(k)].emplace(s.text, static_cast<int>(names[uz(k)].size())).second) {
            fail(s, "duplicate simplex '" + s.text + "' at level " + std::to_string(k));
          }
          names[uz(k)].push_back(s.text);
        }
      }
      end_statement();
      skip_newlines();
    }
    expect("}");
    for (int k = 1; k <= dim; ++k) {
      faces[uz(k)].assign(uz(k) + 1, std::vector<int>(names[uz(k)].size(), -1));
    }
    for (int k = 0; k < dim; ++k) {
      degens[uz(k)].assign(uz(k) + 1, std::vector<int>(names[uz(k)].size(), -1));
    }
    auto simplex = [&](int k, Token const& t) {
      auto it = ids[uz(k)].find(t.text);
      if (it == ids[uz(k)].end()) {
        fail(t, "unknown simplex '" + t.text + "' at level " + std::to_string(k));
      }
      return it->second;
    };
    for (auto const& p : pending) {
      int x = simplex(p.k, p.from);
      int y = simplex(p.face ? p.k - 1 : p.k + 1, p.to);
      auto& slot = p.face ? faces[uz(p.k)][uz(p.i)][uz(x)] : degens[uz(p.k)][uz(p.i)][uz(x)];
      if (slot != -1 && slot != y) {
        fail(p.from, "conflicting assignment for " + p.from.text);
      }
      slot = y;
    }
    for (int k = 1; k <= dim; ++k) {
      for (int i = 0; i <= k; ++i) {
        for (std::size_t x = 0; x < names[uz(k)].size(); ++x) {
          if (faces[uz(k)][uz(i)][x] < 0) {
            fail(name, "face " + std::to_string(k) + " " + std::to_string(i) +
                           " is not given on " + names[uz(k)][x]);
          }
        }
      }
    }
    for (int k = 0; k < dim; ++k) {
      for (int i = 0; i <= k; ++i) {
        for (std::size_t x = 0; x < names[uz(k)].size(); ++x) {
          if (degens[uz(k)][uz(i)][x] < 0) {
            fail(name, "degen " + std::to_string(k) + " " + std::to_string(i) +
                           " is not given on " + names[uz(k)][x]);
          }
        }
      }
    }
    TruncSSet x(dim, std::move(names), std::move(faces), std::move(degens));
    auto r = validate(x);
    if (!r) {
      throw ValidationError("sset " + name.text + ": " + r.notes.front());
    }
    bind(name, name.text, std::move(x));
    return name.text;
  }

  // ---- diagrams and cocones -------------------------------------------------

  ArrowSpec arrow_spec() {
    ArrowSpec spec;
    spec.at = expect("{");
    skip_newlines();
    while (!at_punct("}")) {
      auto section = expect_word("'obj', 'gen' or 'level'");
      std::vector<Mapping>* target = nullptr;
      bool paths = false;
      if (section.text == "obj") {
        target = &spec.obj;
      } else if (section.text == "gen") {
        target = &spec.gen;
        paths = true;
      } else if (section.text == "level") {
        auto kt = peek();
        int k = expect_int("a level");
        if (k > max_simplex_dim) {
          fail(kt, "level out of range");
        }
        target = &spec.levels[k];
      } else {
        fail(section, "unknown section '" + section.text + "'");
      }
      expect(":");
      comma_list([&] {
        auto from = expect_word("a name");
        Name f{from.text, from};
        expect("->");
        Name to = paths ? path_text() : Name{peek().text, expect_word("a name")};
        target->push_back({f, to});
      });
      end_statement();
      skip_newlines();
    }
    expect("}");
    return spec;
  }

  CatFunctor functor(ArrowSpec const& spec, FinCat const& c, FinCat const& d) {
    if (!spec.levels.empty()) {
      fail(spec.at, "'level' entries apply to simplicial sets");
    }
    CatFunctor f{std::vector<int>(c.object_count(), -1), std::vector<int>(c.morphism_count(), -1)};
    auto set_object = [&](int a, int b, Token const& at) {
      if (f.object_map[uz(a)] != -1 && f.object_map[uz(a)] != b) {
        fail(at, "inconsistent image for object " + c.object_name(a));
      }
      f.object_map[uz(a)] = b;
    };
    for (auto const& m : spec.obj) {
      auto a = c.find_object(m.from.text);
      auto b = d.find_object(m.to.text);
      if (!a) {
        fail(m.from.at, "unknown object '" + m.from.text + "'");
      }
      if (!b) {
        fail(m.to.at, "unknown object '" + m.to.text + "'");
      }
      set_object(*a, *b, m.from.at);
    }
    auto dq = forget_cat_to_reflquiver(d).quiver;
    for (auto const& m : spec.gen) {
      auto g = c.find_morphism(m.from.text);
      if (!g) {
        fail(m.from.at, "unknown arrow '" + m.from.text + "'");
      }
      auto p = path(dq, m.to);
      int h = evaluate_path(d, p);
      set_object(c.src(*g), d.src(h), m.from.at);
      set_object(c.tgt(*g), d.tgt(h), m.from.at);
      f.morphism_map[uz(*g)] = h;
    }
    for (std::size_t a = 0; a < c.object_count(); ++a) {
      if (f.object_map[a] < 0) {
        fail(spec.at, "no image for object " + c.object_name(static_cast<int>(a)));
      }
      f.morphism_map[uz(c.identity(static_cast<int>(a)))] = d.identity(f.object_map[a]);
    }
    close_under_composition(f.morphism_map, c, [&](int x, int y) { return d.compose(x, y); });
    for (std::size_t g = 0; g < c.morphism_count(); ++g) {
      if (f.morphism_map[g] < 0) {
        fail(spec.at, "no image for arrow " + c.morphism_name(static_cast<int>(g)));
      }
    }
    return f;
  }

  template <typename Compose>
  static void close_under_composition(std::vector<int>& image, FinCat const& c, Compose compose) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < c.morphism_count(); ++x) {
        for (std::size_t y = 0; y < c.morphism_count(); ++y) {
          int xi = static_cast<int>(x);
          int yi = static_cast<int>(y);
          if (c.tgt(xi) != c.src(yi) || image[x] < 0 || image[y] < 0) {
            continue;
          }
          auto h = uz(c.compose(xi, yi));
          if (image[h] < 0) {
            image[h] = compose(image[x], image[y]);
            changed = true;
          }
        }
      }
    }
  }

  SimplicialMap simplicial_map(ArrowSpec const& spec, TruncSSet const& x, TruncSSet const& y) {
    if (!spec.obj.empty() || !spec.gen.empty()) {
      fail(spec.at, "'obj' and 'gen' entries apply to categories");
    }
    SimplicialMap f;
    for (int k = 0; k <= x.dim(); ++k) {
      f.components.emplace_back(x.size(k), -1);
    }
    for (auto const& [k, entries] : spec.levels) {
      if (k > x.dim()) {
        fail(spec.at, "level " + std::to_string(k) + " exceeds the dimension");
      }
      for (auto const& m : entries) {
        int a = x.find(k, m.from.text);
        int b = y.find(k, m.to.text);
        if (a < 0) {
          fail(m.from.at, "unknown simplex '" + m.from.text + "'");
        }
        if (b < 0) {
          fail(m.to.at, "unknown simplex '" + m.to.text + "'");
        }
        f.components[uz(k)][uz(a)] = b;
      }
    }
    // propagate along faces and degeneracies
    for (bool changed = true; changed;) {
      changed = false;
      auto put = [&](int k, int s, int v) {
        if (f.components[uz(k)][uz(s)] < 0) {
          f.components[uz(k)][uz(s)] = v;
          changed = true;
        }
      };
      for (int k = 0; k <= x.dim(); ++k) {
        for (std::size_t s = 0; s < x.size(k); ++s) {
          int v = f.components[uz(k)][s];
          if (v < 0) {
            continue;
          }
          int si = static_cast<int>(s);
          for (int i = 0; i <= k && k > 0; ++i) {
            put(k - 1, x.face(k, i, si), y.face(k, i, v));
          }
          for (int i = 0; i <= k && k < x.dim(); ++i) {
            put(k + 1, x.degen(k, i, si), y.degen(k, i, v));
          }
        }
      }
    }
    for (int k = 0; k <= x.dim(); ++k) {
      for (std::size_t s = 0; s < x.size(k); ++s) {
        if (f.components[uz(k)][s] < 0) {
          fail(spec.at, "no image for simplex " + x.name(k, static_cast<int>(s)));
        }
      }
    }
    return f;
  }

  std::string diagram() {
    auto name = expect_word("a diagram name");
    auto kw = expect_word("'shape'");
    if (kw.text != "shape") {
      fail(kw, "expected 'shape'");
    }
    auto shape_tok = expect_word("a shape name");
    auto const& shape_binding = lookup(shape_tok);
    if (!std::holds_alternative<FinCat>(shape_binding.value)) {
      fail(shape_tok, "shape '" + shape_tok.text + "' is not a finite category");
    }
    FinCat shape = std::get<FinCat>(shape_binding.value);
    expect("{");
    std::vector<std::string> nodes(shape.object_count());
    std::vector<std::pair<Token, ArrowSpec>> arrows;
    skip_newlines();
    while (!at_punct("}")) {
      auto kind = expect_word("'node' or 'arrow'");
      auto which = expect_word("a shape name");
      expect("=");
      if (kind.text == "node") {
        auto a = shape.find_object(which.text);
        if (!a) {
          fail(which, "unknown shape object '" + which.text + "'");
        }
        auto bound = expect_word("a bound name");
        auto const& b = lookup(bound);
        if (!std::holds_alternative<FinCat>(b.value) &&
            !std::holds_alternative<TruncSSet>(b.value)) {
          fail(bound, "node '" + bound.text + "' is neither a finite category nor an sset");
        }
        nodes[uz(*a)] = bound.text;
      } else if (kind.text == "arrow") {
        arrows.emplace_back(which, arrow_spec());
      } else {
        fail(kind, "expected 'node' or 'arrow'");
      }
      end_statement();
      skip_newlines();
    }
    expect("}");
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      if (nodes[a].empty()) {
        fail(name, "no node for shape object " + shape.object_name(static_cast<int>(a)));
      }
    }
    bool cats = nodes.empty() || std::holds_alternative<FinCat>(ws_.at(nodes.front()).value);
    for (auto const& n : nodes) {
      if (std::holds_alternative<FinCat>(ws_.at(n).value) != cats) {
        fail(name, "nodes mix categories and ssets");
      }
    }
    DiagramDecl decl{shape_tok.text, nodes, CatDiagram{}};
    std::vector<bool> given(shape.morphism_count(), false);
    if (cats) {
      CatDiagram d{shape, {}, std::vector<CatFunctor>(shape.morphism_count())};
      for (auto const& n : nodes) {
        d.nodes.push_back(ws_.category(n));
      }
      for (auto const& [which, spec] : arrows) {
        auto u = shape_arrow(shape, which, given);
        d.arrows[uz(u)] = functor(spec, d.nodes[uz(shape.src(u))], d.nodes[uz(shape.tgt(u))]);
      }
      fill_arrows(shape, d.arrows, given, name,
                  [&](int a) { return identity_functor(d.nodes[uz(a)]); });
      auto r = validate(d);
      if (!r) {
        throw ValidationError("diagram " + name.text + ": " + r.notes.front());
      }
      decl.diagram = std::move(d);
    } else {
      SSetDiagram d{shape, {}, std::vector<SimplicialMap>(shape.morphism_count())};
      for (auto const& n : nodes) {
        d.nodes.push_back(ws_.sset(n));
      }
      for (auto const& [which, spec] : arrows) {
        auto u = shape_arrow(shape, which, given);
        d.arrows[uz(u)] =
            simplicial_map(spec, d.nodes[uz(shape.src(u))], d.nodes[uz(shape.tgt(u))]);
      }
      fill_arrows(shape, d.arrows, given, name,
                  [&](int a) { return identity_map(d.nodes[uz(a)]); });
      auto r = validate(d);
      if (!r) {
        throw ValidationError("diagram " + name.text + ": " + r.notes.front());
      }
      decl.diagram = std::move(d);
    }
    bind(name, name.text, std::move(decl));
    return name.text;
  }

  int shape_arrow(FinCat const& shape, Token const& which, std::vector<bool>& given) {
    auto u = shape.find_morphism(which.text);
    if (!u) {
      fail(which, "unknown shape arrow '" + which.text + "'");
    }
    if (given[uz(*u)]) {
      fail(which, "arrow '" + which.text + "' given twice");
    }
    given[uz(*u)] = true;
    return *u;
  }

  template <typename A, typename Identity>
  void fill_arrows(FinCat const& shape, std::vector<A>& arrows, std::vector<bool>& given,
                   Token const& name, Identity identity) {
    for (std::size_t a = 0; a < shape.object_count(); ++a) {
      auto i = uz(shape.identity(static_cast<int>(a)));
      if (!given[i]) {
        arrows[i] = identity(static_cast<int>(a));
        given[i] = true;
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < shape.morphism_count(); ++x) {
        for (std::size_t y = 0; y < shape.morphism_count(); ++y) {
          int xi = static_cast<int>(x);
          int yi = static_cast<int>(y);
          if (shape.tgt(xi) != shape.src(yi) || !given[x] || !given[y]) {
            continue;
          }
          auto h = uz(shape.compose(xi, yi));
          if (!given[h]) {
            arrows[h] = compose(arrows[x], arrows[y]);
            given[h] = true;
            changed = true;
          }
        }
      }
    }
    for (std::size_t u = 0; u < shape.morphism_count(); ++u) {
      if (!given[u]) {
        fail(name, "no arrow for shape arrow " + shape.morphism_name(static_cast<int>(u)));
      }
    }
  }

  std::string cocone() {
    auto name = expect_word("a cocone name");
    auto over = expect_word("'over'");
    if (over.text != "over") {
      fail(over, "expected 'over'");
    }
    auto diag_tok = expect_word("a diagram name");
    auto const& db = lookup(diag_tok);
    if (!std::holds_alternative<DiagramDecl>(db.value) ||
        !std::get<DiagramDecl>(db.value).of_categories()) {
      fail(diag_tok, "'" + diag_tok.text + "' is not a diagram of categories");
    }
    auto const& d = std::get<CatDiagram>(std::get<DiagramDecl>(db.value).diagram);
    auto apex_kw = expect_word("'apex'");
    if (apex_kw.text != "apex") {
      fail(apex_kw, "expected 'apex'");
    }
    auto apex_tok = expect_word("an apex name");
    lookup(apex_tok);
    FinCat apex = ws_.category(apex_tok.text);
    expect("{");
    std::vector<bool> given(d.nodes.size(), false);
    std::vector<CatFunctor> legs(d.nodes.size());
    skip_newlines();
    while (!at_punct("}")) {
      auto kw = expect_word("'leg'");
      if (kw.text != "leg") {
        fail(kw, "expected 'leg'");
      }
      auto which = expect_word("a shape object");
      auto a = d.shape.find_object(which.text);
      if (!a) {
        fail(which, "unknown shape object '" + which.text + "'");
      }
      expect("=");
      legs[uz(*a)] = functor(arrow_spec(), d.nodes[uz(*a)], apex);
      given[uz(*a)] = true;
      end_statement();
      skip_newlines();
    }
    expect("}");
    for (std::size_t a = 0; a < given.size(); ++a) {
      if (!given[a]) {
        fail(name, "no leg for shape object " + d.shape.object_name(static_cast<int>(a)));
      }
    }
    Cocone c{std::move(apex), std::move(legs)};
    auto r = validate(d, c);
    if (!r) {
      throw ValidationError("cocone " + name.text + ": " + r.notes.front());
    }
    bind(name, name.text, CoconeDecl{diag_tok.text, apex_tok.text, std::move(c)});
    return name.text;
  }

  Workspace& ws_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string join(std::vector<std::string> const& v, std::string const& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? sep : "") + v[i];
  }
  return out;
}

}  // namespace

Path parse_path(Quiver const& q, std::string const& text) {
  if (text.rfind("id(", 0) == 0 && text.back() == ')' && text.find('.') == std::string::npos) {
    auto v = text.substr(3, text.size() - 4);
    auto it = std::find(q.vertices.begin(), q.vertices.end(), v);
    bool is_edge = std::any_of(q.edges.begin(), q.edges.end(),
                               [&](Edge const& e) { return e.name == text; });
    if (it != q.vertices.end() && !is_edge) {
      return Path{static_cast<int>(it - q.vertices.begin()), {}};
    }
  }
  Path p;
  std::stringstream ss(text);
  std::string part;
  bool first = true;
  while (std::getline(ss, part, '.')) {
    auto it = std::find_if(q.edges.begin(), q.edges.end(),
                           [&](Edge const& e) { return e.name == part; });
    if (it == q.edges.end()) {
      throw InvalidArgument("unknown arrow '" + part + "' in path " + text);
    }
    int e = static_cast<int>(it - q.edges.begin());
    if (first) {
      p.start = it->src;
      first = false;
    }
    p.edges.push_back(e);
  }
  if (first || !is_path(q, p)) {
    throw InvalidArgument("'" + text + "' is not a path");
  }
  return p;
}

std::vector<std::string> parse_into(Workspace& ws, std::string const& text) {
  return Parser(ws, text).run();
}

Workspace parse(std::string const& text) {
  Workspace ws;
  parse_into(ws, text);
  return ws;
}

std::string write_text(std::string const& name, FinCat const& c) {
  std::ostringstream out;
  out << "category " << name << " {\n  objects: " << join(c.objects(), " ") << "\n";
  std::vector<std::string> arrows;
  std::vector<std::string> table;
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    int fi = static_cast<int>(f);
    if (c.is_identity(fi)) {
      continue;
    }
    arrows.push_back(c.morphism_name(fi) + ": " + c.object_name(c.src(fi)) + " -> " +
                     c.object_name(c.tgt(fi)));
    for (std::size_t g = 0; g < c.morphism_count(); ++g) {
      int gi = static_cast<int>(g);
      if (!c.is_identity(gi) && c.tgt(fi) == c.src(gi)) {
        table.push_back(c.morphism_name(fi) + "." + c.morphism_name(gi) + " = " +
                        c.morphism_name(c.compose(fi, gi)));
      }
    }
  }
  if (!arrows.empty()) {
    out << "  arrows: " << join(arrows, ",\n          ") << "\n";
  }
  if (!table.empty()) {
    out << "  table: " << join(table, ",\n         ") << "\n";
  }
  out << "}\n";
  return out.str();
}

std::string write_text(std::string const& name, FpCat const& c) {
  auto const& q = c.quiver();
  std::ostringstream out;
  out << "category " << name << " {\n  objects: " << join(q.vertices, " ") << "\n";
  std::vector<std::string> arrows;
  for (auto const& e : q.edges) {
    arrows.push_back(e.name + ": " + q.vertices[uz(e.src)] + " -> " + q.vertices[uz(e.tgt)]);
  }
  if (!arrows.empty()) {
    out << "  arrows: " << join(arrows, ",\n          ") << "\n";
  }
  std::vector<std::string> relations;
  for (auto const& r : c.presentation().relations) {
    relations.push_back(format_path(q, r.lhs) + " = " + format_path(q, r.rhs));
  }
  out << "  relations: " << join(relations, ",\n             ") << "\n}\n";
  return out.str();
}

std::string write_text(std::string const& name, TruncSSet const& x) {
  std::ostringstream out;
  out << "sset " << name << " dim " << x.dim() << " {\n";
  for (int k = 0; k <= x.dim(); ++k) {
    out << "  " << k << ": " << join(x.names(k), " ") << "\n";
  }
  auto table = [&](char const* kw, int k, int i, std::vector<int> const& m, int to) {
    if (m.empty()) {
      return;
    }
    std::vector<std::string> entries;
    for (std::size_t s = 0; s < m.size(); ++s) {
      entries.push_back(x.name(k, static_cast<int>(s)) + " -> " + x.name(to, m[s]));
    }
    out << "  " << kw << " " << k << " " << i << ": " << join(entries, ", ") << "\n";
  };
  for (int k = 1; k <= x.dim(); ++k) {
    for (int i = 0; i <= k; ++i) {
      table("face", k, i, x.face_map(k, i), k - 1);
    }
  }
  for (int k = 0; k < x.dim(); ++k) {
    for (int i = 0; i <= k; ++i) {
      table("degen", k, i, x.degen_map(k, i), k + 1);
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace catnerve
