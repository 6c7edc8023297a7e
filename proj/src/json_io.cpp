#include "catnerve/json_io.hpp"

#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "catnerve/error.hpp"

namespace catnerve {

namespace {

using nlohmann::json;

json path_json(Path const& p) { return {{"start", p.start}, {"edges", p.edges}}; }

Path path_from(json const& j) {
  return Path{j.at("start").get<int>(), j.at("edges").get<std::vector<int>>()};
}

json functor_json(CatFunctor const& f) {
  return {{"object_map", f.object_map}, {"morphism_map", f.morphism_map}};
}

CatFunctor functor_from(json const& j) {
  return CatFunctor{j.at("object_map").get<std::vector<int>>(),
                    j.at("morphism_map").get<std::vector<int>>()};
}

json fincat_json(FinCat const& c) {
  json morphisms = json::array();
  for (auto const& m : c.morphisms()) {
    morphisms.push_back({{"name", m.name}, {"src", m.src}, {"tgt", m.tgt}});
  }
  std::vector<int> identities;
  std::vector<int> table;
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    identities.push_back(c.identity(static_cast<int>(a)));
  }
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    for (std::size_t g = 0; g < c.morphism_count(); ++g) {
      int fi = static_cast<int>(f);
      int gi = static_cast<int>(g);
      table.push_back(c.tgt(fi) == c.src(gi) ? c.compose(fi, gi) : -1);
    }
  }
  return {{"kind", "fincat"},
          {"objects", c.objects()},
          {"morphisms", morphisms},
          {"identities", identities},
          {"table", table}};
}

FinCat fincat_from(json const& j) {
  std::vector<MorphismInfo> morphisms;
  for (auto const& m : j.at("morphisms")) {
    morphisms.push_back({m.at("name").get<std::string>(), m.at("src").get<int>(),
                         m.at("tgt").get<int>()});
  }
  return FinCat(j.at("objects").get<std::vector<std::string>>(), std::move(morphisms),
                j.at("identities").get<std::vector<int>>(), j.at("table").get<std::vector<int>>());
}

json fpcat_json(FpCat const& c) {
  auto const& q = c.quiver();
  json generators = json::array();
  for (auto const& e : q.edges) {
    generators.push_back({{"name", e.name}, {"src", e.src}, {"tgt", e.tgt}});
  }
  json relations = json::array();
  for (auto const& r : c.presentation().relations) {
    relations.push_back({{"lhs", path_json(r.lhs)}, {"rhs", path_json(r.rhs)}});
  }
  return {{"kind", "fpcat"},
          {"objects", q.vertices},
          {"generators", generators},
          {"relations", relations},
          {"fuel", c.fuel()}};
}

FpCat fpcat_from(json const& j) {
  Presentation p;
  p.quiver.vertices = j.at("objects").get<std::vector<std::string>>();
  for (auto const& e : j.at("generators")) {
    p.quiver.edges.push_back(
        {e.at("name").get<std::string>(), e.at("src").get<int>(), e.at("tgt").get<int>()});
  }
  for (auto const& r : j.at("relations")) {
    p.relations.push_back({path_from(r.at("lhs")), path_from(r.at("rhs"))});
  }
  return orient_and_complete(std::move(p), j.value("fuel", default_fuel));
}

json sset_json(TruncSSet const& x) {
  json levels = json::array();
  json faces = json::array();
  json degens = json::array();
  for (int k = 0; k <= x.dim(); ++k) {
    levels.push_back(x.names(k));
    json fk = json::array();
    for (int i = 0; i <= k && k > 0; ++i) {
      fk.push_back(x.face_map(k, i));
    }
    faces.push_back(fk);
    if (k < x.dim()) {
      json dk = json::array();
      for (int i = 0; i <= k; ++i) {
        dk.push_back(x.degen_map(k, i));
      }
      degens.push_back(dk);
    }
  }
  return {{"kind", "sset"}, {"dim", x.dim()}, {"levels", levels}, {"faces", faces},
          {"degens", degens}};
}

TruncSSet sset_from(json const& j) {
  return TruncSSet(j.at("dim").get<int>(),
                   j.at("levels").get<std::vector<std::vector<std::string>>>(),
                   j.at("faces").get<std::vector<std::vector<std::vector<int>>>>(),
                   j.at("degens").get<std::vector<std::vector<std::vector<int>>>>());
}

json diagram_json(DiagramDecl const& d) {
  json arrows = json::array();
  if (d.of_categories()) {
    for (auto const& f : std::get<CatDiagram>(d.diagram).arrows) {
      arrows.push_back(functor_json(f));
    }
  } else {
    for (auto const& f : std::get<SSetDiagram>(d.diagram).arrows) {
      arrows.push_back({{"components", f.components}});
    }
  }
  return {{"kind", "diagram"},
          {"shape", d.shape},
          {"nodes", d.nodes},
          {"of", d.of_categories() ? "categories" : "ssets"},
          {"arrows", arrows}};
}

json cocone_json(CoconeDecl const& c) {
  json legs = json::array();
  for (auto const& f : c.cocone.legs) {
    legs.push_back(functor_json(f));
  }
  return {{"kind", "cocone"}, {"diagram", c.diagram}, {"apex", c.apex}, {"legs", legs}};
}

json value_json(Value const& v) {
  return std::visit(
      [](auto const& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FinCat>) {
          return fincat_json(x);
        } else if constexpr (std::is_same_v<T, FpCat>) {
          return fpcat_json(x);
        } else if constexpr (std::is_same_v<T, TruncSSet>) {
          return sset_json(x);
        } else if constexpr (std::is_same_v<T, DiagramDecl>) {
          return diagram_json(x);
        } else {
          return cocone_json(x);
        }
      },
      v);
}

std::vector<std::string> dependencies(Value const& v) {
  if (auto const* d = std::get_if<DiagramDecl>(&v)) {
    auto out = d->nodes;
    out.insert(out.begin(), d->shape);
    return out;
  }
  if (auto const* c = std::get_if<CoconeDecl>(&v)) {
    return {c->diagram, c->apex};
  }
  return {};
}

void require(Report const& r, std::string const& what) {
  if (!r) {
    throw ValidationError(what + ": " + r.notes.front());
  }
}

Value value_from(Workspace const& ws, std::string const& name, json const& j) {
  auto kind = j.at("kind").get<std::string>();
  if (kind == "fincat") {
    auto c = fincat_from(j);
    require(validate(c), "category " + name);
    return c;
  }
  if (kind == "fpcat") {
    return fpcat_from(j);
  }
  if (kind == "sset") {
    auto x = sset_from(j);
    require(validate(x), "sset " + name);
    return x;
  }
  if (kind == "diagram") {
    DiagramDecl d{j.at("shape").get<std::string>(), j.at("nodes").get<std::vector<std::string>>(),
                  CatDiagram{}};
    auto shape = ws.category(d.shape);
    if (j.at("of").get<std::string>() == "categories") {
      CatDiagram cd{shape, {}, {}};
      for (auto const& n : d.nodes) {
        cd.nodes.push_back(ws.category(n));
      }
      for (auto const& a : j.at("arrows")) {
        cd.arrows.push_back(functor_from(a));
      }
      require(validate(cd), "diagram " + name);
      d.diagram = std::move(cd);
    } else {
      SSetDiagram sd{shape, {}, {}};
      for (auto const& n : d.nodes) {
        sd.nodes.push_back(ws.sset(n));
      }
      for (auto const& a : j.at("arrows")) {
        sd.arrows.push_back(
            SimplicialMap{a.at("components").get<std::vector<std::vector<int>>>()});
      }
      require(validate(sd), "diagram " + name);
      d.diagram = std::move(sd);
    }
    return d;
  }
  if (kind == "cocone") {
    CoconeDecl c{j.at("diagram").get<std::string>(), j.at("apex").get<std::string>(), {}};
    c.cocone.apex = ws.category(c.apex);
    for (auto const& l : j.at("legs")) {
      c.cocone.legs.push_back(functor_from(l));
    }
    auto const* d = std::get_if<DiagramDecl>(&ws.at(c.diagram).value);
    if (!d || !d->of_categories()) {
      throw InvalidArgument("cocone " + name + " is not over a diagram of categories");
    }
    require(validate(std::get<CatDiagram>(d->diagram), c.cocone), "cocone " + name);
    return c;
  }
  throw InvalidArgument("unknown binding kind '" + kind + "'");
}

template <typename T>
void put_list(std::ostringstream& out, std::vector<T> const& v) {
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << (i ? "," : "") << v[i];
  }
  out << ']';
}

}  // namespace

std::string export_json(Workspace const& ws, std::vector<std::string> const& names) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  std::function<void(std::string const&)> visit = [&](std::string const& n) {
    if (!seen.insert(n).second) {
      return;
    }
    for (auto const& dep : dependencies(ws.at(n).value)) {
      visit(dep);
    }
    order.push_back(n);
  };
  for (auto const& n : names) {
    visit(n);
  }
  json bindings = json::array();
  for (auto const& n : order) {
    auto j = value_json(ws.at(n).value);
    j["name"] = n;
    bindings.push_back(std::move(j));
  }
  json doc{{"schema", workspace_schema}, {"bindings", bindings}};
  return doc.dump(2) + "\n";
}

std::vector<std::string> parse_json_into(Workspace& ws, std::string const& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    // nlohmann reports a byte offset; map it to a line and column
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
  if (!doc.is_object() || doc.value("schema", "") != workspace_schema) {
    throw ParseError(std::string("expected schema ") + workspace_schema, 1, 1);
  }
  std::vector<std::string> names;
  try {
    for (auto const& b : doc.at("bindings")) {
      auto name = b.at("name").get<std::string>();
      auto value = value_from(ws, name, b);
      if (auto const* existing = ws.find(name)) {
        if (fingerprint(existing->value) != fingerprint(value)) {
          throw ValidationError("name '" + name + "' is already bound to a different value");
        }
      } else {
        ws.add(Binding{name, std::move(value), "json"});
      }
      names.push_back(name);
    }
  } catch (json::exception const& e) {
    throw ParseError(std::string("schema violation: ") + e.what(), 1, 1);
  } catch (InvalidArgument const& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return names;
}

std::string fingerprint(Value const& v) {
  std::ostringstream out;
  if (auto const* c = std::get_if<FinCat>(&v)) {
    out << "fincat objects=" << c->object_count() << " morphisms=" << c->morphism_count();
    for (auto const& m : c->morphisms()) {
      out << ' ' << m.name << ':' << m.src << "->" << m.tgt;
    }
    out << " table=";
    for (std::size_t f = 0; f < c->morphism_count(); ++f) {
      for (std::size_t g = 0; g < c->morphism_count(); ++g) {
        int fi = static_cast<int>(f);
        int gi = static_cast<int>(g);
        out << (c->tgt(fi) == c->src(gi) ? c->compose(fi, gi) : -1) << ',';
      }
    }
  } else if (auto const* p = std::get_if<FpCat>(&v)) {
    out << "fpcat objects=" << p->object_count() << " generators=" << p->generator_count()
        << " relations=" << p->presentation().relations.size()
        << " rules=" << p->rules().size() << " complete=" << p->complete() << " nf=";
    for (auto const& nf : normal_forms_up_to(*p, 3)) {
      out << p->format(nf) << ',';
    }
  } else if (auto const* x = std::get_if<TruncSSet>(&v)) {
    out << "sset dim=" << x->dim() << " sizes=";
    for (int k = 0; k <= x->dim(); ++k) {
      out << x->size(k) << ',';
    }
    for (int k = 1; k <= x->dim(); ++k) {
      for (int i = 0; i <= k; ++i) {
        out << " d" << k << i;
        put_list(out, x->face_map(k, i));
      }
    }
    for (int k = 0; k < x->dim(); ++k) {
      for (int i = 0; i <= k; ++i) {
        out << " s" << k << i;
        put_list(out, x->degen_map(k, i));
      }
    }
  } else if (auto const* d = std::get_if<DiagramDecl>(&v)) {
    out << "diagram shape=" << d->shape << " nodes=";
    put_list(out, d->nodes);
    if (d->of_categories()) {
      for (auto const& f : std::get<CatDiagram>(d->diagram).arrows) {
        out << ' ';
        put_list(out, f.object_map);
        put_list(out, f.morphism_map);
      }
    } else {
      for (auto const& f : std::get<SSetDiagram>(d->diagram).arrows) {
        for (auto const& c : f.components) {
          out << ' ';
          put_list(out, c);
        }
      }
    }
  } else if (auto const* c = std::get_if<CoconeDecl>(&v)) {
    out << "cocone over=" << c->diagram << " apex=" << c->apex;
    for (auto const& f : c->cocone.legs) {
      out << ' ';
      put_list(out, f.object_map);
      put_list(out, f.morphism_map);
    }
  }
  return out.str();
}

}  // namespace catnerve
