#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "catnerve/colimit.hpp"
#include "catnerve/dot.hpp"
#include "catnerve/error.hpp"
#include "catnerve/hofunctor.hpp"
#include "catnerve/json_io.hpp"
#include "catnerve/nerve.hpp"
#include "catnerve/quiverkit.hpp"
#include "catnerve/text_format.hpp"
#include "catnerve/workspace.hpp"

namespace catnerve::cli {

namespace {

using nlohmann::json;

struct Options {
  std::size_t fuel = default_fuel;
  std::size_t guard = default_guard;
  bool json = false;
  std::string corpus;
  std::vector<std::string> files;
};

struct Result {
  Verdict verdict = Verdict::pass;
  std::vector<std::string> lines;
  std::vector<std::string> notes;
  json data = json::object();
  bool raw = false;  // export output is printed as is

  void absorb(Report const& r) {
    if (r.verdict == Verdict::fail) {
      verdict = Verdict::fail;
    } else if (r.verdict == Verdict::inconclusive && verdict == Verdict::pass) {
      verdict = Verdict::inconclusive;
    }
    for (auto const& n : r.notes) {
      notes.push_back(r.check.empty() ? n : r.check + ": " + n);
    }
  }
};

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return success;
    case Verdict::fail:
      return check_failed;
    case Verdict::inconclusive:
      return inconclusive;
  }
  return check_failed;
}

std::string join(std::vector<std::string> const& v, char const* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? sep : "") + v[i];
  }
  return out;
}

TruncSSet as_sset(Workspace const& ws, std::string const& name, int dim) {
  auto const& b = ws.at(name);
  if (auto const* x = std::get_if<TruncSSet>(&b.value)) {
    return *x;
  }
  return nerve(ws.category(name), dim);
}

void describe_presentation(FpCat const& c, Result& r) {
  auto const& q = c.quiver();
  std::vector<std::string> gens;
  json gj = json::array();
  for (int e : c.reduced_generators()) {
    auto const& edge = q.edges[static_cast<std::size_t>(e)];
    gens.push_back(edge.name + ": " + q.vertices[static_cast<std::size_t>(edge.src)] + " -> " +
                   q.vertices[static_cast<std::size_t>(edge.tgt)]);
    gj.push_back(edge.name);
  }
  std::vector<std::string> rels;
  for (auto i : c.relation_rules()) {
    auto const& rule = c.rules()[i];
    auto src = q.edges[static_cast<std::size_t>(rule.lhs.front())].src;
    rels.push_back(c.format(Path{src, rule.lhs}) + " = " + c.format(Path{src, rule.rhs}));
  }
  r.lines.push_back("objects: " + std::to_string(c.object_count()) + " (" +
                    join(q.vertices, " ") + ")");
  r.lines.push_back("generators: " + std::to_string(gens.size()));
  for (auto const& g : gens) {
    r.lines.push_back("  " + g);
  }
  r.lines.push_back("relations: " + std::to_string(rels.size()));
  for (auto const& g : rels) {
    r.lines.push_back("  " + g);
  }
  r.lines.push_back(std::string("complete: ") + (c.complete() ? "yes" : "no") + " (" +
                    std::to_string(c.fuel_used()) + " of " + std::to_string(c.fuel()) +
                    " critical pairs)");
  r.data["objects"] = q.vertices;
  r.data["generators"] = gj;
  r.data["relations"] = rels;
  r.data["complete"] = c.complete();
  if (!c.complete()) {
    r.verdict = Verdict::inconclusive;
    r.notes.push_back("completion ran out of fuel; the rewriting system is incomplete");
  }
}

Result cmd_nerve(Workspace& ws, std::string const& name, int dim) {
  if (dim < 0 || dim > max_simplex_dim) {
    throw InvalidArgument("--dim must be between 0 and " + std::to_string(max_simplex_dim));
  }
  auto x = nerve(ws.category(name), dim);
  Result r;
  json levels = json::array();
  for (int k = 0; k <= dim; ++k) {
    r.lines.push_back("level " + std::to_string(k) + ": " + std::to_string(x.size(k)) +
                      " simplices: " + join(x.names(k), " "));
    levels.push_back(x.names(k));
  }
  r.data["levels"] = levels;
  return r;
}

Result cmd_ho(Workspace& ws, std::string const& name, Options const& opt) {
  auto x = as_sset(ws, name, 2);
  auto h = ho(x, opt.fuel);
  Result r;
  describe_presentation(h.category, r);
  json quotient = json::object();
  for (std::size_t e = 0; e < x.size(1); ++e) {
    auto const& p = h.quotient[e];
    auto nm = x.name(1, static_cast<int>(e));
    quotient[nm] = h.category.format(p);
    if (!is_degenerate(x, 1, static_cast<int>(e))) {
      r.lines.push_back("q(" + nm + ") = " + h.category.format(p));
    }
  }
  r.data["quotient"] = quotient;
  return r;
}

Result cmd_colimit(Workspace& ws, std::string const& name, Options const& opt) {
  auto const& b = ws.at(name);
  auto const* decl = std::get_if<DiagramDecl>(&b.value);
  if (!decl) {
    throw InvalidArgument("'" + name + "' is not a diagram");
  }
  Result r;
  if (!decl->of_categories()) {
    auto colim = colim_sset(std::get<SSetDiagram>(decl->diagram));
    r.absorb(validate(colim.apex));
    std::istringstream text(write_text(name + "_colim", colim.apex));
    for (std::string line; std::getline(text, line);) {
      r.lines.push_back(line);
    }
    return r;
  }
  auto const& d = std::get<CatDiagram>(decl->diagram);
  auto colim = colim_cat(d, opt.fuel);
  auto const& c = colim.presentation.category;
  describe_presentation(c, r);
  json legs = json::object();
  for (std::size_t j = 0; j < d.nodes.size(); ++j) {
    auto const& node = d.nodes[j];
    auto label = d.shape.object_name(static_cast<int>(j));
    json leg = json::object();
    for (std::size_t f = 0; f < node.morphism_count(); ++f) {
      int fi = static_cast<int>(f);
      auto image = c.format(colim.legs[j].generator_images[f]);
      leg[node.morphism_name(fi)] = image;
      if (!node.is_identity(fi)) {
        r.lines.push_back("leg " + label + ": q(" + node.morphism_name(fi) + ") = " + image);
      }
    }
    legs[label] = leg;
  }
  r.data["legs"] = legs;
  r.absorb(check_cocone(d, colim));
  if (c.complete()) {
    try {
      auto finite = to_fincat(c);
      r.lines.push_back("finite: " + std::to_string(finite.category.object_count()) +
                        " objects, " + std::to_string(finite.category.morphism_count()) +
                        " morphisms");
      r.data["finite"] = true;
    } catch (NonFinitableError const& e) {
      r.lines.push_back(std::string("infinite: ") + e.what());
      r.data["finite"] = false;
    }
  }
  auto probes = ws.cocones_over(name);
  json pj = json::array();
  for (std::size_t p = 0; p < probes.size(); ++p) {
    auto result = verify_colimit_probe(d, colim, probes[p], opt.guard);
    r.lines.push_back("probe " + std::to_string(p) + " (" +
                      std::to_string(result.mediators.size()) + " mediator(s)): " +
                      to_string(result.report.verdict));
    pj.push_back({{"mediators", result.mediators.size()},
                  {"verdict", to_string(result.report.verdict)}});
    r.absorb(result.report);
  }
  r.data["probes"] = pj;
  return r;
}

Result cmd_product(Workspace& ws, std::string const& a, std::string const& b) {
  auto p = product(ws.category(a), ws.category(b));
  Result r;
  std::istringstream text(write_text(a + "_x_" + b, p.category));
  for (std::string line; std::getline(text, line);) {
    r.lines.push_back(line);
  }
  r.data["objects"] = p.category.object_count();
  r.data["morphisms"] = p.category.morphism_count();
  r.absorb(validate(p.category));
  return r;
}

Result cmd_segal(Workspace& ws, std::string const& name, int k) {
  auto x = as_sset(ws, name, max_simplex_dim);
  Result r;
  int lo = k > 0 ? k : 2;
  int hi = k > 0 ? k : x.dim();
  if (hi > x.dim() || lo < 1) {
    throw InvalidArgument("k must be between 1 and the dimension " + std::to_string(x.dim()));
  }
  for (int i = lo; i <= hi; ++i) {
    auto rep = check_strict_segal(x, i);
    r.lines.push_back("k=" + std::to_string(i) + ": " + to_string(rep.verdict));
    r.absorb(rep);
  }
  return r;
}

Result cmd_coskeletal(Workspace& ws, std::string const& name, Options const& opt) {
  auto x = as_sset(ws, name, max_simplex_dim);
  Result r;
  for (int n = 3; n <= 4 && n <= x.dim(); ++n) {
    auto m = matching_object(x, n, opt.guard);
    r.lines.push_back("level " + std::to_string(n) + ": " + std::to_string(x.size(n)) +
                      " simplices, " + std::to_string(m.families.size()) + " matching families");
  }
  auto rep = check_coskeletal2(x, opt.guard);
  r.lines.push_back(std::string("2-coskeletal: ") + (rep.ok() ? "yes" : "no"));
  r.absorb(rep);
  return r;
}

Result cmd_triangles(Workspace& ws, std::string const& cat, std::string const& sset,
                     Options const& opt) {
  auto c = ws.category(cat);
  auto x = truncate(as_sset(ws, sset, 2), 2);
  Result r;
  auto rep = check_triangles_nerve_adj(x, c, opt.fuel);
  r.lines.push_back("triangles (" + sset + ", " + cat + "): " + to_string(rep.verdict));
  r.absorb(rep);
  return r;
}

Result cmd_adjunction(Workspace& ws, Options const& opt) {
  std::vector<std::string> cats;
  std::vector<std::string> ssets;
  for (auto const& b : ws.bindings()) {
    if (std::holds_alternative<FinCat>(b.value)) {
      cats.push_back(b.name);
    } else if (auto const* x = std::get_if<TruncSSet>(&b.value); x && x->dim() >= 2) {
      ssets.push_back(b.name);
    }
  }
  Result r;
  std::size_t instances = 0;
  for (auto const& cn : cats) {
    auto const& c = std::get<FinCat>(ws.at(cn).value);
    auto counit_rep = counit(c, opt.fuel);
    Report cr("counit " + cn);
    if (!counit_rep.isomorphism) {
      cr.fail("counit is not an isomorphism");
    }
    r.absorb(cr);
    r.absorb(check_triangle_identities_reflquiv(c, forget_cat_to_reflquiver(c)));
    for (auto const& xn : ssets) {
      auto x = truncate(ws.sset(xn), 2);
      std::string pair = "(" + xn + ", " + cn + ")";
      auto hom = check_hom_bijection(x, c, opt.guard, opt.fuel);
      hom.check = "hom " + pair;
      r.absorb(hom);
      auto refl = check_triangle_identities_reflquiv(c, one_truncation(x));
      refl.check = "refl triangles " + pair;
      r.absorb(refl);
      std::string tri = "skipped (ho2 infinite)";
      try {
        auto t = check_triangles_nerve_adj(x, c, opt.fuel);
        t.check = "triangles " + pair;
        tri = to_string(t.verdict);
        r.absorb(t);
      } catch (NonFinitableError const&) {
      }
      r.lines.push_back(pair + ": hom " + to_string(hom.verdict) + ", triangles " + tri +
                        ", refl triangles " + to_string(refl.verdict));
      ++instances;
    }
  }
  r.lines.push_back(std::to_string(instances) + " instances over " + std::to_string(cats.size()) +
                    " categories and " + std::to_string(ssets.size()) + " ssets");
  r.data["instances"] = instances;
  return r;
}

Result cmd_eq(Workspace& ws, std::string const& name, std::string const& p, std::string const& q,
              Options const& opt) {
  auto const& b = ws.at(name);
  Result r;
  if (auto const* c = std::get_if<FpCat>(&b.value)) {
    FpCat cat = opt.fuel == c->fuel() ? *c : orient_and_complete(c->presentation(), opt.fuel);
    auto lhs = parse_path(cat.quiver(), p);
    auto rhs = parse_path(cat.quiver(), q);
    auto v = eq(cat, lhs, rhs);
    r.lines.push_back("normal forms: " + cat.format(cat.normalize(lhs)) + ", " +
                      cat.format(cat.normalize(rhs)));
    r.lines.push_back(to_string(v));
    r.data["verdict"] = to_string(v);
    r.verdict = v.is_equal()     ? Verdict::pass
                : v.is_unknown() ? Verdict::inconclusive
                                 : Verdict::fail;
    return r;
  }
  auto c = ws.category(name);
  auto quiver = forget_cat_to_reflquiver(c).quiver;
  auto lhs = evaluate_path(c, parse_path(quiver, p));
  auto rhs = evaluate_path(c, parse_path(quiver, q));
  r.lines.push_back("composites: " + c.morphism_name(lhs) + ", " + c.morphism_name(rhs));
  r.lines.push_back(lhs == rhs ? "equal" : "not equal");
  r.data["verdict"] = lhs == rhs ? "equal" : "not equal";
  r.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  return r;
}

Result cmd_export_dot(Workspace& ws, std::string const& name) {
  auto const& b = ws.at(name);
  Result r;
  r.raw = true;
  if (auto const* c = std::get_if<FinCat>(&b.value)) {
    r.lines.push_back(to_dot(name, *c));
  } else if (auto const* p = std::get_if<FpCat>(&b.value)) {
    r.lines.push_back(to_dot(name, *p));
  } else if (auto const* x = std::get_if<TruncSSet>(&b.value)) {
    r.lines.push_back(to_dot(name, *x));
  } else {
    throw InvalidArgument("cannot draw a " + std::string(kind_name(b.value)));
  }
  return r;
}

void emit(Result const& r, std::string const& command, Options const& opt, std::ostream& out) {
  if (r.raw) {
    for (auto const& l : r.lines) {
      out << l;
    }
    return;
  }
  if (opt.json) {
    json doc{{"schema", report_schema},
             {"command", command},
             {"verdict", to_string(r.verdict)},
             {"exit_code", exit_code(r.verdict)},
             {"output", r.lines},
             {"notes", r.notes},
             {"result", r.data}};
    out << doc.dump(2) << "\n";
    return;
  }
  for (auto const& l : r.lines) {
    out << l << "\n";
  }
  for (auto const& n : r.notes) {
    out << "note: " << n << "\n";
  }
  out << "verdict: " << to_string(r.verdict) << "\n";
}

void error_report(std::string const& kind, std::string const& msg, int code,
                  std::string const& command, Options const& opt, std::ostream& out,
                  std::ostream& err) {
  if (opt.json) {
    json doc{{"schema", report_schema}, {"command", command}, {"verdict", "error"},
             {"exit_code", code},        {"error", kind},      {"message", msg}};
    out << doc.dump(2) << "\n";
  }
  err << "catnerve: " << kind << ": " << msg << "\n";
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nerves, homotopy categories and colimits of finite categories", "catnerve"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--fuel", opt.fuel, "critical pairs allowed during completion")
      ->capture_default_str();
  app.add_option("--guard", opt.guard, "search nodes allowed per enumeration")
      ->capture_default_str();
  app.add_flag("--json", opt.json, "print the report as JSON");
  app.add_option("--corpus", opt.corpus, "corpus directory (default $CATNERVE_CORPUS or ./corpus)");
  app.add_option("-f,--file", opt.files, "additional input files");

  std::string name;
  std::string other;
  std::string p;
  std::string q;
  int dim = 2;
  int k = 0;

  auto* nerve_cmd = app.add_subcommand("nerve", "levels of the nerve of a category");
  nerve_cmd->add_option("NAME", name)->required();
  nerve_cmd->add_option("--dim", dim, "truncation dimension")->capture_default_str();
  auto* ho_cmd = app.add_subcommand("ho", "homotopy category of an sset");
  ho_cmd->add_option("NAME", name)->required();
  auto* colimit_cmd = app.add_subcommand("colimit", "colimit of a diagram, checked on its cocones");
  colimit_cmd->add_option("NAME", name)->required();
  auto* product_cmd = app.add_subcommand("product", "product of two finite categories");
  product_cmd->add_option("A", name)->required();
  product_cmd->add_option("B", other)->required();
  auto* eq_cmd = app.add_subcommand("eq", "decide equality of two paths");
  eq_cmd->add_option("NAME", name)->required();
  eq_cmd->add_option("P", p)->required();
  eq_cmd->add_option("Q", q)->required();

  auto* check = app.add_subcommand("check", "verify a property");
  check->require_subcommand(1);
  auto* segal = check->add_subcommand("segal", "strict Segal condition");
  segal->add_option("NAME", name)->required();
  segal->add_option("--k", k, "a single spine length (default: 2 up to the dimension)");
  auto* cosk = check->add_subcommand("coskeletal", "2-coskeletality at levels 3 and 4");
  cosk->add_option("NAME", name)->required();
  auto* adjunction = check->add_subcommand("adjunction", "adjunction checks over the workspace");
  auto* triangles = check->add_subcommand("triangles", "triangle identities for one pair");
  triangles->add_option("A", name, "category")->required();
  triangles->add_option("X", other, "sset")->required();

  auto* exp = app.add_subcommand("export", "render a binding");
  exp->require_subcommand(1);
  auto* dot = exp->add_subcommand("dot", "Graphviz");
  dot->add_option("NAME", name)->required();
  auto* js = exp->add_subcommand("json", "versioned JSON");
  js->add_option("NAME", name)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return success;
  } catch (CLI::ParseError const& e) {
    err << "catnerve: " << e.what() << "\n" << app.help();
    return parse_error;
  }

  std::string command = join(args, " ");
  try {
    Workspace ws;
    if (auto dir = corpus_directory(opt.corpus)) {
      load_directory(ws, *dir);
    }
    for (auto const& f : opt.files) {
      load_file(ws, f);
    }
    auto target = [&](std::string const& n) { return resolve(ws, n); };
    Result r;
    if (nerve_cmd->parsed()) {
      r = cmd_nerve(ws, target(name), dim);
    } else if (ho_cmd->parsed()) {
      r = cmd_ho(ws, target(name), opt);
    } else if (colimit_cmd->parsed()) {
      r = cmd_colimit(ws, target(name), opt);
    } else if (product_cmd->parsed()) {
      r = cmd_product(ws, target(name), target(other));
    } else if (eq_cmd->parsed()) {
      r = cmd_eq(ws, target(name), p, q, opt);
    } else if (segal->parsed()) {
      r = cmd_segal(ws, target(name), k);
    } else if (cosk->parsed()) {
      r = cmd_coskeletal(ws, target(name), opt);
    } else if (adjunction->parsed()) {
      r = cmd_adjunction(ws, opt);
    } else if (triangles->parsed()) {
      r = cmd_triangles(ws, target(name), target(other), opt);
    } else if (dot->parsed()) {
      r = cmd_export_dot(ws, target(name));
    } else if (js->parsed()) {
      r.raw = true;
      r.lines.push_back(export_json(ws, {target(name)}));
    }
    emit(r, command, opt, out);
    return r.raw ? success : exit_code(r.verdict);
  } catch (ParseError const& e) {
    error_report("parse error", e.what(), parse_error, command, opt, out, err);
    return parse_error;
  } catch (InvalidArgument const& e) {
    error_report("invalid input", e.what(), parse_error, command, opt, out, err);
    return parse_error;
  } catch (ValidationError const& e) {
    error_report("validation failed", e.what(), check_failed, command, opt, out, err);
    return check_failed;
  } catch (GuardExceeded const& e) {
    error_report("guard exceeded", e.what(), inconclusive, command, opt, out, err);
    return inconclusive;
  } catch (NonFinitableError const& e) {
    error_report("not finite", e.what(), inconclusive, command, opt, out, err);
    return inconclusive;
  } catch (Error const& e) {
    error_report("internal error", e.what(), check_failed, command, opt, out, err);
    return check_failed;
  }
}

}  // namespace catnerve::cli
