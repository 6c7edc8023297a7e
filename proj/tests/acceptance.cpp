// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catnerve/colimit.hpp"
#include "catnerve/corpus.hpp"
#include "catnerve/hofunctor.hpp"
#include "catnerve/nerve.hpp"
#include "catnerve/quiverkit.hpp"
#include "catnerve/rewrite.hpp"
#include "catnerve/simplex.hpp"
#include "oracles.hpp"

using namespace catnerve;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, std::string const& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

Path power(int start, int edge, int n) { return Path{start, std::vector<int>(uz(n), edge)}; }

Outcome bn_coequalizer() {
  Outcome out;
  auto fx = corpus::coequalizer();
  auto colim = colim_cat(fx.diagram);
  auto const& c = colim.presentation.category;
  auto gens = c.reduced_generators();
  out.require(c.object_count() == 1, "object count " + std::to_string(c.object_count()));
  out.require(gens.size() == 1, "non-refl generators " + std::to_string(gens.size()));
  out.require(c.complete(), "rewriting system incomplete");
  if (!out.ok) {
    return out;
  }
  std::set<Path> forms;
  for (int n = 0; n <= 6; ++n) {
    forms.insert(c.normalize(power(0, gens[0], n)));
  }
  out.require(forms.size() == 7, "normal forms of e^0..e^6 collide");
  auto const& arrow = fx.diagram.nodes[1];
  int ell = *arrow.find_morphism("0<1");
  out.require(colim.legs[1].generator_images[uz(ell)] == Path{0, {gens[0]}},
              "leg does not send the arrow to the generator");
  out.detail = "1 object, generator " + c.quiver().edges[uz(gens[0])].name + ", " +
               std::to_string(c.relation_rules().size()) + " relation rules";
  return out;
}

Outcome circle_is_bn() {
  Outcome out;
  auto h = ho(corpus::circle());
  auto colim = colim_cat(corpus::coequalizer().diagram);
  auto const& c = h.category;
  out.require(c.object_count() == 1 && c.reduced_generators().size() == 1 &&
                  c.relation_rules().empty(),
              "ho(S1) is not 1 object, 1 generator, 0 relations");
  out.require(match_presentations(c, colim.presentation.category).has_value(),
              "no generator matching with the coequalizer presentation");
  return out;
}

Outcome coskeletal() {
  Outcome out;
  for (auto const& [name, c] : corpus::categories()) {
    auto r = check_coskeletal2(nerve(c, 4));
    out.require(r.ok(), name + " nerve is not 2-coskeletal");
  }
  auto bad = check_coskeletal2(corpus::coskeletal_counterexample());
  out.require(bad.verdict == Verdict::fail, "counterexample passes");
  return out;
}

Outcome strict_segal() {
  Outcome out;
  for (auto const& [name, c] : corpus::categories()) {
    auto n = nerve(c, 4);
    for (int k = 2; k <= 4; ++k) {
      out.require(check_strict_segal(n, k).ok(),
                  name + " nerve fails Segal at k=" + std::to_string(k));
    }
  }
  out.require(check_strict_segal(corpus::triangle_boundary(), 2).verdict == Verdict::fail,
              "triangle boundary passes Segal at k=2");
  return out;
}

Outcome full_faithfulness() {
  Outcome out;
  auto cats = corpus::categories();
  std::size_t pairs = 0;
  std::size_t maps_total = 0;
  for (auto const& [cn, c] : cats) {
    auto nc = nerve2(c);
    for (auto const& [dn, d] : cats) {
      auto nd = nerve2(d);
      auto maps = enumerate_maps(nc, nd);
      auto functors = enumerate_functors(c, d);
      auto oracle_maps = oracle::count_sset_maps(nc, nd);
      auto oracle_functors = oracle::count_functors(c, d);
      std::string pair = "(" + cn + ", " + dn + ")";
      out.require(maps.size() == functors.size(),
                  pair + ": " + std::to_string(maps.size()) + " maps vs " +
                      std::to_string(functors.size()) + " functors");
      out.require(maps.size() == oracle_maps, pair + ": map count disagrees with oracle");
      out.require(functors.size() == oracle_functors,
                  pair + ": functor count disagrees with oracle");
      for (auto const& f : maps) {
        auto lifted = nerve2_full_lift(c, d, f);
        out.require(nerve_map(lifted, c, d, 2) == f, pair + ": lift does not round-trip");
      }
      ++pairs;
      maps_total += maps.size();
    }
  }
  if (out.ok) {
    out.detail = std::to_string(pairs) + " pairs, " + std::to_string(maps_total) + " maps";
  }
  return out;
}

Outcome triangles() {
  Outcome out;
  std::size_t checks = 0;
  for (auto const& [xn, x] : corpus::complexes()) {
    if (xn == "s1") {
      continue;
    }
    for (auto const& [cn, c] : corpus::categories()) {
      auto r = check_triangles_nerve_adj(x, c);
      out.require(r.ok(), "(" + xn + ", " + cn + "): " + to_string(r.verdict));
      ++checks;
    }
  }
  for (auto const& [cn, c] : corpus::categories()) {
    for (auto const& [xn, x] : corpus::complexes()) {
      auto r = check_triangle_identities_reflquiv(c, one_truncation(x));
      out.require(r.ok(), "refl (" + cn + ", " + xn + "): " + to_string(r.verdict));
      ++checks;
    }
    auto r = check_triangle_identities_reflquiv(c, forget_cat_to_reflquiver(c));
    out.require(r.ok(), "refl (" + cn + ", U " + cn + "): " + to_string(r.verdict));
    ++checks;
  }
  if (out.ok) {
    out.detail = std::to_string(checks) + " instances, no unknown verdicts";
  }
  return out;
}

Outcome hom_bijection() {
  Outcome out;
  auto cats = corpus::categories();
  std::vector<corpus::NamedComplex> xs = corpus::complexes();
  xs.push_back({"nerve2(fin2)", nerve2(fin_ordinal(1))});
  for (auto const& [xn, x] : xs) {
    auto h = ho2(x);
    for (auto const& [cn, c] : cats) {
      auto r = check_hom_bijection(x, c);
      std::string pair = "(" + xn + ", " + cn + ")";
      out.require(r.ok(), pair + ": " + (r.notes.empty() ? "" : r.notes.back()));
      auto left = oracle::count_presented_functors(h.category.presentation(), c);
      auto right = oracle::count_sset_maps(x, nerve2(c));
      out.require(left == right, pair + ": oracle hom sizes differ");
      if (xn == "s1" && cn == "z2") {
        out.require(left == 2, "|Hom(S1, Z/2)| = " + std::to_string(left));
      }
      if (xn == "nerve2(fin2)" && cn == "fin3") {
        out.require(left == 6, "|Hom(nerve2 Fin(2), Fin(3))| = " + std::to_string(left));
      }
    }
  }
  return out;
}

Outcome counit_iso() {
  Outcome out;
  for (auto const& [name, c] : corpus::categories()) {
    out.require(counit(c).isomorphism, name + ": counit is not bijective");
  }
  return out;
}

Outcome colimit_universal() {
  Outcome out;
  std::size_t probes = 0;
  for (auto const& fx : corpus::colimit_fixtures()) {
    auto colim = colim_cat(fx.diagram);
    out.require(check_cocone(fx.diagram, colim).ok(), fx.name + ": legs do not form a cocone");
    auto r = verify_colimit_cat(fx.diagram, colim, fx.probes);
    out.require(r.ok(), fx.name + ": " + (r.notes.empty() ? "" : r.notes.front()));
    probes += fx.probes.size();
    if (fx.name == "pushout") {
      auto finite = to_fincat(colim.presentation.category);
      out.require(find_isomorphism(finite.category, fin_ordinal(2)).has_value(),
                  "pushout is not isomorphic to Fin(3)");
    }
  }
  if (out.ok) {
    out.detail = std::to_string(probes) + " probes, each with a unique mediator";
  }
  return out;
}

Outcome oracle_agreement() {
  Outcome out;
  for (auto const& fx : corpus::colimit_fixtures()) {
    auto const& d = fx.diagram;
    auto colim = colim_cat(d);
    auto const& lib = colim.presentation.category;
    std::vector<std::vector<int>> object_maps;
    std::vector<std::vector<int>> morphism_maps;
    for (auto const& f : d.arrows) {
      object_maps.push_back(f.object_map);
      morphism_maps.push_back(f.morphism_map);
    }
    auto direct = oracle::direct_colimit(d.nodes, d.shape, object_maps, morphism_maps);
    auto ref = orient_and_complete(direct.presentation);
    out.require(ref.complete(), fx.name + ": oracle presentation incomplete");
    // translate oracle generators into library paths through the legs
    std::vector<Path> image(ref.generator_count());
    std::vector<int> object_image(ref.object_count());
    for (std::size_t j = 0; j < d.nodes.size(); ++j) {
      for (std::size_t f = 0; f < direct.generator_of[j].size(); ++f) {
        image[uz(direct.generator_of[j][f])] = colim.legs[j].generator_images[f];
      }
      for (std::size_t a = 0; a < direct.object_of[j].size(); ++a) {
        object_image[uz(direct.object_of[j][a])] = colim.legs[j].object_map[a];
      }
    }
    auto translate = [&](Path const& p) {
      Path q{object_image[uz(p.start)], {}};
      for (int e : p.edges) {
        q = concat(lib.quiver(), q, image[uz(e)]);
      }
      return q;
    };
    auto ours = normal_forms_up_to(lib, 5);
    auto theirs = normal_forms_up_to(ref, 5);
    std::set<Path> mapped;
    for (auto const& p : theirs) {
      auto q = translate(p);
      out.require(lib.is_normal(q) && q.length() == p.length(),
                  fx.name + ": oracle normal form " + ref.format(p) + " is not normal");
      mapped.insert(q);
    }
    out.require(mapped == std::set<Path>(ours.begin(), ours.end()),
                fx.name + ": normal-form sets differ (" + std::to_string(ours.size()) + " vs " +
                    std::to_string(theirs.size()) + ")");
  }
  return out;
}

Outcome ground_truth() {
  Outcome out;
  out.require(enumerate_all(2).size() == 31,
              "Delta<=2 has " + std::to_string(enumerate_all(2).size()) + " maps");
  std::size_t oracle_total = 0;
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      oracle_total += oracle::count_monotone(m, n);
    }
  }
  out.require(oracle_total == 31, "oracle count is not 31");
  auto n = nerve(fin_ordinal(1), 4);
  std::ostringstream sizes;
  for (int k = 0; k <= 4; ++k) {
    out.require(n.size(k) == uz(k + 2), "nerve(Fin(2)) level " + std::to_string(k));
    sizes << (k ? "," : "") << n.size(k);
  }
  if (out.ok) {
    out.detail = "31 maps; nerve(Fin(2)) sizes (" + sizes.str() + ")";
  }
  return out;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"BN coequalizer presentation", bn_coequalizer},
      {"ho(S1) matches the coequalizer presentation", circle_is_bn},
      {"nerves are 2-coskeletal, counterexample is not", coskeletal},
      {"strict Segal on nerves, boundary fails at k=2", strict_segal},
      {"nerve2 is fully faithful on the corpus", full_faithfulness},
      {"adjunction triangle identities", triangles},
      {"hom bijection for ho2 and nerve2", hom_bijection},
      {"counit is an isomorphism", counit_iso},
      {"colimit universal property on probes", colimit_universal},
      {"colimits agree with the direct-presentation oracle", oracle_agreement},
      {"combinatorial ground truth", ground_truth},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s %2zu  %s%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
