#include "homlab/suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "homlab/pairs.hpp"
#include "homlab/relative_dim.hpp"
#include "homlab/universe.hpp"

namespace homlab {

namespace {

AlgebraPtr ring_or_default(const SuiteConfig& c) { return c.ring ? c.ring : truncated_polynomial(2, 2); }
TruncationFamily family_or_default(const SuiteConfig& c) { return c.family ? *c.family : square_zero_family(); }
std::size_t samples_or(const SuiteConfig& c, std::size_t fallback) { return c.samples ? c.samples : fallback; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

SuiteReport start(const std::string& suite, const std::string& anchor, const SuiteConfig& c) {
  return start_report(suite, anchor, c.seed);
}

void universe_provenance(SuiteReport& rep, const AlgebraPtr& r, const SuiteConfig& c, Side side) {
  rep.provenance.emplace_back("ring", r->description());
  rep.provenance.emplace_back("T", join(c.T, ","));
  rep.provenance.emplace_back("universe", UniverseSpec{c.lo, c.hi, c.dimcap, side}.describe());
}

std::vector<ChainComplex> universe(const AlgebraPtr& r, const SuiteConfig& c, Side side) {
  return enumerate_complexes(r, UniverseSpec{c.lo, c.hi, c.dimcap, side});
}

void absorb(SuiteReport& rep, const std::string& where, const std::vector<std::string>& found) {
  for (const auto& s : found) rep.counterexamples.push_back({where, s});
}

void absorb(SuiteReport& rep, const std::string& where, const PairReport& p) {
  rep.instances += p.instances;
  absorb(rep, where, p.counterexamples);
  rep.notes.push_back(where + ": " + p.summary());
}

void absorb(SuiteReport& rep, const CheckReport& p) {
  rep.instances += p.instances;
  absorb(rep, p.name, p.counterexamples);
  for (const auto& n : p.notes) rep.notes.push_back(n);
}

// --- suites ---------------------------------------------------------------

SuiteReport suite_injective_routes(const SuiteConfig& c) {
  SuiteReport rep = start("tfae1", "T-injective complexes: sphere-Ext, cycle and Hom routes agree", c);
  const AlgebraPtr r = ring_or_default(c);
  universe_provenance(rep, r, c, Side::left);
  const TestClass t = test_class_from_recipes(r, Side::left, c.T);
  const auto u = universe(r, c, Side::left);
  std::size_t members = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const MembershipReport m = t_injective_report(u[i], t);
    ++rep.instances;
    members += m.verdict;
    if (!m.agree()) rep.counterexamples.push_back({"instance " + std::to_string(i), m.summary()});
  }
  rep.notes.push_back("T-injective members: " + std::to_string(members));
  rep.notes.push_back("finite universe: no claim beyond the enumerated complexes");
  return rep;
}

SuiteReport suite_flat_routes(const SuiteConfig& c) {
  SuiteReport rep = start("char-flat", "T-flat complexes: bar-Tor, cycle and dual routes agree", c);
  const AlgebraPtr r = ring_or_default(c);
  universe_provenance(rep, r, c, Side::right);
  const TestClass t = test_class_from_recipes(r, Side::left, c.T);
  const auto u = universe(r, c, Side::right);
  std::size_t members = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const MembershipReport m = t_flat_report(u[i], t);
    ++rep.instances;
    members += m.verdict;
    if (!m.agree()) rep.counterexamples.push_back({"instance " + std::to_string(i), m.summary()});
  }
  rep.notes.push_back("T-flat members: " + std::to_string(members));
  rep.notes.push_back("finite universe: no claim beyond the enumerated complexes");
  return rep;
}

SuiteReport suite_fi_if(const SuiteConfig& c) {
  SuiteReport rep = start("fi-if", "a complex is T-flat exactly when its character dual is T-injective", c);
  const AlgebraPtr r = ring_or_default(c);
  universe_provenance(rep, r, c, Side::right);
  absorb(rep, duality_check_fi_if(universe(r, c, Side::right), test_class_from_recipes(r, Side::left, c.T)));
  return rep;
}

SuiteReport suite_dim_dual(const SuiteConfig& c) {
  SuiteReport rep = start("dim-dual", "relative flat dimension of Y equals relative injective dimension of Y^+", c);
  const AlgebraPtr r = ring_or_default(c);
  universe_provenance(rep, r, c, Side::right);
  rep.provenance.emplace_back("cap", std::to_string(c.cap));
  const CheckReport chk =
      duality_check_dim(universe(r, c, Side::right), test_class_from_recipes(r, Side::left, c.T), c.cap);
  absorb(rep, chk);
  return rep;
}

SuiteReport suite_presentation(const SuiteConfig& c) {
  SuiteReport rep =
      start("presentation", "presentation dimension of a complex: termwise infimum equals the resolution value", c);
  const TruncationFamily fam = family_or_default(c);
  const std::size_t n = samples_or(c, 100);
  rep.provenance.emplace_back("family", fam.describe());
  rep.provenance.emplace_back("recipes", std::to_string(n));
  const auto modules = probe_recipes(fam, 2);
  std::mt19937_64 rng = instance_rng(c.seed, 0);
  std::set<std::string> seen;
  std::vector<std::string> recipes;
  for (std::size_t attempt = 0; recipes.size() < n && attempt < 100 * n; ++attempt) {
    const std::size_t parts = 1 + rng() % 3;
    std::vector<std::string> items;
    for (std::size_t k = 0; k < parts; ++k) {
      const int deg = static_cast<int>(rng() % 3);
      const std::string& mod = modules[rng() % modules.size()];
      items.push_back((rng() % 2 ? "disk(" : "sphere(") + std::to_string(deg) + ", " + mod + ")");
    }
    std::string recipe = join(items, " + ");
    if (seen.insert(recipe).second) recipes.push_back(recipe);
  }
  std::map<std::string, std::size_t> verdicts;
  for (std::size_t i = 0; i < recipes.size(); ++i) {
    ++rep.instances;
    const std::string id = "recipe " + std::to_string(i) + " [" + recipes[i] + "]";
    try {
      const LambdaComplexReport l = lambda_complex(fam, recipes[i], c.cap > 3 ? c.cap : 6);
      ++verdicts[l.resolution.lambda.to_string()];
      if (!l.agree())
        rep.counterexamples.push_back(
            {id, "termwise " + l.termwise.to_string() + " vs resolution " + l.resolution.to_string()});
    } catch (const std::exception& e) {
      rep.counterexamples.push_back({id, e.what()});
    }
  }
  std::string hist;
  for (const auto& [v, k] : verdicts) hist += (hist.empty() ? "" : ", ") + v + ": " + std::to_string(k);
  rep.notes.push_back("lambda histogram: " + hist);
  return rep;
}

SuiteReport suite_induced_duality(const SuiteConfig& c) {
  SuiteReport rep = start("induced-duality", "dw, ex and tilde lifts of the T-flat / T-injective duality pair", c);
  const AlgebraPtr r = ring_or_default(c);
  universe_provenance(rep, r, c, Side::left);
  const TestClass t = test_class_from_recipes(r, Side::left, c.T);
  const std::size_t samples = samples_or(c, 400);
  if (c.negative_control) {
    std::vector<Module> mr, ml;
    for (std::size_t d = 0; d <= 3; ++d) {
      for (auto& m : enumerate_modules(r, Side::right, d)) mr.push_back(m);
      for (auto& m : enumerate_modules(r, Side::left, d)) ml.push_back(m);
    }
    rep.notes.push_back("negative control: free modules against every module");
    absorb(rep, "free / everything",
           duality_pair_check(free_class(Side::right), all_modules(Side::left), mr, ml, c.seed, samples));
    return rep;
  }
  if (!c.predicates.empty()) {
    if (c.predicates.size() != 2) throw std::invalid_argument("a duality pair needs two predicates");
    const ClassPredicate pm = predicate_from_string(c.predicates[0], t);
    const ClassPredicate pc = predicate_from_string(c.predicates[1], t);
    if (pm.scope != pc.scope) throw std::invalid_argument("the two predicates must have the same scope");
    rep.provenance.emplace_back("pair", pm.name + " / " + pc.name);
    if (pm.scope == Scope::complex) {
      absorb(rep, pm.name + " / " + pc.name,
             duality_pair_check(pm, pc, universe(r, c, pm.side), universe(r, c, pc.side), c.seed, samples, true));
    } else {
      std::vector<Module> um, uc;
      for (std::size_t d = 0; d <= 3; ++d) {
        for (auto& x : enumerate_modules(r, pm.side, d)) um.push_back(x);
        for (auto& x : enumerate_modules(r, pc.side, d)) uc.push_back(x);
      }
      absorb(rep, pm.name + " / " + pc.name, duality_pair_check(pm, pc, um, uc, c.seed, samples, true));
    }
    return rep;
  }
  const auto ul = universe(r, c, Side::left), ur = universe(r, c, Side::right);
  const ClassPredicate m = t_flat_class(t), cc = t_injective_class(t);
  for (auto lift : {dw_lift, ex_lift, tilde_lift}) {
    const ClassPredicate lm = lift(m), lc = lift(cc);
    absorb(rep, lm.name + " / " + lc.name, duality_pair_check(lm, lc, ur, ul, c.seed, samples, true));
  }
  std::vector<Module> mr, ml;
  for (std::size_t d = 0; d <= 3; ++d) {
    for (auto& x : enumerate_modules(r, Side::right, d)) mr.push_back(x);
    for (auto& x : enumerate_modules(r, Side::left, d)) ml.push_back(x);
  }
  absorb(rep, "modules of dim <= 3", duality_pair_check(m, cc, mr, ml, c.seed, samples, true));
  return rep;
}

// Extensions 0 -> Y -> cone(f) -> X -> 0 for chain maps f: X[-1] -> Y; all of them
// when the space of chain maps is small, a seeded sample otherwise.
std::vector<ChainComplex> extensions(const ChainComplex& x, const ChainComplex& y, std::mt19937_64& rng) {
  const ChainComplex xs = suspension(x, -1);
  const ChainMapSpace space = chain_map_space(xs, y);
  std::vector<ChainComplex> out;
  const std::size_t d = space.maps.dim();
  const std::uint32_t p = x.p();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d && total <= 64; ++i) total *= p;
  if (total <= 64) {
    for (std::size_t code = 0; code < total; ++code) {
      Matrix coeffs(p, d, 1);
      std::size_t rest = code;
      for (std::size_t i = 0; i < d; ++i, rest /= p) coeffs.at(i, 0) = static_cast<std::uint32_t>(rest % p);
      out.push_back(mapping_cone(space.element(space.maps.basis * coeffs)).complex);
    }
  } else {
    for (int s = 0; s < 8; ++s) out.push_back(mapping_cone(random_chain_map(xs, y, rng)).complex);
  }
  return out;
}

void closure_checks(SuiteReport& rep, const ClassPredicate& p, const std::vector<ChainComplex>& u, std::uint64_t seed,
                    std::size_t samples) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (p(u[i])) members.push_back(i);
  auto rng = instance_rng(seed, u.size());
  std::uniform_int_distribution<std::size_t> any(0, u.size() - 1);
  // finite sums and summands: p(A (+) B) iff p(A) and p(B)
  for (std::size_t s = 0; s < samples && !u.empty(); ++s) {
    const std::size_t i = any(rng), j = any(rng);
    ++rep.instances;
    const bool a = p(u[i]), b = p(u[j]), sum = p(direct_sum(u[i], u[j]));
    if (sum != (a && b))
      rep.counterexamples.push_back({p.name + " sums/summands", "members " + std::to_string(i) + ", " +
                                                                   std::to_string(j) + ": A=" + (a ? "yes" : "no") +
                                                                   ", B=" + (b ? "yes" : "no") +
                                                                   ", A+B=" + (sum ? "yes" : "no")});
  }
  // extensions of members by members
  if (!members.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (std::size_t s = 0; s < std::max<std::size_t>(1, samples / 8); ++s) {
      const std::size_t i = members[pick(rng)], j = members[pick(rng)];
      for (const auto& e : extensions(u[i], u[j], rng)) {
        ++rep.instances;
        if (!p(e))
          rep.counterexamples.push_back({p.name + " extensions", "extension of member " + std::to_string(i) +
                                                                     " by member " + std::to_string(j) +
                                                                     " is not in the class: " + describe(e)});
      }
    }
  }
}

SuiteReport suite_closure(const SuiteConfig& c) {
  SuiteReport rep =
      start("closure", "T-injective and T-flat complexes: closed under finite sums, summands and extensions", c);
  const AlgebraPtr r = ring_or_default(c);
  universe_provenance(rep, r, c, Side::left);
  const TestClass t = test_class_from_recipes(r, Side::left, c.T);
  const std::size_t samples = samples_or(c, 400);
  const auto ul = universe(r, c, Side::left), ur = universe(r, c, Side::right);
  ClassPredicate inj_c{"T-injective complexes", Scope::complex, Side::left, nullptr,
                       [t](const ChainComplex& x) { return t_injective_by_cycles(x, t); }};
  ClassPredicate flat_c{"T-flat complexes", Scope::complex, Side::right, nullptr,
                        [t](const ChainComplex& y) { return t_flat_by_cycles(y, t); }};
  closure_checks(rep, inj_c, ul, c.seed, samples);
  closure_checks(rep, flat_c, ur, c.seed + 1, samples);
  // lift consistency: tilde => ex => dw
  for (const auto& [base, u] : {std::pair{t_injective_class(t), &ul}, std::pair{t_flat_class(t), &ur}}) {
    const ClassPredicate dw = dw_lift(base), ex = ex_lift(base), tl = tilde_lift(base);
    for (std::size_t i = 0; i < u->size(); ++i) {
      const ChainComplex& x = (*u)[i];
      ++rep.instances;
      const bool in_tl = tl(x), in_ex = ex(x), in_dw = dw(x);
      if ((in_tl && !in_ex) || (in_ex && !in_dw))
        rep.counterexamples.push_back({base.name + " lifts", "instance " + std::to_string(i) + ": tilde=" +
                                                                 (in_tl ? "yes" : "no") + ", ex=" +
                                                                 (in_ex ? "yes" : "no") + ", dw=" + (in_dw ? "yes" : "no")});
    }
  }
  rep.notes.push_back("extensions are the degreewise split ones given by cones of chain maps X[-1] -> Y");
  rep.notes.push_back("purity clauses are not covered: they quantify over all short exact sequences");
  return rep;
}

SuiteReport suite_hovey(const SuiteConfig& c) {
  SuiteReport rep =
      start("hovey", "Hovey triple compatibility: Ext^1 orthogonality against exact complexes, W thick", c);
  const AlgebraPtr r = ring_or_default(c);
  const TestClass t = test_class_from_recipes(r, Side::left, c.T);
  const std::size_t samples = samples_or(c, 300);
  if (c.negative_control) {
    universe_provenance(rep, r, c, Side::left);
    rep.notes.push_back("negative control: A = B = all complexes");
    absorb(rep, "A = B = all",
           hovey_triple_falsifier(all_complexes(Side::left), all_complexes(Side::left), universe(r, c, Side::left),
                                  c.seed, samples));
  } else if (!c.predicates.empty()) {
    if (c.predicates.size() != 2) throw std::invalid_argument("a Hovey check needs two predicates");
    const ClassPredicate a = predicate_from_string(c.predicates[0], t);
    const ClassPredicate b = predicate_from_string(c.predicates[1], t);
    if (a.side != b.side) throw std::invalid_argument("A and B must live on the same side");
    universe_provenance(rep, r, c, a.side);
    absorb(rep, "A = " + a.name + ", B = " + b.name,
           hovey_triple_falsifier(a, b, universe(r, c, a.side), c.seed, samples));
  } else {
    universe_provenance(rep, r, c, Side::right);
    const ClassPredicate a = dw_lift(t_flat_class(t));
    absorb(rep, "A = " + a.name + ", B = all",
           hovey_triple_falsifier(a, all_complexes(Side::right), universe(r, c, Side::right), c.seed, samples));
  }
  rep.notes.push_back("a falsifier: no counterexample does not prove the triple exists");
  return rep;
}

using SuiteFn = SuiteReport (*)(const SuiteConfig&);
const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"signs", sign_suite},
      {"tfae1", suite_injective_routes},
      {"char-flat", suite_flat_routes},
      {"fi-if", suite_fi_if},
      {"dim-dual", suite_dim_dual},
      {"presentation", suite_presentation},
      {"induced-duality", suite_induced_duality},
      {"closure", suite_closure},
      {"hovey", suite_hovey},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (config.dimcap == 0 || config.cap == 0) throw std::invalid_argument("caps must be positive");
  if (config.hi < config.lo) throw std::invalid_argument("empty window");
  for (const auto& [n, f] : registry())
    if (n == name) return f(config);
  throw std::invalid_argument("unknown suite '" + name + "'; known: " + join(suite_names(), ", "));
}

TestClass test_class_from_recipes(const AlgebraPtr& r, Side side, const std::vector<std::string>& recipes) {
  std::vector<NamedModule> members;
  for (const auto& rec : recipes) {
    if (rec == "R")
      members.push_back({"R", regular_module(r, side)});
    else
      members.push_back({rec, module_from_recipe(r, side, rec)});
  }
  if (members.empty()) members.push_back({"k", augmentation_module(r, side)});
  return TestClass(join(recipes, ","), std::move(members));
}

SuiteReport hom_homology_oracle(std::uint32_t p, std::size_t pairs, std::uint64_t seed) {
  SuiteConfig c;
  c.seed = seed;
  SuiteReport rep = start("hom-homology", "homology of Hom(X, Y) equals chain maps to a shift modulo homotopy", c);
  const AlgebraPtr r = truncated_polynomial(p, 2);
  rep.provenance.emplace_back("ring", r->description());
  const auto pl = module_pool(r, Side::left);
  for (std::size_t i = 0; i < pairs; ++i) {
    auto rng = instance_rng(seed, i);
    const int lo = static_cast<int>(i % 3) - 1;
    const ChainComplex x = random_complex(pl, lo, lo + 1 + static_cast<int>(i % 2), rng);
    const ChainComplex y = random_complex(pl, 0, 2, rng);
    const ChainComplex h = hom_complex(x, y).complex;
    for (int n = h.lo(); n <= h.hi(); ++n) {
      ++rep.instances;
      const std::size_t a = homology_dim(h, n), b = homotopy_classes_dim(x, suspension(y, -n));
      if (a != b)
        rep.counterexamples.push_back({"pair " + std::to_string(i) + " degree " + std::to_string(n),
                                       "H_n = " + std::to_string(a) + ", homotopy classes = " + std::to_string(b)});
    }
  }
  return rep;
}

SuiteReport residue_field_ext_tor(std::size_t upto) {
  SuiteReport rep = start("residue-field", "Ext^i(k, k) and Tor_i(k, k) over F_2[x]/(x^2) are one-dimensional",
                          SuiteConfig{});
  const AlgebraPtr r = truncated_polynomial(2, 2);
  rep.provenance.emplace_back("ring", r->description());
  const Module kl = augmentation_module(r, Side::left), kr = augmentation_module(r, Side::right);
  for (CoverKind kind : {CoverKind::minimal, CoverKind::naive}) {
    const std::string label = kind == CoverKind::minimal ? "minimal" : "naive";
    const auto ext = ext_dims(upto, kl, kl, kind);
    const auto tor = tor_dims(upto, kr, kl, kind);
    for (std::size_t i = 0; i <= upto; ++i) {
      rep.instances += 2;
      if (ext[i] != 1) rep.counterexamples.push_back({label + " Ext^" + std::to_string(i), std::to_string(ext[i])});
      if (tor[i] != 1) rep.counterexamples.push_back({label + " Tor_" + std::to_string(i), std::to_string(tor[i])});
    }
  }
  return rep;
}

SuiteReport dual_coherence(const SuiteConfig& c) {
  SuiteReport rep = start("dual-coherence", "the two realizations of X^+ agree and X^+ is exact iff X is", c);
  const AlgebraPtr r = ring_or_default(c);
  universe_provenance(rep, r, c, Side::left);
  for (Side side : {Side::left, Side::right}) {
    const auto u = universe(r, c, side);
    for (std::size_t i = 0; i < u.size(); ++i) {
      ++rep.instances;
      const std::string id = std::string(side_name(side)) + " instance " + std::to_string(i);
      const DualPair d = character_dual_pair(u[i]);
      if (!is_chain_map(d.comparison) || !is_isomorphism(d.comparison))
        rep.counterexamples.push_back({id, "comparison is not a chain isomorphism: " + describe(u[i])});
      const bool ex = is_exact(u[i]);
      if (ex != is_exact(d.definitional) || ex != is_exact(d.reindexed))
        rep.counterexamples.push_back({id, "exactness not preserved: " + describe(u[i])});
    }
  }
  return rep;
}

SuiteReport truncation_example(const SuiteConfig& c) {
  SuiteReport rep = start("truncation-example", "presentation dimensions over the square-zero truncation family", c);
  const TruncationFamily fam = family_or_default(c);
  rep.provenance.emplace_back("family", fam.describe());
  const std::vector<std::pair<std::string, Lambda>> expected = {
      {"ideal:<x_1>", Lambda::finite(0)}, {"quotient:R/<x_1>", Lambda::finite(1)}, {"free:1", Lambda::infinity()}};
  for (const auto& [recipe, want] : expected) {
    ++rep.instances;
    const LambdaVerdict v = lambda_module(fam, recipe);
    rep.notes.push_back(recipe + ": " + v.to_string());
    if (!(v.lambda == want))
      rep.counterexamples.push_back({recipe, "lambda " + v.to_string() + ", expected " + want.to_string()});
  }
  ++rep.instances;
  const CoherenceProbe probe = n_coherence_probe(fam, 2, 3);
  rep.notes.push_back(probe.summary());
  if (probe.stabilization != 2)
    rep.counterexamples.push_back({"probe", "stabilization " + std::to_string(probe.stabilization) + ", expected 2"});
  return rep;
}

}  // namespace homlab
