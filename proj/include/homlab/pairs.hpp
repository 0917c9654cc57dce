#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "homlab/module_ops.hpp"
#include "homlab/relative_dim.hpp"

namespace homlab {

enum class Scope { module, complex };

// A named, deterministic membership test on modules or on complexes of one side.
struct ClassPredicate {
  std::string name;
  Scope scope = Scope::module;
  Side side = Side::left;
  std::function<bool(const Module&)> on_module;
  std::function<bool(const ChainComplex&)> on_complex;

  bool operator()(const Module& m) const;
  bool operator()(const ChainComplex& x) const;
};

ClassPredicate t_injective_class(const TestClass& t);
ClassPredicate t_flat_class(const TestClass& t);           // right modules
ClassPredicate id_at_most_class(const TestClass& t, std::size_t k);
ClassPredicate fd_at_most_class(const TestClass& t, std::size_t k);  // right modules
ClassPredicate projective_class(Side side);
ClassPredicate free_class(Side side);
ClassPredicate injective_class(Side side);  // Baer test
ClassPredicate all_modules(Side side);
ClassPredicate exact_complexes(Side side);
ClassPredicate all_complexes(Side side);

// Complex classes from a module class: every term / every term and exact / exact with every cycle.
ClassPredicate dw_lift(const ClassPredicate& p);
ClassPredicate ex_lift(const ClassPredicate& p);
ClassPredicate tilde_lift(const ClassPredicate& p);

// Registry.  Expressions: t-injective, t-flat, id<=k, fd<=k, projective, free,
// injective, everything, exact, all; lifts dw(...), ex(...), tilde(...); a suffix
// @left or @right sets the side of side-free predicates.  t is the left test class.
ClassPredicate predicate_from_string(const std::string& expr, const TestClass& t);
std::vector<std::string> registered_predicates();

// Finite-universe report; the caveat flag is always set.
struct PairReport {
  std::vector<std::string> axioms;
  std::string universe;
  std::size_t instances = 0;
  std::vector<std::string> counterexamples;
  bool caveat = true;
  bool passed() const { return counterexamples.empty(); }
  std::string summary() const;
};

// (i) M(U) iff C(U^+) for every U in m_universe; (ii) C(A (+) B) iff C(A) and C(B)
// for seeded sampled pairs from c_universe (all pairs when there are at most pair_samples);
// (iii) the same closure for M on m_universe when check_m_closure is set.
PairReport duality_pair_check(const ClassPredicate& m, const ClassPredicate& c, const std::vector<Module>& m_universe,
                              const std::vector<Module>& c_universe, std::uint64_t seed = 0,
                              std::size_t pair_samples = 400, bool check_m_closure = false);
PairReport duality_pair_check(const ClassPredicate& m, const ClassPredicate& c,
                              const std::vector<ChainComplex>& m_universe, const std::vector<ChainComplex>& c_universe,
                              std::uint64_t seed = 0, std::size_t pair_samples = 400, bool check_m_closure = false);

// 0 -> A -f-> B -g-> C -> 0.  Construction throws std::invalid_argument unless exact.
struct ModuleSes {
  ModuleMap f, g;
};
ModuleSes make_module_ses(const ModuleMap& f, const ModuleMap& g);
struct ComplexSes {
  ChainMap f, g;
};
ComplexSes make_complex_ses(const ChainMap& f, const ChainMap& g);

// F-relative purity: N (x) f injective for every right module N in F (modules), or
// Y (x)bar f injective in every degree for every right complex Y in F (complexes).
bool is_pure_exact(const ModuleSes& eta, const std::vector<Module>& family);
bool is_pure_exact(const ComplexSes& eta, const std::vector<ChainComplex>& family);
// Cyclic modules R/I of the given side with dim <= dimcap.
std::vector<Module> cyclic_modules(const AlgebraPtr& r, Side side, std::size_t dimcap);

// Samples Ext^1_Ch(A, B) = 0 for A in A and W, B in B, and for A in A, B in B and W,
// with W the exact complexes; checks that W has the two-out-of-three property on
// cone sequences 0 -> Y -> cone(f) -> X[1] -> 0 of sampled maps.
PairReport hovey_triple_falsifier(const ClassPredicate& a, const ClassPredicate& b,
                                  const std::vector<ChainComplex>& universe, std::uint64_t seed = 0,
                                  std::size_t pair_samples = 300);

}  // namespace homlab
