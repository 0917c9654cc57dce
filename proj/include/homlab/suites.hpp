#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "homlab/fpn.hpp"
#include "homlab/io.hpp"
#include "homlab/relative.hpp"

namespace homlab {

struct SuiteConfig {
  AlgebraPtr ring;                         // defaults to F_2[x]/(x^2)
  std::vector<std::string> T = {"k", "R"};  // module recipes of the test class
  int lo = 0, hi = 2;
  std::size_t dimcap = 2;
  std::size_t cap = 3;
  std::optional<TruncationFamily> family;  // defaults to the square-zero family
  std::uint32_t field = 3;                 // ring F_field[x]/(x^2) of the sign suite
  std::size_t samples = 0;                 // randomized instances; 0 picks the suite default
  std::uint64_t seed = 0;
  bool negative_control = false;
  std::vector<std::string> predicates;     // optional class pair for induced-duality and hovey
};

struct Counterexample {
  std::string where;  // instance or sub-check
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string anchor;  // statement under test
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> provenance;
  std::size_t instances = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  bool passed() const { return counterexamples.empty(); }
  std::string text() const;
  io::json to_json() const;
};

// Differentials of Hom, cycle Hom, tensor, bar tensor, both duals, shifts and cones
// square to zero on seeded random complexes over F_field[x]/(x^2).
SuiteReport sign_suite(const SuiteConfig& config);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

// Shared by the suites.
SuiteReport start_report(const std::string& suite, const std::string& anchor, std::uint64_t seed);
// Generator for instance index of a seeded run.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);
// Modules of dimension 1 and 2.
std::vector<Module> module_pool(const AlgebraPtr& r, Side side);

// Test class from module recipes; "R" is the regular module and "k" the residue field.
TestClass test_class_from_recipes(const AlgebraPtr& r, Side side, const std::vector<std::string>& recipes);

// Checks outside the registered suites.
// dim H_n Hom(X, Y) against chain maps X -> Y[n] modulo homotopy, on random pairs.
SuiteReport hom_homology_oracle(std::uint32_t p, std::size_t pairs, std::uint64_t seed);
// Ext^i(k, k) and Tor_i(k, k) over F_2[x]/(x^2), minimal and naive covers, i <= upto.
SuiteReport residue_field_ext_tor(std::size_t upto);
// Both realizations of the dual agree and preserve exactness on every universe member.
SuiteReport dual_coherence(const SuiteConfig& config);
// Presentation dimensions of the truncation family examples and the probe stabilization.
SuiteReport truncation_example(const SuiteConfig& config);

}  // namespace homlab
