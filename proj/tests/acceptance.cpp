// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "homlab/suites.hpp"

using namespace homlab;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string counts(const SuiteReport& r) {
  std::string s = std::to_string(r.instances) + " instances, " + std::to_string(r.counterexamples.size()) +
                  " counterexamples";
  if (!r.counterexamples.empty()) s += "; first: " + r.counterexamples.front().where + ": " + r.counterexamples.front().detail;
  return s;
}

Outcome from_suite(const SuiteReport& r) { return {r.passed(), counts(r)}; }

// Runs a mutant executable; it must report counterexamples (exit status 1).
bool mutant_detected(const char* path) {
  const std::string cmd = std::string("\"") + path + "\" > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 1;
}

// Ext and Tor of (k, k) from the periodic resolution ... -x-> R -x-> R -> k by hand:
// Hom_R(R, k) = k and k (x)_R R = k, with every induced map equal to the action of x on k.
std::size_t hand_dim(const Module& k, std::size_t i) {
  const std::size_t x = *k.ring()->index_of("x");
  const Matrix& act = k.action(x);
  std::size_t nonzero = 0;
  for (std::size_t r = 0; r < act.rows(); ++r)
    for (std::size_t c = 0; c < act.cols(); ++c) nonzero += act(r, c) != 0;
  // k is one-dimensional, so each induced map has rank 0 or 1.
  const std::size_t rank = nonzero ? 1 : 0;
  const std::size_t incoming = i == 0 ? 0 : rank;
  return (1 - rank) - incoming;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string what;
    double limit_s;  // 0 means no time limit
    std::function<Outcome()> run;
  };
  const SuiteConfig base;  // F_2[x]/(x^2), T = {k, R}, window [0,2], dim <= 2, seed 0

  const std::vector<Criterion> criteria = {
      {1, "truncation family: lambda values and probe stabilization at 2", 60,
       [&] { return from_suite(truncation_example(base)); }},
      {2, "lambda of complexes: termwise and resolution paths agree on 100 recipes", 300,
       [&] {
         SuiteConfig c = base;
         c.samples = 100;
         return from_suite(run_suite("presentation", c));
       }},
      {3, "T-injective complexes: three routes agree on the enumerated universe", 600,
       [&] {
         const SuiteReport r = run_suite("tfae1", base);
         return Outcome{r.passed() && r.instances == 1386, counts(r)};
       }},
      {4, "T-flat complexes: three routes agree on the mirror universe", 600,
       [&] {
         const SuiteReport r = run_suite("char-flat", base);
         return Outcome{r.passed() && r.instances == 1386, counts(r)};
       }},
      {5, "flat iff dual injective, and fd(Y) = id(Y^+) with cap 3", 0,
       [&] {
         SuiteConfig c = base;
         c.cap = 3;
         const SuiteReport a = run_suite("fi-if", c), b = run_suite("dim-dual", c);
         return Outcome{a.passed() && b.passed(), "fi-if: " + counts(a) + "; dim-dual: " + counts(b)};
       }},
      {6, "sign suite passes over F_3[x]/(x^2) and catches every removed sign", 120,
       [&] {
         const SuiteReport r = sign_suite(base);
         const char* mutants[] = {SIGN_MUTANT_0, SIGN_MUTANT_1, SIGN_MUTANT_2, SIGN_MUTANT_3, SIGN_MUTANT_4};
         std::string missed;
         for (int s = 0; s < 5; ++s)
           if (!mutant_detected(mutants[s])) missed += " " + std::to_string(s);
         return Outcome{r.passed() && missed.empty(),
                        counts(r) + "; mutants missed:" + (missed.empty() ? " none" : missed)};
       }},
      {7, "homology of Hom equals homotopy classes on 100 random pairs", 0,
       [] { return from_suite(hom_homology_oracle(3, 100, 0)); }},
      {8, "Ext^i(k,k) = Tor_i(k,k) = 1 for i <= 4, minimal and naive covers, hand resolution", 0,
       [] {
         const SuiteReport r = residue_field_ext_tor(4);
         const AlgebraPtr ring = truncated_polynomial(2, 2);
         const Module k = augmentation_module(ring, Side::left);
         bool hand = true;
         for (std::size_t i = 0; i <= 4; ++i) hand = hand && hand_dim(k, i) == 1;
         return Outcome{r.passed() && hand, counts(r) + (hand ? "; hand resolution agrees" : "; hand resolution differs")};
       }},
      {9, "dw, ex and tilde lifted pairs satisfy the duality pair axioms", 0,
       [&] { return from_suite(run_suite("induced-duality", base)); }},
      {10, "both dual realizations are isomorphic and preserve exactness", 0,
       [&] { return from_suite(dual_coherence(base)); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::printf("criterion %2d: %s  %s (%.2fs%s) [%s]\n", c.id, pass ? "PASS" : "FAIL", c.what.c_str(), secs,
                in_time ? "" : ", over time limit", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
