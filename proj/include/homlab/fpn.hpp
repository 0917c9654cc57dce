#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homlab/complex_ext.hpp"
#include "homlab/module_ops.hpp"

namespace homlab {

// Module recipes evaluated uniformly at each D:
//   simple | k            residue field R/rad R
//   free:r                R^r
//   ideal:<a,b,...>       left ideal generated by basis elements
//   quotient:R/<a,b,...>  R modulo that ideal
// Angle brackets may be written as < > or as the unicode brackets.
Module module_from_recipe(const AlgebraPtr& r, Side side, const std::string& recipe);

// Complex recipes: "disk(n, <module recipe>) + sphere(n, <module recipe>) + ...".
ChainComplex complex_from_recipe(const AlgebraPtr& r, Side side, const std::string& recipe);

struct TruncationFamily {
  TruncationTemplate spec;
  std::vector<int> D_range;
  std::vector<std::string> recipes;
  Side side = Side::left;

  AlgebraPtr ring(int D) const;
  std::string describe() const;
};

// The square-zero family: F_2[x_1..x_D]/(x_1..x_D)^2 over D = 3..6.
TruncationFamily square_zero_family(std::uint32_t p = 2, std::vector<int> D_range = {3, 4, 5, 6});

// Presentation dimension: a finite value >= -1, Infinity, or Inconclusive.
struct Lambda {
  enum class Kind { finite, infinity, inconclusive };
  Kind kind = Kind::inconclusive;
  int value = 0;

  static Lambda finite(int v) { return {Kind::finite, v}; }
  static Lambda infinity() { return {Kind::infinity, 0}; }
  static Lambda inconclusive() { return {Kind::inconclusive, 0}; }
  bool is_finite() const { return kind == Kind::finite; }
  bool is_infinite() const { return kind == Kind::infinity; }
  bool conclusive() const { return kind != Kind::inconclusive; }
  // At least n, for conclusive values.
  bool at_least(int n) const { return is_infinite() || (is_finite() && value >= n); }
  std::string to_string() const;
  friend bool operator==(const Lambda& a, const Lambda& b) {
    return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
  }
};
Lambda lambda_min(const Lambda& a, const Lambda& b);
Lambda lambda_shift(const Lambda& a, int by);
bool lambda_geq(const Lambda& a, const Lambda& b);  // both conclusive

struct LambdaVerdict {
  Lambda lambda;
  std::vector<int> D;
  std::vector<std::vector<std::size_t>> betti;  // betti[d][j]: column j at D[d]
  std::size_t cap = 6;
  bool stabilized = false;  // every examined column before the decisive one was constant
  std::string note;
  std::string to_string() const;  // value with note
  std::string table() const;      // full betti table
};

// Lazily computed minimal free resolution: betti(j) computes columns up to j.
class LazyResolution {
 public:
  explicit LazyResolution(Module m);
  std::size_t betti(std::size_t j);

 private:
  Module syzygy_;
  std::vector<std::size_t> betti_;
};

// Growth of one column across the window.
enum class ColumnTrend { constant, growing, irregular };
ColumnTrend column_trend(const std::vector<std::size_t>& values);

// Column-by-column decision over the window: the first strictly growing column j
// gives lambda = j - 1; all columns 0..cap constant gives Infinity; any other
// pattern gives Inconclusive.  column(d, j) is the rank at D[d].
LambdaVerdict lambda_from_columns(const std::vector<int>& D, std::size_t cap,
                                  const std::function<std::size_t(std::size_t, std::size_t)>& column);

// Requires at least three values of D.
LambdaVerdict lambda_module(const TruncationFamily& family, const std::string& recipe, std::size_t cap = 6);
LambdaVerdict lambda_module(const std::vector<int>& D, const std::vector<Module>& instances, std::size_t cap = 6);

struct LambdaComplexReport {
  LambdaVerdict termwise;     // infimum of the module verdicts of the terms
  LambdaVerdict resolution;   // disk-sum resolutions of the complex
  std::vector<std::pair<int, LambdaVerdict>> terms;
  bool agree() const { return termwise.lambda == resolution.lambda; }
};
LambdaComplexReport lambda_complex(const TruncationFamily& family, const std::string& complex_recipe,
                                   std::size_t cap = 6);

// Partial presentation P^n -> ... -> P^0 -> X -> 0 by disk sums, checked exact.
struct FpnCertificate {
  bool holds = false;
  std::size_t n = 0;
  std::vector<std::map<int, std::size_t>> layers;  // disk ranks by degree, per layer
  bool verified_exact = false;
  std::string to_string() const;
};
FpnCertificate type_fpn_complex(const ChainComplex& x, std::size_t n);

// Short exact sequence 0 -> A -> B -> C -> 0 built at each D.
//   ideal:<gens>   A = ideal, B = R, C = R/ideal
//   split:<a>|<c>  B = A (+) C for module recipes a and c
struct SesReport {
  std::string kind;
  Lambda a, b, c;
  std::vector<std::pair<std::string, bool>> inequalities;
  std::vector<std::string> problems;  // inexact instances or Inconclusive legs
  bool passed() const;
  std::string summary() const;
};
SesReport lambda_ses_inequalities(const TruncationFamily& family, const std::string& ses_recipe, std::size_t cap = 6);

// Module recipes whose generator sets use at most size_cap basis elements of degree one.
std::vector<std::string> probe_recipes(const TruncationFamily& family, std::size_t size_cap);

struct CoherenceProbe {
  std::size_t n = 0;
  std::vector<std::pair<std::string, Lambda>> members;
  std::vector<std::string> separating;    // lambda == n exactly: in FP_n but not FP_{n+1}
  std::vector<std::string> inconclusive;
  int stabilization = 0;  // least s with FP_s = FP_{s+1} = ... on the tested members
  std::string summary() const;
};
CoherenceProbe n_coherence_probe(const TruncationFamily& family, std::size_t n, std::size_t size_cap,
                                 std::size_t cap = 6);

}  // namespace homlab
