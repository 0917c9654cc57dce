#include <doctest.h>

#include <random>
#include <set>

#include "homlab/fpn.hpp"
#include "homlab/relative.hpp"
#include "homlab/universe.hpp"
#include "oracle.hpp"

using namespace homlab;

namespace {

using Mat = std::vector<std::vector<int>>;  // over F_2

Mat mul(const Mat& a, const Mat& b, std::size_t rows, std::size_t inner, std::size_t cols) {
  Mat c(rows, std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k) c[i][j] ^= a[i][k] & b[k][j];
  return c;
}

bool is_zero(const Mat& a) {
  for (const auto& row : a)
    for (int v : row)
      if (v) return false;
  return true;
}

// Every n x m matrix over F_2.
std::vector<Mat> all_matrices(std::size_t n, std::size_t m) {
  std::vector<Mat> out;
  for (std::uint64_t code = 0; code < (1ull << (n * m)); ++code) {
    Mat a(n, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < n * m; ++i) a[i / m][i % m] = (code >> i) & 1;
    out.push_back(a);
  }
  return out;
}

// Complexes on three degrees over F_2[x]/(x^2), terms of dim <= 2 given by a square-zero
// action of x, counted by enumerating all F_2-matrices.
std::size_t brute_force_universe_count() {
  struct Term {
    std::size_t dim;
    Mat x;
  };
  std::vector<Term> terms{{0, {}}};
  for (std::size_t d = 1; d <= 2; ++d)
    for (const Mat& a : all_matrices(d, d))
      if (is_zero(mul(a, a, d, d, d))) terms.push_back({d, a});
  std::size_t count = 0;
  for (const auto& t0 : terms)
    for (const auto& t1 : terms)
      for (const auto& t2 : terms) {
        // d1: X_1 -> X_0 and d2: X_2 -> X_1 commute with x and compose to zero
        auto maps = [](const Term& s, const Term& t) {
          std::vector<Mat> ok;
          for (const Mat& f : all_matrices(t.dim, s.dim))
            if (mul(f, s.x, t.dim, s.dim, s.dim) == mul(t.x, f, t.dim, t.dim, s.dim)) ok.push_back(f);
          return ok;
        };
        for (const Mat& d1 : maps(t1, t0))
          for (const Mat& d2 : maps(t2, t1))
            if (is_zero(mul(d1, d2, t0.dim, t1.dim, t2.dim))) ++count;
      }
  return count;
}

}  // namespace

TEST_CASE("universe enumeration matches a brute-force count") {
  auto r = truncated_polynomial(2, 2);
  CHECK(universe_modules(r, Side::left, 2).size() == 6);
  auto u = enumerate_complexes(r, {0, 2, 2, Side::left});
  CHECK(u.size() == brute_force_universe_count());
  CHECK(u.size() == 1386);
  std::set<std::string> seen;
  for (const auto& x : u) {
    CHECK(x.validation_error().empty());
    std::string key;
    for (int m = 0; m <= 2; ++m) {
      key += module_fingerprint(x.term(m)) + "|";
      if (m > 0) {
        const Matrix d = x.diff(m);
        for (std::size_t i = 0; i < d.rows(); ++i)
          for (std::size_t j = 0; j < d.cols(); ++j) key += std::to_string(d(i, j));
      }
      key += "/";
    }
    seen.insert(key);
  }
  CHECK(seen.size() == u.size());
  // the right-module universe mirrors the left one over a commutative ring
  CHECK(enumerate_complexes(r, {0, 2, 2, Side::right}).size() == 1386);
  // a single degree gives exactly the module list
  CHECK(enumerate_complexes(r, {0, 0, 2, Side::left}).size() == 6);
  CHECK_THROWS_AS(enumerate_complexes(r, {2, 0, 2, Side::left}), std::invalid_argument);
}

TEST_CASE("lazy resolution of the residue field over square-zero truncations") {
  for (int D : {2, 3, 4}) {
    auto r = square_zero_truncation(2, D);
    LazyResolution res(augmentation_module(r, Side::left));
    std::size_t expect = 1;
    for (std::size_t j = 0; j <= 3; ++j) {
      CHECK(res.betti(j) == expect);
      expect *= static_cast<std::size_t>(D);
    }
  }
}

TEST_CASE("column trends and the column decision rule") {
  CHECK(column_trend({2, 2, 2}) == ColumnTrend::constant);
  CHECK(column_trend({3, 4, 5}) == ColumnTrend::growing);
  CHECK(column_trend({3, 3, 5}) == ColumnTrend::irregular);
  CHECK(column_trend({5, 4, 3}) == ColumnTrend::irregular);

  const std::vector<int> D{3, 4, 5};
  auto v = lambda_from_columns(D, 6, [&](std::size_t d, std::size_t j) { return j < 2 ? 1 : D[d]; });
  CHECK(v.lambda == Lambda::finite(1));
  CHECK(v.stabilized);
  v = lambda_from_columns(D, 6, [](std::size_t, std::size_t) { return std::size_t{1}; });
  CHECK(v.lambda.is_infinite());
  v = lambda_from_columns(D, 6, [](std::size_t d, std::size_t j) { return j == 1 ? (d == 1 ? 3 : 2) : 1; });
  CHECK_FALSE(v.lambda.conclusive());
  CHECK_THROWS_AS(lambda_from_columns({3, 4}, 6, [](std::size_t, std::size_t) { return std::size_t{1}; }),
                  std::invalid_argument);
}

TEST_CASE("lambda arithmetic") {
  CHECK(lambda_min(Lambda::finite(2), Lambda::infinity()) == Lambda::finite(2));
  CHECK(lambda_min(Lambda::finite(2), Lambda::finite(0)) == Lambda::finite(0));
  CHECK_FALSE(lambda_min(Lambda::inconclusive(), Lambda::finite(0)).conclusive());
  CHECK(lambda_shift(Lambda::finite(1), -1) == Lambda::finite(0));
  CHECK(lambda_shift(Lambda::infinity(), 3).is_infinite());
  CHECK(lambda_geq(Lambda::infinity(), Lambda::finite(7)));
  CHECK_FALSE(lambda_geq(Lambda::finite(1), Lambda::infinity()));
  CHECK_THROWS(lambda_geq(Lambda::inconclusive(), Lambda::finite(0)));
  CHECK(Lambda::finite(1).at_least(1));
  CHECK_FALSE(Lambda::finite(0).at_least(1));
}

TEST_CASE("presentation dimensions over the square-zero family") {
  const auto fam = square_zero_family();
  auto a = lambda_module(fam, "ideal:<x_1>");
  CHECK(a.lambda == Lambda::finite(0));
  CHECK(a.betti.size() == 4);
  CHECK(a.betti[0][1] == 3);  // the syzygy of the ideal is the whole maximal ideal
  CHECK(lambda_module(fam, "quotient:R/<x_1>").lambda == Lambda::finite(1));
  auto f = lambda_module(fam, "free:1");
  CHECK(f.lambda.is_infinite());
  CHECK(f.to_string().find("no growth up to cap 6") != std::string::npos);
  CHECK(lambda_module(fam, "free:2").lambda.is_infinite());
  CHECK(lambda_module(fam, "simple").lambda == Lambda::finite(0));

  auto probe = n_coherence_probe(fam, 2, 3);
  CHECK(probe.stabilization == 2);
  CHECK(probe.separating.empty());
  CHECK(probe.inconclusive.empty());
}

TEST_CASE("recipes are parsed strictly") {
  auto r = square_zero_truncation(2, 3);
  CHECK(module_from_recipe(r, Side::left, "k").dim() == 1);
  CHECK(module_from_recipe(r, Side::left, "free:2").dim() == 8);
  CHECK(module_from_recipe(r, Side::left, "ideal:<x_1,x_2>").dim() == 2);
  CHECK(module_from_recipe(r, Side::left, "quotient:R/⟨x_1⟩").dim() == 3);
  CHECK(module_from_recipe(r, Side::left, "zero").dim() == 0);
  CHECK_THROWS_AS(module_from_recipe(r, Side::left, "bogus"), std::invalid_argument);
  CHECK_THROWS_AS(module_from_recipe(r, Side::left, "free:-1"), std::invalid_argument);
  CHECK_THROWS_AS(module_from_recipe(r, Side::left, "ideal:<y_9>"), std::invalid_argument);
  CHECK_THROWS_AS(module_from_recipe(r, Side::left, "quotient:<x_1>"), std::invalid_argument);

  auto x = complex_from_recipe(r, Side::left, "disk(1, free:1) + sphere(0, simple)");
  CHECK(x.lo() == 0);
  CHECK(x.hi() == 1);
  CHECK(x.dim(0) == 5);
  CHECK(x.dim(1) == 4);
  CHECK(homology_dims(x).at(0) == 1);
  CHECK_THROWS_AS(complex_from_recipe(r, Side::left, "disk(0 free:1"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_recipe(r, Side::left, "cube(0, free:1)"), std::invalid_argument);
}

TEST_CASE("lambda of complexes agrees along both paths") {
  const auto fam = square_zero_family();
  for (const char* rec : {"disk(0, ideal:<x_1>)", "sphere(0, quotient:R/<x_1>)",
                          "sphere(0, free:1) + sphere(1, free:1)", "disk(1, free:2) + sphere(2, quotient:R/<x_1>)"}) {
    auto rep = lambda_complex(fam, rec);
    CHECK_MESSAGE(rep.agree(), rec, " termwise ", rep.termwise.to_string(), " resolution ", rep.resolution.to_string());
  }
  CHECK(lambda_complex(fam, "sphere(0, quotient:R/<x_1>)").resolution.lambda == Lambda::finite(1));
  CHECK(lambda_complex(fam, "sphere(0, free:1)").resolution.lambda.is_infinite());
}

TEST_CASE("finite presentations of complexes by disk sums") {
  auto r = truncated_polynomial(2, 2);
  auto k = augmentation_module(r, Side::left);
  auto cert = type_fpn_complex(sphere(k, 0), 1);
  CHECK(cert.holds);
  CHECK(cert.verified_exact);
  CHECK(cert.layers.size() == 2);
  auto free = type_fpn_complex(disk(regular_module(r, Side::left), 1), 3);
  CHECK(free.holds);
  CHECK(free.verified_exact);
}

TEST_CASE("short exact sequence inequalities on random ideals and splits") {
  const auto fam = square_zero_family();
  std::mt19937_64 rng(11);
  const auto recipes = probe_recipes(fam, 2);
  for (int t = 0; t < 12; ++t) {
    std::string gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < count) chosen.insert(1 + static_cast<int>(rng() % 3));
    for (int g : chosen) gens += (gens.empty() ? "" : ",") + std::string("x_") + std::to_string(g);
    auto rep = lambda_ses_inequalities(fam, "ideal:<" + gens + ">");
    CHECK_MESSAGE(rep.passed(), rep.summary());
    const std::string& a = recipes[rng() % recipes.size()];
    const std::string& c = recipes[rng() % recipes.size()];
    auto split = lambda_ses_inequalities(fam, "split:" + a + "|" + c);
    CHECK_MESSAGE(split.passed(), split.summary());
    CHECK(split.inequalities.size() == 4);
  }
  CHECK_THROWS_AS(lambda_ses_inequalities(fam, "nonsense"), std::invalid_argument);
}
