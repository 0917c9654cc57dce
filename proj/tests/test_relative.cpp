#include <doctest.h>

#include <random>

#include "homlab/module_ops.hpp"
#include "homlab/relative_dim.hpp"
#include "oracle.hpp"

using namespace homlab;

namespace {

TestClass class_k(const AlgebraPtr& r, Side side = Side::left, bool with_ring = false) {
  return TestClass("T", {{"k", augmentation_module(r, side)}}, with_ring);
}

// Number of invariant subspaces, by checking every subspace spanned by up to dim vectors.
std::size_t brute_submodule_count(const Module& m) {
  std::set<std::vector<std::uint32_t>> found;
  const std::size_t n = m.dim();
  std::vector<std::vector<std::uint32_t>> vecs;
  oracle::for_each_vector(m.p(), n, [&](const auto& v) { vecs.push_back(v); });
  // A subset S of F_p^n is a submodule iff it contains 0, is closed under + and every action.
  const std::size_t total = vecs.size();
  if (total > 16) return 0;
  for (std::uint64_t mask = 1; mask < (1ull << total); ++mask) {
    if (!(mask & 1)) continue;  // vecs[0] is the zero vector
    std::set<std::vector<std::uint32_t>> s;
    for (std::size_t i = 0; i < total; ++i)
      if (mask >> i & 1) s.insert(vecs[i]);
    bool ok = true;
    for (const auto& a : s) {
      for (const auto& b : s) {
        std::vector<std::uint32_t> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = (a[i] + b[i]) % m.p();
        if (!s.count(c)) ok = false;
      }
      for (const Matrix& act : m.actions())
        if (!s.count(oracle::mat_vec(act, a))) ok = false;
      if (!ok) break;
    }
    if (ok) found.insert({static_cast<std::uint32_t>(mask), static_cast<std::uint32_t>(mask >> 32)});
  }
  return found.size();
}

}  // namespace

TEST_CASE("kernel, image and cokernel of multiplication by x") {
  auto r = truncated_polynomial(2, 2);
  auto reg = regular_module(r, Side::left);
  auto x = make_module_map(reg, reg, r->right_mult(*r->index_of("x")));
  CHECK(kernel(x).module.dim() == 1);
  CHECK(image(x).module.dim() == 1);
  CHECK(cokernel(x).module.dim() == 1);
  CHECK(is_isomorphic(cokernel(x).module, augmentation_module(r, Side::left)));
  CHECK(is_homomorphism(kernel(x).module, reg, kernel(x).map.matrix));

  auto zero = make_module_map(reg, reg, Matrix(2, 2, 2));
  CHECK(kernel(zero).module.dim() == 2);
  CHECK(image(zero).module.dim() == 0);
  auto id = make_module_map(reg, reg, Matrix::identity(2, 2));
  CHECK(kernel(id).module.dim() == 0);
  CHECK(cokernel(id).module.dim() == 0);

  Matrix bad(2, 2, 2);
  bad.at(0, 0) = 1;
  CHECK_THROWS_AS(make_module_map(reg, reg, bad), std::invalid_argument);
}

TEST_CASE("submodule enumeration matches brute force") {
  auto r = truncated_polynomial(2, 2);
  auto k = augmentation_module(r, Side::left);
  for (const Module& m : {regular_module(r, Side::left), direct_sum(k, k), direct_sum(k, regular_module(r, Side::left))}) {
    auto lat = enumerate_submodules(m);
    CHECK(lat.exhaustive);
    CHECK(lat.members.size() == brute_submodule_count(m));
    for (const auto& s : lat.members) CHECK(is_invariant(m, s));
  }
  // R = F_2[x]/(x^2) has exactly the ideals 0, (x), R.
  CHECK(enumerate_submodules(regular_module(r, Side::left)).members.size() == 3);
}

TEST_CASE("ring maps, base change and restriction") {
  auto r3 = square_zero_truncation(2, 3);
  auto r4 = square_zero_truncation(2, 4);
  auto phi = ring_map_by_labels(r3, r4);

  auto bc = base_change(phi, free_module(r3, Side::left, 1));
  CHECK(bc.dim() == r4->dim());
  CHECK(is_isomorphic(bc, regular_module(r4, Side::left)));

  auto res = restrict_module(phi, ideal_module(r4, Side::left, {"x_4"}));
  CHECK(res.dim() == 1);
  CHECK(is_isomorphic(res, augmentation_module(r3, Side::left)));

  auto id = ring_map_by_labels(r3, r3);
  auto k = augmentation_module(r3, Side::left);
  CHECK(is_isomorphic(base_change(id, k), k));
  CHECK(is_isomorphic(restrict_module(id, k), k));

  auto ideal = ideal_module(r3, Side::left, {"x_1"});
  auto [lhs, rhs] = adjunction_dims(phi, ideal, augmentation_module(r4, Side::left));
  CHECK(lhs == rhs);
  auto right = augmentation_module(r3, Side::right);
  CHECK(base_change(phi, right).side() == Side::right);
  CHECK(base_change(phi, right).dim() == 2);  // spanned by 1 and x_4

  // x_i -> 0 for every i is a unital algebra map onto the residue field.
  auto f2 = field_algebra(2);
  Matrix aug(2, 1, r3->dim());
  aug.at(0, r3->unit()) = 1;
  CHECK_NOTHROW(make_ring_map(r3, f2, aug));
  Matrix not_unital(2, 1, r3->dim());
  CHECK_THROWS_AS(make_ring_map(r3, f2, not_unital), std::invalid_argument);
}

TEST_CASE("relative injectivity and flatness of modules") {
  auto r = truncated_polynomial(2, 2);
  auto k = augmentation_module(r, Side::left);
  auto reg = regular_module(r, Side::left);
  TestClass t("T", {{"k", k}});
  CHECK(t.size() == 2);
  CHECK(relative_injective(reg, t));
  CHECK_FALSE(relative_injective(k, class_k(r)));
  CHECK(relative_flat(free_module(r, Side::right, 2), t));
  CHECK_FALSE(relative_flat(augmentation_module(r, Side::right), t));

  auto id = relative_id(k, class_k(r), 4);
  CHECK(id.over_cap());
  REQUIRE(id.failing);
  CHECK(id.failing->index == 5);
  CHECK(relative_id(reg, class_k(r), 4).value == std::optional<std::size_t>(0));
  CHECK(relative_fd(augmentation_module(r, Side::right), class_k(r), 4).over_cap());
  CHECK(relative_fd(free_module(r, Side::right, 1), class_k(r), 4).value == std::optional<std::size_t>(0));
}

TEST_CASE("relative dimensions take intermediate values") {
  // Over upper triangular matrices the simple module S2 = e22 R / rad has id 1 and the
  // hereditary ring forces every dimension to be at most 1.
  auto r = upper_triangular(3);
  std::vector<NamedModule> simples;
  for (const auto& m : enumerate_modules(r, Side::left, 1)) simples.push_back({"S", m});
  TestClass t("simples", simples);
  std::size_t seen_one = 0;
  for (std::size_t d = 1; d <= 2; ++d)
    for (const auto& m : enumerate_modules(r, Side::left, d)) {
      auto v = relative_id(m, t, 3);
      REQUIRE_FALSE(v.over_cap());
      CHECK(*v.value <= 1);
      if (*v.value == 1) {
        ++seen_one;
        REQUIRE(v.failing);
        CHECK(v.failing->index == 1);
      }
    }
  CHECK(seen_one > 0);
}

TEST_CASE("Baer criterion and projectivity") {
  auto r = truncated_polynomial(2, 2);
  CHECK(baer_injective(regular_module(r, Side::left)));
  CHECK_FALSE(baer_injective(augmentation_module(r, Side::left)));
  CHECK(baer_injective(zero_module(r, Side::left)));
  CHECK(is_projective(free_module(r, Side::left, 2)));
  CHECK_FALSE(is_projective(augmentation_module(r, Side::left)));
  // e22 R is projective but not free over the triangular ring.
  auto tri = upper_triangular(2);
  std::size_t projective_not_free = 0;
  for (const auto& m : enumerate_modules(tri, Side::left, 1))
    if (is_projective(m) && !is_free(m)) ++projective_not_free;
  CHECK(projective_not_free == 1);
}

TEST_CASE("injective complexes by three routes") {
  auto r = truncated_polynomial(2, 2);
  auto k = augmentation_module(r, Side::left);
  auto reg = regular_module(r, Side::left);
  TestClass tk = class_k(r);

  auto d0 = t_injective_report(disk(reg, 0), tk);
  CHECK(d0.verdict);
  CHECK(d0.agree());

  auto s0 = t_injective_report(sphere(k, 0), tk);
  CHECK_FALSE(s0.verdict);
  CHECK(s0.agree());

  CHECK(t_injective_complex(ChainComplex::zero(r, Side::left), tk));

  TestClass t("T", {{"k", k}});
  std::mt19937_64 rng(5);
  std::vector<Module> pool{k, reg, direct_sum(k, k)};
  for (int i = 0; i < 25; ++i) {
    auto x = random_complex(pool, 0, 2, rng);
    auto rep = t_injective_report(x, t);
    CHECK_MESSAGE(rep.agree(), rep.summary());
    CHECK(t_injective_complex(suspension(x, 1), t) == rep.verdict);
  }
}

TEST_CASE("flat complexes by three routes") {
  auto r = truncated_polynomial(2, 2);
  TestClass tk = class_k(r);
  auto rk = augmentation_module(r, Side::right);
  auto rreg = regular_module(r, Side::right);
  CHECK(t_flat_report(disk(rreg, 0), tk).verdict);
  auto s0 = t_flat_report(sphere(rk, 0), tk);
  CHECK_FALSE(s0.verdict);
  CHECK(s0.agree());
  CHECK(t_flat_complex(ChainComplex::zero(r, Side::right), tk));

  TestClass t("T", {{"k", augmentation_module(r, Side::left)}});
  std::mt19937_64 rng(9);
  std::vector<Module> pool{rk, rreg, direct_sum(rk, rk)};
  for (int i = 0; i < 20; ++i) {
    auto y = random_complex(pool, 0, 2, rng);
    auto rep = t_flat_report(y, t);
    CHECK_MESSAGE(rep.agree(), rep.summary());
  }
}

TEST_CASE("relative dimensions of complexes") {
  auto r = truncated_polynomial(2, 2);
  auto k = augmentation_module(r, Side::left);
  TestClass tk = class_k(r);

  auto dk = relative_id_complex(disk(k, 0), tk, 3);
  CHECK(dk.verdict.over_cap());
  CHECK(dk.agree());
  auto dr = relative_id_complex(disk(regular_module(r, Side::left), 0), tk, 3);
  CHECK(dr.verdict.value == std::optional<std::size_t>(0));
  CHECK(dr.agree());
  auto s = relative_id_complex(sphere(k, 1), tk, 2);
  CHECK(s.verdict.over_cap());
  CHECK(s.verdict.reason.find("not exact") == 0);

  auto tri = upper_triangular(3);
  std::vector<NamedModule> simples;
  for (const auto& m : enumerate_modules(tri, Side::left, 1)) simples.push_back({"S", m});
  TestClass ts("simples", simples);
  std::size_t finite_positive = 0;
  for (const auto& m : enumerate_modules(tri, Side::left, 1)) {
    auto c = relative_id_complex(disk(m, 1), ts, 2);
    CHECK_MESSAGE(c.agree(), c.verdict.to_string(), " vs ", c.sphere_route.to_string());
    if (c.verdict.value && *c.verdict.value > 0) ++finite_positive;
    auto rm = character_dual(disk(m, 1));
    auto f = relative_fd_complex(rm, ts, 2);
    CHECK(f.agree());
    CHECK(same_verdict(f.verdict, relative_id_complex(character_dual(rm), ts, 2, false).verdict));
  }
  CHECK(finite_positive > 0);

  auto rk = augmentation_module(r, Side::right);
  auto fd = relative_fd_complex(disk(rk, 0), tk, 3);
  CHECK(fd.verdict.over_cap());
  CHECK(fd.agree());
}

TEST_CASE("duality checks on small universes") {
  auto r = truncated_polynomial(2, 2);
  TestClass t("T", {{"k", augmentation_module(r, Side::left)}});
  auto rk = augmentation_module(r, Side::right);
  auto rreg = regular_module(r, Side::right);
  std::vector<ChainComplex> u{disk(rreg, 0), sphere(rk, 0), disk(rk, 1), ChainComplex::zero(r, Side::right)};
  auto a = duality_check_fi_if(u, t);
  CHECK(a.passed());
  CHECK(a.instances == u.size());
  auto b = duality_check_dim(u, t, 3);
  CHECK(b.passed());
}

TEST_CASE("pre-envelope probe over self-injective and non-self-injective rings") {
  auto r = truncated_polynomial(2, 2);
  TestClass tk = class_k(r);
  auto k = augmentation_module(r, Side::left);
  std::vector<ChainComplex> u{disk(k, 0), sphere(k, 0), disk(regular_module(r, Side::left), 1)};
  auto rep = preenvelope_cover_probe(u, tk, 0);
  CHECK(rep.conditions.front().second);
  CHECK(rep.consistent());

  auto sq = square_zero_truncation(3, 2);
  auto neg = preenvelope_cover_probe({}, class_k(sq), 0);
  CHECK_FALSE(neg.conditions.front().second);
  CHECK_FALSE(neg.witnesses.empty());
}
