#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "homlab/io.hpp"
#include "homlab/pairs.hpp"
#include "homlab/suites.hpp"
#include "homlab/universe.hpp"
#include "oracle.hpp"

using namespace homlab;

namespace {

TestClass class_k(const AlgebraPtr& r) { return TestClass("T", {{"k", augmentation_module(r, Side::left)}}); }

std::filesystem::path scratch_dir() {
  auto d = std::filesystem::temp_directory_path() / "homlab_io_tests";
  std::filesystem::create_directories(d);
  return d;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  auto p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p;
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const io::ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("lifted classes on small complexes") {
  auto r = truncated_polynomial(2, 2);
  auto t = class_k(r);
  auto inj = t_injective_class(t);
  auto dw = dw_lift(inj), ex = ex_lift(inj), tl = tilde_lift(inj);
  auto d0 = disk(regular_module(r, Side::left), 0);
  CHECK(dw(d0));
  CHECK(ex(d0));
  CHECK(tl(d0));
  auto s0 = sphere(regular_module(r, Side::left), 0);
  CHECK(inj(regular_module(r, Side::left)));
  CHECK(dw(s0));
  CHECK_FALSE(ex(s0));
  CHECK_FALSE(tl(s0));
  auto z = ChainComplex::zero(r, Side::left);
  CHECK(dw(z));
  CHECK(ex(z));
  CHECK(tl(z));
  CHECK_THROWS_AS(inj(d0), std::logic_error);
  CHECK_THROWS_AS(dw(regular_module(r, Side::left)), std::logic_error);
  // ex implies dw on the whole universe
  for (const auto& x : enumerate_complexes(r, {0, 1, 2, Side::left}))
    if (ex(x)) CHECK(dw(x));
}

TEST_CASE("predicate registry") {
  auto r = truncated_polynomial(2, 2);
  auto t = class_k(r);
  CHECK(predicate_from_string("dw(t-injective)", t).scope == Scope::complex);
  CHECK(predicate_from_string("t-flat", t).side == Side::right);
  CHECK(predicate_from_string("free@right", t).side == Side::right);
  CHECK(predicate_from_string("tilde( id<=1 )", t).scope == Scope::complex);
  CHECK(predicate_from_string("exact@right", t)(ChainComplex::zero(r, Side::right)));
  CHECK_THROWS_AS(predicate_from_string("nonsense", t), std::invalid_argument);
  CHECK(registered_predicates().size() >= 10);
}

TEST_CASE("duality pairs and their negative control") {
  auto r = truncated_polynomial(2, 2);
  auto t = class_k(r);
  std::vector<Module> mr, ml;
  for (std::size_t d = 0; d <= 3; ++d) {
    for (auto& m : enumerate_modules(r, Side::right, d)) mr.push_back(m);
    for (auto& m : enumerate_modules(r, Side::left, d)) ml.push_back(m);
  }
  auto good = duality_pair_check(t_flat_class(t), t_injective_class(t), mr, ml);
  CHECK(good.passed());
  CHECK(good.caveat);
  auto bad = duality_pair_check(free_class(Side::right), all_modules(Side::left), mr, ml);
  CHECK_FALSE(bad.passed());
  CHECK(bad.counterexamples.front().find("free=no") != std::string::npos);
  CHECK_THROWS_AS(duality_pair_check(t_injective_class(t), t_injective_class(t), ml, ml), std::invalid_argument);
}

TEST_CASE("relative purity of short exact sequences") {
  auto r = truncated_polynomial(2, 2);
  auto reg = regular_module(r, Side::left);
  auto k = augmentation_module(r, Side::left);
  auto ideal = ideal_module(r, Side::left, {"x"});
  // 0 -> (x) -> R -> k -> 0
  auto inc = oracle::hom_elements(ideal, reg);
  auto proj = oracle::hom_elements(reg, k);
  std::optional<ModuleSes> eta;
  for (const auto& f : inc)
    for (const auto& g : proj) {
      if (eta) break;
      try {
        eta = make_module_ses(make_module_map(ideal, reg, f), make_module_map(reg, k, g));
      } catch (const std::invalid_argument&) {
      }
    }
  REQUIRE(eta.has_value());
  CHECK_FALSE(is_pure_exact(*eta, {augmentation_module(r, Side::right)}));
  CHECK(is_pure_exact(*eta, {regular_module(r, Side::right)}));

  // split sequence k -> k (+) R -> R is pure for every cyclic module
  auto sum = direct_sum(k, reg);
  Matrix i(2, 3, 1), p(2, 2, 3);
  i.at(0, 0) = 1;
  p.at(0, 1) = 1;
  p.at(1, 2) = 1;
  auto split = make_module_ses(make_module_map(k, sum, i), make_module_map(sum, reg, p));
  CHECK(is_pure_exact(split, cyclic_modules(r, Side::right, 2)));
  // a non-exact pair is rejected
  CHECK_THROWS_AS(make_module_ses(make_module_map(k, sum, i), make_module_map(sum, reg, Matrix(2, 2, 3))),
                  std::invalid_argument);
}

TEST_CASE("Hovey falsifier: planted violation and vacuous universe") {
  auto r = truncated_polynomial(2, 2);
  auto k = augmentation_module(r, Side::left);
  std::vector<ChainComplex> u{sphere(k, 0), sphere(k, 1), disk(k, 1), disk(regular_module(r, Side::left), 1)};
  auto bad = hovey_triple_falsifier(all_complexes(Side::left), all_complexes(Side::left), u);
  CHECK_FALSE(bad.passed());
  auto empty = hovey_triple_falsifier(all_complexes(Side::left), all_complexes(Side::left), {});
  CHECK(empty.passed());
  CHECK(empty.caveat);
}

TEST_CASE("ring documents") {
  auto mono = io::parse_ring(io::json::parse(R"({"field_p": 3, "variables": ["x"], "relations": ["x^3"], "degree_cap": 5})"));
  CHECK(mono->dim() == 3);
  auto counted = io::parse_ring(io::json::parse(R"({"field_p": 2, "variable_count": 3, "degree_cap": 1})"));
  CHECK(counted->dim() == 4);
  auto raw = io::parse_ring(io::json::parse(
      R"({"field_p": 2, "basis_labels": ["1", "x"], "structure_constants": [[[1,0],[0,1]],[[0,1],[0,0]]], "unit_index": 0})"));
  CHECK(raw->dim() == 2);
  CHECK(raw->same_as(*truncated_polynomial(2, 2)) == raw->same_as(*raw));
  auto named = io::parse_ring(io::json::parse(R"({"field_p": 2, "named": "upper_triangular"})"));
  CHECK(named->dim() == 3);
  CHECK_FALSE(named->commutative());

  CHECK(error_of([] { io::parse_ring(io::json::parse(R"({"variables": ["x"]})")); }).find("field_p") !=
        std::string::npos);
  CHECK(error_of([] { io::parse_ring(io::json::parse(R"({"field_p": 6, "variables": ["x"]})")); }).find("not prime") !=
        std::string::npos);
  CHECK(error_of([] {
          io::parse_ring(io::json::parse(R"({"field_p": 2, "basis_labels": ["1","x"], "structure_constants": [[[1,0]]]})"));
        }).find("structure_constants") != std::string::npos);
  // non-associative constants are rejected with the field path
  CHECK_FALSE(error_of([] {
                io::parse_ring(io::json::parse(
                    R"({"field_p": 2, "basis_labels": ["1","x"], "structure_constants": [[[1,0],[0,1]],[[0,1],[1,1]]], "unit_index": 1})"));
              }).empty());
}

TEST_CASE("module and complex files") {
  write_file("r2.ring", R"({"field_p": 2, "variables": ["x"], "relations": ["x^2"], "degree_cap": 1})");
  auto kfile = write_file("k.mod", R"({"ring": "r2.ring", "side": "left", "dim": 1, "actions": {"x": [[0]]}})");
  auto k = io::load_module(kfile);
  CHECK(k.dim() == 1);
  CHECK(is_isomorphic(k, augmentation_module(k.ring(), Side::left)));
  // every basis label, unit omitted
  auto full = io::load_module(write_file("r.mod", R"({"ring_ref": "r2.ring", "dim": 2, "actions": {"x": [[0,0],[1,0]]}})"));
  CHECK(is_isomorphic(full, regular_module(full.ring(), Side::left)));
  auto rec = io::load_module(write_file("f.mod", R"({"ring": "r2.ring", "side": "right", "recipe": "free:2"})"));
  CHECK(rec.dim() == 4);
  CHECK(rec.side() == Side::right);

  auto syntax = write_file("broken.mod", "{\n  \"ring\": \"r2.ring\",\n  \"dim\": 1,,\n}");
  const std::string e1 = error_of([&] { io::load_module(syntax); });
  CHECK(e1.find("broken.mod:3:") != std::string::npos);
  auto shape = write_file("shape.mod", R"({"ring": "r2.ring", "dim": 2, "actions": {"x": [[0,1]]}})");
  CHECK(error_of([&] { io::load_module(shape); }).find("actions.x") != std::string::npos);
  auto label = write_file("label.mod", R"({"ring": "r2.ring", "dim": 1, "actions": {"y": [[0]]}})");
  CHECK(error_of([&] { io::load_module(label); }).find("not a basis label") != std::string::npos);
  auto axioms = write_file("axioms.mod", R"({"ring": "r2.ring", "dim": 1, "actions": {"x": [[1]]}})");
  CHECK_FALSE(error_of([&] { io::load_module(axioms); }).empty());

  auto d0 = io::load_complex(write_file("d0k.cx", R"({"ring": "r2.ring", "disk": {"degree": 0, "module": "k.mod"}})"));
  CHECK(is_exact(d0));
  CHECK(d0.lo() == -1);
  auto explicit_cx = io::load_complex(write_file("x.cx", R"({
    "ring": "r2.ring", "side": "left", "lo": 0, "hi": 1,
    "terms": ["free:1", "free:1"], "differentials": [[[0,0],[1,0]]]})"));
  CHECK(homology_dims(explicit_cx).at(0) == 1);
  CHECK(homology_dims(explicit_cx).at(1) == 1);
  auto bad_dd = write_file("dd.cx", R"({"ring": "r2.ring", "lo": 0, "terms": ["free:1", "free:1", "free:1"],
    "differentials": [[[1,0],[0,1]], [[1,0],[0,1]]]})");
  CHECK_FALSE(error_of([&] { io::load_complex(bad_dd); }).empty());
  auto wrong_hi = write_file("hi.cx", R"({"ring": "r2.ring", "lo": 0, "hi": 3, "terms": ["k"]})");
  CHECK(error_of([&] { io::load_complex(wrong_hi); }).find(".hi") != std::string::npos);

  auto shifted = io::load_complex(write_file("shift.cx", R"({"ring": "r2.ring", "shift": {"complex": "d0k.cx", "by": 2}})"));
  CHECK(shifted.lo() == 1);
  auto summed = io::load_complex(write_file("sum.cx", R"({"ring": "r2.ring", "sum": ["d0k.cx", {"sphere": {"degree": 0, "module": "k"}}]})"));
  CHECK(summed.dim(0) == 2);
  CHECK(homology_dims(summed).at(0) == 1);
  auto cone = io::load_complex(write_file("cone.cx", R"({"ring": "r2.ring", "cone": {
    "source": {"sphere": {"degree": 0, "module": "k"}}, "target": {"sphere": {"degree": 0, "module": "k"}},
    "components": {"0": [[1]]}}})"));
  CHECK(is_exact(cone));
}

TEST_CASE("serialization round trip") {
  auto r = truncated_polynomial(3, 2);
  std::mt19937_64 rng(3);
  std::vector<Module> pool;
  for (std::size_t d = 1; d <= 2; ++d)
    for (auto& m : enumerate_modules(r, Side::left, d)) pool.push_back(m);
  for (int t = 0; t < 10; ++t) {
    auto x = random_complex(pool, -1, 1, rng);
    auto doc = io::complex_to_json(x);
    auto back = io::parse_complex(io::json::parse(doc.dump()), ".");
    CHECK(back.same_as(x));
  }
  auto ring_back = io::parse_ring(io::ring_to_json(r));
  CHECK(ring_back->same_as(*r));
}

TEST_CASE("family documents") {
  auto fam = io::parse_family(io::json::parse(
      R"({"template": {"field_p": 2, "relations": [], "degree_cap": 1}, "D_range": [3,4,5], "recipes": ["simple"]})"));
  CHECK(fam.D_range.size() == 3);
  CHECK(fam.ring(4)->dim() == 5);
  CHECK(error_of([] { io::parse_family(io::json::parse(R"({"template": {"field_p": 2}, "D_range": []})")); })
            .find("D_range") != std::string::npos);
}

TEST_CASE("suite reports are deterministic and carry their provenance") {
  SuiteConfig c;
  c.samples = 20;
  c.seed = 5;
  auto a = run_suite("signs", c), b = run_suite("signs", c);
  CHECK(a.text() == b.text());
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.text().find("seed: 5") != std::string::npos);
  CHECK(a.text().find("anchor: ") != std::string::npos);
  CHECK_THROWS_AS(run_suite("nosuch", c), std::invalid_argument);
  c.dimcap = 0;
  CHECK_THROWS_AS(run_suite("tfae1", c), std::invalid_argument);
}
