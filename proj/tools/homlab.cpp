// homlab command-line front end: compute single quantities or run verification suites.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "homlab/io.hpp"
#include "homlab/pairs.hpp"
#include "homlab/relative_dim.hpp"
#include "homlab/suites.hpp"

using namespace homlab;
using io::json;

namespace {

struct Options {
  std::string op;
  std::string ring, module_m, module_n, complex, family, recipe, T = "k,R", window = "0..2", d_range, out;
  std::string format = "text";
  int i = -1;
  std::size_t dimcap = 2, cap = 3, samples = 0;
  std::uint32_t field = 3;
  std::uint64_t seed = 0;
  bool negative_control = false;
  std::string pair;
};

// Text lines plus the same content as JSON.
struct Report {
  std::string title;
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> lines;
  json data = json::object();
  bool passed = true;

  std::string render(const std::string& format) const {
    if (format == "json") {
      json prov = json::object();
      for (const auto& [k, v] : provenance) prov[k] = v;
      json out = {{"command", title}, {"provenance", prov}, {"result", data}};
      return out.dump(2) + "\n";
    }
    std::ostringstream os;
    os << title << "\n";
    for (const auto& [k, v] : provenance) os << k << ": " << v << "\n";
    for (const auto& l : lines) os << l << "\n";
    return os.str();
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(' '), e = cur.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::pair<int, int> parse_window(const std::string& w) {
  const auto dots = w.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("--window expects lo..hi, got '" + w + "'");
  try {
    return {std::stoi(w.substr(0, dots)), std::stoi(w.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("--window expects integers, got '" + w + "'");
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (auto r = s.find(".."); r != std::string::npos) {
    auto [lo, hi] = parse_window(s);
    for (int d = lo; d <= hi; ++d) out.push_back(d);
    return out;
  }
  for (const auto& part : split(s, ',')) out.push_back(std::stoi(part));
  return out;
}

AlgebraPtr ring_from(const Options& o) {
  if (o.ring.empty()) return nullptr;
  return io::load_ring(o.ring);
}

// A path to a module file, or a recipe evaluated over the --ring ring.
Module module_arg(const std::string& arg, const AlgebraPtr& r, Side side, const char* flag) {
  if (arg.empty()) throw std::invalid_argument(std::string("missing ") + flag);
  if (std::filesystem::is_regular_file(arg)) return io::load_module(arg, r);
  if (!r) throw std::invalid_argument(std::string(flag) + " is a recipe; --ring is required");
  return module_from_recipe(r, side, arg);
}

ChainComplex complex_arg(const std::string& arg, const AlgebraPtr& r, Side side) {
  if (arg.empty()) throw std::invalid_argument("missing --complex");
  if (std::filesystem::is_regular_file(arg)) return io::load_complex(arg, r);
  if (!r) throw std::invalid_argument("--complex is a recipe; --ring is required");
  return complex_from_recipe(r, side, arg);
}

// Over a commutative ring a left module is also a right module with the same actions.
Module as_side(const Module& m, Side side) {
  if (m.side() == side) return m;
  if (!m.ring()->commutative()) throw std::invalid_argument("module has the wrong side for this operation");
  return Module::from_actions(m.ring(), side, m.dim(), m.actions());
}

Report compute_ext_tor(const Options& o, bool ext) {
  const AlgebraPtr r = ring_from(o);
  Report rep;
  rep.title = ext ? "compute ext" : "compute tor";
  Module m = module_arg(o.module_m, r, ext ? Side::left : Side::right, "--M");
  Module n = module_arg(o.module_n, r ? r : m.ring(), Side::left, "--N");
  if (!same_algebra(m.ring(), n.ring())) throw std::invalid_argument("--M and --N live over different rings");
  if (ext) {
    n = as_side(n, m.side());
  } else {
    m = as_side(m, Side::right);
    n = as_side(n, Side::left);
  }
  const CoverKind kind = default_cover(m.ring());
  const std::size_t upto = o.i >= 0 ? static_cast<std::size_t>(o.i) : o.cap;
  rep.provenance = {{"ring", m.ring()->description()},
                    {"M", o.module_m},
                    {"N", o.module_n},
                    {"resolution", kind == CoverKind::minimal ? "minimal" : "naive"}};
  const auto dims = ext ? ext_dims(upto, m, n, kind) : tor_dims(upto, m, n, kind);
  const std::size_t from = o.i >= 0 ? upto : 0;
  json vals = json::object();
  for (std::size_t i = from; i <= upto; ++i) {
    rep.lines.push_back(std::string(ext ? "dim Ext^" : "dim Tor_") + std::to_string(i) + " = " + std::to_string(dims[i]));
    vals[std::to_string(i)] = dims[i];
  }
  rep.data = {{ext ? "ext" : "tor", vals}};
  return rep;
}

Report compute_homology(const Options& o) {
  const AlgebraPtr r = ring_from(o);
  const ChainComplex x = complex_arg(o.complex, r, Side::left);
  Report rep;
  rep.title = "compute homology";
  rep.provenance = {{"ring", x.ring()->description()}, {"complex", o.complex}};
  const auto h = homology_dims(x);
  json vals = json::object();
  for (const auto& [m, d] : h) {
    rep.lines.push_back("dim H_" + std::to_string(m) + " = " + std::to_string(d));
    vals[std::to_string(m)] = d;
  }
  rep.lines.push_back(is_exact(x) ? "exact" : "not exact");
  rep.data = {{"homology", vals}, {"exact", is_exact(x)}};
  return rep;
}

Report compute_dual(const Options& o) {
  const AlgebraPtr r = ring_from(o);
  Report rep;
  rep.title = "compute dual";
  if (!o.complex.empty()) {
    const ChainComplex x = complex_arg(o.complex, r, Side::left);
    const DualPair d = character_dual_pair(x);
    const bool iso = is_chain_map(d.comparison) && is_isomorphism(d.comparison);
    rep.provenance = {{"ring", x.ring()->description()}, {"complex", o.complex}};
    rep.lines.push_back("dual: " + describe(d.reindexed));
    rep.lines.push_back(std::string("realizations agree: ") + (iso ? "yes" : "no"));
    rep.lines.push_back(std::string("exact: ") + (is_exact(x) ? "yes" : "no") + " -> " +
                        (is_exact(d.reindexed) ? "yes" : "no"));
    rep.data = {{"dual", io::complex_to_json(d.reindexed)}, {"realizations_agree", iso}};
    rep.passed = iso;
  } else {
    const Module m = module_arg(o.module_m, r, Side::left, "--M");
    const Module d = character_dual(m);
    rep.provenance = {{"ring", m.ring()->description()}, {"module", o.module_m}};
    rep.lines.push_back(std::string("dual: ") + side_name(d.side()) + " module of dim " + std::to_string(d.dim()));
    rep.data = {{"dual", io::module_to_json(d)}};
  }
  return rep;
}

TruncationFamily family_from(const Options& o) {
  TruncationFamily f = o.family.empty() ? square_zero_family() : io::load_family(o.family);
  if (!o.d_range.empty()) f.D_range = parse_int_list(o.d_range);
  return f;
}

json lambda_json(const LambdaVerdict& v) {
  return {{"lambda", v.lambda.to_string()}, {"stabilized", v.stabilized}, {"cap", v.cap},
          {"D", v.D},                       {"betti", v.betti},          {"note", v.note}};
}

Report compute_lambda(const Options& o) {
  const TruncationFamily fam = family_from(o);
  if (o.recipe.empty()) throw std::invalid_argument("missing --recipe");
  const std::size_t cap = o.cap > 3 ? o.cap : 6;
  Report rep;
  rep.title = "compute lambda";
  rep.provenance = {{"family", fam.describe()}, {"recipe", o.recipe}, {"cap", std::to_string(cap)}};
  auto headline = [](const LambdaVerdict& v) {
    std::string s = "lambda = " + v.lambda.to_string();
    if (v.lambda.is_infinite())
      s += " (no growth up to cap " + std::to_string(v.cap) + ")";
    else if (v.stabilized)
      s += " (stabilized)";
    return s;
  };
  if (o.recipe.find('(') != std::string::npos) {
    const LambdaComplexReport l = lambda_complex(fam, o.recipe, cap);
    rep.lines.push_back(headline(l.resolution));
    rep.lines.push_back("termwise: " + l.termwise.to_string());
    rep.lines.push_back("resolution: " + l.resolution.to_string());
    rep.lines.push_back(std::string("paths agree: ") + (l.agree() ? "yes" : "no"));
    rep.lines.push_back("betti table (disk-sum resolution):");
    rep.lines.push_back(l.resolution.table());
    rep.data = {{"termwise", lambda_json(l.termwise)}, {"resolution", lambda_json(l.resolution)}, {"agree", l.agree()}};
    rep.passed = l.agree();
  } else {
    const LambdaVerdict v = lambda_module(fam, o.recipe, cap);
    rep.lines.push_back(headline(v));
    if (!v.note.empty()) rep.lines.push_back("note: " + v.note);
    rep.lines.push_back("betti table:");
    rep.lines.push_back(v.table());
    rep.data = lambda_json(v);
  }
  return rep;
}

Report compute_dimension(const Options& o) {
  const AlgebraPtr r = ring_from(o);
  Report rep;
  rep.title = "compute dimension";
  const AlgebraPtr base = r;
  auto tclass = [&](const AlgebraPtr& ring) { return test_class_from_recipes(ring, Side::left, split(o.T, ',')); };
  if (!o.complex.empty()) {
    const ChainComplex x = complex_arg(o.complex, base, Side::left);
    const TestClass t = tclass(x.ring());
    const bool right = x.side() == Side::right;
    const ComplexDimension d = right ? relative_fd_complex(x, t, o.cap) : relative_id_complex(x, t, o.cap);
    const char* what = right ? "relative flat dimension" : "relative injective dimension";
    rep.provenance = {{"ring", x.ring()->description()}, {"complex", o.complex}, {"T", o.T}, {"cap", std::to_string(o.cap)}};
    rep.lines.push_back(std::string(what) + " = " + d.verdict.to_string());
    rep.lines.push_back("sphere route: " + d.sphere_route.to_string());
    rep.lines.push_back(std::string("routes agree: ") + (d.agree() ? "yes" : "no"));
    rep.data = {{"kind", right ? "fd" : "id"},
                {"verdict", d.verdict.to_string()},
                {"sphere_route", d.sphere_route.to_string()},
                {"agree", d.agree()}};
    rep.passed = d.agree();
  } else {
    const Module m = module_arg(o.module_m, base, Side::left, "--M");
    const TestClass t = tclass(m.ring());
    const bool right = m.side() == Side::right;
    const DimensionVerdict v = right ? relative_fd(m, t, o.cap) : relative_id(m, t, o.cap);
    rep.provenance = {{"ring", m.ring()->description()}, {"module", o.module_m}, {"T", o.T}, {"cap", std::to_string(o.cap)}};
    rep.lines.push_back(std::string(right ? "relative flat dimension" : "relative injective dimension") + " = " +
                        v.to_string());
    if (!v.certificate.empty()) rep.lines.push_back("certificate: " + v.certificate);
    rep.data = {{"kind", right ? "fd" : "id"}, {"verdict", v.to_string()}, {"certificate", v.certificate}};
  }
  return rep;
}

Report run_compute(const Options& o) {
  Report rep;
  if (o.op == "ext") rep = compute_ext_tor(o, true);
  else if (o.op == "tor") rep = compute_ext_tor(o, false);
  else if (o.op == "homology") rep = compute_homology(o);
  else if (o.op == "dual") rep = compute_dual(o);
  else if (o.op == "lambda") rep = compute_lambda(o);
  else if (o.op == "dimension") rep = compute_dimension(o);
  else throw std::invalid_argument("unknown computation '" + o.op + "'");
  rep.provenance.emplace_back("seed", std::to_string(o.seed));
  return rep;
}

SuiteReport run_verify(const Options& o) {
  SuiteConfig c;
  c.ring = ring_from(o);
  c.T = split(o.T, ',');
  std::tie(c.lo, c.hi) = parse_window(o.window);
  c.dimcap = o.dimcap;
  c.cap = o.cap;
  c.field = o.field;
  c.samples = o.samples;
  c.seed = o.seed;
  c.negative_control = o.negative_control;
  if (!o.pair.empty()) c.predicates = split(o.pair, '|');
  if (!o.family.empty() || !o.d_range.empty()) c.family = family_from(o);
  return run_suite(o.op, c);
}

void emit(const std::string& text, const std::string& out) {
  std::cout << text;
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homlab: homological algebra over finite-dimensional algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "ring definition file");
    sub->add_option("--T", o.T, "comma-separated test class recipes (k, R, free:2, ...)");
    sub->add_option("--cap", o.cap, "dimension / resolution cap")->check(CLI::PositiveNumber);
    sub->add_option("--family", o.family, "truncation family file");
    sub->add_option("--D-range", o.d_range, "values of D, as lo..hi or a comma list");
    sub->add_option("--seed", o.seed, "seed for randomized suites");
    sub->add_option("--out", o.out, "also write the report to this file");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* compute = app.add_subcommand("compute", "compute one quantity");
  compute->add_option("operation", o.op, "ext, tor, homology, dual, lambda or dimension")
      ->required()
      ->check(CLI::IsMember({"ext", "tor", "homology", "dual", "lambda", "dimension"}));
  common(compute);
  compute->add_option("--M,--module", o.module_m, "first module (file or recipe)");
  compute->add_option("--N", o.module_n, "second module (file or recipe)");
  compute->add_option("--complex", o.complex, "complex (file or recipe)");
  compute->add_option("--recipe", o.recipe, "module or complex recipe for lambda");
  compute->add_option("--i", o.i, "homological degree")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.op, "suite name")->required();
  common(verify);
  verify->add_option("--window", o.window, "degree window lo..hi");
  verify->add_option("--dimcap", o.dimcap, "per-degree dimension cap")->check(CLI::PositiveNumber);
  verify->add_option("--field", o.field, "characteristic for the sign suite");
  verify->add_option("--samples", o.samples, "randomized instance count (0: suite default)");
  verify->add_flag("--negative-control", o.negative_control, "run the planted-violation control");
  verify->add_option("--pair", o.pair, "class predicates 'M|C' (induced-duality) or 'A|B' (hovey)");

  auto* predicates = app.add_subcommand("predicates", "list the predicate registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (predicates->parsed()) {
      for (const auto& p : registered_predicates()) std::cout << p << "\n";
      return 0;
    }
    if (compute->parsed()) {
      const Report rep = run_compute(o);
      emit(rep.render(o.format), o.out);
      return rep.passed ? 0 : 1;
    }
    const SuiteReport rep = run_verify(o);
    emit(o.format == "json" ? rep.to_json().dump(2) + "\n" : rep.text(), o.out);
    return rep.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
