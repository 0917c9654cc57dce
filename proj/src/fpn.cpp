#include "homlab/fpn.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace homlab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
  return s;
}

// "<a, b>" -> {"a", "b"}.
std::vector<std::string> bracket_list(const std::string& text, const std::string& recipe) {
  std::string s = trim(replace_all(replace_all(text, "⟨", "<"), "⟩", ">"));
  if (s.size() < 2 || s.front() != '<' || s.back() != '>')
    throw std::invalid_argument("recipe '" + recipe + "': expected a generator list <...>");
  std::vector<std::string> out;
  std::stringstream ss(s.substr(1, s.size() - 2));
  for (std::string item; std::getline(ss, item, ',');)
    if (!trim(item).empty()) out.push_back(trim(item));
  if (out.empty()) throw std::invalid_argument("recipe '" + recipe + "': empty generator list");
  return out;
}

}  // namespace

Module module_from_recipe(const AlgebraPtr& r, Side side, const std::string& recipe) {
  const std::string s = trim(recipe);
  if (s == "simple" || s == "k") return augmentation_module(r, side);
  if (s == "zero" || s == "0") return zero_module(r, side);
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown module recipe '" + recipe + "'");
  const std::string head = trim(s.substr(0, colon));
  const std::string body = trim(s.substr(colon + 1));
  if (head == "free") {
    std::size_t used = 0;
    long rank = -1;
    try {
      rank = std::stol(body, &used);
    } catch (const std::exception&) {
    }
    if (rank < 0 || used != body.size()) throw std::invalid_argument("recipe '" + recipe + "': free rank must be a nonnegative integer");
    return free_module(r, side, static_cast<std::size_t>(rank));
  }
  if (head == "ideal") return ideal_module(r, side, bracket_list(body, recipe));
  if (head == "quotient") {
    if (body.rfind("R/", 0) != 0) throw std::invalid_argument("recipe '" + recipe + "': expected quotient:R/<...>");
    return quotient_by_ideal(r, side, bracket_list(body.substr(2), recipe));
  }
  throw std::invalid_argument("unknown module recipe '" + recipe + "'");
}

ChainComplex complex_from_recipe(const AlgebraPtr& r, Side side, const std::string& recipe) {
  // Split on '+' outside parentheses.
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : recipe) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  ChainComplex out = ChainComplex::zero(r, side);
  bool first = true;
  for (const std::string& raw : parts) {
    const std::string part = trim(raw);
    const auto open = part.find('(');
    if (open == std::string::npos || part.back() != ')')
      throw std::invalid_argument("complex recipe term '" + part + "': expected disk(n, recipe) or sphere(n, recipe)");
    const std::string head = trim(part.substr(0, open));
    const std::string args = part.substr(open + 1, part.size() - open - 2);
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("complex recipe term '" + part + "': missing module recipe");
    int n = 0;
    try {
      n = std::stoi(trim(args.substr(0, comma)));
    } catch (const std::exception&) {
      throw std::invalid_argument("complex recipe term '" + part + "': degree must be an integer");
    }
    Module m = module_from_recipe(r, side, args.substr(comma + 1));
    ChainComplex term;
    if (head == "disk")
      term = disk(m, n);
    else if (head == "sphere")
      term = sphere(m, n);
    else
      throw std::invalid_argument("complex recipe term '" + part + "': unknown shape '" + head + "'");
    out = first ? term : direct_sum(out, term);
    first = false;
  }
  return out;
}

AlgebraPtr TruncationFamily::ring(int D) const { return spec.instantiate(D); }

std::string TruncationFamily::describe() const {
  std::string out = "F_" + std::to_string(spec.p) + " monomial family, relations {";
  for (std::size_t i = 0; i < spec.relations.size(); ++i) out += (i ? ", " : "") + spec.relations[i];
  out += "}, degree cap " + std::to_string(spec.degree_cap) + ", D in {";
  for (std::size_t i = 0; i < D_range.size(); ++i) out += (i ? "," : "") + std::to_string(D_range[i]);
  return out + "}";
}

TruncationFamily square_zero_family(std::uint32_t p, std::vector<int> D_range) {
  TruncationFamily f;
  f.spec.p = p;
  f.spec.degree_cap = 1;
  f.D_range = std::move(D_range);
  return f;
}

std::string Lambda::to_string() const {
  switch (kind) {
    case Kind::finite: return std::to_string(value);
    case Kind::infinity: return "Infinity";
    case Kind::inconclusive: break;
  }
  return "Inconclusive";
}

Lambda lambda_min(const Lambda& a, const Lambda& b) {
  if (!a.conclusive() || !b.conclusive()) return Lambda::inconclusive();
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  return Lambda::finite(std::min(a.value, b.value));
}

Lambda lambda_shift(const Lambda& a, int by) { return a.is_finite() ? Lambda::finite(a.value + by) : a; }

bool lambda_geq(const Lambda& a, const Lambda& b) {
  if (!a.conclusive() || !b.conclusive()) throw std::invalid_argument("comparison of an Inconclusive value");
  if (a.is_infinite()) return true;
  if (b.is_infinite()) return false;
  return a.value >= b.value;
}

std::string LambdaVerdict::to_string() const {
  std::string out = lambda.to_string();
  if (lambda.is_infinite()) out += " (no growth up to cap " + std::to_string(cap) + ")";
  else if (stabilized) out += " (stabilized)";
  if (!note.empty()) out += "; " + note;
  return out;
}

std::string LambdaVerdict::table() const {
  std::ostringstream os;
  for (std::size_t d = 0; d < D.size(); ++d) {
    os << "D=" << D[d] << ":";
    for (auto b : betti[d]) os << ' ' << b;
    os << '\n';
  }
  return os.str();
}

LazyResolution::LazyResolution(Module m) : syzygy_(std::move(m)) {}

std::size_t LazyResolution::betti(std::size_t j) {
  while (betti_.size() <= j) {
    if (syzygy_.dim() == 0) {
      betti_.push_back(0);
      continue;
    }
    FreeCover c = free_cover(syzygy_, CoverKind::minimal);
    betti_.push_back(c.rank);
    Module f = free_module(syzygy_.ring(), syzygy_.side(), c.rank);
    syzygy_ = submodule(f, kernel(c.map));
  }
  return betti_[j];
}

ColumnTrend column_trend(const std::vector<std::size_t>& v) {
  bool constant = true, growing = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != v[0]) constant = false;
    if (v[i] <= v[i - 1]) growing = false;
  }
  if (constant) return ColumnTrend::constant;
  return growing ? ColumnTrend::growing : ColumnTrend::irregular;
}

LambdaVerdict lambda_from_columns(const std::vector<int>& D, std::size_t cap,
                                  const std::function<std::size_t(std::size_t, std::size_t)>& column) {
  if (D.size() < 3) throw std::invalid_argument("the D window needs at least three values");
  LambdaVerdict v;
  v.D = D;
  v.cap = cap;
  v.betti.resize(D.size());
  for (std::size_t j = 0; j <= cap; ++j) {
    std::vector<std::size_t> col;
    for (std::size_t d = 0; d < D.size(); ++d) {
      col.push_back(column(d, j));
      v.betti[d].push_back(col.back());
    }
    switch (column_trend(col)) {
      case ColumnTrend::constant: continue;
      case ColumnTrend::growing:
        v.lambda = Lambda::finite(static_cast<int>(j) - 1);
        v.stabilized = true;
        v.note = "column " + std::to_string(j) + " grows strictly";
        return v;
      case ColumnTrend::irregular:
        v.lambda = Lambda::inconclusive();
        v.note = "column " + std::to_string(j) + " is neither constant nor strictly growing";
        return v;
    }
  }
  v.lambda = Lambda::infinity();
  v.stabilized = true;
  return v;
}

LambdaVerdict lambda_module(const std::vector<int>& D, const std::vector<Module>& instances, std::size_t cap) {
  std::vector<LazyResolution> res;
  for (const auto& m : instances) res.emplace_back(m);
  return lambda_from_columns(D, cap, [&](std::size_t d, std::size_t j) { return res[d].betti(j); });
}

LambdaVerdict lambda_module(const TruncationFamily& family, const std::string& recipe, std::size_t cap) {
  std::vector<Module> inst;
  for (int D : family.D_range) inst.push_back(module_from_recipe(family.ring(D), family.side, recipe));
  return lambda_module(family.D_range, inst, cap);
}

LambdaComplexReport lambda_complex(const TruncationFamily& family, const std::string& complex_recipe, std::size_t cap) {
  std::vector<ChainComplex> xs;
  for (int D : family.D_range) xs.push_back(complex_from_recipe(family.ring(D), family.side, complex_recipe));
  LambdaComplexReport rep;

  Lambda inf = Lambda::infinity();
  const ChainComplex& x0 = xs.front();
  for (int m = x0.lo(); m <= x0.hi() && !x0.empty_window(); ++m) {
    std::vector<Module> terms;
    for (const auto& x : xs) terms.push_back(x.term(m));
    LambdaVerdict t = lambda_module(family.D_range, terms, cap);
    inf = lambda_min(inf, t.lambda);
    rep.terms.emplace_back(m, std::move(t));
  }
  rep.termwise.D = family.D_range;
  rep.termwise.cap = cap;
  rep.termwise.lambda = inf;
  rep.termwise.stabilized = inf.conclusive();
  rep.termwise.note = "infimum over " + std::to_string(rep.terms.size()) + " terms";

  std::vector<std::unique_ptr<ComplexResolution>> res;
  for (const auto& x : xs) res.push_back(std::make_unique<ComplexResolution>(x, CoverKind::minimal));
  rep.resolution = lambda_from_columns(family.D_range, cap, [&](std::size_t d, std::size_t j) {
    if (xs[d].total_dim() == 0) return std::size_t{0};
    res[d]->extend(j);
    return res[d]->layer(j).total_rank();
  });
  return rep;
}

std::string FpnCertificate::to_string() const {
  std::ostringstream os;
  os << (holds ? "type FP_" : "not type FP_") << n << "; presentation by disk sums, "
     << (verified_exact ? "exactness verified" : "exactness NOT verified") << '\n';
  for (std::size_t j = 0; j < layers.size(); ++j) {
    os << "  P^" << j << ":";
    if (layers[j].empty()) os << " 0";
    for (const auto& [deg, rank] : layers[j]) os << " D^" << deg << "(R^" << rank << ")";
    os << '\n';
  }
  return os.str();
}

FpnCertificate type_fpn_complex(const ChainComplex& x, std::size_t n) {
  FpnCertificate c;
  c.n = n;
  c.holds = true;  // every finitely generated module over a finite-dimensional ring is FP_infinity
  if (x.total_dim() == 0) {
    c.verified_exact = true;
    return c;
  }
  ComplexResolution res(x, default_cover(x.ring()));
  res.extend(n);
  bool exact = true;
  for (std::size_t j = 0; j <= n; ++j) {
    c.layers.push_back(res.layer(j).ranks);
    const ChainMap& f = res.map(j);
    for (int m = f.target.lo(); m <= f.target.hi() && !f.target.empty_window(); ++m) {
      const Matrix fm = f.comp(m);
      if (j == 0) {
        if (rank(fm) != x.dim(m)) exact = false;
      } else if (rank(fm) != kernel(res.map(j - 1).comp(m)).dim()) {
        exact = false;
      }
    }
    if (!is_chain_map(f)) exact = false;
  }
  c.verified_exact = exact;
  return c;
}

bool SesReport::passed() const {
  if (!problems.empty()) return false;
  for (const auto& [name, ok] : inequalities)
    if (!ok) return false;
  return true;
}

std::string SesReport::summary() const {
  std::ostringstream os;
  os << kind << ": lambda(A)=" << a.to_string() << " lambda(B)=" << b.to_string() << " lambda(C)=" << c.to_string();
  for (const auto& [name, ok] : inequalities) os << "; " << name << (ok ? " holds" : " FAILS");
  for (const auto& p : problems) os << "; " << p;
  return os.str();
}

namespace {

struct SesInstance {
  Module a, b, c;
  Matrix f, g;  // A -> B, B -> C
};

bool ses_exact(const SesInstance& s) {
  if (!is_homomorphism(s.a, s.b, s.f) || !is_homomorphism(s.b, s.c, s.g)) return false;
  if (!(s.g * s.f).is_zero()) return false;
  return rank(s.f) == s.a.dim() && rank(s.g) == s.c.dim() && s.a.dim() + s.c.dim() == s.b.dim();
}

SesInstance build_ses(const AlgebraPtr& r, Side side, const std::string& kind, const std::string& body) {
  if (kind == "ideal") {
    Module reg = regular_module(r, side);
    const auto names = bracket_list(body, "ideal:" + body);
    Matrix gens(r->p(), r->dim(), names.size());
    for (std::size_t j = 0; j < names.size(); ++j) {
      auto idx = r->index_of(names[j]);
      if (!idx) throw std::invalid_argument("'" + names[j] + "' is not a basis element of the ring");
      gens.at(*idx, j) = 1;
    }
    Subspace sub = generated_submodule(reg, gens);
    QuotientModule qm = quotient_module(reg, sub);
    return {submodule(reg, sub), reg, qm.module, sub.basis, qm.map.proj};
  }
  if (kind == "split") {
    const auto bar = body.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("split sequence needs 'split:<a>|<c>'");
    Module a = module_from_recipe(r, side, body.substr(0, bar));
    Module c = module_from_recipe(r, side, body.substr(bar + 1));
    Module b = direct_sum(a, c);
    Matrix f(r->p(), b.dim(), a.dim()), g(r->p(), c.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) f.at(i, i) = 1;
    for (std::size_t i = 0; i < c.dim(); ++i) g.at(i, a.dim() + i) = 1;
    return {a, b, c, f, g};
  }
  throw std::invalid_argument("unknown exact sequence kind '" + kind + "'");
}

}  // namespace

SesReport lambda_ses_inequalities(const TruncationFamily& family, const std::string& ses_recipe, std::size_t cap) {
  SesReport rep;
  const auto colon = ses_recipe.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("exact sequence recipe needs a kind prefix");
  rep.kind = trim(ses_recipe.substr(0, colon));
  const std::string body = trim(ses_recipe.substr(colon + 1));
  std::vector<Module> as, bs, cs;
  for (int D : family.D_range) {
    SesInstance s = build_ses(family.ring(D), family.side, rep.kind, body);
    if (!ses_exact(s)) rep.problems.push_back("sequence is not exact at D=" + std::to_string(D));
    as.push_back(s.a);
    bs.push_back(s.b);
    cs.push_back(s.c);
  }
  rep.a = lambda_module(family.D_range, as, cap).lambda;
  rep.b = lambda_module(family.D_range, bs, cap).lambda;
  rep.c = lambda_module(family.D_range, cs, cap).lambda;
  for (auto [name, l] : {std::pair{"A", rep.a}, {"B", rep.b}, {"C", rep.c}})
    if (!l.conclusive()) rep.problems.push_back(std::string("lambda(") + name + ") is Inconclusive");
  if (!rep.problems.empty()) return rep;
  rep.inequalities.push_back({"(a) l(A) >= min(l(B), l(C)-1)", lambda_geq(rep.a, lambda_min(rep.b, lambda_shift(rep.c, -1)))});
  rep.inequalities.push_back({"(b) l(B) >= min(l(A), l(C))", lambda_geq(rep.b, lambda_min(rep.a, rep.c))});
  rep.inequalities.push_back({"(c) l(C) >= min(l(B), l(A)+1)", lambda_geq(rep.c, lambda_min(rep.b, lambda_shift(rep.a, 1)))});
  if (rep.kind == "split") rep.inequalities.push_back({"(d) l(B) = min(l(A), l(C))", rep.b == lambda_min(rep.a, rep.c)});
  return rep;
}

std::vector<std::string> probe_recipes(const TruncationFamily& family, std::size_t size_cap) {
  const int dmin = *std::min_element(family.D_range.begin(), family.D_range.end());
  const std::size_t s = std::min<std::size_t>(size_cap, static_cast<std::size_t>(std::max(dmin, 0)));
  std::vector<std::string> out{"simple"};
  for (std::size_t r = 1; r <= std::max<std::size_t>(size_cap, 1); ++r) out.push_back("free:" + std::to_string(r));
  for (std::size_t i = 1; i <= s; ++i) {
    std::string gens;
    for (std::size_t v = 1; v <= i; ++v) gens += (v > 1 ? "," : "") + family.spec.variable_name(static_cast<int>(v));
    out.push_back("ideal:<" + gens + ">");
    out.push_back("quotient:R/<" + gens + ">");
  }
  return out;
}

std::string CoherenceProbe::summary() const {
  std::ostringstream os;
  os << "n = " << n << ": " << members.size() << " members, " << separating.size() << " with lambda = " << n
     << "; FP chain stabilizes at " << stabilization << '\n';
  for (const auto& [recipe, l] : members) os << "  " << recipe << ": lambda = " << l.to_string() << '\n';
  for (const auto& r : inconclusive) os << "  inconclusive: " << r << '\n';
  return os.str();
}

CoherenceProbe n_coherence_probe(const TruncationFamily& family, std::size_t n, std::size_t size_cap, std::size_t cap) {
  CoherenceProbe p;
  p.n = n;
  int max_finite = -1;
  for (const auto& recipe : probe_recipes(family, size_cap)) {
    Lambda l = lambda_module(family, recipe, cap).lambda;
    p.members.emplace_back(recipe, l);
    if (!l.conclusive()) {
      p.inconclusive.push_back(recipe);
      continue;
    }
    if (l.is_finite()) {
      max_finite = std::max(max_finite, l.value);
      if (l.value == static_cast<int>(n)) p.separating.push_back(recipe);
    }
  }
  p.stabilization = std::max(0, max_finite + 1);
  return p;
}

}  // namespace homlab
