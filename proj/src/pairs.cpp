#include "homlab/pairs.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>

namespace homlab {

bool ClassPredicate::operator()(const Module& m) const {
  if (scope != Scope::module) throw std::logic_error("predicate '" + name + "' is not a module predicate");
  return on_module(m);
}

bool ClassPredicate::operator()(const ChainComplex& x) const {
  if (scope != Scope::complex) throw std::logic_error("predicate '" + name + "' is not a complex predicate");
  return on_complex(x);
}

namespace {

ClassPredicate module_class(std::string name, Side side, std::function<bool(const Module&)> f) {
  ClassPredicate p;
  p.name = std::move(name);
  p.scope = Scope::module;
  p.side = side;
  p.on_module = std::move(f);
  return p;
}

ClassPredicate complex_class(std::string name, Side side, std::function<bool(const ChainComplex&)> f) {
  ClassPredicate p;
  p.name = std::move(name);
  p.scope = Scope::complex;
  p.side = side;
  p.on_complex = std::move(f);
  return p;
}

void require_module_scope(const ClassPredicate& p) {
  if (p.scope != Scope::module) throw std::invalid_argument("lift of '" + p.name + "' needs a module predicate");
}

}  // namespace

ClassPredicate t_injective_class(const TestClass& t) {
  return module_class(t.label() + "-injective", t.side(), [t](const Module& m) { return relative_injective(m, t); });
}

ClassPredicate t_flat_class(const TestClass& t) {
  return module_class(t.label() + "-flat", flip(t.side()), [t](const Module& n) { return relative_flat(n, t); });
}

ClassPredicate id_at_most_class(const TestClass& t, std::size_t k) {
  return module_class(t.label() + "-id<=" + std::to_string(k), t.side(), [t, k](const Module& m) {
    return !relative_id(m, t, k).over_cap();
  });
}

ClassPredicate fd_at_most_class(const TestClass& t, std::size_t k) {
  return module_class(t.label() + "-fd<=" + std::to_string(k), flip(t.side()), [t, k](const Module& n) {
    return !relative_fd(n, t, k).over_cap();
  });
}

ClassPredicate projective_class(Side side) { return module_class("projective", side, [](const Module& m) { return is_projective(m); }); }
ClassPredicate free_class(Side side) { return module_class("free", side, [](const Module& m) { return is_free(m); }); }
ClassPredicate injective_class(Side side) { return module_class("injective", side, [](const Module& m) { return baer_injective(m); }); }
ClassPredicate all_modules(Side side) { return module_class("everything", side, [](const Module&) { return true; }); }
ClassPredicate exact_complexes(Side side) { return complex_class("exact", side, [](const ChainComplex& x) { return is_exact(x); }); }
ClassPredicate all_complexes(Side side) { return complex_class("all", side, [](const ChainComplex&) { return true; }); }

ClassPredicate dw_lift(const ClassPredicate& p) {
  require_module_scope(p);
  return complex_class("dw(" + p.name + ")", p.side, [p](const ChainComplex& x) {
    for (int m = x.lo(); m <= x.hi(); ++m)
      if (!p.on_module(x.term(m))) return false;
    return true;
  });
}

ClassPredicate ex_lift(const ClassPredicate& p) {
  require_module_scope(p);
  ClassPredicate dw = dw_lift(p);
  return complex_class("ex(" + p.name + ")", p.side, [dw](const ChainComplex& x) { return is_exact(x) && dw.on_complex(x); });
}

ClassPredicate tilde_lift(const ClassPredicate& p) {
  require_module_scope(p);
  return complex_class("tilde(" + p.name + ")", p.side, [p](const ChainComplex& x) {
    if (!is_exact(x)) return false;
    for (int m = x.lo(); m <= x.hi(); ++m)
      if (!p.on_module(cycles_module(x, m))) return false;
    return true;
  });
}

std::vector<std::string> registered_predicates() {
  return {"t-injective", "t-flat", "id<=k", "fd<=k", "projective", "free", "injective", "everything",
          "exact",       "all",    "dw(p)", "ex(p)", "tilde(p)"};
}

ClassPredicate predicate_from_string(const std::string& raw, const TestClass& t) {
  std::string expr;
  for (char c : raw)
    if (c != ' ') expr += c;
  for (const char* lift : {"dw", "ex", "tilde"}) {
    const std::string head = std::string(lift) + "(";
    if (expr.rfind(head, 0) == 0 && expr.back() == ')') {
      ClassPredicate inner = predicate_from_string(expr.substr(head.size(), expr.size() - head.size() - 1), t);
      if (head == "dw(") return dw_lift(inner);
      if (head == "ex(") return ex_lift(inner);
      return tilde_lift(inner);
    }
  }
  std::optional<Side> side;
  if (auto at = expr.find('@'); at != std::string::npos) {
    side = parse_side(expr.substr(at + 1));
    expr = expr.substr(0, at);
  }
  const Side s = side.value_or(t.side());
  if (expr == "t-injective") return t_injective_class(t);
  if (expr == "t-flat") return t_flat_class(t);
  if (expr.rfind("id<=", 0) == 0) return id_at_most_class(t, std::stoul(expr.substr(4)));
  if (expr.rfind("fd<=", 0) == 0) return fd_at_most_class(t, std::stoul(expr.substr(4)));
  if (expr == "projective") return projective_class(s);
  if (expr == "free") return free_class(s);
  if (expr == "injective") return injective_class(s);
  if (expr == "everything") return all_modules(s);
  if (expr == "exact") return exact_complexes(s);
  if (expr == "all") return all_complexes(s);
  throw std::invalid_argument("unknown predicate '" + raw + "'");
}

std::string PairReport::summary() const {
  std::string out = universe + ": " + std::to_string(instances) + " checks, " + std::to_string(counterexamples.size()) +
                    " counterexamples";
  if (!counterexamples.empty()) out += "; first: " + counterexamples.front();
  if (caveat) out += " (finite universe; no claim beyond it)";
  return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n, std::size_t samples, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n == 0) return out;
  if (n * (n + 1) / 2 <= samples) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) out.emplace_back(i, j);
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    auto i = pick(rng), j = pick(rng);
    out.emplace_back(std::min(i, j), std::max(i, j));
  }
  return out;
}

template <class Obj>
void closure_check(const ClassPredicate& p, const std::vector<Obj>& u, std::uint64_t seed, std::size_t samples,
                   PairReport& rep, const char* label) {
  for (auto [i, j] : sample_pairs(u.size(), samples, seed)) {
    const bool a = p(u[i]), b = p(u[j]);
    const bool sum = p(direct_sum(u[i], u[j]));
    ++rep.instances;
    if (sum != (a && b))
      rep.counterexamples.push_back(std::string(label) + " closure fails for members " + std::to_string(i) + " and " +
                                    std::to_string(j) + ": " + p.name + "(A)=" + (a ? "yes" : "no") +
                                    ", (B)=" + (b ? "yes" : "no") + ", (A+B)=" + (sum ? "yes" : "no"));
  }
}

template <class Obj>
PairReport pair_check(const ClassPredicate& m, const ClassPredicate& c, const std::vector<Obj>& mu,
                      const std::vector<Obj>& cu, std::uint64_t seed, std::size_t samples, bool m_closure,
                      Scope scope) {
  if (m.scope != scope || c.scope != scope) throw std::invalid_argument("predicates do not match the universe scope");
  if (m.side == c.side) throw std::invalid_argument("duality pair predicates must be on opposite sides");
  PairReport rep;
  rep.universe = std::to_string(mu.size()) + " " + side_name(m.side) + " and " + std::to_string(cu.size()) + " " +
                 side_name(c.side) + (scope == Scope::module ? " modules" : " complexes");
  rep.axioms = {"duality: " + m.name + "(U) iff " + c.name + "(U^+)",
                "closure of " + c.name + " under finite sums and summands"};
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const bool in_m = m(mu[i]);
    const bool in_c = c(character_dual(mu[i]));
    ++rep.instances;
    if (in_m != in_c)
      rep.counterexamples.push_back("member " + std::to_string(i) + ": " + m.name + "=" + (in_m ? "yes" : "no") + ", " +
                                    c.name + " of dual=" + (in_c ? "yes" : "no"));
  }
  closure_check(c, cu, seed, samples, rep, c.name.c_str());
  if (m_closure) {
    rep.axioms.push_back("closure of " + m.name + " under finite sums and summands");
    closure_check(m, mu, seed + 1, samples, rep, m.name.c_str());
  }
  return rep;
}

}  // namespace

PairReport duality_pair_check(const ClassPredicate& m, const ClassPredicate& c, const std::vector<Module>& mu,
                              const std::vector<Module>& cu, std::uint64_t seed, std::size_t samples, bool m_closure) {
  return pair_check(m, c, mu, cu, seed, samples, m_closure, Scope::module);
}

PairReport duality_pair_check(const ClassPredicate& m, const ClassPredicate& c, const std::vector<ChainComplex>& mu,
                              const std::vector<ChainComplex>& cu, std::uint64_t seed, std::size_t samples,
                              bool m_closure) {
  return pair_check(m, c, mu, cu, seed, samples, m_closure, Scope::complex);
}

ModuleSes make_module_ses(const ModuleMap& f, const ModuleMap& g) {
  if (!f.target.compatible_with(g.source) || f.target.dim() != g.source.dim())
    throw std::invalid_argument("maps do not compose");
  if (!(g.matrix * f.matrix).is_zero()) throw std::invalid_argument("sequence is not a complex");
  if (rank(f.matrix) != f.source.dim()) throw std::invalid_argument("sequence is not exact: first map not injective");
  if (rank(g.matrix) != g.target.dim()) throw std::invalid_argument("sequence is not exact: last map not surjective");
  if (f.source.dim() + g.target.dim() != f.target.dim()) throw std::invalid_argument("sequence is not exact in the middle");
  return {f, g};
}

ComplexSes make_complex_ses(const ChainMap& f, const ChainMap& g) {
  if (!is_chain_map(f) || !is_chain_map(g)) throw std::invalid_argument("sequence maps must be chain maps");
  const ChainComplex& b = f.target;
  for (int m = std::min({f.source.lo(), b.lo(), g.target.lo()}); m <= std::max({f.source.hi(), b.hi(), g.target.hi()}); ++m) {
    const std::size_t a = f.source.dim(m), c = g.target.dim(m), bm = b.dim(m);
    if (a + c != bm) throw std::invalid_argument("sequence is not exact in degree " + std::to_string(m));
    if (bm == 0) continue;
    const Matrix fm = f.comp(m), gm = g.comp(m);
    if (!(gm * fm).is_zero() || rank(fm) != a || rank(gm) != c)
      throw std::invalid_argument("sequence is not exact in degree " + std::to_string(m));
  }
  return {f, g};
}

bool is_pure_exact(const ModuleSes& eta, const std::vector<Module>& family) {
  const Module& a = eta.f.source;
  const Module& b = eta.f.target;
  for (const Module& n : family) {
    if (n.side() == a.side()) throw std::invalid_argument("purity test modules must be on the opposite side");
    TensorProduct ta = a.side() == Side::left ? tensor_product(n, a) : tensor_product(a, n);
    TensorProduct tb = a.side() == Side::left ? tensor_product(n, b) : tensor_product(b, n);
    const Matrix id = Matrix::identity(n.p(), n.dim());
    Matrix induced = a.side() == Side::left ? tensor_map(ta, tb, id, eta.f.matrix) : tensor_map(ta, tb, eta.f.matrix, id);
    if (rank(induced) != ta.dim()) return false;
  }
  return true;
}

bool is_pure_exact(const ComplexSes& eta, const std::vector<ChainComplex>& family) {
  const ChainComplex& a = eta.f.source;
  const ChainComplex& b = eta.f.target;
  if (a.side() != Side::left) throw std::invalid_argument("complex purity is implemented for left complexes");
  for (const ChainComplex& y : family) {
    if (y.side() != Side::right) throw std::invalid_argument("purity test complexes must be right complexes");
    BarTensor ta = bar_tensor(y, a), tb = bar_tensor(y, b);
    const ChainComplex& c = ta.complex;
    for (int n = c.lo(); n <= c.hi() && !c.empty_window(); ++n)
      if (rank(bar_tensor_map(ta, tb, n, nullptr, &eta.f)) != c.dim(n)) return false;
  }
  return true;
}

std::vector<Module> cyclic_modules(const AlgebraPtr& r, Side side, std::size_t dimcap) {
  Module reg = regular_module(r, side);
  std::vector<Module> out;
  for (const Subspace& ideal : enumerate_submodules(reg).members) {
    if (r->dim() - ideal.dim() > dimcap || ideal.dim() == r->dim()) continue;
    out.push_back(quotient_module(reg, ideal).module);
  }
  return out;
}

PairReport hovey_triple_falsifier(const ClassPredicate& a, const ClassPredicate& b, const std::vector<ChainComplex>& u,
                                  std::uint64_t seed, std::size_t samples) {
  if (a.scope != Scope::complex || b.scope != Scope::complex) throw std::invalid_argument("Hovey classes must be complex predicates");
  PairReport rep;
  rep.universe = std::to_string(u.size()) + " " + side_name(a.side) + " complexes";
  rep.axioms = {"Ext^1(A and W, B) = 0", "Ext^1(A, B and W) = 0", "W two-out-of-three on cone sequences"};
  if (u.empty()) return rep;

  std::vector<std::size_t> in_a, in_aw, in_b, in_bw;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const bool ex = is_exact(u[i]);
    if (a(u[i])) {
      in_a.push_back(i);
      if (ex) in_aw.push_back(i);
    }
    if (b(u[i])) {
      in_b.push_back(i);
      if (ex) in_bw.push_back(i);
    }
  }
  const CoverKind kind = default_cover(u.front().ring());
  std::map<std::size_t, std::unique_ptr<ComplexResolution>> res;
  std::mt19937_64 rng(seed);
  auto orthogonality = [&](const std::vector<std::size_t>& left, const std::vector<std::size_t>& right, const char* tag) {
    if (left.empty() || right.empty()) return;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (left.size() * right.size() <= samples) {
      for (auto i : left)
        for (auto j : right) pairs.emplace_back(i, j);
    } else {
      std::uniform_int_distribution<std::size_t> pl(0, left.size() - 1), pr(0, right.size() - 1);
      for (std::size_t s = 0; s < samples; ++s) pairs.emplace_back(left[pl(rng)], right[pr(rng)]);
    }
    for (auto [i, j] : pairs) {
      auto& slot = res[i];
      if (!slot) slot = std::make_unique<ComplexResolution>(u[i], kind);
      ++rep.instances;
      if (auto e = ext_ch_dims(*slot, u[j], 1)[1])
        rep.counterexamples.push_back(std::string(tag) + ": Ext^1(member " + std::to_string(i) + ", member " +
                                      std::to_string(j) + ") has dim " + std::to_string(e) + " [" + describe(u[i]) +
                                      " ; " + describe(u[j]) + "]");
    }
  };
  orthogonality(in_aw, in_b, "A and W vs B");
  orthogonality(in_a, in_bw, "A vs B and W");

  std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
  const std::size_t cones = std::min<std::size_t>(samples, u.size());
  for (std::size_t s = 0; s < cones; ++s) {
    const ChainComplex& x = u[pick(rng)];
    const ChainComplex& y = u[pick(rng)];
    ChainMap f = random_chain_map(x, y, rng);
    Cone c = mapping_cone(f);
    const int ex = int(is_exact(x)) + int(is_exact(y)) + int(is_exact(c.complex));
    ++rep.instances;
    if (ex == 2) rep.counterexamples.push_back("cone sequence with exactly two exact terms: " + describe(c.complex));
  }
  return rep;
}

}  // namespace homlab
