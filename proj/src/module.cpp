#include "homlab/module.hpp"

#include <random>
#include <stdexcept>

namespace homlab {

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw std::invalid_argument("side must be 'left' or 'right', got '" + s + "'");
}

Module Module::from_actions(AlgebraPtr ring, Side side, std::size_t dim, std::vector<Matrix> actions,
                            bool validate) {
  if (!ring) throw std::invalid_argument("module needs a ring");
  if (actions.size() != ring->dim())
    throw std::invalid_argument("expected " + std::to_string(ring->dim()) + " action matrices, got " +
                                std::to_string(actions.size()));
  for (auto& a : actions) {
    if (a.rows() != dim || a.cols() != dim) throw std::invalid_argument("action matrix has wrong shape");
    if (a.p() != ring->p()) throw std::invalid_argument("action matrix over the wrong field");
  }
  Module m;
  m.d_ = std::make_shared<const Data>(Data{std::move(ring), side, dim, std::move(actions)});
  if (validate) {
    auto err = m.axiom_violation();
    if (!err.empty()) throw std::invalid_argument("module axioms fail: " + err);
  }
  return m;
}

Module Module::from_generator_actions(AlgebraPtr ring, Side side, std::size_t dim,
                                      const std::vector<Matrix>& generator_actions, bool validate) {
  const auto& gens = ring->generators();
  if (generator_actions.size() != gens.size())
    throw std::invalid_argument("expected " + std::to_string(gens.size()) + " generator actions, got " +
                                std::to_string(generator_actions.size()));
  std::vector<const Matrix*> by_index(ring->dim(), nullptr);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& a = generator_actions[g];
    if (a.rows() != dim || a.cols() != dim) throw std::invalid_argument("generator action has wrong shape");
    by_index[gens[g]] = &a;
  }
  std::vector<Matrix> actions;
  actions.reserve(ring->dim());
  for (std::size_t i = 0; i < ring->dim(); ++i) {
    Matrix a = Matrix::identity(ring->p(), dim);
    const auto& w = ring->word(i);
    if (i != ring->unit() && w.empty()) throw std::invalid_argument("ring basis element without a generator word");
    for (std::size_t t = 0; t < w.size(); ++t) {
      std::size_t g = side == Side::left ? w[t] : w[w.size() - 1 - t];
      a = a * *by_index[g];
    }
    actions.push_back(std::move(a));
  }
  return from_actions(std::move(ring), side, dim, std::move(actions), validate);
}

std::string Module::axiom_violation() const {
  const auto& r = *d_->ring;
  const std::size_t n = r.dim();
  if (action(r.unit()) != Matrix::identity(r.p(), dim())) return "unit does not act as the identity";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix expect(r.p(), dim(), dim());
      for (std::size_t k = 0; k < n; ++k)
        if (auto c = r.c(i, j, k)) expect = expect + action(k).scaled(c);
      Matrix got = side() == Side::left ? action(i) * action(j) : action(j) * action(i);
      if (got != expect)
        return "action of " + r.labels()[i] + " * " + r.labels()[j] + " is not compatible (" + side_name(side()) +
               " module)";
    }
  return {};
}

bool Module::compatible_with(const Module& o) const {
  return side() == o.side() && same_algebra(ring(), o.ring());
}

Module zero_module(const AlgebraPtr& r, Side side) {
  return Module::from_actions(r, side, 0, std::vector<Matrix>(r->dim(), Matrix(r->p(), 0, 0)), false);
}

Module regular_module(const AlgebraPtr& r, Side side) {
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < r->dim(); ++i) acts.push_back(side == Side::left ? r->left_mult(i) : r->right_mult(i));
  return Module::from_actions(r, side, r->dim(), std::move(acts), false);
}

Module free_module(const AlgebraPtr& r, Side side, std::size_t rank) {
  std::vector<Matrix> acts;
  const Matrix id = Matrix::identity(r->p(), rank);
  for (std::size_t i = 0; i < r->dim(); ++i)
    acts.push_back(kron(id, side == Side::left ? r->left_mult(i) : r->right_mult(i)));
  return Module::from_actions(r, side, rank * r->dim(), std::move(acts), false);
}

Module augmentation_module(const AlgebraPtr& r, Side side) {
  const auto& rad = r->radical();
  if (!rad || rad->size() + 1 != r->dim())
    throw std::invalid_argument("augmentation module needs a ring whose radical has codimension one");
  std::vector<Matrix> acts(r->dim(), Matrix(r->p(), 1, 1));
  acts[r->unit()] = Matrix::identity(r->p(), 1);
  return Module::from_actions(r, side, 1, std::move(acts), true);
}

Module direct_sum(const Module& a, const Module& b) {
  if (!a.compatible_with(b)) throw std::invalid_argument("direct sum of modules over different rings or sides");
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < a.ring()->dim(); ++i) acts.push_back(homlab::direct_sum(a.action(i), b.action(i)));
  return Module::from_actions(a.ring(), a.side(), a.dim() + b.dim(), std::move(acts), false);
}

Module direct_sum(const std::vector<Module>& ms, const AlgebraPtr& r, Side side) {
  Module out = zero_module(r, side);
  for (const auto& m : ms) out = direct_sum(out, m);
  return out;
}

Module restrict_to_field(const Module& m) {
  auto k = field_algebra(m.p());
  return Module::from_actions(k, Side::left, m.dim(), {Matrix::identity(m.p(), m.dim())}, false);
}

Module character_dual(const Module& m) {
  std::vector<Matrix> acts;
  for (const auto& a : m.actions()) acts.push_back(a.transpose());
  return Module::from_actions(m.ring(), flip(m.side()), m.dim(), std::move(acts), false);
}

bool is_homomorphism(const Module& source, const Module& target, const Matrix& f) {
  if (!source.compatible_with(target)) return false;
  if (f.rows() != target.dim() || f.cols() != source.dim()) return false;
  for (auto g : source.ring()->generators())
    if (f * source.action(g) != target.action(g) * f) return false;
  return true;
}

Subspace generated_submodule(const Module& m, const Matrix& vectors) {
  Subspace s = column_space(vectors);
  for (;;) {
    std::vector<Matrix> parts{s.basis};
    for (auto g : m.ring()->generators()) parts.push_back(m.action(g) * s.basis);
    Subspace next = column_space(hstack(parts, m.p(), m.dim()));
    if (next.dim() == s.dim()) return next;
    s = std::move(next);
  }
}

bool is_invariant(const Module& m, const Subspace& s) {
  for (auto g : m.ring()->generators())
    if (!s.contains(m.action(g) * s.basis)) return false;
  return true;
}

Module submodule(const Module& m, const Subspace& s) {
  std::vector<Matrix> acts;
  for (const auto& a : m.actions()) acts.push_back(s.coordinates(a * s.basis));
  return Module::from_actions(m.ring(), m.side(), s.dim(), std::move(acts), false);
}

QuotientModule quotient_module(const Module& m, const Subspace& s) {
  Quotient q = quotient_by(s);
  std::vector<Matrix> acts;
  for (const auto& a : m.actions()) acts.push_back(q.proj * a * q.lift);
  return {Module::from_actions(m.ring(), m.side(), q.dim(), std::move(acts), false), std::move(q)};
}

Subspace radical_submodule(const Module& m) {
  const auto& rad = m.ring()->radical();
  if (!rad) throw std::invalid_argument("ring radical is unknown; minimal constructions are unavailable");
  std::vector<Matrix> parts;
  for (auto i : *rad) parts.push_back(m.action(i));
  if (parts.empty()) return zero_subspace(m.p(), m.dim());
  return column_space(hstack(parts, m.p(), m.dim()));
}

Matrix HomSpace::element_of(const Matrix& coords) const {
  return Matrix::unvec(space.basis * coords, target.dim(), source.dim());
}

Matrix hom_constraints(const Module& source, const Module& target) {
  if (!source.compatible_with(target)) throw std::invalid_argument("Hom between modules over different rings or sides");
  const auto& gens = source.ring()->generators();
  const std::size_t n = source.dim() * target.dim();
  std::vector<Matrix> blocks;
  const Matrix in = Matrix::identity(source.p(), source.dim());
  const Matrix it = Matrix::identity(source.p(), target.dim());
  for (auto g : gens) blocks.push_back(kron(it, source.action(g).transpose()) - kron(target.action(g), in));
  return vstack(blocks, source.p(), n);
}

HomSpace hom_space(const Module& source, const Module& target) {
  return HomSpace{source, target, kernel(hom_constraints(source, target))};
}

std::size_t minimal_generator_count(const Module& m) { return m.dim() - radical_submodule(m).dim(); }

bool is_free(const Module& m) { return m.dim() == minimal_generator_count(m) * m.ring()->dim(); }

TensorProduct tensor_product(const Module& right, const Module& left) {
  if (right.side() != Side::right || left.side() != Side::left)
    throw std::invalid_argument("tensor product needs a right module then a left module");
  if (!same_algebra(right.ring(), left.ring())) throw std::invalid_argument("tensor product over different rings");
  const std::size_t n = right.dim() * left.dim();
  std::vector<Matrix> rel;
  const Matrix ir = Matrix::identity(right.p(), right.dim());
  const Matrix il = Matrix::identity(right.p(), left.dim());
  for (auto g : right.ring()->generators()) rel.push_back(kron(right.action(g), il) - kron(ir, left.action(g)));
  Subspace r = rel.empty() ? zero_subspace(right.p(), n) : column_space(hstack(rel, right.p(), n));
  Quotient q = quotient_by(r);
  return TensorProduct{right, left, std::move(r), std::move(q)};
}

Matrix tensor_map(const TensorProduct& from, const TensorProduct& to, const Matrix& f, const Matrix& g) {
  return to.quotient.proj * kron(f, g) * from.quotient.lift;
}

bool is_isomorphic(const Module& a, const Module& b, std::uint64_t seed) {
  if (!a.compatible_with(b) || a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  HomSpace h = hom_space(a, b);
  const std::size_t d = h.dim();
  if (d == 0) return false;
  const std::uint32_t p = a.p();
  double total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  Matrix coords(p, d, 1);
  if (total <= 4096) {
    std::vector<std::uint32_t> digits(d, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < d && ++digits[i] == p) digits[i++] = 0;
      if (i == d) return false;
      for (std::size_t k = 0; k < d; ++k) coords.at(k, 0) = digits[k];
      if (is_invertible(h.element_of(coords))) return true;
    }
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 4096; ++t) {
    for (std::size_t k = 0; k < d; ++k) coords.at(k, 0) = static_cast<std::uint32_t>(rng() % p);
    if (is_invertible(h.element_of(coords))) return true;
  }
  return false;
}

std::vector<Module> enumerate_modules(const AlgebraPtr& r, Side side, std::size_t dim) {
  const auto& gens = r->generators();
  const std::uint32_t p = r->p();
  const std::size_t cells = dim * dim * gens.size();
  double total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= p;
  if (total > double(1u << 24)) throw std::invalid_argument("module enumeration space too large");
  std::vector<Module> out;
  std::vector<std::uint32_t> digits(cells, 0);
  for (;;) {
    std::vector<Matrix> acts(gens.size(), Matrix(p, dim, dim));
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t i = 0; i < dim * dim; ++i) acts[g].at(i / dim, i % dim) = digits[g * dim * dim + i];
    Module m = Module::from_generator_actions(r, side, dim, acts, false);
    if (m.axiom_violation().empty()) out.push_back(m);
    std::size_t i = 0;
    while (i < cells && ++digits[i] == p) digits[i++] = 0;
    if (i == cells) break;
  }
  return out;
}

namespace {
Subspace ideal_subspace(const AlgebraPtr& r, Side side, const std::vector<std::string>& generators) {
  Module reg = regular_module(r, side);
  Matrix v(r->p(), r->dim(), generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    auto idx = r->index_of(generators[j]);
    if (!idx) throw std::invalid_argument("'" + generators[j] + "' is not a basis element of the ring");
    v.at(*idx, j) = 1;
  }
  return generated_submodule(reg, v);
}
}  // namespace

Module ideal_module(const AlgebraPtr& r, Side side, const std::vector<std::string>& generators) {
  return submodule(regular_module(r, side), ideal_subspace(r, side, generators));
}

Module quotient_by_ideal(const AlgebraPtr& r, Side side, const std::vector<std::string>& generators) {
  return quotient_module(regular_module(r, side), ideal_subspace(r, side, generators)).module;
}

}  // namespace homlab
