#include "homlab/module_ops.hpp"

#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace homlab {

ModuleMap make_module_map(const Module& source, const Module& target, const Matrix& matrix) {
  if (!source.compatible_with(target)) throw std::invalid_argument("module map between incompatible modules");
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw std::invalid_argument("module map matrix has the wrong shape");
  if (!is_homomorphism(source, target, matrix)) throw std::invalid_argument("matrix is not R-linear");
  return {source, target, matrix};
}

ModuleWithMap kernel(const ModuleMap& f) {
  Subspace k = kernel(f.matrix);
  Module km = submodule(f.source, k);
  return {km, {km, f.source, k.basis}};
}

ModuleWithMap image(const ModuleMap& f) {
  Subspace im = column_space(f.matrix);
  Module m = submodule(f.target, im);
  return {m, {m, f.target, im.basis}};
}

ModuleWithMap cokernel(const ModuleMap& f) {
  QuotientModule q = quotient_module(f.target, column_space(f.matrix));
  return {q.module, {f.target, q.module, q.map.proj}};
}

namespace {

std::vector<std::uint32_t> subspace_key(const Subspace& s) {
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(s.dim())};
  for (std::size_t r = 0; r < s.basis.rows(); ++r)
    for (std::size_t c = 0; c < s.basis.cols(); ++c) key.push_back(s.basis(r, c));
  return key;
}

}  // namespace

SubmoduleLattice enumerate_submodules(const Module& m, std::size_t exhaustive_limit, std::size_t samples,
                                      std::uint64_t seed) {
  const std::uint32_t p = m.p();
  const std::size_t n = m.dim();
  SubmoduleLattice out;
  std::set<std::vector<std::uint32_t>> seen;
  auto add = [&](const Subspace& s) {
    Subspace c = column_space(s.basis);
    if (c.basis.rows() != n) c = zero_subspace(p, n);
    if (!seen.insert(subspace_key(c)).second) return false;
    out.members.push_back(c);
    return true;
  };
  add(zero_subspace(p, n));
  std::size_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < n && small; ++i) {
    total *= p;
    if (total > exhaustive_limit) small = false;
  }
  if (small) {
    // Every submodule is a finite sum of cyclic ones: close {0} under S -> S + Rv.
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const Subspace s = out.members[queue.front()];
      queue.pop_front();
      Matrix v(p, n, 1);
      for (std::size_t idx = 1; idx < total; ++idx) {
        std::size_t x = idx;
        std::uint32_t lead = 0;
        for (std::size_t r = 0; r < n; ++r) {
          v.at(r, 0) = static_cast<std::uint32_t>(x % p);
          x /= p;
          if (!lead && v(r, 0)) lead = v(r, 0);
        }
        if (lead != 1 || s.contains(v)) continue;
        if (add(generated_submodule(m, hstack(s.basis, v)))) queue.push_back(out.members.size() - 1);
      }
    }
    return out;
  }
  out.exhaustive = false;
  add(full_subspace(p, n));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
  for (std::size_t t = 0; t < samples; ++t) {
    Matrix v(p, n, 1 + t % 2);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < v.cols(); ++c) v.at(r, c) = digit(rng);
    add(generated_submodule(m, v));
  }
  return out;
}

RingMap make_ring_map(const AlgebraPtr& source, const AlgebraPtr& target, const Matrix& images) {
  if (source->p() != target->p()) throw std::invalid_argument("ring map between different fields");
  if (images.rows() != target->dim() || images.cols() != source->dim())
    throw std::invalid_argument("ring map images have the wrong shape");
  Matrix unit(target->p(), target->dim(), 1);
  unit.at(target->unit(), 0) = 1;
  if (images.column(source->unit()) != unit) throw std::invalid_argument("ring map is not unital");
  const std::size_t n = source->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs(target->p(), target->dim(), 1);
      for (std::size_t k = 0; k < n; ++k)
        if (auto c = source->c(i, j, k)) lhs = lhs + images.column(k).scaled(c);
      if (lhs != target->multiply(images.column(i), images.column(j)))
        throw std::invalid_argument("ring map is not multiplicative at (" + source->labels()[i] + ", " +
                                    source->labels()[j] + ")");
    }
  return {source, target, images};
}

RingMap ring_map_by_labels(const AlgebraPtr& source, const AlgebraPtr& target) {
  Matrix images(target->p(), target->dim(), source->dim());
  for (std::size_t i = 0; i < source->dim(); ++i) {
    auto j = target->index_of(source->labels()[i]);
    if (!j) throw std::invalid_argument("target ring has no basis element " + source->labels()[i]);
    images.at(*j, i) = 1;
  }
  return make_ring_map(source, target, images);
}

namespace {

// Matrix of multiplication by phi(b_i) on S, from the left or from the right.
Matrix image_mult(const RingMap& phi, std::size_t i, bool from_left) {
  const AlgebraPtr& s = phi.target;
  Matrix out(s->p(), s->dim(), s->dim());
  for (std::size_t k = 0; k < s->dim(); ++k)
    if (auto c = phi.images(k, i)) out = out + (from_left ? s->left_mult(k) : s->right_mult(k)).scaled(c);
  return out;
}

}  // namespace

Module base_change(const RingMap& phi, const Module& m) {
  if (!same_algebra(m.ring(), phi.source)) throw std::invalid_argument("module is not over the source ring");
  const AlgebraPtr& s = phi.target;
  const std::uint32_t p = s->p();
  const bool left = m.side() == Side::left;
  std::vector<Matrix> bimod;
  for (std::size_t i = 0; i < phi.source->dim(); ++i) bimod.push_back(image_mult(phi, i, !left));
  Module s_over_r = Module::from_actions(phi.source, left ? Side::right : Side::left, s->dim(), bimod);
  TensorProduct tp = left ? tensor_product(s_over_r, m) : tensor_product(m, s_over_r);
  std::vector<Matrix> acts;
  for (std::size_t j = 0; j < s->dim(); ++j) {
    Matrix id = Matrix::identity(p, m.dim());
    acts.push_back(left ? tensor_map(tp, tp, s->left_mult(j), id) : tensor_map(tp, tp, id, s->right_mult(j)));
  }
  return Module::from_actions(s, m.side(), tp.dim(), std::move(acts));
}

Module restrict_module(const RingMap& phi, const Module& n) {
  if (!same_algebra(n.ring(), phi.target)) throw std::invalid_argument("module is not over the target ring");
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < phi.source->dim(); ++i) {
    Matrix a(n.p(), n.dim(), n.dim());
    for (std::size_t k = 0; k < phi.target->dim(); ++k)
      if (auto c = phi.images(k, i)) a = a + n.action(k).scaled(c);
    acts.push_back(std::move(a));
  }
  return Module::from_actions(phi.source, n.side(), n.dim(), std::move(acts));
}

std::pair<std::size_t, std::size_t> adjunction_dims(const RingMap& phi, const Module& m, const Module& n) {
  return {hom_space(base_change(phi, m), n).dim(), hom_space(m, restrict_module(phi, n)).dim()};
}

}  // namespace homlab
