#include "homlab/resolution.hpp"

#include <stdexcept>

namespace homlab {

CoverKind default_cover(const AlgebraPtr& r) { return r->radical() ? CoverKind::minimal : CoverKind::naive; }

Matrix free_map_from_images(const Module& target, const Matrix& images) {
  const std::size_t n = target.ring()->dim();
  const std::size_t r = images.cols();
  Matrix out(target.p(), target.dim(), r * n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix moved = target.action(j) * images;
    for (std::size_t g = 0; g < r; ++g)
      for (std::size_t row = 0; row < target.dim(); ++row) out.at(row, g * n + j) = moved(row, g);
  }
  return out;
}

FreeCover free_cover(const Module& m, CoverKind kind) {
  FreeCover c;
  if (kind == CoverKind::minimal) {
    c.images = quotient_by(radical_submodule(m)).lift;
  } else {
    c.images = Matrix::identity(m.p(), m.dim());
  }
  c.rank = c.images.cols();
  c.map = free_map_from_images(m, c.images);
  return c;
}

FreeResolution free_resolution(const Module& m, std::size_t length, CoverKind kind) {
  FreeResolution res;
  res.module = m;
  res.kind = kind;
  res.syzygies.push_back(m);
  res.inclusions.push_back(Matrix());
  Module target = m;
  for (std::size_t i = 0; i <= length; ++i) {
    FreeCover c = free_cover(target, kind);
    res.ranks.push_back(c.rank);
    res.maps.push_back(i == 0 ? c.map : res.inclusions.back() * c.map);
    if (i == length) break;
    Module f = free_module(m.ring(), m.side(), c.rank);
    Subspace k = kernel(c.map);
    target = submodule(f, k);
    res.syzygies.push_back(target);
    res.inclusions.push_back(k.basis);
  }
  return res;
}

std::vector<std::size_t> betti_numbers(const Module& m, std::size_t length) {
  return free_resolution(m, length, CoverKind::minimal).ranks;
}

Matrix hom_free_induced(const Matrix& d, std::size_t r_source, std::size_t r_target, const Module& n) {
  const std::size_t rd = n.ring()->dim(), unit = n.ring()->unit(), dn = n.dim();
  Matrix out(n.p(), r_source * dn, r_target * dn);
  for (std::size_t g = 0; g < r_source; ++g)
    for (std::size_t h = 0; h < r_target; ++h)
      for (std::size_t j = 0; j < rd; ++j)
        if (auto c = d(h * rd + j, g * rd + unit)) out.add_block(g * dn, h * dn, n.action(j).scaled(c));
  return out;
}

Matrix tensor_free_induced(const Matrix& d, std::size_t r_source, std::size_t r_target, const Module& n) {
  const std::size_t rd = n.ring()->dim(), unit = n.ring()->unit(), dn = n.dim();
  Matrix out(n.p(), r_target * dn, r_source * dn);
  for (std::size_t g = 0; g < r_source; ++g)
    for (std::size_t h = 0; h < r_target; ++h)
      for (std::size_t j = 0; j < rd; ++j)
        if (auto c = d(h * rd + j, g * rd + unit)) out.add_block(h * dn, g * dn, n.action(j).scaled(c));
  return out;
}

std::vector<std::size_t> ext_dims(const FreeResolution& res, const Module& n, std::size_t upto) {
  if (!res.module.compatible_with(n)) throw std::invalid_argument("Ext between modules over different rings or sides");
  if (res.ranks.size() < upto + 2) throw std::invalid_argument("resolution too short for the requested Ext");
  // delta[i]: Hom(P_i, N) -> Hom(P_{i+1}, N)
  std::vector<std::size_t> rk;
  for (std::size_t i = 0; i <= upto; ++i)
    rk.push_back(rank(hom_free_induced(res.maps[i + 1], res.ranks[i + 1], res.ranks[i], n)));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= upto; ++i)
    out.push_back(res.ranks[i] * n.dim() - rk[i] - (i ? rk[i - 1] : 0));
  return out;
}

std::vector<std::size_t> ext_dims(std::size_t upto, const Module& m, const Module& n, CoverKind kind) {
  if (!m.compatible_with(n)) throw std::invalid_argument("Ext between modules over different rings or sides");
  return ext_dims(free_resolution(m, upto + 1, kind), n, upto);
}

std::size_t ext_dim(std::size_t i, const Module& m, const Module& n, CoverKind kind) {
  return ext_dims(i, m, n, kind).back();
}

std::vector<std::size_t> tor_dims(const Module& n, const FreeResolution& res, std::size_t upto) {
  if (n.side() != Side::right || res.module.side() != Side::left)
    throw std::invalid_argument("Tor needs a right module then a left module");
  if (!same_algebra(n.ring(), res.module.ring())) throw std::invalid_argument("Tor over different rings");
  if (res.ranks.size() < upto + 2) throw std::invalid_argument("resolution too short for the requested Tor");
  // t[i]: N (x) P_i -> N (x) P_{i-1}, i >= 1
  std::vector<std::size_t> rk(upto + 2, 0);
  for (std::size_t i = 1; i <= upto + 1; ++i)
    rk[i] = rank(tensor_free_induced(res.maps[i], res.ranks[i], res.ranks[i - 1], n));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= upto; ++i) out.push_back(res.ranks[i] * n.dim() - rk[i] - rk[i + 1]);
  return out;
}

std::vector<std::size_t> tor_dims(std::size_t upto, const Module& n, const Module& m, CoverKind kind) {
  if (n.side() != Side::right || m.side() != Side::left)
    throw std::invalid_argument("Tor needs a right module then a left module");
  if (!same_algebra(n.ring(), m.ring())) throw std::invalid_argument("Tor over different rings");
  return tor_dims(n, free_resolution(m, upto + 1, kind), upto);
}

std::size_t tor_dim(std::size_t i, const Module& n, const Module& m, CoverKind kind) {
  return tor_dims(i, n, m, kind).back();
}

InjectiveEmbedding injective_embedding(const Module& m, CoverKind kind) {
  Module dual = character_dual(m);
  FreeCover c = free_cover(dual, kind);
  Module f = free_module(m.ring(), dual.side(), c.rank);
  return {character_dual(f), c.map.transpose()};
}

InjectiveCoresolution injective_coresolution(const Module& m, std::size_t length, CoverKind kind) {
  InjectiveCoresolution out;
  out.cosyzygies.push_back(m);
  for (std::size_t i = 0; i < length; ++i) {
    InjectiveEmbedding e = injective_embedding(out.cosyzygies.back(), kind);
    out.injectives.push_back(e.injective);
    out.embeddings.push_back(e.map);
    out.cosyzygies.push_back(quotient_module(e.injective, column_space(e.map)).module);
  }
  return out;
}

}  // namespace homlab
