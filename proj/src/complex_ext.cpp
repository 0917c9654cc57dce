#include "homlab/complex_ext.hpp"

#include <stdexcept>

namespace homlab {

namespace {

std::size_t rank_at(const std::map<int, std::size_t>& ranks, int n) {
  auto it = ranks.find(n);
  return it == ranks.end() ? 0 : it->second;
}

}  // namespace

std::size_t DiskSum::total_rank() const {
  std::size_t s = 0;
  for (auto& [n, r] : ranks) s += r;
  return s;
}

DiskSum disk_sum(const AlgebraPtr& r, Side side, const std::map<int, std::size_t>& ranks) {
  DiskSum out;
  for (auto& [n, k] : ranks)
    if (k) out.ranks[n] = k;
  if (out.ranks.empty()) {
    out.complex = ChainComplex::zero(r, side);
    return out;
  }
  const int lo = out.ranks.begin()->first - 1, hi = out.ranks.rbegin()->first;
  const std::size_t dr = r->dim();
  std::vector<Module> terms;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t top = rank_at(out.ranks, n), bottom = rank_at(out.ranks, n + 1);
    terms.push_back(free_module(r, side, top + bottom));
    if (n > lo) {
      const std::size_t below_top = rank_at(out.ranks, n - 1);
      Matrix d(r->p(), (below_top + top) * dr, (top + bottom) * dr);
      d.set_block(below_top * dr, 0, Matrix::identity(r->p(), top * dr));
      diffs.push_back(std::move(d));
    }
  }
  out.complex = ChainComplex::make(r, side, lo, std::move(terms), std::move(diffs), false);
  return out;
}

ComplexResolution::ComplexResolution(ChainComplex x, CoverKind kind) : x_(std::move(x)), kind_(kind) {}

void ComplexResolution::extend(std::size_t length) {
  while (layers_.size() <= length) {
    const ChainComplex& k = layers_.empty() ? x_ : kernel_;
    std::map<int, std::size_t> ranks;
    std::map<int, FreeCover> covers;
    for (int n = k.lo(); n <= k.hi(); ++n) {
      if (k.dim(n) == 0) continue;
      FreeCover c = free_cover(k.term(n), kind_);
      if (c.rank == 0) continue;
      ranks[n] = c.rank;
      covers.emplace(n, std::move(c));
    }
    DiskSum p = disk_sum(x_.ring(), x_.side(), ranks);
    std::map<int, Matrix> to_k;
    const ChainComplex& pc = p.complex;
    for (int n = pc.lo(); n <= pc.hi(); ++n) {
      Matrix m(x_.p(), k.dim(n), pc.dim(n));
      const std::size_t top = rank_at(p.ranks, n);
      if (auto it = covers.find(n); it != covers.end()) m.set_block(0, 0, it->second.map);
      if (auto it = covers.find(n + 1); it != covers.end())
        m.set_block(0, top * x_.ring()->dim(), k.diff(n + 1) * it->second.map);
      to_k[n] = std::move(m);
    }
    ChainMap cover{pc, k, to_k};
    if (layers_.empty()) {
      maps_.push_back(cover);
    } else {
      std::map<int, Matrix> comps;
      for (auto& [n, m] : to_k) {
        auto it = kernel_inclusion_.find(n);
        comps[n] = it == kernel_inclusion_.end() ? Matrix(x_.p(), layers_.back().complex.dim(n), m.cols())
                                                 : it->second * m;
      }
      maps_.push_back(ChainMap{pc, layers_.back().complex, std::move(comps)});
    }
    KernelComplex kc = kernel_complex(cover);
    layers_.push_back(std::move(p));
    kernel_ = std::move(kc.complex);
    kernel_inclusion_ = std::move(kc.inclusion);
  }
}

Matrix hom_ch_induced(const ComplexResolution& res, std::size_t j, const ChainComplex& y) {
  const DiskSum& P = res.layer(j);
  const DiskSum& Q = res.layer(j + 1);
  const ChainMap& d = res.map(j + 1);
  const AlgebraPtr& ring = res.target().ring();
  const std::size_t dr = ring->dim(), unit = ring->unit();
  const std::uint32_t p = ring->p();
  std::map<int, std::size_t> pbase, qbase;
  std::size_t cols = 0, rows = 0;
  for (auto& [n, r] : P.ranks) {
    pbase[n] = cols;
    cols += r * y.dim(n);
  }
  for (auto& [n, r] : Q.ranks) {
    qbase[n] = rows;
    rows += r * y.dim(n);
  }
  Matrix out(p, rows, cols);
  for (auto& [n0, r0] : P.ranks) {
    const std::size_t dy = y.dim(n0);
    if (dy == 0) continue;
    const std::size_t below_top = rank_at(P.ranks, n0 - 1);
    for (std::size_t g = 0; g < r0; ++g)
      for (std::size_t b = 0; b < dy; ++b) {
        Matrix e(p, dy, 1);
        e.at(b, 0) = 1;
        Matrix fm = free_map_from_images(y.term(n0), e);  // dy x dr
        Matrix fm_low = y.diff(n0) * fm;                 // into Y_{n0-1}
        const std::size_t col = pbase[n0] + g * dy + b;
        // degree n0: phi on the top block of generator g
        auto place = [&](int n, const Matrix& phi_block, std::size_t block_col) {
          auto it = Q.ranks.find(n);
          if (it == Q.ranks.end() || phi_block.rows() == 0) return;
          const Matrix dn = d.comp(n);
          for (std::size_t g2 = 0; g2 < it->second; ++g2) {
            Matrix c = dn.block(block_col, g2 * dr + unit, dr, 1);
            Matrix v = phi_block * c;
            for (std::size_t row = 0; row < v.rows(); ++row)
              out.at(qbase[n] + g2 * y.dim(n) + row, col) = v(row, 0);
          }
        };
        place(n0, fm, g * dr);
        place(n0 - 1, fm_low, (below_top + g) * dr);
      }
  }
  return out;
}

std::vector<std::size_t> ext_ch_dims(ComplexResolution& res, const ChainComplex& y, std::size_t upto) {
  if (!res.target().compatible_with(y)) throw std::invalid_argument("Ext between complexes over different rings or sides");
  res.extend(upto + 1);
  std::vector<std::size_t> rk;
  for (std::size_t i = 0; i <= upto; ++i) rk.push_back(rank(hom_ch_induced(res, i, y)));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= upto; ++i) {
    std::size_t data = 0;
    for (auto& [n, r] : res.layer(i).ranks) data += r * y.dim(n);
    out.push_back(data - rk[i] - (i ? rk[i - 1] : 0));
  }
  return out;
}

std::vector<std::size_t> ext_ch_dims(const ChainComplex& x, const ChainComplex& y, std::size_t upto, CoverKind kind) {
  ComplexResolution res(x, kind);
  return ext_ch_dims(res, y, upto);
}

std::size_t ext_dw(const ChainComplex& x, const ChainComplex& y) { return homology_dim(hom_complex(x, y).complex, -1); }

std::map<int, std::size_t> bar_tor(ComplexResolution& res, const ChainComplex& x, std::size_t i) {
  res.extend(i + 1);
  std::vector<BarTensor> bt;
  const std::size_t first = i ? i - 1 : 0;
  for (std::size_t j = first; j <= i + 1; ++j) bt.push_back(bar_tensor(res.layer(j).complex, x));
  auto at = [&](std::size_t j) -> const BarTensor& { return bt[j - first]; };
  const ChainComplex& mid = at(i).complex;
  std::map<int, std::size_t> out;
  for (int n = mid.lo(); n <= mid.hi(); ++n) {
    std::size_t d = mid.dim(n);
    if (d == 0) continue;
    std::size_t r_in = rank(bar_tensor_map(at(i + 1), at(i), n, res.map(i + 1)));
    std::size_t r_out = i ? rank(bar_tensor_map(at(i), at(i - 1), n, res.map(i))) : 0;
    std::size_t h = d - r_in - r_out;
    if (h) out[n] = h;
  }
  return out;
}

std::map<int, std::size_t> bar_tor(const ChainComplex& y, const ChainComplex& x, std::size_t i, CoverKind kind) {
  ComplexResolution res(y, kind);
  return bar_tor(res, x, i);
}

bool bar_tor_vanishes(ComplexResolution& res, const ChainComplex& x, std::size_t i) {
  return bar_tor(res, x, i).empty();
}

}  // namespace homlab
