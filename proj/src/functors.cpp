#include "homlab/functors.hpp"

#include <algorithm>
#include <stdexcept>

#include "homlab/sign.hpp"

namespace homlab {

namespace {

Module field_space(std::uint32_t p, std::size_t dim) {
  return Module::from_actions(field_algebra(p), Side::left, dim, {Matrix::identity(p, dim)}, false);
}

ChainComplex field_complex(std::uint32_t p, int lo, const std::vector<std::size_t>& dims, std::vector<Matrix> diffs) {
  std::vector<Module> terms;
  for (auto d : dims) terms.push_back(field_space(p, d));
  return ChainComplex::make(field_algebra(p), Side::left, lo, std::move(terms), std::move(diffs), false);
}

}  // namespace

Matrix HomComplex::pack(int n, const std::map<int, Matrix>& comps) const {
  const auto& bl = blocks.at(n);
  Matrix v(source.p(), complex.dim(n), 1);
  for (const auto& b : bl) {
    auto it = comps.find(b.i);
    if (it == comps.end()) continue;
    v.set_block(b.offset, 0, b.space.coordinates(it->second));
  }
  return v;
}

std::map<int, Matrix> HomComplex::unpack(int n, const Matrix& coords) const {
  std::map<int, Matrix> out;
  for (const auto& b : blocks.at(n)) out[b.i] = b.space.element_of(coords.block(b.offset, 0, b.space.dim(), 1));
  return out;
}

HomComplex hom_complex(const ChainComplex& x, const ChainComplex& y) {
  if (!x.compatible_with(y)) throw std::invalid_argument("Hom complex between complexes over different rings or sides");
  HomComplex h;
  h.source = x;
  h.target = y;
  const std::uint32_t p = x.p();
  if (x.empty_window() || y.empty_window()) {
    h.complex = ChainComplex::zero(field_algebra(p), Side::left);
    return h;
  }
  const int lo = y.lo() - x.hi(), hi = y.hi() - x.lo();
  std::vector<std::size_t> dims;
  for (int n = lo; n <= hi; ++n) {
    auto& bl = h.blocks[n];
    std::size_t off = 0;
    for (int i = x.lo(); i <= x.hi(); ++i) {
      int j = n + i;
      if (j < y.lo() || j > y.hi()) continue;
      HomComplex::Block b{i, hom_space(x.term(i), y.term(j)), off};
      off += b.space.dim();
      bl.push_back(std::move(b));
    }
    dims.push_back(off);
  }
  auto find_block = [&](int n, int i) -> const HomComplex::Block* {
    auto it = h.blocks.find(n);
    if (it == h.blocks.end()) return nullptr;
    for (const auto& b : it->second)
      if (b.i == i) return &b;
    return nullptr;
  };
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t rows = n - 1 >= lo ? dims[n - 1 - lo] : 0;
    Matrix post(p, rows, dims[n - lo]), pre(p, rows, dims[n - lo]);
    for (const auto& b : h.blocks[n]) {
      if (b.space.dim() == 0) continue;
      const int i = b.i, j = n + i;
      const Matrix& basis = b.space.space.basis;
      if (const auto* t = find_block(n - 1, i)) {
        Matrix img = kron(y.diff(j), Matrix::identity(p, x.dim(i))) * basis;
        post.set_block(t->offset, b.offset, t->space.space.coordinates(img));
      }
      if (const auto* t = find_block(n - 1, i + 1)) {
        Matrix img = kron(Matrix::identity(p, y.dim(j)), x.diff(i + 1).transpose()) * basis;
        pre.set_block(t->offset, b.offset, t->space.space.coordinates(img));
      }
    }
    if (n > lo) diffs.push_back(post + pre.scaled(-site_sign(SignSite::hom, n)));
    h.post[n] = std::move(post);
    h.pre[n] = std::move(pre);
  }
  h.complex = field_complex(p, lo, dims, std::move(diffs));
  return h;
}

CycleHom underline_hom(const ChainComplex& x, const ChainComplex& y) {
  CycleHom c;
  c.hom = hom_complex(x, y);
  const ChainComplex& h = c.hom.complex;
  const std::uint32_t p = x.p();
  if (h.empty_window()) {
    c.complex = h;
    return c;
  }
  std::vector<std::size_t> dims;
  for (int n = h.lo(); n <= h.hi(); ++n) {
    c.cycles[n] = cycles(h, n);
    dims.push_back(c.cycles[n].dim());
  }
  std::vector<Matrix> diffs;
  for (int n = h.lo() + 1; n <= h.hi(); ++n) {
    Matrix img = c.hom.post.at(n) * c.cycles[n].basis;
    diffs.push_back(c.cycles[n - 1].coordinates(img).scaled(site_sign(SignSite::underline_hom, n)));
  }
  c.complex = field_complex(p, h.lo(), dims, std::move(diffs));
  return c;
}

const TensorComplex::Block* TensorComplex::find(int n, int k) const {
  auto it = blocks.find(n);
  if (it == blocks.end()) return nullptr;
  for (const auto& b : it->second)
    if (b.k == k) return &b;
  return nullptr;
}

namespace {

struct TensorParts {
  TensorComplex tc;
  std::map<int, Matrix> left_part;  // dZ (x) 1 out of degree n
};

TensorParts build_tensor(const ChainComplex& z, const ChainComplex& y) {
  if (z.side() != Side::right || y.side() != Side::left)
    throw std::invalid_argument("tensor complex needs a right complex then a left complex");
  if (!same_algebra(z.ring(), y.ring())) throw std::invalid_argument("tensor complex over different rings");
  TensorParts out;
  TensorComplex& t = out.tc;
  t.right = z;
  t.left = y;
  const std::uint32_t p = z.p();
  if (z.empty_window() || y.empty_window()) {
    t.complex = ChainComplex::zero(field_algebra(p), Side::left);
    return out;
  }
  const int lo = z.lo() + y.lo(), hi = z.hi() + y.hi();
  std::vector<std::size_t> dims;
  for (int n = lo; n <= hi; ++n) {
    auto& bl = t.blocks[n];
    std::size_t off = 0;
    for (int k = z.lo(); k <= z.hi(); ++k) {
      int j = n - k;
      if (j < y.lo() || j > y.hi()) continue;
      TensorComplex::Block b{k, tensor_product(z.term(k), y.term(j)), off};
      off += b.tp.dim();
      bl.push_back(std::move(b));
    }
    dims.push_back(off);
  }
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t rows = n - 1 >= lo ? dims[n - 1 - lo] : 0;
    Matrix left(p, rows, dims[n - lo]), right(p, rows, dims[n - lo]);
    for (const auto& b : t.blocks[n]) {
      if (b.tp.dim() == 0) continue;
      const int k = b.k, j = n - k;
      if (const auto* tb = t.find(n - 1, k - 1))
        left.set_block(tb->offset, b.offset,
                       tensor_map(b.tp, tb->tp, z.diff(k), Matrix::identity(p, y.dim(j))));
      if (const auto* tb = t.find(n - 1, k))
        right.set_block(tb->offset, b.offset,
                        tensor_map(b.tp, tb->tp, Matrix::identity(p, z.dim(k)), y.diff(j))
                            .scaled(site_sign(SignSite::tensor, k)));
    }
    if (n > lo) diffs.push_back(left + right);
    out.left_part[n] = std::move(left);
  }
  t.complex = field_complex(p, lo, dims, std::move(diffs));
  return out;
}

}  // namespace

TensorComplex tensor_complex(const ChainComplex& z, const ChainComplex& y) { return build_tensor(z, y).tc; }

Matrix tensor_complex_map(const TensorComplex& from, const TensorComplex& to, int n, const ChainMap* g,
                          const ChainMap* h) {
  const std::uint32_t p = from.right.p();
  Matrix out(p, to.complex.dim(n), from.complex.dim(n));
  auto it = from.blocks.find(n);
  if (it == from.blocks.end()) return out;
  for (const auto& b : it->second) {
    const auto* tb = to.find(n, b.k);
    if (!tb || b.tp.dim() == 0 || tb->tp.dim() == 0) continue;
    const int j = n - b.k;
    Matrix gk = g ? g->comp(b.k) : Matrix::identity(p, from.right.dim(b.k));
    Matrix hj = h ? h->comp(j) : Matrix::identity(p, from.left.dim(j));
    out.set_block(tb->offset, b.offset, tensor_map(b.tp, tb->tp, gk, hj));
  }
  return out;
}

BarTensor bar_tensor(const ChainComplex& z, const ChainComplex& y) {
  TensorParts parts = build_tensor(z, y);
  BarTensor bt;
  bt.tensor = std::move(parts.tc);
  const ChainComplex& t = bt.tensor.complex;
  const std::uint32_t p = z.p();
  if (t.empty_window()) {
    bt.complex = t;
    return bt;
  }
  std::vector<std::size_t> dims;
  for (int n = t.lo(); n <= t.hi(); ++n) {
    bt.quotients[n] = quotient_by(boundaries(t, n));
    dims.push_back(bt.quotients[n].dim());
  }
  std::vector<Matrix> diffs;
  for (int n = t.lo() + 1; n <= t.hi(); ++n)
    diffs.push_back(bt.quotients[n - 1].proj * parts.left_part.at(n) * bt.quotients[n].lift);
  bt.complex = field_complex(p, t.lo(), dims, std::move(diffs));
  return bt;
}

Matrix bar_tensor_map(const BarTensor& from, const BarTensor& to, int n, const ChainMap* g, const ChainMap* h) {
  const std::uint32_t p = from.tensor.right.p();
  auto fi = from.quotients.find(n);
  auto ti = to.quotients.find(n);
  if (fi == from.quotients.end() || ti == to.quotients.end())
    return Matrix(p, to.complex.dim(n), from.complex.dim(n));
  return ti->second.proj * tensor_complex_map(from.tensor, to.tensor, n, g, h) * fi->second.lift;
}

Matrix bar_tensor_map(const BarTensor& from, const BarTensor& to, int n, const ChainMap& g) {
  return bar_tensor_map(from, to, n, &g, nullptr);
}

DualPair character_dual_pair(const ChainComplex& x) {
  const std::uint32_t p = x.p();
  DualPair out;
  const Side dual_side = flip(x.side());
  if (x.empty_window()) {
    out.definitional = out.reindexed = ChainComplex::zero(x.ring(), dual_side);
    out.comparison = ChainMap{out.definitional, out.reindexed, {}};
    return out;
  }
  // Definitional realization: cycles of Hom_k(X, D^1(k)).
  ChainComplex e = disk(field_space(p, 1), 1);
  CycleHom c = underline_hom(restrict_to_field(x), e);
  const ChainComplex& z = c.complex;
  std::vector<Module> terms;
  for (int n = z.lo(); n <= z.hi(); ++n) {
    const Subspace& cyc = c.cycles.at(n);
    std::vector<Matrix> acts;
    for (std::size_t r = 0; r < x.ring()->dim(); ++r) {
      // f -> f o A_r on each block Hom_k(X_i, E_j)
      Matrix act(p, c.hom.complex.dim(n), c.hom.complex.dim(n));
      for (const auto& b : c.hom.blocks.at(n)) {
        const int i = b.i, j = n + i;
        act.set_block(b.offset, b.offset, kron(Matrix::identity(p, e.dim(j)), x.term(i).action(r).transpose()));
      }
      acts.push_back(cyc.coordinates(act * cyc.basis));
    }
    terms.push_back(Module::from_actions(x.ring(), dual_side, cyc.dim(), std::move(acts), false));
  }
  std::vector<Matrix> zdiffs;
  for (int n = z.lo() + 1; n <= z.hi(); ++n) zdiffs.push_back(z.diff(n));
  out.definitional = ChainComplex::make(x.ring(), dual_side, z.lo(), std::move(terms), std::move(zdiffs), false);

  // Reindexed realization.
  std::vector<Module> rterms;
  std::vector<Matrix> rdiffs;
  const int lo = -x.hi(), hi = -x.lo();
  for (int n = lo; n <= hi; ++n) {
    rterms.push_back(character_dual(x.term(-n)));
    if (n > lo) rdiffs.push_back(x.diff(1 - n).transpose().scaled(site_sign(SignSite::dual, n)));
  }
  out.reindexed = ChainComplex::make(x.ring(), dual_side, lo, std::move(rterms), std::move(rdiffs), false);

  // Comparison f -> eps_n f_{-n}, eps_n = (-1)^{n(n+1)/2}.
  std::map<int, Matrix> comps;
  for (int n = z.lo(); n <= z.hi(); ++n) {
    Matrix m(p, x.dim(-n), z.dim(n));
    for (const auto& b : c.hom.blocks.at(n)) {
      if (b.i != -n) continue;
      const long long k = static_cast<long long>(n) * (n + 1) / 2;
      const long long eps = (k % 2 == 0) ? 1 : -1;
      m = (c.cycles.at(n).basis.block(b.offset, 0, b.space.dim(), z.dim(n))).scaled(eps);
    }
    comps[n] = m;
  }
  out.comparison = ChainMap{out.definitional, out.reindexed, std::move(comps)};
  return out;
}

ChainComplex character_dual(const ChainComplex& x) {
  DualPair d = character_dual_pair(x);
  if (!is_isomorphism(d.comparison))
    throw std::logic_error("defect: the two realizations of the dual complex disagree (" +
                           chain_map_error(d.comparison) + ")");
  return d.reindexed;
}

ChainMap double_dual_map(const ChainComplex& x) {
  ChainComplex dd = character_dual(character_dual(x));
  std::map<int, Matrix> comps;
  for (int n = x.lo(); n <= x.hi(); ++n)
    comps[n] = Matrix::identity(x.p(), x.dim(n)).scaled(n % 2 == 0 ? 1 : -1);
  return ChainMap{x, dd, std::move(comps)};
}

namespace {

// Columns: images of a basis of homotopies s_m: X_m -> Y_{m+1} under s -> dY s + s dX,
// written in the ambient coordinates of the chain map space.
Matrix homotopy_image(const ChainMapSpace& space) {
  const ChainComplex& x = space.source;
  const ChainComplex& y = space.target;
  const std::uint32_t p = x.p();
  std::vector<Matrix> cols;
  int lo = std::max(x.lo(), y.lo() - 1), hi = std::min(x.hi(), y.hi() - 1);
  for (int m = lo; m <= hi; ++m) {
    HomSpace s = hom_space(x.term(m), y.term(m + 1));
    for (std::size_t t = 0; t < s.dim(); ++t) {
      Matrix e = s.element(t);
      Matrix v(p, space.ambient, 1);
      if (m >= space.lo && m <= space.hi)
        v.set_block(space.offsets[m - space.lo], 0, space.homs[m - space.lo].coordinates(y.diff(m + 1) * e));
      if (m + 1 >= space.lo && m + 1 <= space.hi) {
        Matrix img = e * x.diff(m + 1);
        v.add_block(space.offsets[m + 1 - space.lo], 0, space.homs[m + 1 - space.lo].coordinates(img));
      }
      cols.push_back(std::move(v));
    }
  }
  return hstack(cols, p, space.ambient);
}

}  // namespace

std::size_t homotopy_classes_dim(const ChainComplex& x, const ChainComplex& y) {
  ChainMapSpace space = chain_map_space(x, y);
  return space.maps.dim() - rank(homotopy_image(space));
}

bool is_null_homotopic(const ChainMap& f) {
  ChainMapSpace space = chain_map_space(f.source, f.target);
  return solve(homotopy_image(space), space.pack(f));
}

bool cone_projection_splits(const ChainMap& f) {
  Cone c = mapping_cone(f);
  const ChainComplex& x = f.source;
  const ChainComplex& y = f.target;
  const ChainComplex& cc = c.complex;
  const std::uint32_t p = x.p();
  if (cc.empty_window()) return true;
  // unknown T_m in Hom_R(X_{m-1}, Y_m); section s_m = [T_m; I]
  std::map<int, HomSpace> homs;
  std::map<int, std::size_t> off;
  std::size_t total = 0;
  for (int m = cc.lo(); m <= cc.hi(); ++m) {
    homs.emplace(m, hom_space(x.term(m - 1), y.term(m)));
    off[m] = total;
    total += homs.at(m).dim();
  }
  // A T_m - T_{m-1} D = -B with A = dY_m, B = f_{m-1}, D = -dX_{m-1} read off the cone
  std::vector<Matrix> rows, rhs;
  for (int m = cc.lo(); m <= cc.hi() + 1; ++m) {
    const Matrix d = cc.diff(m);
    const std::size_t ym = y.dim(m), ym1 = y.dim(m - 1);
    Matrix a = d.block(0, 0, ym1, ym);
    Matrix b = d.block(0, ym, ym1, d.cols() - ym);
    Matrix dd = d.block(ym1, ym, d.rows() - ym1, d.cols() - ym);
    Matrix eq(p, ym1 * x.dim(m - 1), total);
    if (homs.count(m))
      for (std::size_t t = 0; t < homs.at(m).dim(); ++t) eq.add_block(0, off[m] + t, (a * homs.at(m).element(t)).vec());
    if (homs.count(m - 1))
      for (std::size_t t = 0; t < homs.at(m - 1).dim(); ++t)
        eq.add_block(0, off[m - 1] + t, (homs.at(m - 1).element(t) * dd).vec().scaled(-1));
    rows.push_back(std::move(eq));
    rhs.push_back(b.scaled(-1).vec());
  }
  Matrix a = vstack(rows, p, total);
  Matrix b = vstack(rhs, p, 1);
  return solve(a, b);
}

}  // namespace homlab
