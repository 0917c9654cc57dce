#include "homlab/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "homlab/sign.hpp"

namespace homlab {

ChainComplex ChainComplex::make(AlgebraPtr ring, Side side, int lo, std::vector<Module> terms,
                                std::vector<Matrix> diffs, bool validate) {
  if (!ring) throw std::invalid_argument("complex needs a ring");
  const std::size_t n = terms.size();
  if (n == 0) {
    if (!diffs.empty()) throw std::invalid_argument("empty complex with differentials");
  } else if (diffs.size() + 1 != n) {
    throw std::invalid_argument("complex with " + std::to_string(n) + " terms needs " + std::to_string(n - 1) +
                                " differentials, got " + std::to_string(diffs.size()));
  }
  for (std::size_t i = 0; i < diffs.size(); ++i)
    if (diffs[i].rows() != terms[i].dim() || diffs[i].cols() != terms[i + 1].dim())
      throw std::invalid_argument("differential out of degree " + std::to_string(lo + int(i) + 1) +
                                  " has the wrong shape");
  ChainComplex x;
  auto d = std::make_shared<Data>();
  d->ring = ring;
  d->side = side;
  d->lo = n ? lo : 0;
  d->hi = n ? lo + int(n) - 1 : -1;
  d->terms = std::move(terms);
  d->diffs = std::move(diffs);
  d->zero = zero_module(ring, side);
  x.d_ = std::move(d);
  if (validate) {
    auto err = x.validation_error();
    if (!err.empty()) throw std::invalid_argument("invalid complex: " + err);
  }
  return x;
}

ChainComplex ChainComplex::zero(AlgebraPtr ring, Side side) { return make(std::move(ring), side, 0, {}, {}, false); }

const Module& ChainComplex::term(int m) const {
  if (m < lo() || m > hi()) return d_->zero;
  return d_->terms[m - lo()];
}

Matrix ChainComplex::diff(int m) const {
  if (m > lo() && m <= hi()) return d_->diffs[m - lo() - 1];
  return Matrix(p(), dim(m - 1), dim(m));
}

std::size_t ChainComplex::total_dim() const {
  std::size_t s = 0;
  for (const auto& t : d_->terms) s += t.dim();
  return s;
}

std::string ChainComplex::validation_error() const {
  for (int m = lo(); m <= hi(); ++m) {
    const Module& t = term(m);
    if (t.side() != side() || !same_algebra(t.ring(), ring()))
      return "term in degree " + std::to_string(m) + " is over a different ring or side";
  }
  for (int m = lo() + 1; m <= hi(); ++m)
    if (!is_homomorphism(term(m), term(m - 1), diff(m)))
      return "differential out of degree " + std::to_string(m) + " is not R-linear";
  auto defects = square_defects();
  if (!defects.empty()) return "d o d != 0 at degree " + std::to_string(defects.front());
  return {};
}

std::vector<int> ChainComplex::square_defects() const {
  std::vector<int> out;
  for (int m = lo() + 2; m <= hi(); ++m)
    if (!(diff(m - 1) * diff(m)).is_zero()) out.push_back(m);
  return out;
}

bool ChainComplex::compatible_with(const ChainComplex& o) const {
  return side() == o.side() && same_algebra(ring(), o.ring());
}

ChainComplex ChainComplex::trimmed() const {
  int a = lo(), b = hi();
  while (a <= b && dim(a) == 0) ++a;
  while (b >= a && dim(b) == 0) --b;
  std::vector<Module> terms;
  std::vector<Matrix> diffs;
  for (int m = a; m <= b; ++m) {
    terms.push_back(term(m));
    if (m > a) diffs.push_back(diff(m));
  }
  return make(ring(), side(), a, std::move(terms), std::move(diffs), false);
}

bool ChainComplex::same_as(const ChainComplex& o) const {
  ChainComplex a = trimmed(), b = o.trimmed();
  if (!a.compatible_with(b) || a.lo() != b.lo() || a.hi() != b.hi()) return false;
  for (int m = a.lo(); m <= a.hi(); ++m) {
    if (a.term(m).actions() != b.term(m).actions()) return false;
    if (a.diff(m) != b.diff(m)) return false;
  }
  return true;
}

Matrix ChainMap::comp(int m) const {
  auto it = comps.find(m);
  if (it != comps.end()) return it->second;
  return Matrix(source.p(), target.dim(m), source.dim(m));
}

ChainMap make_chain_map(const ChainComplex& s, const ChainComplex& t, std::map<int, Matrix> comps) {
  for (auto& [m, f] : comps)
    if (f.rows() != t.dim(m) || f.cols() != s.dim(m))
      throw std::invalid_argument("chain map component in degree " + std::to_string(m) + " has the wrong shape");
  return ChainMap{s, t, std::move(comps)};
}

std::string chain_map_error(const ChainMap& f) {
  if (!f.source.compatible_with(f.target)) return "source and target are over different rings or sides";
  int lo = std::min(f.source.lo(), f.target.lo()), hi = std::max(f.source.hi(), f.target.hi());
  for (int m = lo; m <= hi; ++m) {
    if (!is_homomorphism(f.source.term(m), f.target.term(m), f.comp(m)))
      return "component in degree " + std::to_string(m) + " is not R-linear";
    if (f.target.diff(m) * f.comp(m) != f.comp(m - 1) * f.source.diff(m))
      return "does not commute with differentials at degree " + std::to_string(m);
  }
  return {};
}

bool is_chain_map(const ChainMap& f) { return chain_map_error(f).empty(); }

ChainMap identity_map(const ChainComplex& x) {
  std::map<int, Matrix> c;
  for (int m = x.lo(); m <= x.hi(); ++m) c[m] = Matrix::identity(x.p(), x.dim(m));
  return ChainMap{x, x, std::move(c)};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::map<int, Matrix> c;
  int lo = std::min(f.source.lo(), g.target.lo()), hi = std::max(f.source.hi(), g.target.hi());
  for (int m = lo; m <= hi; ++m) c[m] = g.comp(m) * f.comp(m);
  return ChainMap{f.source, g.target, std::move(c)};
}

bool is_isomorphism(const ChainMap& f) {
  if (!is_chain_map(f)) return false;
  int lo = std::min(f.source.lo(), f.target.lo()), hi = std::max(f.source.hi(), f.target.hi());
  for (int m = lo; m <= hi; ++m)
    if (!is_invertible(f.comp(m))) return false;
  return true;
}

ChainComplex disk(const Module& m, int n) {
  return ChainComplex::make(m.ring(), m.side(), n - 1, {m, m}, {Matrix::identity(m.p(), m.dim())}, false);
}

ChainComplex sphere(const Module& m, int n) { return ChainComplex::make(m.ring(), m.side(), n, {m}, {}, false); }

ChainComplex suspension(const ChainComplex& x, int m) {
  if (x.empty_window()) return x;
  std::vector<Module> terms;
  std::vector<Matrix> diffs;
  const long long s = site_sign(SignSite::suspension, m);
  for (int n = x.lo(); n <= x.hi(); ++n) {
    terms.push_back(x.term(n));
    if (n > x.lo()) diffs.push_back(x.diff(n).scaled(s));
  }
  return ChainComplex::make(x.ring(), x.side(), x.lo() + m, std::move(terms), std::move(diffs), false);
}

ChainMap suspension(const ChainMap& f, int m) {
  std::map<int, Matrix> c;
  for (auto& [n, g] : f.comps) c[n + m] = g;
  return ChainMap{suspension(f.source, m), suspension(f.target, m), std::move(c)};
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (!a.compatible_with(b)) throw std::invalid_argument("direct sum of complexes over different rings or sides");
  if (a.empty_window()) return b;
  if (b.empty_window()) return a;
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<Module> terms;
  std::vector<Matrix> diffs;
  for (int m = lo; m <= hi; ++m) {
    terms.push_back(direct_sum(a.term(m), b.term(m)));
    if (m > lo) diffs.push_back(homlab::direct_sum(a.diff(m), b.diff(m)));
  }
  return ChainComplex::make(a.ring(), a.side(), lo, std::move(terms), std::move(diffs), false);
}

ChainComplex restrict_to_field(const ChainComplex& x) {
  std::vector<Module> terms;
  std::vector<Matrix> diffs;
  for (int m = x.lo(); m <= x.hi(); ++m) {
    terms.push_back(restrict_to_field(x.term(m)));
    if (m > x.lo()) diffs.push_back(x.diff(m));
  }
  return ChainComplex::make(field_algebra(x.p()), Side::left, x.lo(), std::move(terms), std::move(diffs), false);
}

Subspace cycles(const ChainComplex& x, int m) { return kernel(x.diff(m)); }

Subspace boundaries(const ChainComplex& x, int m) { return column_space(x.diff(m + 1)); }

std::size_t homology_dim(const ChainComplex& x, int m) {
  return x.dim(m) - rank(x.diff(m)) - rank(x.diff(m + 1));
}

std::map<int, std::size_t> homology_dims(const ChainComplex& x) {
  std::map<int, std::size_t> out;
  std::vector<std::size_t> rk;
  for (int m = x.lo(); m <= x.hi() + 1; ++m) rk.push_back(rank(x.diff(m)));
  for (int m = x.lo(); m <= x.hi(); ++m) out[m] = x.dim(m) - rk[m - x.lo()] - rk[m - x.lo() + 1];
  return out;
}

bool is_exact(const ChainComplex& x) {
  for (auto& [m, d] : homology_dims(x))
    if (d) return false;
  return true;
}

Module cycles_module(const ChainComplex& x, int m) { return submodule(x.term(m), cycles(x, m)); }

KernelComplex kernel_complex(const ChainMap& f) {
  const ChainComplex& s = f.source;
  KernelComplex out;
  if (s.empty_window()) {
    out.complex = s;
    return out;
  }
  std::vector<Subspace> ks;
  std::vector<Module> terms;
  for (int m = s.lo(); m <= s.hi(); ++m) {
    ks.push_back(kernel(f.comp(m)));
    terms.push_back(submodule(s.term(m), ks.back()));
    out.inclusion[m] = ks.back().basis;
  }
  std::vector<Matrix> diffs;
  for (int m = s.lo() + 1; m <= s.hi(); ++m)
    diffs.push_back(ks[m - 1 - s.lo()].coordinates(s.diff(m) * ks[m - s.lo()].basis));
  out.complex = ChainComplex::make(s.ring(), s.side(), s.lo(), std::move(terms), std::move(diffs), false);
  return out;
}

Cone mapping_cone(const ChainMap& f) {
  const ChainComplex& x = f.source;
  const ChainComplex& y = f.target;
  ChainComplex x1 = suspension(x, 1);
  int lo = std::min(y.lo(), x1.lo()), hi = std::max(y.hi(), x1.hi());
  if (y.empty_window()) lo = x1.lo(), hi = x1.hi();
  if (x1.empty_window()) lo = y.lo(), hi = y.hi();
  std::vector<Module> terms;
  std::vector<Matrix> diffs;
  for (int m = lo; m <= hi; ++m) {
    terms.push_back(direct_sum(y.term(m), x1.term(m)));
    if (m > lo) {
      Matrix d(x.p(), y.dim(m - 1) + x1.dim(m - 1), y.dim(m) + x1.dim(m));
      d.set_block(0, 0, y.diff(m));
      d.set_block(0, y.dim(m), f.comp(m - 1));
      d.set_block(y.dim(m - 1), y.dim(m), x1.diff(m));
      diffs.push_back(std::move(d));
    }
  }
  Cone c;
  c.complex = ChainComplex::make(y.ring(), y.side(), lo, std::move(terms), std::move(diffs), false);
  std::map<int, Matrix> inc, proj;
  for (int m = lo; m <= hi; ++m) {
    Matrix i(x.p(), c.complex.dim(m), y.dim(m));
    i.set_block(0, 0, Matrix::identity(x.p(), y.dim(m)));
    inc[m] = i;
    Matrix pr(x.p(), x1.dim(m), c.complex.dim(m));
    pr.set_block(0, y.dim(m), Matrix::identity(x.p(), x1.dim(m)));
    proj[m] = pr;
  }
  c.inclusion = ChainMap{y, c.complex, std::move(inc)};
  c.projection = ChainMap{c.complex, x1, std::move(proj)};
  return c;
}

Matrix random_hom(const Module& s, const Module& t, std::mt19937_64& rng) {
  HomSpace h = hom_space(s, t);
  Matrix coords(s.p(), h.dim(), 1);
  for (std::size_t i = 0; i < h.dim(); ++i) coords.at(i, 0) = static_cast<std::uint32_t>(rng() % s.p());
  return h.element_of(coords);
}

ChainComplex random_complex(const std::vector<Module>& pool, int lo, int hi, std::mt19937_64& rng) {
  if (pool.empty()) throw std::invalid_argument("random_complex needs a nonempty module pool");
  const auto& ring = pool.front().ring();
  Side side = pool.front().side();
  std::vector<Module> terms;
  std::vector<Matrix> diffs;
  for (int m = lo; m <= hi; ++m) terms.push_back(pool[rng() % pool.size()]);
  // Build differentials from the bottom up so each new one is killed by the previous.
  for (int m = lo + 1; m <= hi; ++m) {
    const Module& s = terms[m - lo];
    const Module& t = terms[m - lo - 1];
    HomSpace h = hom_space(s, t);
    Matrix cons(s.p(), 0, h.dim());
    if (m > lo + 1) {
      const Matrix& prev = diffs.back();  // t -> terms[m-lo-2]
      // prev * f = 0 for f in h
      Matrix rows(s.p(), prev.rows() * s.dim(), h.dim());
      for (std::size_t i = 0; i < h.dim(); ++i) rows.set_block(0, i, (prev * h.element(i)).vec());
      cons = rows;
    }
    Subspace allowed = kernel(cons);
    Matrix coords(s.p(), allowed.dim(), 1);
    for (std::size_t i = 0; i < allowed.dim(); ++i) coords.at(i, 0) = static_cast<std::uint32_t>(rng() % s.p());
    diffs.push_back(h.element_of(allowed.basis * coords));
  }
  return ChainComplex::make(ring, side, lo, std::move(terms), std::move(diffs), false);
}

ChainMap ChainMapSpace::element(const Matrix& coords) const {
  std::map<int, Matrix> comps;
  for (int m = lo; m <= hi; ++m)
    comps[m] = homs[m - lo].element_of(coords.block(offsets[m - lo], 0, homs[m - lo].dim(), 1));
  return ChainMap{source, target, std::move(comps)};
}

Matrix ChainMapSpace::pack(const ChainMap& f) const {
  Matrix v(source.p(), ambient, 1);
  for (int m = lo; m <= hi; ++m) v.set_block(offsets[m - lo], 0, homs[m - lo].coordinates(f.comp(m)));
  return v;
}

ChainMapSpace chain_map_space(const ChainComplex& x, const ChainComplex& y) {
  ChainMapSpace s;
  s.source = x;
  s.target = y;
  s.lo = std::max(x.lo(), y.lo());
  s.hi = std::min(x.hi(), y.hi());
  for (int m = s.lo; m <= s.hi; ++m) {
    s.homs.push_back(hom_space(x.term(m), y.term(m)));
    s.offsets.push_back(s.ambient);
    s.ambient += s.homs.back().dim();
  }
  // dY_m f_m - f_{m-1} dX_m = 0 as a map X_m -> Y_{m-1}
  std::vector<Matrix> blocks;
  for (int m = s.lo; m <= s.hi + 1; ++m) {
    Matrix c(x.p(), y.dim(m - 1) * x.dim(m), s.ambient);
    if (m <= s.hi)
      for (std::size_t i = 0; i < s.homs[m - s.lo].dim(); ++i)
        c.add_block(0, s.offsets[m - s.lo] + i, (y.diff(m) * s.homs[m - s.lo].element(i)).vec());
    if (m - 1 >= s.lo)
      for (std::size_t i = 0; i < s.homs[m - 1 - s.lo].dim(); ++i)
        c.add_block(0, s.offsets[m - 1 - s.lo] + i, (s.homs[m - 1 - s.lo].element(i) * x.diff(m)).vec().scaled(-1));
    blocks.push_back(std::move(c));
  }
  s.maps = kernel(vstack(blocks, x.p(), s.ambient));
  return s;
}

ChainMap random_chain_map(const ChainComplex& x, const ChainComplex& y, std::mt19937_64& rng) {
  ChainMapSpace s = chain_map_space(x, y);
  Matrix coords(x.p(), s.maps.dim(), 1);
  for (std::size_t i = 0; i < s.maps.dim(); ++i) coords.at(i, 0) = static_cast<std::uint32_t>(rng() % x.p());
  return s.element(s.maps.basis * coords);
}

std::string describe(const ChainComplex& x) {
  std::ostringstream os;
  os << "complex over " << x.ring()->description() << " (" << side_name(x.side()) << "), window [" << x.lo() << ","
     << x.hi() << "], dims";
  for (int m = x.lo(); m <= x.hi(); ++m) os << " " << x.dim(m);
  return os.str();
}

}  // namespace homlab
