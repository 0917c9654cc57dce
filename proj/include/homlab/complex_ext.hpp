#pragma once

#include <map>
#include <vector>

#include "homlab/complex.hpp"
#include "homlab/functors.hpp"
#include "homlab/resolution.hpp"

namespace homlab {

// Sum of disks D^n(R^{r_n}).  Degree n holds R^{r_n} (top of D^n) followed by
// R^{r_{n+1}} (bottom of D^{n+1}).
struct DiskSum {
  std::map<int, std::size_t> ranks;
  ChainComplex complex;
  std::size_t total_rank() const;
};
DiskSum disk_sum(const AlgebraPtr& r, Side side, const std::map<int, std::size_t>& ranks);

// Projective resolution of a complex by disk sums, built one layer at a time:
// each layer covers every term of the previous kernel by a free module.
class ComplexResolution {
 public:
  ComplexResolution(ChainComplex x, CoverKind kind);

  // Ensures layers 0..length exist.
  void extend(std::size_t length);
  std::size_t length() const { return layers_.size(); }
  const DiskSum& layer(std::size_t j) const { return layers_[j]; }
  // maps[0]: P^0 -> X, maps[j]: P^j -> P^{j-1}
  const ChainMap& map(std::size_t j) const { return maps_[j]; }
  const ChainComplex& target() const { return x_; }
  CoverKind kind() const { return kind_; }

 private:
  ChainComplex x_;
  CoverKind kind_;
  std::vector<DiskSum> layers_;
  std::vector<ChainMap> maps_;
  ChainComplex kernel_;
  std::map<int, Matrix> kernel_inclusion_;
};

// Hom_Ch(P^{j}, Y) -> Hom_Ch(P^{j+1}, Y) in generator data coordinates.
Matrix hom_ch_induced(const ComplexResolution& res, std::size_t j, const ChainComplex& y);

// dim Ext^i_Ch(X, Y) for i = 0..upto.
std::vector<std::size_t> ext_ch_dims(ComplexResolution& res, const ChainComplex& y, std::size_t upto);
std::vector<std::size_t> ext_ch_dims(const ChainComplex& x, const ChainComplex& y, std::size_t upto,
                                     CoverKind kind);
// Degreewise-split extensions modulo homotopy: H_{-1} Hom(X, Y).
std::size_t ext_dw(const ChainComplex& x, const ChainComplex& y);

// Tor of the bar tensor, by resolving the right complex; per-degree dimensions.
std::map<int, std::size_t> bar_tor(ComplexResolution& res_right, const ChainComplex& x, std::size_t i);
std::map<int, std::size_t> bar_tor(const ChainComplex& y, const ChainComplex& x, std::size_t i, CoverKind kind);
bool bar_tor_vanishes(ComplexResolution& res_right, const ChainComplex& x, std::size_t i);

}  // namespace homlab
