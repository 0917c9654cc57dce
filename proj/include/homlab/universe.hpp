#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homlab/complex.hpp"

namespace homlab {

// Every complex on [lo, hi] whose terms come from the module list of dimension
// <= dimcap (no isomorphism reduction).  Order is lexicographic: terms by
// (degree, module index), then differentials by degree and coordinate vector
// in their Hom space, so an index identifies the same complex on every run.
struct UniverseSpec {
  int lo = 0;
  int hi = 2;
  std::size_t dimcap = 2;
  Side side = Side::left;
  std::string describe() const;
};

// Module list used for each degree: the zero module first, then enumerate_modules by dimension.
std::vector<Module> universe_modules(const AlgebraPtr& r, Side side, std::size_t dimcap);

std::vector<ChainComplex> enumerate_complexes(const AlgebraPtr& r, const UniverseSpec& spec);

}  // namespace homlab
