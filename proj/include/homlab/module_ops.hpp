#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homlab/module.hpp"

namespace homlab {

// R-linear map between modules on the same side; matrix is target.dim x source.dim.
struct ModuleMap {
  Module source, target;
  Matrix matrix;
};

// Throws std::invalid_argument unless the matrix intertwines the actions.
ModuleMap make_module_map(const Module& source, const Module& target, const Matrix& matrix);

// Submodule or quotient together with its inclusion or projection.
struct ModuleWithMap {
  Module module;
  ModuleMap map;
};
ModuleWithMap kernel(const ModuleMap& f);    // map: ker -> source
ModuleWithMap image(const ModuleMap& f);     // map: im -> target
ModuleWithMap cokernel(const ModuleMap& f);  // map: target -> coker

// Invariant subspaces of a module, each given by its canonical column-space basis.
struct SubmoduleLattice {
  std::vector<Subspace> members;
  bool exhaustive = true;
};
// Exhaustive closure under adding cyclic submodules when p^dim <= exhaustive_limit;
// otherwise submodules generated by seeded random families of vectors.
SubmoduleLattice enumerate_submodules(const Module& m, std::size_t exhaustive_limit = 4096,
                                      std::size_t samples = 2000, std::uint64_t seed = 0);

// Unital algebra map R -> S given by the images of the basis of R (columns, dimS x dimR).
struct RingMap {
  AlgebraPtr source, target;
  Matrix images;
};
// Throws std::invalid_argument when the images do not define a unital homomorphism.
RingMap make_ring_map(const AlgebraPtr& source, const AlgebraPtr& target, const Matrix& images);
// Sends each basis label of the source to the basis element with the same label.
RingMap ring_map_by_labels(const AlgebraPtr& source, const AlgebraPtr& target);

// S (x)_R M for left M, or M (x)_R S for right M, with the induced S-action.
Module base_change(const RingMap& phi, const Module& m);
// N viewed as an R-module through phi.
Module restrict_module(const RingMap& phi, const Module& n);

// dim Hom_S(base_change(M), N) and dim Hom_R(M, restrict(N)); equal by adjunction.
std::pair<std::size_t, std::size_t> adjunction_dims(const RingMap& phi, const Module& m, const Module& n);

}  // namespace homlab
