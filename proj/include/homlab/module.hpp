#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homlab/algebra.hpp"
#include "homlab/linalg.hpp"

namespace homlab {

enum class Side { left, right };

inline Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }
Side parse_side(const std::string& s);

// Finite-dimensional module given by one action matrix per ring basis element.
// Left: m -> b_i m is action(i) * m.  Right: m -> m b_i is action(i) * m.
class Module {
 public:
  Module() = default;

  static Module from_actions(AlgebraPtr ring, Side side, std::size_t dim, std::vector<Matrix> actions,
                             bool validate = true);
  // Actions given only for ring->generators(); the rest follow from the words.
  static Module from_generator_actions(AlgebraPtr ring, Side side, std::size_t dim,
                                       const std::vector<Matrix>& generator_actions, bool validate = true);

  const AlgebraPtr& ring() const { return d_->ring; }
  Side side() const { return d_->side; }
  std::size_t dim() const { return d_->dim; }
  std::uint32_t p() const { return d_->ring->p(); }
  const Matrix& action(std::size_t i) const { return d_->actions[i]; }
  const std::vector<Matrix>& actions() const { return d_->actions; }
  bool valid() const { return static_cast<bool>(d_); }

  // Empty string when the module axioms hold.
  std::string axiom_violation() const;
  bool compatible_with(const Module& o) const;  // same ring and side

 private:
  struct Data {
    AlgebraPtr ring;
    Side side = Side::left;
    std::size_t dim = 0;
    std::vector<Matrix> actions;
  };
  std::shared_ptr<const Data> d_;
};

Module zero_module(const AlgebraPtr& r, Side side);
Module regular_module(const AlgebraPtr& r, Side side);
Module free_module(const AlgebraPtr& r, Side side, std::size_t rank);
// One-dimensional module on which the radical acts by zero; requires a codimension-one radical.
Module augmentation_module(const AlgebraPtr& r, Side side);
Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& ms, const AlgebraPtr& r, Side side);
// Same vector space, scalars only (restriction along F_p -> R).
Module restrict_to_field(const Module& m);
// F_p-linear dual with flipped side and transposed actions.
Module character_dual(const Module& m);

bool is_homomorphism(const Module& source, const Module& target, const Matrix& f);

// Smallest submodule containing the given columns.
Subspace generated_submodule(const Module& m, const Matrix& vectors);
bool is_invariant(const Module& m, const Subspace& s);
// Submodule carried by an invariant subspace, in the subspace's coordinates.
Module submodule(const Module& m, const Subspace& s);
struct QuotientModule {
  Module module;
  Quotient map;
};
QuotientModule quotient_module(const Module& m, const Subspace& s);

// Radical layer rad(R) * M, only when the ring knows its radical.
Subspace radical_submodule(const Module& m);

// Hom_R(M, N) as a subspace of vec(Hom_k(M, N)) (row-major dimN x dimM matrices).
struct HomSpace {
  Module source, target;
  Subspace space;
  std::size_t dim() const { return space.dim(); }
  Matrix element(std::size_t i) const { return Matrix::unvec(space.basis.column(i), target.dim(), source.dim()); }
  Matrix element_of(const Matrix& coords) const;
  Matrix coordinates(const Matrix& f) const { return space.coordinates(f.vec()); }
};

Matrix hom_constraints(const Module& source, const Module& target);
HomSpace hom_space(const Module& source, const Module& target);

// Minimal number of generators; requires the radical.
std::size_t minimal_generator_count(const Module& m);
bool is_free(const Module& m);

// N (x)_R M for N right and M left.  Basis index of n_a (x) m_b is a*dimM + b.
struct TensorProduct {
  Module right, left;
  Subspace relations;
  Quotient quotient;
  std::size_t dim() const { return quotient.dim(); }
};
TensorProduct tensor_product(const Module& right, const Module& left);
// Map N (x) M -> N' (x) M' induced by f: N -> N' and g: M -> M'.
Matrix tensor_map(const TensorProduct& from, const TensorProduct& to, const Matrix& f, const Matrix& g);

// Exhaustive when p^dim Hom is small, otherwise seeded random search for an invertible map.
bool is_isomorphic(const Module& a, const Module& b, std::uint64_t seed = 1);

// Enumerates all modules with the given dimension, one per action tuple (no isomorphism reduction).
std::vector<Module> enumerate_modules(const AlgebraPtr& r, Side side, std::size_t dim);

// Basis index lookups for monomial ideals and quotients of the regular module.
Module ideal_module(const AlgebraPtr& r, Side side, const std::vector<std::string>& generators);
Module quotient_by_ideal(const AlgebraPtr& r, Side side, const std::vector<std::string>& generators);

}  // namespace homlab
