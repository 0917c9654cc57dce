#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "homlab/module.hpp"

namespace homlab {

// Bounded chain complex of finite-dimensional modules with nonzero terms only in
// the window [lo, hi].  diff(m): X_m -> X_{m-1}.
class ChainComplex {
 public:
  ChainComplex() = default;

  // terms[i] sits in degree lo+i; diffs[i] is the differential out of degree lo+i+1.
  static ChainComplex make(AlgebraPtr ring, Side side, int lo, std::vector<Module> terms,
                           std::vector<Matrix> diffs, bool validate = true);
  static ChainComplex zero(AlgebraPtr ring, Side side);

  const AlgebraPtr& ring() const { return d_->ring; }
  Side side() const { return d_->side; }
  std::uint32_t p() const { return d_->ring->p(); }
  int lo() const { return d_->lo; }
  int hi() const { return d_->hi; }
  bool empty_window() const { return hi() < lo(); }

  const Module& term(int m) const;
  std::size_t dim(int m) const { return term(m).dim(); }
  Matrix diff(int m) const;
  std::size_t total_dim() const;

  // Empty when terms are compatible, differentials are R-linear and square to zero.
  std::string validation_error() const;
  // Degrees m where diff(m-1) * diff(m) != 0.
  std::vector<int> square_defects() const;
  bool compatible_with(const ChainComplex& o) const;

  ChainComplex trimmed() const;
  bool same_as(const ChainComplex& o) const;  // equal terms (as action data) and differentials

 private:
  struct Data {
    AlgebraPtr ring;
    Side side = Side::left;
    int lo = 0, hi = -1;
    std::vector<Module> terms;
    std::vector<Matrix> diffs;  // diffs[i] = diff(lo + i + 1)
    Module zero;
  };
  std::shared_ptr<const Data> d_;
};

struct ChainMap {
  ChainComplex source, target;
  std::map<int, Matrix> comps;  // absent degrees are zero

  Matrix comp(int m) const;
};

ChainMap make_chain_map(const ChainComplex& s, const ChainComplex& t, std::map<int, Matrix> comps);
// Empty when components are R-linear and commute with the differentials.
std::string chain_map_error(const ChainMap& f);
bool is_chain_map(const ChainMap& f);
ChainMap identity_map(const ChainComplex& x);
ChainMap compose(const ChainMap& g, const ChainMap& f);  // g o f
bool is_isomorphism(const ChainMap& f);

ChainComplex disk(const Module& m, int n);    // M in degrees n, n-1 with identity differential
ChainComplex sphere(const Module& m, int n);  // M in degree n
ChainComplex suspension(const ChainComplex& x, int m);  // X[m]_n = X_{n-m}
ChainMap suspension(const ChainMap& f, int m);
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
ChainComplex restrict_to_field(const ChainComplex& x);

// Homology
std::size_t homology_dim(const ChainComplex& x, int m);
std::map<int, std::size_t> homology_dims(const ChainComplex& x);
bool is_exact(const ChainComplex& x);
Subspace cycles(const ChainComplex& x, int m);
Subspace boundaries(const ChainComplex& x, int m);
Module cycles_module(const ChainComplex& x, int m);

// Degreewise kernel of a chain map, with its inclusion.
struct KernelComplex {
  ChainComplex complex;
  std::map<int, Matrix> inclusion;
};
KernelComplex kernel_complex(const ChainMap& f);

// Cone(f)_m = Y_m (+) X_{m-1} with differential [[dY, f], [0, d of X[1]]].
struct Cone {
  ChainComplex complex;
  ChainMap inclusion;   // Y -> Cone
  ChainMap projection;  // Cone -> X[1]
};
Cone mapping_cone(const ChainMap& f);

// Chain maps X -> Y as a subspace of the product of Hom_R(X_m, Y_m).
struct ChainMapSpace {
  ChainComplex source, target;
  int lo = 0, hi = -1;
  std::vector<HomSpace> homs;
  std::vector<std::size_t> offsets;
  std::size_t ambient = 0;
  Subspace maps;
  ChainMap element(const Matrix& coords) const;  // coords in the ambient product
  Matrix pack(const ChainMap& f) const;          // ambient coords of a map
};
ChainMapSpace chain_map_space(const ChainComplex& x, const ChainComplex& y);

// Random complex: random modules from the pool, random differentials satisfying dd = 0.
ChainComplex random_complex(const std::vector<Module>& pool, int lo, int hi, std::mt19937_64& rng);
// Random R-linear map (uniform over the Hom space).
Matrix random_hom(const Module& s, const Module& t, std::mt19937_64& rng);
// Random chain map, uniform over chain maps.
ChainMap random_chain_map(const ChainComplex& x, const ChainComplex& y, std::mt19937_64& rng);

std::string describe(const ChainComplex& x);

}  // namespace homlab
