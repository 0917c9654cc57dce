#pragma once

#include <map>
#include <optional>
#include <vector>

#include "homlab/complex.hpp"

namespace homlab {

// Hom complex: degree n is the product over i of Hom_R(X_i, Y_{n+i}),
// d(f)_i = dY f_i - (-1)^n f_{i-1} dX_i.
struct HomComplex {
  struct Block {
    int i = 0;  // source degree; target degree is n + i
    HomSpace space;
    std::size_t offset = 0;
  };
  ChainComplex source, target;
  ChainComplex complex;  // over F_p
  std::map<int, std::vector<Block>> blocks;
  std::map<int, Matrix> post;  // f -> dY f, per degree n (into degree n-1)
  std::map<int, Matrix> pre;   // f -> f dX

  // Packs components (keyed by source degree) into a coordinate vector of degree n.
  Matrix pack(int n, const std::map<int, Matrix>& comps) const;
  std::map<int, Matrix> unpack(int n, const Matrix& coords) const;
};

HomComplex hom_complex(const ChainComplex& x, const ChainComplex& y);

// Cycle functor of the Hom complex: Z_n(Hom(X, Y)) with differential (-1)^n dY o f.
struct CycleHom {
  HomComplex hom;
  std::map<int, Subspace> cycles;
  ChainComplex complex;  // over F_p
};
CycleHom underline_hom(const ChainComplex& x, const ChainComplex& y);

// Tensor complex of a right complex Z and a left complex Y:
// degree n is the sum over k of Z_k (x)_R Y_{n-k}, d = dZ (x) 1 + (-1)^k 1 (x) dY.
struct TensorComplex {
  struct Block {
    int k = 0;
    TensorProduct tp;
    std::size_t offset = 0;
  };
  ChainComplex right, left;
  ChainComplex complex;  // over F_p
  std::map<int, std::vector<Block>> blocks;
  const Block* find(int n, int k) const;
};
TensorComplex tensor_complex(const ChainComplex& z, const ChainComplex& y);
// (g (x) h)_n on tensor complexes built from source and target pairs.
Matrix tensor_complex_map(const TensorComplex& from, const TensorComplex& to, int n, const ChainMap* g,
                          const ChainMap* h);

// Z (x)bar Y: degree n is (Z (x) Y)_n / B_n with differential induced by dZ (x) 1.
struct BarTensor {
  TensorComplex tensor;
  std::map<int, Quotient> quotients;
  ChainComplex complex;  // over F_p
};
BarTensor bar_tensor(const ChainComplex& z, const ChainComplex& y);
// Map on bar tensors induced by g: Z -> Z' (identity on the left factor).
Matrix bar_tensor_map(const BarTensor& from, const BarTensor& to, int n, const ChainMap& g);
// Map induced by g on the right factor and h on the left factor; null means identity.
Matrix bar_tensor_map(const BarTensor& from, const BarTensor& to, int n, const ChainMap* g, const ChainMap* h);

// The two realizations of the character dual of a complex and the comparison between them.
struct DualPair {
  ChainComplex definitional;  // cycles of Hom_k(X, D^1(k)) with the cycle-functor differential
  ChainComplex reindexed;     // degree n is (X_{-n})^+, differential (-1)^n (d_{1-n})^T
  ChainMap comparison;        // definitional -> reindexed
};
DualPair character_dual_pair(const ChainComplex& x);
// Reindexed realization; throws std::logic_error when the realizations disagree.
ChainComplex character_dual(const ChainComplex& x);
// Canonical map X -> X^{++} for the reindexed realization (identity matrices up to sign).
ChainMap double_dual_map(const ChainComplex& x);

// Chain maps and homotopy.
// dim of chain maps modulo null-homotopic maps, computed by solving for homotopies.
std::size_t homotopy_classes_dim(const ChainComplex& x, const ChainComplex& y);
bool is_null_homotopic(const ChainMap& f);
// Whether Cone(f) -> X[1] admits a chain-map section.
bool cone_projection_splits(const ChainMap& f);

}  // namespace homlab
