#pragma once

#include <vector>

#include "homlab/module.hpp"

namespace homlab {

// minimal: Nakayama covers through M / rad M (needs a known radical).
// naive: every k-basis vector of M is a generator.
enum class CoverKind { minimal, naive };

CoverKind default_cover(const AlgebraPtr& r);

// Map R^r -> M sending the g-th free generator to column g of images.
// Column index of b_j e_g (or e_g b_j) is g*dimR + j.
Matrix free_map_from_images(const Module& target, const Matrix& images);

struct FreeCover {
  std::size_t rank = 0;
  Matrix images;  // generator images, dimM x rank
  Matrix map;     // dimM x rank*dimR
};
FreeCover free_cover(const Module& m, CoverKind kind);

struct FreeResolution {
  Module module;
  CoverKind kind = CoverKind::minimal;
  std::vector<std::size_t> ranks;   // rank of P_i
  std::vector<Matrix> maps;         // maps[0]: P_0 -> M, maps[i]: P_i -> P_{i-1}
  std::vector<Module> syzygies;     // syzygies[0] = M, syzygies[i] = ker(P_{i-1} -> ...)
  std::vector<Matrix> inclusions;   // inclusions[i]: syzygies[i] -> P_{i-1} (i >= 1)
};

// Free terms P_0..P_length.
FreeResolution free_resolution(const Module& m, std::size_t length, CoverKind kind);
std::vector<std::size_t> betti_numbers(const Module& m, std::size_t length);

// Hom(P_{i-1}, N) = N^{r_{i-1}} -> Hom(P_i, N) = N^{r_i} induced by d: P_i -> P_{i-1}.
Matrix hom_free_induced(const Matrix& d, std::size_t r_source, std::size_t r_target, const Module& n);
// N (x) P_i = N^{r_i} -> N (x) P_{i-1} = N^{r_{i-1}} induced by d: P_i -> P_{i-1}.
Matrix tensor_free_induced(const Matrix& d, std::size_t r_source, std::size_t r_target, const Module& n);

// dim Ext^i_R(M, N) for i = 0..upto.
// From a resolution of M with at least upto + 2 terms.
std::vector<std::size_t> ext_dims(const FreeResolution& res, const Module& n, std::size_t upto);
std::vector<std::size_t> ext_dims(std::size_t upto, const Module& m, const Module& n, CoverKind kind);
std::size_t ext_dim(std::size_t i, const Module& m, const Module& n, CoverKind kind);
// dim Tor_i^R(N, M) for i = 0..upto, N right and M left.
std::vector<std::size_t> tor_dims(const Module& n, const FreeResolution& res_m, std::size_t upto);
std::vector<std::size_t> tor_dims(std::size_t upto, const Module& n, const Module& m, CoverKind kind);
std::size_t tor_dim(std::size_t i, const Module& n, const Module& m, CoverKind kind);

// Embedding M -> F^+ obtained by dualizing a free cover of M^+.
struct InjectiveEmbedding {
  Module injective;
  Matrix map;
};
InjectiveEmbedding injective_embedding(const Module& m, CoverKind kind);

struct InjectiveCoresolution {
  std::vector<Module> cosyzygies;    // cosyzygies[0] = M
  std::vector<Module> injectives;
  std::vector<Matrix> embeddings;    // cosyzygies[i] -> injectives[i]
};
InjectiveCoresolution injective_coresolution(const Module& m, std::size_t length, CoverKind kind);

}  // namespace homlab
