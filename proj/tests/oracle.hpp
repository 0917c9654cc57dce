#pragma once
// Brute-force reference computations for small cases. These enumerate vectors
// and maps directly and never call the library's elimination routines.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "homlab/linalg.hpp"
#include "homlab/module.hpp"

namespace oracle {

using homlab::Matrix;

inline std::vector<std::uint32_t> mat_vec(const Matrix& a, const std::vector<std::uint32_t>& v) {
  std::vector<std::uint32_t> out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) s += std::uint64_t(a(r, c)) * v[c];
    out[r] = static_cast<std::uint32_t>(s % a.p());
  }
  return out;
}

// Calls fn on every vector of F_p^n.
inline void for_each_vector(std::uint32_t p, std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> v(n, 0);
  for (;;) {
    fn(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) return;
  }
}

inline std::size_t log_p(std::size_t count, std::uint32_t p) {
  std::size_t d = 0;
  while (count > 1) {
    count /= p;
    ++d;
  }
  return d;
}

// Rank as log_p of the size of the column space.
inline std::size_t rank(const Matrix& a) {
  std::set<std::vector<std::uint32_t>> image;
  for_each_vector(a.p(), a.cols(), [&](const auto& v) { image.insert(mat_vec(a, v)); });
  return log_p(image.size(), a.p());
}

inline std::size_t nullity(const Matrix& a) {
  std::size_t count = 0;
  for_each_vector(a.p(), a.cols(), [&](const auto& v) {
    for (auto x : mat_vec(a, v))
      if (x) return;
    ++count;
  });
  return log_p(count, a.p());
}

// All R-linear maps source -> target, by enumerating every k-linear map.
inline std::vector<Matrix> hom_elements(const homlab::Module& s, const homlab::Module& t) {
  std::vector<Matrix> out;
  const std::size_t n = s.dim() * t.dim();
  for_each_vector(s.p(), n, [&](const auto& v) {
    Matrix f(s.p(), t.dim(), s.dim());
    for (std::size_t i = 0; i < n; ++i) f.at(i / s.dim(), i % s.dim()) = v[i];
    for (std::size_t i = 0; i < s.ring()->dim(); ++i)
      if (f * s.action(i) != t.action(i) * f) return;
    out.push_back(f);
  });
  return out;
}

inline std::size_t hom_dim(const homlab::Module& s, const homlab::Module& t) {
  return log_p(hom_elements(s, t).size(), s.p());
}

inline Matrix random_matrix(std::mt19937_64& rng, std::uint32_t p, std::size_t r, std::size_t c, int zero_bias = 0) {
  Matrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = (zero_bias && rng() % (zero_bias + 1)) ? 0 : static_cast<std::uint32_t>(rng() % p);
  return m;
}

}  // namespace oracle
