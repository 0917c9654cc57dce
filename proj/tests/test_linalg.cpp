#include <doctest.h>

#include <random>

#include "homlab/linalg.hpp"
#include "oracle.hpp"

using namespace homlab;

TEST_CASE("field inverse and reduction") {
  Field f{7};
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
  CHECK(is_prime(2));
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("rank matches brute-force column space size") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int t = 0; t < 60; ++t) {
      std::size_t r = 1 + rng() % 4, c = 1 + rng() % (p == 5 ? 3 : 5);
      Matrix a = oracle::random_matrix(rng, p, r, c, t % 3);
      CHECK(rank(a) == oracle::rank(a));
      Subspace k = kernel(a);
      CHECK(k.dim() == oracle::nullity(a));
      CHECK((a * k.basis).is_zero());
      CHECK(k.basis.select_rows(k.pivots) == Matrix::identity(p, k.dim()));
    }
  }
}

TEST_CASE("column space, quotient and solve") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    std::uint32_t p = t % 2 ? 3 : 2;
    std::size_t n = 1 + rng() % 6, m = rng() % 5;
    Matrix a = oracle::random_matrix(rng, p, n, m, 1);
    Subspace s = column_space(a);
    CHECK(s.dim() == rank(a));
    CHECK(s.contains(a));
    Quotient q = quotient_by(s);
    CHECK(q.dim() + s.dim() == n);
    CHECK(q.proj * q.lift == Matrix::identity(p, q.dim()));
    CHECK((q.proj * s.basis).is_zero());
    Matrix x = oracle::random_matrix(rng, p, m, 1);
    Matrix b = a * x, sol;
    REQUIRE(solve(a, b, &sol));
    CHECK(a * sol == b);
  }
  // inconsistent system
  Matrix a = Matrix::from_rows(2, {{1, 0}, {1, 0}});
  Matrix b = Matrix::from_rows(2, {{1}, {0}});
  CHECK_FALSE(solve(a, b));
}

TEST_CASE("intersection and sum dimensions") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    Matrix a = oracle::random_matrix(rng, 2, 5, 2), b = oracle::random_matrix(rng, 2, 5, 3);
    Subspace sa = column_space(a), sb = column_space(b);
    CHECK(intersect(sa, sb).dim() + sum(sa, sb).dim() == sa.dim() + sb.dim());
  }
}

TEST_CASE("kron and vec identities") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Matrix a = oracle::random_matrix(rng, 5, 2, 3), f = oracle::random_matrix(rng, 5, 3, 4),
           b = oracle::random_matrix(rng, 5, 4, 2);
    // vec(a f b) = (a kron b^T) vec(f) for row-major vec
    CHECK((a * f * b).vec() == kron(a, b.transpose()) * f.vec());
  }
  Matrix m = Matrix::from_rows(3, {{1, 2}, {0, 1}});
  CHECK(m * inverse(m) == Matrix::identity(3, 2));
  CHECK_THROWS_AS(Matrix(2, 2, 3) * Matrix(2, 2, 3), std::invalid_argument);
}
