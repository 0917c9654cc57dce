#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace homlab {

// Arithmetic in the prime field F_p.
struct Field {
  std::uint32_t p = 2;

  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t inv(std::uint32_t a) const;
};

bool is_prime(long long n);

// Dense matrix over F_p, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static Matrix identity(std::uint32_t p, std::size_t n);
  static Matrix from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows,
                          std::size_t cols_if_empty = 0);

  std::uint32_t p() const { return p_; }
  Field field() const { return Field{p_}; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = field().reduce(v); }
  const std::uint32_t* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
  std::uint32_t* row_ptr(std::size_t r) { return data_.data() + r * cols_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(long long s) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix select_columns(const std::vector<std::size_t>& cs) const;
  Matrix select_rows(const std::vector<std::size_t>& rs) const;

  std::vector<std::vector<long long>> to_rows() const;
  std::string to_string() const;

  // vec in row-major order: index r*cols + c.
  Matrix vec() const;
  static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& ms, std::uint32_t p, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& ms, std::uint32_t p, std::size_t cols);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Matrix a);
std::size_t rank(const Matrix& a);

// Subspace of F_p^n given by basis columns B together with pivot rows
// such that B restricted to those rows is the identity.
struct Subspace {
  Matrix basis;
  std::vector<std::size_t> pivots;

  std::size_t ambient() const { return basis.rows(); }
  std::size_t dim() const { return basis.cols(); }
  // Coordinates of column vectors assumed to lie in the subspace.
  Matrix coordinates(const Matrix& vectors) const { return vectors.select_rows(pivots); }
  bool contains(const Matrix& vectors) const;
};

Subspace zero_subspace(std::uint32_t p, std::size_t n);
Subspace full_subspace(std::uint32_t p, std::size_t n);
Subspace column_space(const Matrix& a);
Subspace kernel(const Matrix& a);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Quotient F_p^n / W: proj is (n-dimW) x n, lift is n x (n-dimW), proj*lift = I.
struct Quotient {
  Matrix proj;
  Matrix lift;
  std::size_t dim() const { return proj.rows(); }
};

Quotient quotient_by(const Subspace& w);

// Solves A x = b. Returns false if inconsistent.
bool solve(const Matrix& a, const Matrix& b, Matrix* x = nullptr);

bool is_invertible(const Matrix& a);
Matrix inverse(const Matrix& a);

}  // namespace homlab
