#include "homlab/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace homlab {

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a % p == 0) throw std::invalid_argument("inverse of zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Matrix::Matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p;
  return m;
}

Matrix Matrix::from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows,
                         std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                                std::to_string(o.cols_));
  Matrix out(p_, rows_, o.cols_);
  if (rows_ == 0 || o.cols_ == 0 || cols_ == 0) return out;
  std::vector<std::uint64_t> acc(o.cols_);
  // Delay reduction: products are < p^2, so sum up to 2^64 / p^2 terms.
  const std::uint64_t pp = static_cast<std::uint64_t>(p_) * p_;
  const std::uint64_t limit = pp == 0 ? 1 : (~std::uint64_t{0} / pp) - 1;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::uint32_t* a = row_ptr(i);
    std::uint64_t pending = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t av = a[k];
      if (!av) continue;
      const std::uint32_t* b = o.row_ptr(k);
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += static_cast<std::uint64_t>(av) * b[j];
      if (++pending >= limit) {
        for (auto& v : acc) v %= p_;
        pending = 0;
      }
    }
    std::uint32_t* dst = out.row_ptr(i);
    for (std::size_t j = 0; j < o.cols_; ++j) dst[j] = static_cast<std::uint32_t>(acc[j] % p_);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + o.data_[i]) % p_;
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + p_ - o.data_[i]) % p_;
  return out;
}

Matrix Matrix::scaled(long long s) const {
  std::uint32_t f = field().reduce(s);
  Matrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field().mul(data_[i], f);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = data_[r * cols_ + c];
  return out;
}

bool Matrix::is_zero() const {
  for (auto v : data_)
    if (v) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Matrix out(p_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.data_[r * nc + c] = data_[(r0 + r) * cols_ + c0 + c];
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("set_block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) data_[(r0 + r) * cols_ + c0 + c] = b.data_[r * b.cols_ + c];
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("add_block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) {
      auto& d = data_[(r0 + r) * cols_ + c0 + c];
      d = (d + b.data_[r * b.cols_ + c]) % p_;
    }
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cs) const {
  Matrix out(p_, rows_, cs.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cs.size(); ++j) out.data_[r * cs.size() + j] = data_[r * cols_ + cs[j]];
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rs) const {
  Matrix out(p_, rs.size(), cols_);
  for (std::size_t i = 0; i < rs.size(); ++i)
    std::copy(row_ptr(rs[i]), row_ptr(rs[i]) + cols_, out.row_ptr(i));
  return out;
}

std::vector<std::vector<long long>> Matrix::to_rows() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = data_[r * cols_ + c];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << data_[r * cols_ + c];
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix Matrix::vec() const {
  Matrix out(p_, rows_ * cols_, 1);
  out.data_ = data_;
  return out;
}

Matrix Matrix::unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows_ != rows * cols || v.cols_ != 1) throw std::invalid_argument("unvec shape mismatch");
  Matrix out(v.p_, rows, cols);
  out.data_ = v.data_;
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.p(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix out(a.p(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix hstack(const std::vector<Matrix>& ms, std::uint32_t p, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& m : ms) {
    if (m.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += m.cols();
  }
  Matrix out(p, rows, cols);
  std::size_t c = 0;
  for (const auto& m : ms) {
    out.set_block(0, c, m);
    c += m.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& ms, std::uint32_t p, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : ms) {
    if (m.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += m.rows();
  }
  Matrix out(p, rows, cols);
  std::size_t r = 0;
  for (const auto& m : ms) {
    out.set_block(r, 0, m);
    r += m.rows();
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
  Field f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::uint32_t av = a(i, j);
      if (!av) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = f.mul(av, b(k, l));
    }
  return out;
}

Echelon rref(Matrix a) {
  Field f = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::uint32_t* x = a.row_ptr(piv);
      std::uint32_t* y = a.row_ptr(r);
      for (std::size_t k = 0; k < cols; ++k) std::swap(x[k], y[k]);
    }
    std::uint32_t* prow = a.row_ptr(r);
    std::uint32_t inv = f.inv(prow[c]);
    if (inv != 1)
      for (std::size_t k = c; k < cols; ++k) prow[k] = f.mul(prow[k], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint32_t* row = a.row_ptr(i);
      std::uint32_t factor = row[c];
      if (!factor) continue;
      std::uint32_t nf = f.neg(factor);
      for (std::size_t k = c; k < cols; ++k)
        if (prow[k]) row[k] = static_cast<std::uint32_t>((row[k] + static_cast<std::uint64_t>(nf) * prow[k]) % f.p);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  // Reduce the shorter side.
  if (a.rows() > a.cols()) return rref(a.transpose()).rank();
  return rref(a).rank();
}

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient()) throw std::invalid_argument("subspace ambient mismatch");
  return (basis * coordinates(vectors)) == vectors;
}

Subspace zero_subspace(std::uint32_t p, std::size_t n) { return Subspace{Matrix(p, n, 0), {}}; }

Subspace full_subspace(std::uint32_t p, std::size_t n) {
  Subspace s{Matrix::identity(p, n), {}};
  for (std::size_t i = 0; i < n; ++i) s.pivots.push_back(i);
  return s;
}

Subspace column_space(const Matrix& a) {
  if (a.cols() == 0) return zero_subspace(a.p(), a.rows());
  Echelon e = rref(a.transpose());
  Subspace s;
  s.basis = e.reduced.block(0, 0, e.rank(), a.rows()).transpose();
  s.pivots = e.pivots;
  return s;
}

Subspace kernel(const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return full_subspace(a.p(), n);
  Echelon e = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Field f = a.field();
  Subspace s{Matrix(a.p(), n, free_cols.size()), free_cols};
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    s.basis.at(fc, j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis.at(e.pivots[r], j) = f.neg(e.reduced(r, fc));
  }
  return s;
}

Subspace sum(const Subspace& a, const Subspace& b) { return column_space(hstack(a.basis, b.basis)); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  // Solve a x = b y.
  Subspace k = kernel(hstack(a.basis, b.basis.scaled(-1)));
  Matrix xs = k.basis.block(0, 0, a.dim(), k.dim());
  return column_space(a.basis * xs);
}

Quotient quotient_by(const Subspace& w) {
  const std::size_t n = w.ambient();
  std::vector<int> pos(n, -1);
  for (std::size_t j = 0; j < w.pivots.size(); ++j) pos[w.pivots[j]] = -2 - static_cast<int>(j);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (pos[i] == -1) {
      pos[i] = static_cast<int>(rest.size());
      rest.push_back(i);
    }
  const std::uint32_t p = w.basis.p();
  Field f{p};
  Quotient q{Matrix(p, rest.size(), n), Matrix(p, n, rest.size())};
  for (std::size_t k = 0; k < rest.size(); ++k) {
    q.lift.at(rest[k], k) = 1;
    q.proj.at(k, rest[k]) = 1;
  }
  for (std::size_t j = 0; j < w.pivots.size(); ++j)
    for (std::size_t k = 0; k < rest.size(); ++k) q.proj.at(k, w.pivots[j]) = f.neg(w.basis(rest[k], j));
  return q;
}

bool solve(const Matrix& a, const Matrix& b, Matrix* x) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  Echelon e = rref(hstack(a, b));
  const std::size_t n = a.cols();
  for (auto c : e.pivots)
    if (c >= n) return false;
  if (x) {
    *x = Matrix(a.p(), n, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) x->at(e.pivots[r], c) = e.reduced(r, n + c);
  }
  return true;
}

bool is_invertible(const Matrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

Matrix inverse(const Matrix& a) {
  if (!is_invertible(a)) throw std::invalid_argument("matrix is not invertible");
  Matrix x;
  solve(a, Matrix::identity(a.p(), a.rows()), &x);
  return x;
}

}  // namespace homlab
