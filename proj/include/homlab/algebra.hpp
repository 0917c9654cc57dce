#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homlab/linalg.hpp"

namespace homlab {

inline constexpr std::size_t kDefaultBasisCap = 64;

// Finite-dimensional associative unital F_p-algebra given by structure
// constants b_i * b_j = sum_k c[i][j][k] b_k.
class Algebra {
 public:
  struct Data {
    std::uint32_t p = 2;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> constants;  // (i*n + j)*n + k
    std::size_t unit = 0;
    std::vector<std::size_t> generators;             // basis indices generating as an algebra
    std::vector<std::vector<std::size_t>> words;     // each basis element as a product of generators
    std::optional<std::vector<std::size_t>> radical; // basis of the Jacobson radical when known
    bool commutative = false;
    std::vector<Matrix> left_mult;   // L_i[k][j] = c[i][j][k]
    std::vector<Matrix> right_mult;  // A_i[k][j] = c[j][i][k]
    std::string description;
  };

  // Builds from raw structure constants, checks associativity and the unit.
  static std::shared_ptr<const Algebra> from_structure_constants(
      std::uint32_t p, std::vector<std::string> labels,
      const std::vector<std::vector<std::vector<long long>>>& c, std::size_t unit,
      std::size_t basis_cap = kDefaultBasisCap);

  // Commutative monomial algebra F_p[x_1..x_D]/(relations, monomials of degree > cap).
  // Relations are monomials given as exponent vectors of length D.
  static std::shared_ptr<const Algebra> monomial(std::uint32_t p, std::vector<std::string> variables,
                                                 const std::vector<std::vector<int>>& relations,
                                                 int degree_cap,
                                                 std::size_t basis_cap = kDefaultBasisCap);

  explicit Algebra(Data d) : d_(std::move(d)) {}

  std::uint32_t p() const { return d_.p; }
  std::size_t dim() const { return d_.labels.size(); }
  std::size_t unit() const { return d_.unit; }
  const std::vector<std::string>& labels() const { return d_.labels; }
  std::uint32_t c(std::size_t i, std::size_t j, std::size_t k) const {
    return d_.constants[(i * dim() + j) * dim() + k];
  }
  const std::vector<std::size_t>& generators() const { return d_.generators; }
  const std::vector<std::size_t>& word(std::size_t i) const { return d_.words[i]; }
  const std::optional<std::vector<std::size_t>>& radical() const { return d_.radical; }
  bool commutative() const { return d_.commutative; }
  const Matrix& left_mult(std::size_t i) const { return d_.left_mult[i]; }
  const Matrix& right_mult(std::size_t i) const { return d_.right_mult[i]; }
  const std::string& description() const { return d_.description; }

  std::optional<std::size_t> index_of(const std::string& label) const;
  // Product of basis vectors as a coordinate vector.
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  bool same_as(const Algebra& o) const;
  Field field() const { return Field{d_.p}; }

 private:
  Data d_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// All unit-law and associativity violations; empty when the constants define an algebra.
std::vector<std::string> validate_algebra(std::uint32_t p, const std::vector<std::string>& labels,
                                          const std::vector<std::vector<std::vector<long long>>>& c,
                                          std::size_t unit);
std::vector<std::string> validate_algebra(const Algebra& r);

AlgebraPtr opposite(const AlgebraPtr& r);

// F_p viewed as a one-dimensional algebra.
AlgebraPtr field_algebra(std::uint32_t p);
// F_p[x]/(x^n).
AlgebraPtr truncated_polynomial(std::uint32_t p, int n);
// F_p[x_1..x_D]/(x_1,..,x_D)^2.
AlgebraPtr square_zero_truncation(std::uint32_t p, int D);
// Upper triangular 2x2 matrices, basis {1, e12, e22}.
AlgebraPtr upper_triangular(std::uint32_t p);

// Template for a family of monomial algebras indexed by the number of variables.
struct TruncationTemplate {
  std::uint32_t p = 2;
  std::vector<std::string> variables;  // names x_1, x_2, ... (at least D of them used)
  std::vector<std::string> relations;  // monomial words such as "x_1*x_2" or "x_1^2"
  int degree_cap = 1;
  std::string variable_prefix = "x_";

  std::string variable_name(int i) const;  // 1-based
  AlgebraPtr instantiate(int D, std::size_t basis_cap = kDefaultBasisCap) const;
};

// Parses a monomial word like "x_1*x_2^2" into exponents over the named variables.
std::vector<int> parse_monomial(const std::string& word, const std::vector<std::string>& variables);
std::string monomial_label(const std::vector<int>& exps, const std::vector<std::string>& variables);

}  // namespace homlab
