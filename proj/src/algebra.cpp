#include "homlab/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace homlab {

namespace {

void build_mult_tables(Algebra::Data& d) {
  const std::size_t n = d.labels.size();
  d.left_mult.assign(n, Matrix(d.p, n, n));
  d.right_mult.assign(n, Matrix(d.p, n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        d.left_mult[i].at(k, j) = d.constants[(i * n + j) * n + k];
        d.right_mult[i].at(k, j) = d.constants[(j * n + i) * n + k];
      }
  d.commutative = true;
  for (std::size_t i = 0; i < n && d.commutative; ++i)
    if (d.left_mult[i] != d.right_mult[i]) d.commutative = false;
}

std::vector<std::string> violations_of(std::uint32_t p, const std::vector<std::string>& labels,
                                       const std::vector<std::uint32_t>& c, std::size_t unit) {
  const std::size_t n = labels.size();
  Field f{p};
  std::vector<std::string> out;
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; };
  if (unit >= n) {
    out.push_back("unit index out of range");
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint32_t want = i == k ? 1 : 0;
      if (at(unit, i, k) != want || at(i, unit, k) != want) {
        out.push_back("unit law fails at (" + labels[unit] + ", " + labels[i] + ")");
        break;
      }
    }
  // (b_i b_j) b_k = b_i (b_j b_k), compared coefficientwise.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += f.mul(at(i, j, m), at(m, k, l));
            rhs += f.mul(at(j, k, m), at(i, m, l));
          }
          if (lhs % p != rhs % p) {
            out.push_back("associativity fails at (" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")");
            l = n;
          }
        }
  return out;
}

void check_unit_and_associativity(const Algebra::Data& d) {
  auto v = violations_of(d.p, d.labels, d.constants, d.unit);
  if (!v.empty()) throw std::invalid_argument("invalid algebra: " + v.front());
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::from_structure_constants(
    std::uint32_t p, std::vector<std::string> labels, const std::vector<std::vector<std::vector<long long>>>& c,
    std::size_t unit, std::size_t basis_cap) {
  if (!is_prime(p)) throw std::invalid_argument("field_p must be prime, got " + std::to_string(p));
  const std::size_t n = labels.size();
  if (n == 0) throw std::invalid_argument("algebra must have a nonempty basis");
  if (n > basis_cap)
    throw std::invalid_argument("algebra basis size " + std::to_string(n) + " exceeds cap " +
                                std::to_string(basis_cap));
  if (unit >= n) throw std::invalid_argument("unit_index out of range");
  if (c.size() != n) throw std::invalid_argument("structure_constants must be n x n x n");
  Data d;
  d.p = p;
  d.labels = std::move(labels);
  d.unit = unit;
  d.constants.assign(n * n * n, 0);
  Field f{p};
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) throw std::invalid_argument("structure_constants must be n x n x n");
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j].size() != n) throw std::invalid_argument("structure_constants must be n x n x n");
      for (std::size_t k = 0; k < n; ++k) d.constants[(i * n + j) * n + k] = f.reduce(c[i][j][k]);
    }
  }
  build_mult_tables(d);
  check_unit_and_associativity(d);
  d.words.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    if (i != unit) {
      d.generators.push_back(i);
      d.words[i] = {i};
    }
  d.description = "structure-constant algebra of dimension " + std::to_string(n) + " over F_" + std::to_string(p);
  return std::make_shared<const Algebra>(std::move(d));
}

std::shared_ptr<const Algebra> Algebra::monomial(std::uint32_t p, std::vector<std::string> variables,
                                                 const std::vector<std::vector<int>>& relations, int degree_cap,
                                                 std::size_t basis_cap) {
  if (!is_prime(p)) throw std::invalid_argument("field_p must be prime, got " + std::to_string(p));
  if (degree_cap < 0) throw std::invalid_argument("degree_cap must be nonnegative");
  const std::size_t D = variables.size();
  for (const auto& r : relations)
    if (r.size() != D) throw std::invalid_argument("relation exponent vector has wrong length");
  auto killed = [&](const std::vector<int>& e) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg > degree_cap) return true;
    for (const auto& r : relations) {
      bool divides = true;
      for (std::size_t i = 0; i < D; ++i)
        if (r[i] > e[i]) divides = false;
      if (divides) return true;
    }
    return false;
  };
  // Enumerate surviving monomials by degree, then lexicographically (descending exponents).
  std::vector<std::vector<int>> basis;
  for (int deg = 0; deg <= degree_cap; ++deg) {
    std::vector<std::vector<int>> layer;
    std::vector<int> e(D, 0);
    // all exponent vectors with sum deg
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == D || D == 0) {
        if (D == 0) {
          if (left == 0) layer.push_back(e);
          return;
        }
        e[i] = left;
        layer.push_back(e);
        e[i] = 0;
        return;
      }
      for (int x = left; x >= 0; --x) {
        e[i] = x;
        rec(i + 1, left - x);
      }
      e[i] = 0;
    };
    rec(0, deg);
    for (auto& m : layer)
      if (!killed(m)) {
        basis.push_back(m);
        if (basis.size() > basis_cap)
          throw std::invalid_argument("algebra basis exceeds cap " + std::to_string(basis_cap));
      }
  }
  const std::size_t n = basis.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[basis[i]] = i;
  Data d;
  d.p = p;
  d.unit = 0;
  d.constants.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    d.labels.push_back(monomial_label(basis[i], variables));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> e(D);
      for (std::size_t v = 0; v < D; ++v) e[v] = basis[i][v] + basis[j][v];
      auto it = index.find(e);
      if (it != index.end()) d.constants[(i * n + j) * n + it->second] = 1;
    }
  }
  build_mult_tables(d);
  d.words.resize(n);
  std::vector<std::size_t> var_index(D, n);
  for (std::size_t i = 0; i < n; ++i) {
    int deg = 0;
    for (int x : basis[i]) deg += x;
    if (deg == 1) {
      d.generators.push_back(i);
      for (std::size_t v = 0; v < D; ++v)
        if (basis[i][v] == 1) var_index[v] = i;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < D; ++v)
      for (int t = 0; t < basis[i][v]; ++t) d.words[i].push_back(var_index[v]);
  std::vector<std::size_t> rad;
  for (std::size_t i = 1; i < n; ++i) rad.push_back(i);
  d.radical = rad;
  d.description = "monomial algebra over F_" + std::to_string(p) + " in " + std::to_string(D) +
                  " variables, dimension " + std::to_string(n);
  return std::make_shared<const Algebra>(std::move(d));
}

std::optional<std::size_t> Algebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (d_.labels[i] == label) return i;
  return std::nullopt;
}

Matrix Algebra::multiply(const Matrix& a, const Matrix& b) const {
  Matrix out(p(), dim(), 1);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!a(i, 0)) continue;
    out = out + (left_mult(i) * b).scaled(a(i, 0));
  }
  return out;
}

bool Algebra::same_as(const Algebra& o) const {
  return d_.p == o.d_.p && d_.constants == o.d_.constants && d_.unit == o.d_.unit;
}

std::vector<std::string> validate_algebra(std::uint32_t p, const std::vector<std::string>& labels,
                                          const std::vector<std::vector<std::vector<long long>>>& c,
                                          std::size_t unit) {
  const std::size_t n = labels.size();
  if (c.size() != n) return {"structure constants must be n x n x n"};
  std::vector<std::uint32_t> flat(n * n * n, 0);
  Field f{p};
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) return {"structure constants must be n x n x n"};
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j].size() != n) return {"structure constants must be n x n x n"};
      for (std::size_t k = 0; k < n; ++k) flat[(i * n + j) * n + k] = f.reduce(c[i][j][k]);
    }
  }
  return violations_of(p, labels, flat, unit);
}

std::vector<std::string> validate_algebra(const Algebra& r) {
  std::vector<std::uint32_t> flat(r.dim() * r.dim() * r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j)
      for (std::size_t k = 0; k < r.dim(); ++k) flat[(i * r.dim() + j) * r.dim() + k] = r.c(i, j, k);
  return violations_of(r.p(), r.labels(), flat, r.unit());
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

AlgebraPtr opposite(const AlgebraPtr& r) {
  const std::size_t n = r->dim();
  Algebra::Data d;
  d.p = r->p();
  d.labels = r->labels();
  d.unit = r->unit();
  d.constants.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.constants[(i * n + j) * n + k] = r->c(j, i, k);
  build_mult_tables(d);
  d.generators = r->generators();
  d.words.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.words[i].assign(r->word(i).rbegin(), r->word(i).rend());
  d.radical = r->radical();
  d.description = "opposite of " + r->description();
  return std::make_shared<const Algebra>(std::move(d));
}

AlgebraPtr field_algebra(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, AlgebraPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto a = Algebra::monomial(p, {}, {}, 0);
  cache[p] = a;
  return a;
}

AlgebraPtr truncated_polynomial(std::uint32_t p, int n) {
  if (n < 1) throw std::invalid_argument("truncated polynomial needs n >= 1");
  return Algebra::monomial(p, {"x"}, {}, n - 1);
}

AlgebraPtr square_zero_truncation(std::uint32_t p, int D) {
  TruncationTemplate t;
  t.p = p;
  t.degree_cap = 1;
  return t.instantiate(D);
}

AlgebraPtr upper_triangular(std::uint32_t p) {
  // basis 1, e12, e22 with 1 = e11 + e22
  std::vector<std::vector<std::vector<long long>>> c(3, std::vector<std::vector<long long>>(3, std::vector<long long>(3, 0)));
  for (int i = 0; i < 3; ++i) {
    c[0][i][i] = 1;
    c[i][0][i] = 1;
  }
  c[1][2][1] = 1;  // e12 * e22 = e12
  c[2][2][2] = 1;  // e22 * e22 = e22
  auto base = Algebra::from_structure_constants(p, {"1", "e12", "e22"}, c, 0);
  Algebra::Data d;
  d.p = p;
  d.labels = base->labels();
  d.unit = 0;
  const std::size_t n = 3;
  d.constants.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.constants[(i * n + j) * n + k] = base->c(i, j, k);
  build_mult_tables(d);
  d.generators = {1, 2};
  d.words = {{}, {1}, {2}};
  d.radical = std::vector<std::size_t>{1};
  d.description = "upper triangular 2x2 matrices over F_" + std::to_string(p);
  return std::make_shared<const Algebra>(std::move(d));
}

std::string TruncationTemplate::variable_name(int i) const {
  if (i >= 1 && static_cast<std::size_t>(i) <= variables.size()) return variables[i - 1];
  return variable_prefix + std::to_string(i);
}

AlgebraPtr TruncationTemplate::instantiate(int D, std::size_t basis_cap) const {
  if (D < 0) throw std::invalid_argument("variable count must be nonnegative");
  std::vector<std::string> names;
  for (int i = 1; i <= D; ++i) names.push_back(variable_name(i));
  // Relations may mention variables beyond D; those are vacuous in R_D.
  std::vector<std::string> all_names = names;
  std::vector<std::vector<int>> rels;
  for (const auto& w : relations) {
    std::vector<std::string> wide = all_names;
    int extra = D;
    std::vector<int> e;
    for (;;) {
      try {
        e = parse_monomial(w, wide);
        break;
      } catch (const std::invalid_argument&) {
        if (extra > D + 64) throw;
        wide.push_back(variable_name(++extra));
      }
    }
    bool outside = false;
    for (std::size_t v = D; v < e.size(); ++v)
      if (e[v] > 0) outside = true;
    if (outside) continue;
    e.resize(D);
    rels.push_back(e);
  }
  auto a = Algebra::monomial(p, names, rels, degree_cap, basis_cap);
  return a;
}

std::vector<int> parse_monomial(const std::string& word, const std::vector<std::string>& variables) {
  std::vector<int> e(variables.size(), 0);
  std::string w;
  for (char ch : word)
    if (ch != ' ') w.push_back(ch);
  if (w.empty() || w == "1") return e;
  std::size_t pos = 0;
  while (pos <= w.size()) {
    std::size_t star = w.find('*', pos);
    std::string factor = w.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    int power = 1;
    auto caret = factor.find('^');
    if (caret != std::string::npos) {
      power = std::stoi(factor.substr(caret + 1));
      factor = factor.substr(0, caret);
    }
    auto it = std::find(variables.begin(), variables.end(), factor);
    if (it == variables.end()) throw std::invalid_argument("unknown variable '" + factor + "' in monomial " + word);
    e[it - variables.begin()] += power;
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return e;
}

std::string monomial_label(const std::vector<int>& exps, const std::vector<std::string>& variables) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variables[i];
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace homlab
