#include "homlab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace homlab::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const json& field(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T as(const json& v, const std::string& where) {
  try {
    return v.get<T>();
  } catch (const json::exception& e) {
    fail(where, std::string("wrong type (") + e.what() + ")");
  }
}

std::uint32_t as_prime(const json& v, const std::string& where) {
  const long long p = as<long long>(v, where);
  if (p < 2) fail(where, "field characteristic must be a prime >= 2");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(where, std::to_string(p) + " is not prime");
  return static_cast<std::uint32_t>(p);
}

Matrix parse_matrix(const json& rows, std::uint32_t p, std::size_t r, std::size_t c, const std::string& where) {
  if (!rows.is_array() || rows.size() != r) fail(where, "expected " + std::to_string(r) + " rows");
  Matrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != c) fail(w, "expected " + std::to_string(c) + " entries");
    for (std::size_t j = 0; j < c; ++j) {
      long long v = as<long long>(rows[i][j], w + "[" + std::to_string(j) + "]");
      v %= static_cast<long long>(p);
      if (v < 0) v += p;
      m.at(i, j) = static_cast<std::uint32_t>(v);
    }
  }
  return m;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& ref) {
  std::filesystem::path p(ref);
  return p.is_absolute() ? p : base / p;
}

// A string naming an existing file is a reference; anything else is a recipe.
bool looks_like_file(const std::filesystem::path& base, const std::string& ref) {
  if (ref.find_first_of("<>:(") != std::string::npos) return false;
  std::error_code ec;
  return std::filesystem::is_regular_file(resolve(base, ref), ec);
}

AlgebraPtr ring_of(const json& doc, const std::filesystem::path& base, const AlgebraPtr& fallback, const std::string& where) {
  if (doc.is_object()) {
    auto it = doc.find("ring");
    if (it == doc.end()) it = doc.find("ring_ref");
    if (it != doc.end()) {
      if (it->is_string()) return load_ring(resolve(base, it->get<std::string>()));
      return parse_ring(*it, where + ".ring");
    }
  }
  if (!fallback) fail(where, "no ring given");
  return fallback;
}

Side side_of(const json& doc, std::optional<Side> fallback, const std::string& where) {
  if (doc.is_object())
    if (auto it = doc.find("side"); it != doc.end()) {
      try {
        return parse_side(as<std::string>(*it, where + ".side"));
      } catch (const std::invalid_argument& e) {
        fail(where + ".side", e.what());
      }
    }
  return fallback.value_or(Side::left);
}

template <class F>
auto wrap(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

}  // namespace

json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(file.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": syntax error: " + e.what());
  }
}

AlgebraPtr parse_ring(const json& doc, const std::string& where) {
  const std::uint32_t p = as_prime(field(doc, "field_p", where), where + ".field_p");
  return wrap(where, [&]() -> AlgebraPtr {
    if (doc.contains("named")) {
      const std::string name = as<std::string>(doc["named"], where + ".named");
      const int n = doc.contains("n") ? as<int>(doc["n"], where + ".n") : 2;
      if (name == "truncated_polynomial") return truncated_polynomial(p, n);
      if (name == "square_zero") return square_zero_truncation(p, n);
      if (name == "upper_triangular") return upper_triangular(p);
      fail(where + ".named", "unknown ring '" + name + "'");
    }
    if (doc.contains("structure_constants")) {
      auto labels = as<std::vector<std::string>>(field(doc, "basis_labels", where), where + ".basis_labels");
      auto c = as<std::vector<std::vector<std::vector<long long>>>>(doc["structure_constants"], where + ".structure_constants");
      const std::size_t n = labels.size();
      if (c.size() != n) fail(where + ".structure_constants", "expected " + std::to_string(n) + " slices");
      for (std::size_t i = 0; i < n; ++i) {
        if (c[i].size() != n) fail(where + ".structure_constants[" + std::to_string(i) + "]", "wrong size");
        for (std::size_t j = 0; j < n; ++j)
          if (c[i][j].size() != n)
            fail(where + ".structure_constants[" + std::to_string(i) + "][" + std::to_string(j) + "]", "wrong size");
      }
      const std::size_t unit = doc.contains("unit_index") ? as<std::size_t>(doc["unit_index"], where + ".unit_index") : 0;
      if (unit >= n) fail(where + ".unit_index", "out of range");
      return Algebra::from_structure_constants(p, labels, c, unit);
    }
    TruncationTemplate t;
    t.p = p;
    t.degree_cap = doc.contains("degree_cap") ? as<int>(doc["degree_cap"], where + ".degree_cap") : 1;
    if (doc.contains("relations")) t.relations = as<std::vector<std::string>>(doc["relations"], where + ".relations");
    int D = 0;
    if (doc.contains("variables")) {
      t.variables = as<std::vector<std::string>>(doc["variables"], where + ".variables");
      D = static_cast<int>(t.variables.size());
    }
    if (doc.contains("variable_prefix")) t.variable_prefix = as<std::string>(doc["variable_prefix"], where + ".variable_prefix");
    if (doc.contains("variable_count")) D = as<int>(doc["variable_count"], where + ".variable_count");
    if (D <= 0) fail(where, "monomial ring needs 'variables' or a positive 'variable_count'");
    return t.instantiate(D);
  });
}

AlgebraPtr load_ring(const std::filesystem::path& file) { return parse_ring(read_json(file), file.string()); }

Module parse_module(const json& doc, const std::filesystem::path& base, const AlgebraPtr& default_ring,
                    std::optional<Side> default_side, const std::string& where) {
  if (doc.is_string() && looks_like_file(base, doc.get<std::string>())) {
    const auto file = resolve(base, doc.get<std::string>());
    return parse_module(read_json(file), file.parent_path(), default_ring, default_side, file.string());
  }
  if (doc.is_string()) {
    if (!default_ring) fail(where, "recipe needs a ring");
    return wrap(where, [&] { return module_from_recipe(default_ring, default_side.value_or(Side::left), doc.get<std::string>()); });
  }
  const AlgebraPtr r = ring_of(doc, base, default_ring, where);
  const Side side = side_of(doc, default_side, where);
  if (doc.contains("recipe"))
    return wrap(where + ".recipe", [&] { return module_from_recipe(r, side, as<std::string>(doc["recipe"], where + ".recipe")); });
  const std::size_t dim = as<std::size_t>(field(doc, "dim", where), where + ".dim");
  const json& acts = field(doc, "actions", where);
  if (!acts.is_object()) fail(where + ".actions", "expected an object keyed by basis labels");
  std::set<std::string> keys;
  for (auto it = acts.begin(); it != acts.end(); ++it) {
    if (!r->index_of(it.key())) fail(where + ".actions." + it.key(), "not a basis label of the ring");
    keys.insert(it.key());
  }
  auto read = [&](const std::string& label) {
    return parse_matrix(acts[label], r->p(), dim, dim, where + ".actions." + label);
  };
  std::set<std::string> gens;
  for (auto g : r->generators()) gens.insert(r->labels()[g]);
  return wrap(where, [&] {
    if (keys == gens) {
      std::vector<Matrix> ga;
      for (auto g : r->generators()) ga.push_back(read(r->labels()[g]));
      return Module::from_generator_actions(r, side, dim, ga);
    }
    std::vector<Matrix> all;
    for (std::size_t i = 0; i < r->dim(); ++i) {
      const std::string& l = r->labels()[i];
      if (keys.count(l))
        all.push_back(read(l));
      else if (i == r->unit())
        all.push_back(Matrix::identity(r->p(), dim));
      else
        fail(where + ".actions", "give actions for the generators or for every basis element; missing '" + l + "'");
    }
    return Module::from_actions(r, side, dim, std::move(all));
  });
}

Module load_module(const std::filesystem::path& file, const AlgebraPtr& default_ring) {
  return parse_module(read_json(file), file.parent_path(), default_ring, std::nullopt, file.string());
}

ChainComplex parse_complex(const json& doc, const std::filesystem::path& base, const AlgebraPtr& default_ring,
                           std::optional<Side> default_side, const std::string& where) {
  if (doc.is_string() && looks_like_file(base, doc.get<std::string>())) {
    const auto file = resolve(base, doc.get<std::string>());
    return parse_complex(read_json(file), file.parent_path(), default_ring, default_side, file.string());
  }
  if (doc.is_string()) {
    if (!default_ring) fail(where, "recipe needs a ring");
    return wrap(where, [&] { return complex_from_recipe(default_ring, default_side.value_or(Side::left), doc.get<std::string>()); });
  }
  const AlgebraPtr r = ring_of(doc, base, default_ring, where);
  const Side side = side_of(doc, default_side, where);
  auto sub = [&](const json& d, const std::string& w) { return parse_complex(d, base, r, side, w); };
  auto shaped = [&](const char* key, auto make) {
    const json& s = doc[key];
    const std::string w = where + "." + key;
    const int n = as<int>(field(s, "degree", w), w + ".degree");
    return make(parse_module(field(s, "module", w), base, r, side, w + ".module"), n);
  };
  if (doc.contains("recipe"))
    return wrap(where + ".recipe", [&] { return complex_from_recipe(r, side, as<std::string>(doc["recipe"], where + ".recipe")); });
  if (doc.contains("disk")) return shaped("disk", [](const Module& m, int n) { return disk(m, n); });
  if (doc.contains("sphere")) return shaped("sphere", [](const Module& m, int n) { return sphere(m, n); });
  if (doc.contains("shift")) {
    const json& s = doc["shift"];
    return suspension(sub(field(s, "complex", where + ".shift"), where + ".shift.complex"),
                      as<int>(field(s, "by", where + ".shift"), where + ".shift.by"));
  }
  if (doc.contains("sum")) {
    const json& s = doc["sum"];
    if (!s.is_array() || s.empty()) fail(where + ".sum", "expected a nonempty list of complexes");
    ChainComplex out = sub(s[0], where + ".sum[0]");
    for (std::size_t i = 1; i < s.size(); ++i) out = direct_sum(out, sub(s[i], where + ".sum[" + std::to_string(i) + "]"));
    return out;
  }
  if (doc.contains("cone")) {
    const json& c = doc["cone"];
    const std::string w = where + ".cone";
    ChainComplex x = sub(field(c, "source", w), w + ".source");
    ChainComplex y = sub(field(c, "target", w), w + ".target");
    std::map<int, Matrix> comps;
    const json& cs = field(c, "components", w);
    if (!cs.is_object()) fail(w + ".components", "expected an object keyed by degree");
    for (auto it = cs.begin(); it != cs.end(); ++it) {
      int m = 0;
      try {
        m = std::stoi(it.key());
      } catch (const std::exception&) {
        fail(w + ".components." + it.key(), "degree keys must be integers");
      }
      comps[m] = parse_matrix(it.value(), r->p(), y.dim(m), x.dim(m), w + ".components." + it.key());
    }
    return wrap(w, [&] { return mapping_cone(make_chain_map(x, y, comps)).complex; });
  }
  const int lo = as<int>(field(doc, "lo", where), where + ".lo");
  const json& terms = field(doc, "terms", where);
  if (!terms.is_array()) fail(where + ".terms", "expected a list");
  if (doc.contains("hi") && as<int>(doc["hi"], where + ".hi") != lo + static_cast<int>(terms.size()) - 1)
    fail(where + ".hi", "does not match lo and the number of terms");
  std::vector<Module> ms;
  for (std::size_t i = 0; i < terms.size(); ++i)
    ms.push_back(parse_module(terms[i], base, r, side, where + ".terms[" + std::to_string(i) + "]"));
  std::vector<Matrix> ds;
  const json& diffs = doc.contains("differentials") ? doc["differentials"] : json::array();
  if (!diffs.is_array() || (ms.size() > 1 && diffs.size() != ms.size() - 1))
    fail(where + ".differentials", "expected " + std::to_string(ms.empty() ? 0 : ms.size() - 1) + " matrices");
  for (std::size_t i = 0; i + 1 < ms.size(); ++i)
    ds.push_back(parse_matrix(diffs[i], r->p(), ms[i].dim(), ms[i + 1].dim(), where + ".differentials[" + std::to_string(i) + "]"));
  return wrap(where, [&] { return ChainComplex::make(r, side, lo, ms, ds); });
}

ChainComplex load_complex(const std::filesystem::path& file, const AlgebraPtr& default_ring) {
  return parse_complex(read_json(file), file.parent_path(), default_ring, std::nullopt, file.string());
}

TruncationFamily parse_family(const json& doc, const std::string& where) {
  TruncationFamily f;
  const json& t = field(doc, "template", where);
  const std::string tw = where + ".template";
  f.spec.p = as_prime(field(t, "field_p", tw), tw + ".field_p");
  f.spec.degree_cap = t.contains("degree_cap") ? as<int>(t["degree_cap"], tw + ".degree_cap") : 1;
  if (t.contains("relations")) f.spec.relations = as<std::vector<std::string>>(t["relations"], tw + ".relations");
  if (t.contains("variables")) f.spec.variables = as<std::vector<std::string>>(t["variables"], tw + ".variables");
  if (t.contains("variable_prefix")) f.spec.variable_prefix = as<std::string>(t["variable_prefix"], tw + ".variable_prefix");
  f.D_range = as<std::vector<int>>(field(doc, "D_range", where), where + ".D_range");
  if (f.D_range.empty()) fail(where + ".D_range", "must not be empty");
  if (doc.contains("recipes")) f.recipes = as<std::vector<std::string>>(doc["recipes"], where + ".recipes");
  f.side = side_of(doc, Side::left, where);
  for (int D : f.D_range) wrap(where + ".D_range", [&] { return f.ring(D); });
  return f;
}

TruncationFamily load_family(const std::filesystem::path& file) { return parse_family(read_json(file), file.string()); }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json ring_to_json(const AlgebraPtr& r) {
  const std::size_t n = r->dim();
  json c = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json slice = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json row = json::array();
      for (std::size_t k = 0; k < n; ++k) row.push_back(r->c(i, j, k));
      slice.push_back(row);
    }
    c.push_back(slice);
  }
  return {{"field_p", r->p()}, {"basis_labels", r->labels()}, {"structure_constants", c}, {"unit_index", r->unit()}};
}

json module_to_json(const Module& m) {
  json acts = json::object();
  for (std::size_t i = 0; i < m.ring()->dim(); ++i) acts[m.ring()->labels()[i]] = matrix_to_json(m.action(i));
  return {{"side", side_name(m.side())}, {"dim", m.dim()}, {"actions", acts}};
}

json complex_to_json(const ChainComplex& x) {
  json terms = json::array(), diffs = json::array();
  for (int m = x.lo(); m <= x.hi(); ++m) {
    terms.push_back(module_to_json(x.term(m)));
    if (m > x.lo()) diffs.push_back(matrix_to_json(x.diff(m)));
  }
  return {{"ring", ring_to_json(x.ring())}, {"side", side_name(x.side())}, {"lo", x.lo()},
          {"hi", x.hi()},                   {"terms", terms},                {"differentials", diffs}};
}

}  // namespace homlab::io
