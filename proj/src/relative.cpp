#include "homlab/relative.hpp"

#include <stdexcept>

#include "homlab/module_ops.hpp"

namespace homlab {

TestClass::TestClass(std::string label, std::vector<NamedModule> members, bool include_ring)
    : s_(std::make_shared<State>()) {
  if (members.empty()) throw std::invalid_argument("test class needs at least one module");
  const Module first = members.front().module;
  for (const auto& nm : members)
    if (!nm.module.compatible_with(first)) throw std::invalid_argument("test class members must share ring and side");
  if (include_ring) {
    Module reg = regular_module(first.ring(), first.side());
    bool present = false;
    for (const auto& nm : members)
      if (nm.module.dim() == reg.dim() && is_isomorphic(nm.module, reg)) present = true;
    if (!present) members.push_back({"R", reg});
  }
  s_->label = std::move(label);
  s_->members = std::move(members);
  s_->kind = default_cover(first.ring());
  s_->resolutions.resize(s_->members.size());
}

std::string TestClass::describe() const {
  std::string out = label() + " = {";
  for (std::size_t i = 0; i < size(); ++i) out += (i ? ", " : "") + name(i);
  return out + "}";
}

const FreeResolution& TestClass::resolution(std::size_t i, std::size_t length) const {
  FreeResolution& r = s_->resolutions.at(i);
  if (r.ranks.size() < length + 1) r = free_resolution(module(i), length, s_->kind);
  return r;
}

ComplexResolution& TestClass::sphere_resolution(std::size_t i, int m) const {
  auto& slot = s_->spheres[{i, m}];
  if (!slot) slot = std::make_unique<ComplexResolution>(sphere(module(i), m), s_->kind);
  return *slot;
}

std::string DimensionVerdict::to_string() const {
  std::string out = value ? std::to_string(*value) : "OverCap(cap=" + std::to_string(cap) + ")";
  if (!reason.empty()) out += " [" + reason + "]";
  return out;
}

bool same_verdict(const DimensionVerdict& a, const DimensionVerdict& b) { return a.value == b.value; }

std::string module_fingerprint(const Module& m) {
  std::string out = side_name(m.side());
  out += ':' + std::to_string(m.dim());
  for (const Matrix& a : m.actions())
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) out += ',' + std::to_string(a(r, c));
  return out;
}

bool relative_injective(const Module& m, const TestClass& t) {
  auto& memo = t.flag_memo();
  const std::string key = "inj|" + module_fingerprint(m);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool ok = true;
  for (std::size_t i = 0; i < t.size() && ok; ++i)
    if (ext_dims(t.resolution(i, 2), m, 1)[1] != 0) ok = false;
  return memo[key] = ok;
}

bool relative_flat(const Module& n, const TestClass& t) {
  auto& memo = t.flag_memo();
  const std::string key = "flat|" + module_fingerprint(n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool ok = true;
  for (std::size_t i = 0; i < t.size() && ok; ++i)
    if (tor_dims(n, t.resolution(i, 2), 1)[1] != 0) ok = false;
  return memo[key] = ok;
}

namespace {

// vanish[k]: index k+1 vanishes for every member; first nonvanishing witness per k.
struct Scan {
  std::vector<bool> vanish;
  std::vector<std::optional<DimWitness>> witness;
};

DimensionVerdict from_scan(const Scan& s, std::size_t cap, const char* what) {
  DimensionVerdict v;
  v.cap = cap;
  for (std::size_t k = 0; k <= cap; ++k)
    if (s.vanish[k]) {
      v.value = k;
      v.certificate = std::string(what) + "^" + std::to_string(k + 1) + " vanishes on every test module";
      if (k > 0) v.failing = s.witness[k - 1];
      return v;
    }
  v.failing = s.witness[cap];
  return v;
}

}  // namespace

DimensionVerdict relative_id(const Module& m, const TestClass& t, std::size_t cap, bool cross_check) {
  auto& memo = t.dim_memo();
  const std::string key = "id|" + std::to_string(cap) + (cross_check ? "|x|" : "|-|") + module_fingerprint(m);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Scan s{std::vector<bool>(cap + 1, true), std::vector<std::optional<DimWitness>>(cap + 1)};
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto e = ext_dims(t.resolution(i, cap + 2), m, cap + 1);
    for (std::size_t k = 0; k <= cap; ++k)
      if (e[k + 1] && s.vanish[k]) {
        s.vanish[k] = false;
        s.witness[k] = DimWitness{i, k + 1, std::nullopt, e[k + 1]};
      }
  }
  if (cross_check) {
    InjectiveCoresolution co = injective_coresolution(m, cap, default_cover(m.ring()));
    for (std::size_t k = 0; k <= cap; ++k)
      if (relative_injective(co.cosyzygies[k], t) != s.vanish[k])
        throw std::logic_error("defect: Ext vanishing and cosyzygy injectivity disagree at k = " + std::to_string(k));
  }
  return memo[key] = from_scan(s, cap, "Ext");
}

DimensionVerdict relative_fd(const Module& n, const TestClass& t, std::size_t cap, bool cross_check) {
  auto& memo = t.dim_memo();
  const std::string key = "fd|" + std::to_string(cap) + (cross_check ? "|x|" : "|-|") + module_fingerprint(n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Scan s{std::vector<bool>(cap + 1, true), std::vector<std::optional<DimWitness>>(cap + 1)};
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto e = tor_dims(n, t.resolution(i, cap + 2), cap + 1);
    for (std::size_t k = 0; k <= cap; ++k)
      if (e[k + 1] && s.vanish[k]) {
        s.vanish[k] = false;
        s.witness[k] = DimWitness{i, k + 1, std::nullopt, e[k + 1]};
      }
  }
  if (cross_check) {
    FreeResolution res = free_resolution(n, cap, default_cover(n.ring()));
    for (std::size_t k = 0; k <= cap; ++k)
      if (relative_flat(res.syzygies[k], t) != s.vanish[k])
        throw std::logic_error("defect: Tor vanishing and syzygy flatness disagree at k = " + std::to_string(k));
  }
  return memo[key] = from_scan(s, cap, "Tor");
}

bool baer_injective(const Module& m, std::size_t ring_dim_cap) {
  const AlgebraPtr& r = m.ring();
  if (r->dim() > ring_dim_cap)
    throw std::invalid_argument("Baer test needs dim R <= " + std::to_string(ring_dim_cap));
  Module reg = regular_module(r, m.side());
  const CoverKind kind = default_cover(r);
  for (const Subspace& ideal : enumerate_submodules(reg).members) {
    Module q = quotient_module(reg, ideal).module;
    if (ext_dims(1, q, m, kind)[1] != 0) return false;
  }
  return true;
}

bool is_projective(const Module& m) {
  // M is projective iff a free cover F -> M has an R-linear section.
  FreeCover c = free_cover(m, default_cover(m.ring()));
  HomSpace back = hom_space(m, free_module(m.ring(), m.side(), c.rank));
  Matrix sys(m.p(), m.dim() * m.dim(), back.dim());
  for (std::size_t j = 0; j < back.dim(); ++j) sys.set_block(0, j, (c.map * back.element(j)).vec());
  return solve(sys, Matrix::identity(m.p(), m.dim()).vec());
}

}  // namespace homlab
