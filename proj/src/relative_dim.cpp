#include "homlab/relative_dim.hpp"

#include <algorithm>
#include <sstream>

#include "homlab/module.hpp"

namespace homlab {

bool MembershipReport::agree() const {
  for (const auto& r : routes)
    if (r.verdict != verdict) return false;
  return true;
}

std::string MembershipReport::summary() const {
  std::string out = verdict ? "member" : "not a member";
  for (const auto& r : routes) {
    out += "; " + r.route + "=" + (r.verdict ? "yes" : "no");
    if (!r.witness.empty()) out += " (" + r.witness + ")";
  }
  return out;
}

namespace {

std::string first_nonzero_homology(const ChainComplex& x) {
  for (int m = x.lo(); m <= x.hi(); ++m)
    if (auto h = homology_dim(x, m)) return "H_" + std::to_string(m) + " has dim " + std::to_string(h);
  return {};
}

}  // namespace

bool t_injective_by_cycles(const ChainComplex& x, const TestClass& t, std::string* witness) {
  if (std::string w = first_nonzero_homology(x); !w.empty()) {
    if (witness) *witness = "not exact: " + w;
    return false;
  }
  for (int m = x.lo(); m <= x.hi(); ++m)
    if (!relative_injective(cycles_module(x, m), t)) {
      if (witness) *witness = "Z_" + std::to_string(m) + " not " + t.label() + "-injective";
      return false;
    }
  return true;
}

MembershipReport t_injective_report(const ChainComplex& x, const TestClass& t) {
  MembershipReport rep;
  RouteVerdict cyc{"cycles", false, {}};
  cyc.verdict = t_injective_by_cycles(x, t, &cyc.witness);
  rep.verdict = cyc.verdict;

  RouteVerdict sph{"spheres", true, {}};
  if (!x.empty_window())
    for (int m = x.lo() - 1; m <= x.hi() + 2 && sph.verdict; ++m)
      for (std::size_t i = 0; i < t.size() && sph.verdict; ++i)
        if (auto e = ext_ch_dims(t.sphere_resolution(i, m), x, 1)[1]) {
          sph.verdict = false;
          sph.witness = "Ext^1(S^" + std::to_string(m) + " " + t.name(i) + ", X) has dim " + std::to_string(e);
        }

  RouteVerdict hom{"hom", true, {}};
  if (!x.empty_window()) {
    for (int m = x.lo(); m <= x.hi() && hom.verdict; ++m)
      if (!relative_injective(x.term(m), t)) {
        hom.verdict = false;
        hom.witness = "X_" + std::to_string(m) + " not " + t.label() + "-injective";
      }
    for (int m = x.lo() - 1; m <= x.hi() + 2 && hom.verdict; ++m)
      for (std::size_t i = 0; i < t.size() && hom.verdict; ++i) {
        if (!is_exact(hom_complex(sphere(t.module(i), m), x).complex)) {
          hom.verdict = false;
          hom.witness = "Hom(S^" + std::to_string(m) + " " + t.name(i) + ", X) not exact";
        } else if (!is_exact(hom_complex(disk(t.module(i), m), x).complex)) {
          hom.verdict = false;
          hom.witness = "Hom(D^" + std::to_string(m) + " " + t.name(i) + ", X) not exact";
        }
      }
  }
  rep.routes = {cyc, sph, hom};
  return rep;
}

bool t_injective_complex(const ChainComplex& x, const TestClass& t) { return t_injective_by_cycles(x, t); }

bool t_flat_by_cycles(const ChainComplex& y, const TestClass& t, std::string* witness) {
  if (std::string w = first_nonzero_homology(y); !w.empty()) {
    if (witness) *witness = "not exact: " + w;
    return false;
  }
  for (int m = y.lo(); m <= y.hi(); ++m)
    if (!relative_flat(cycles_module(y, m), t)) {
      if (witness) *witness = "Z_" + std::to_string(m) + " not " + t.label() + "-flat";
      return false;
    }
  return true;
}

MembershipReport t_flat_report(const ChainComplex& y, const TestClass& t) {
  MembershipReport rep;
  RouteVerdict cyc{"cycles", false, {}};
  cyc.verdict = t_flat_by_cycles(y, t, &cyc.witness);
  rep.verdict = cyc.verdict;

  RouteVerdict tor{"bar-tor", true, {}};
  if (!y.empty_window()) {
    ComplexResolution res(y, t.kind());
    for (int m = -1; m <= 1 && tor.verdict; ++m)
      for (std::size_t i = 0; i < t.size() && tor.verdict; ++i) {
        auto dims = bar_tor(res, sphere(t.module(i), m), 1);
        if (!dims.empty()) {
          tor.verdict = false;
          tor.witness = "bar Tor_1(Y, S^" + std::to_string(m) + " " + t.name(i) + ") nonzero in degree " +
                        std::to_string(dims.begin()->first);
        }
      }
  }

  RouteVerdict dual{"dual", false, {}};
  dual.verdict = t_injective_by_cycles(character_dual(y), t, &dual.witness);
  rep.routes = {cyc, tor, dual};
  return rep;
}

bool t_flat_complex(const ChainComplex& y, const TestClass& t) { return t_flat_by_cycles(y, t); }

namespace {

DimensionVerdict not_exact_verdict(const ChainComplex& x, std::size_t cap) {
  DimensionVerdict v;
  v.cap = cap;
  for (int m = x.lo(); m <= x.hi(); ++m)
    if (auto h = homology_dim(x, m)) {
      v.reason = "not exact: H_" + std::to_string(m) + " has dim " + std::to_string(h);
      v.failing = DimWitness{0, 0, m, h};
      break;
    }
  return v;
}

template <class ModuleDim>
DimensionVerdict cycle_route(const ChainComplex& x, std::size_t cap, ModuleDim module_dim) {
  if (!is_exact(x)) return not_exact_verdict(x, cap);
  DimensionVerdict out;
  out.cap = cap;
  out.value = 0;
  out.certificate = "exact; every cycle module has dimension 0";
  for (int m = x.lo(); m <= x.hi(); ++m) {
    DimensionVerdict v = module_dim(cycles_module(x, m));
    if (v.over_cap()) {
      out.value.reset();
      out.failing = v.failing;
      if (out.failing) out.failing->degree = m;
      out.certificate.clear();
      return out;
    }
    if (*v.value > *out.value || (*v.value == *out.value && !out.failing && v.failing)) {
      out.value = v.value;
      out.failing = v.failing;
      if (out.failing) out.failing->degree = m;
      out.certificate = "exact; max over cycles attained at Z_" + std::to_string(m) + ": " + v.certificate;
    }
  }
  return out;
}

DimensionVerdict from_vanishing(const std::vector<std::optional<DimWitness>>& failing, std::size_t cap,
                                const char* what) {
  DimensionVerdict v;
  v.cap = cap;
  for (std::size_t k = 0; k <= cap; ++k)
    if (!failing[k]) {
      v.value = k;
      v.certificate = std::string(what) + "_{" + std::to_string(k + 1) + "} vanishes against every sphere";
      if (k) v.failing = failing[k - 1];
      return v;
    }
  v.failing = failing[cap];
  return v;
}

}  // namespace

ComplexDimension relative_id_complex(const ChainComplex& x, const TestClass& t, std::size_t cap,
                                     bool with_sphere_route) {
  ComplexDimension out;
  out.verdict = cycle_route(x, cap, [&](const Module& z) { return relative_id(z, t, cap); });
  if (!with_sphere_route) {
    out.sphere_route = out.verdict;
    return out;
  }
  std::vector<std::optional<DimWitness>> failing(cap + 1);
  if (!x.empty_window())
    for (int m = x.lo() - 1; m <= x.hi() + static_cast<int>(cap) + 2; ++m)
      for (std::size_t i = 0; i < t.size(); ++i) {
        auto e = ext_ch_dims(t.sphere_resolution(i, m), x, cap + 1);
        for (std::size_t k = 0; k <= cap; ++k)
          if (e[k + 1] && !failing[k] && m <= x.hi() + static_cast<int>(k) + 2)
            failing[k] = DimWitness{i, k + 1, m, e[k + 1]};
      }
  out.sphere_route = from_vanishing(failing, cap, "Ext_Ch^");
  return out;
}

ComplexDimension relative_fd_complex(const ChainComplex& y, const TestClass& t, std::size_t cap,
                                     bool with_sphere_route) {
  ComplexDimension out;
  out.verdict = cycle_route(y, cap, [&](const Module& z) { return relative_fd(z, t, cap); });
  if (!with_sphere_route) {
    out.sphere_route = out.verdict;
    return out;
  }
  std::vector<std::optional<DimWitness>> failing(cap + 1);
  if (!y.empty_window()) {
    ComplexResolution res(y, t.kind());
    for (int m = -1; m <= 1; ++m)
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t k = 0; k <= cap; ++k) {
          if (failing[k]) continue;
          auto dims = bar_tor(res, sphere(t.module(i), m), k + 1);
          if (!dims.empty()) failing[k] = DimWitness{i, k + 1, m, dims.begin()->second};
        }
  }
  out.sphere_route = from_vanishing(failing, cap, "bar Tor");
  return out;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << name << ": " << instances << " instances, " << counterexamples.size() << " counterexamples";
  if (!counterexamples.empty()) os << "; first: " << counterexamples.front();
  return os.str();
}

CheckReport duality_check_fi_if(const std::vector<ChainComplex>& right_universe, const TestClass& t) {
  CheckReport rep;
  rep.name = "flat iff dual injective";
  for (std::size_t idx = 0; idx < right_universe.size(); ++idx) {
    const ChainComplex& y = right_universe[idx];
    const bool flat = t_flat_by_cycles(y, t);
    const bool inj = t_injective_by_cycles(character_dual(y), t);
    ++rep.instances;
    if (flat != inj)
      rep.counterexamples.push_back("instance " + std::to_string(idx) + ": flat=" + (flat ? "yes" : "no") +
                                    ", dual injective=" + (inj ? "yes" : "no"));
  }
  rep.notes.push_back("finite universe: no claim beyond the enumerated complexes");
  return rep;
}

CheckReport duality_check_dim(const std::vector<ChainComplex>& right_universe, const TestClass& t, std::size_t cap) {
  CheckReport rep;
  rep.name = "fd equals id of dual";
  for (std::size_t idx = 0; idx < right_universe.size(); ++idx) {
    const ChainComplex& y = right_universe[idx];
    DimensionVerdict fd = relative_fd_complex(y, t, cap, false).verdict;
    DimensionVerdict id = relative_id_complex(character_dual(y), t, cap, false).verdict;
    ++rep.instances;
    if (!same_verdict(fd, id))
      rep.counterexamples.push_back("instance " + std::to_string(idx) + ": fd=" + fd.to_string() +
                                    ", id of dual=" + id.to_string());
  }
  rep.notes.push_back("finite universe: no claim beyond the enumerated complexes");
  return rep;
}

bool ProbeReport::consistent() const {
  if (conditions.empty()) return true;
  for (const auto& [name, ok] : conditions)
    if (ok != conditions.front().second) return false;
  return true;
}

std::string ProbeReport::summary() const {
  std::string out;
  for (const auto& [name, ok] : conditions) out += name + ": " + (ok ? "holds" : "fails") + "\n";
  for (const auto& n : notes) out += n + "\n";
  for (const auto& w : witnesses) out += "witness: " + w + "\n";
  return out;
}

namespace {

bool cycles_projective(const ChainComplex& x) {
  if (!is_exact(x)) return false;
  for (int m = x.lo(); m <= x.hi(); ++m)
    if (!is_projective(cycles_module(x, m))) return false;
  return true;
}

// Tor_1(N, Z) = 0 against every right module N of dimension <= dim R.
bool cycles_flat(const ChainComplex& x, const std::vector<Module>& right_tests) {
  if (!is_exact(x)) return false;
  for (int m = x.lo(); m <= x.hi(); ++m) {
    Module z = cycles_module(x, m);
    for (const Module& n : right_tests)
      if (tor_dims(1, n, z, default_cover(x.ring()))[1]) return false;
  }
  return true;
}

}  // namespace

ProbeReport preenvelope_cover_probe(const std::vector<ChainComplex>& left_universe, const TestClass& t,
                                    std::size_t k) {
  ProbeReport rep;
  const AlgebraPtr& r = t.ring();
  const Side side = t.side();
  auto within = [&](const DimensionVerdict& v) { return v.value && *v.value <= k; };

  ComplexDimension d0 = relative_id_complex(disk(regular_module(r, side), 0), t, k, false);
  rep.conditions.push_back({"(1) D^0(R) has relative id <= " + std::to_string(k), within(d0.verdict)});
  if (!within(d0.verdict)) rep.witnesses.push_back("D^0(R): id = " + d0.verdict.to_string());

  std::vector<ChainComplex> projective;
  for (int m : {0, 1})
    for (std::size_t rank : {1, 2}) projective.push_back(disk(free_module(r, side, rank), m));
  for (const auto& x : left_universe)
    if (cycles_projective(x)) projective.push_back(x);

  bool injective_ok = true;
  for (const auto& p : projective) {
    DimensionVerdict v = relative_fd_complex(character_dual(p), t, k, false).verdict;
    if (!within(v)) {
      injective_ok = false;
      rep.witnesses.push_back("(4) dual of " + describe(p) + ": fd = " + v.to_string());
      break;
    }
  }
  rep.conditions.push_back({"(4) injective complexes have relative fd <= " + std::to_string(k), injective_ok});

  bool projective_ok = true;
  for (const auto& p : projective) {
    DimensionVerdict v = relative_id_complex(p, t, k, false).verdict;
    if (!within(v)) {
      projective_ok = false;
      rep.witnesses.push_back("(5) " + describe(p) + ": id = " + v.to_string());
      break;
    }
  }
  rep.conditions.push_back({"(5) projective complexes have relative id <= " + std::to_string(k), projective_ok});

  std::vector<Module> right_tests;
  for (std::size_t d = 1; d <= r->dim(); ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d * d * r->generators().size() && count <= 4096; ++i) count *= r->p();
    if (count > 4096) break;
    for (const auto& n : enumerate_modules(r, flip(side), d)) right_tests.push_back(n);
  }
  bool flat_ok = true;
  std::size_t flat_count = 0;
  for (const auto& x : left_universe) {
    if (!cycles_flat(x, right_tests)) continue;
    ++flat_count;
    DimensionVerdict v = relative_id_complex(x, t, k, false).verdict;
    if (!within(v)) {
      flat_ok = false;
      rep.witnesses.push_back("(6) " + describe(x) + ": id = " + v.to_string());
      break;
    }
  }
  rep.conditions.push_back({"(6) flat complexes have relative id <= " + std::to_string(k), flat_ok});
  rep.notes.push_back("(2) monic pre-envelopes and (3) epic covers: not machine-checkable");
  rep.notes.push_back(std::to_string(projective.size()) + " projective and " + std::to_string(flat_count) +
                      " flat complexes examined; flatness tested against " + std::to_string(right_tests.size()) +
                      " right modules");
  return rep;
}

}  // namespace homlab
