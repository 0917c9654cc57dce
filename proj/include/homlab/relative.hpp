#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homlab/complex_ext.hpp"
#include "homlab/resolution.hpp"

namespace homlab {

// Where a vanishing test failed: member index, Ext/Tor index, optional degree, dimension found.
struct DimWitness {
  std::size_t member = 0;
  std::size_t index = 0;
  std::optional<int> degree;
  std::size_t dim = 0;
};

// A relative dimension in [0, cap] or OverCap.
struct DimensionVerdict {
  std::optional<std::size_t> value;  // empty means OverCap
  std::size_t cap = 0;
  std::optional<DimWitness> failing;  // nonvanishing at index value, or at cap + 1 for OverCap
  std::string certificate;            // vanishing evidence at index value + 1
  std::string reason;                 // set when OverCap comes from a structural obstruction
  bool over_cap() const { return !value.has_value(); }
  std::string to_string() const;
};
struct NamedModule {
  std::string name;
  Module module;
};

// Finite family of test modules on one ring and side.  Resolutions of members
// and of the spheres on them are computed once and reused.
class TestClass {
 public:
  TestClass() = default;
  // With include_ring, the regular module is appended unless a member is isomorphic to it.
  TestClass(std::string label, std::vector<NamedModule> members, bool include_ring = true);

  const std::string& label() const { return s_->label; }
  std::size_t size() const { return s_->members.size(); }
  const Module& module(std::size_t i) const { return s_->members[i].module; }
  const std::string& name(std::size_t i) const { return s_->members[i].name; }
  const AlgebraPtr& ring() const { return s_->members.front().module.ring(); }
  Side side() const { return s_->members.front().module.side(); }
  CoverKind kind() const { return s_->kind; }
  std::string describe() const;

  // Resolution of member i with at least length + 1 free terms.
  const FreeResolution& resolution(std::size_t i, std::size_t length) const;
  // Resolution of the complex S^m(L_i) by disk sums.
  ComplexResolution& sphere_resolution(std::size_t i, int m) const;

  // Memos for per-module verdicts, keyed by a caller-built string.
  std::map<std::string, bool>& flag_memo() const { return s_->flags; }
  std::map<std::string, DimensionVerdict>& dim_memo() const { return s_->dims; }

 private:
  struct State {
    std::string label;
    std::vector<NamedModule> members;
    CoverKind kind = CoverKind::minimal;
    std::vector<FreeResolution> resolutions;
    std::map<std::pair<std::size_t, int>, std::unique_ptr<ComplexResolution>> spheres;
    std::map<std::string, bool> flags;
    std::map<std::string, DimensionVerdict> dims;
  };
  std::shared_ptr<State> s_;
};

bool same_verdict(const DimensionVerdict& a, const DimensionVerdict& b);

// Side, dimension and action data; equal strings mean equal modules.
std::string module_fingerprint(const Module& m);

// Ext^1(L, M) = 0 for every L in T.
bool relative_injective(const Module& m, const TestClass& t);
// Tor_1(N, L) = 0 for every L in T (N right, T left).
bool relative_flat(const Module& n, const TestClass& t);

// Least k <= cap with Ext^{k+1}(L, M) = 0 for all L in T.  With cross_check the
// cosyzygies of an injective coresolution are tested as well; a disagreement
// throws std::logic_error.
DimensionVerdict relative_id(const Module& m, const TestClass& t, std::size_t cap, bool cross_check = true);
// Least k <= cap with Tor_{k+1}(N, L) = 0 for all L in T; cross-checked on syzygies of N.
DimensionVerdict relative_fd(const Module& n, const TestClass& t, std::size_t cap, bool cross_check = true);

// Ext^1(R/I, M) = 0 for every one-sided ideal I (left ideals for left modules).
// Throws std::invalid_argument when dim R exceeds ring_dim_cap.
bool baer_injective(const Module& m, std::size_t ring_dim_cap = 8);
// The kernel of a free cover splits off.
bool is_projective(const Module& m);

}  // namespace homlab
