#pragma once

#include <string>
#include <vector>

#include "homlab/relative.hpp"

namespace homlab {

struct RouteVerdict {
  std::string route;
  bool verdict = false;
  std::string witness;  // first obstruction found, empty when the verdict is true
};

// Membership verdict from the cycle route together with the other routes.
struct MembershipReport {
  bool verdict = false;
  std::vector<RouteVerdict> routes;
  bool agree() const;
  std::string summary() const;
};

// X left complex, T left modules.  Routes:
//   spheres: Ext^1_Ch(S^m L, X) = 0 for m in [lo-1, hi+2]
//   cycles:  X exact and every Z_m X is T-injective (returned verdict)
//   hom:     every X_m is T-injective and Hom(S^m L, X), Hom(D^m L, X) are exact
MembershipReport t_injective_report(const ChainComplex& x, const TestClass& t);
bool t_injective_complex(const ChainComplex& x, const TestClass& t);
// Cycle route only.
bool t_injective_by_cycles(const ChainComplex& x, const TestClass& t, std::string* witness = nullptr);

// Y right complex, T left modules.  Routes:
//   bar-tor: bar Tor_1(Y, S^m L) = 0 for m in {-1, 0, 1}
//   cycles:  Y exact and every Z_m Y is T-flat (returned verdict)
//   dual:    the character dual of Y is T-injective
MembershipReport t_flat_report(const ChainComplex& y, const TestClass& t);
bool t_flat_complex(const ChainComplex& y, const TestClass& t);
bool t_flat_by_cycles(const ChainComplex& y, const TestClass& t, std::string* witness = nullptr);

struct ComplexDimension {
  DimensionVerdict verdict;       // cycle route
  DimensionVerdict sphere_route;  // Ext^{k+1}_Ch(S^m L, X) or bar Tor_{k+1}(Y, S^m L)
  bool agree() const { return same_verdict(verdict, sphere_route); }
};

// Cycle route: OverCap with a reason when X is not exact, otherwise the maximum
// of the module dimensions of the cycles.  The sphere route is computed as well.
ComplexDimension relative_id_complex(const ChainComplex& x, const TestClass& t, std::size_t cap,
                                     bool with_sphere_route = true);
ComplexDimension relative_fd_complex(const ChainComplex& y, const TestClass& t, std::size_t cap,
                                     bool with_sphere_route = true);

// Counterexample listing shared by the batch checks.
struct CheckReport {
  std::string name;
  std::size_t instances = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
  bool passed() const { return counterexamples.empty(); }
  std::string summary() const;
};

// For each right complex Y: t_flat(Y) iff t_injective(Y^+).
CheckReport duality_check_fi_if(const std::vector<ChainComplex>& right_universe, const TestClass& t);
// For each right complex Y: relative_fd(Y) == relative_id(Y^+), OverCap included.
CheckReport duality_check_dim(const std::vector<ChainComplex>& right_universe, const TestClass& t, std::size_t cap);

// Dimension statements of the pre-envelope / cover characterization on a left
// universe: (1) D^0(R) has relative id <= k; (4) injective right complexes have
// relative fd <= k; (5) projective complexes and (6) flat complexes have relative
// id <= k.  The existence clauses are reported as not machine-checkable.
struct ProbeReport {
  std::vector<std::pair<std::string, bool>> conditions;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  bool consistent() const;  // all checked conditions agree with (1)
  std::string summary() const;
};
ProbeReport preenvelope_cover_probe(const std::vector<ChainComplex>& left_universe, const TestClass& t,
                                    std::size_t k);

}  // namespace homlab
