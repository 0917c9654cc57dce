#include <functional>
#include <map>
#include <stdexcept>

#include "homlab/suites.hpp"

namespace homlab {

SuiteReport sign_suite(const SuiteConfig& c) {
  SuiteReport rep = start_report("signs", "sign conventions: every derived differential squares to zero", c.seed);
  const AlgebraPtr r = truncated_polynomial(c.field, 2);
  const std::size_t n = c.samples ? c.samples : 200;
  rep.provenance.emplace_back("ring", r->description());
  const auto pl = module_pool(r, Side::left), pr = module_pool(r, Side::right);
  std::map<std::string, std::size_t> dd_failures, other_failures;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = instance_rng(c.seed, i);
    const int lo = static_cast<int>(i % 3) - 1;
    const int m = 1 + static_cast<int>(i % 3);
    ++rep.instances;
    const std::string id = "instance " + std::to_string(i);
    const ChainComplex x = random_complex(pl, lo, lo + 2, rng);
    const ChainComplex y = random_complex(pl, 0, 2, rng);
    const ChainComplex z = random_complex(pr, -1, 1, rng);
    const ChainMap f = random_chain_map(x, y, rng);
    const DualPair dual = character_dual_pair(x);
    // Each construction is isolated so one failing sign does not mask the others.
    const std::vector<std::pair<std::string, std::function<ChainComplex()>>> checks = {
        {"Hom(X,Y)", [&] { return hom_complex(x, y).complex; }},
        {"cycle Hom(X,Y)", [&] { return underline_hom(x, y).complex; }},
        {"Z (x) Y", [&] { return tensor_complex(z, y).complex; }},
        {"Z (x)bar Y", [&] { return bar_tensor(z, y).complex; }},
        {"X^+ cycle form", [&] { return dual.definitional; }},
        {"X^+ reindexed", [&] { return dual.reindexed; }},
        {"X[m]", [&] { return suspension(x, m); }},
        {"cone(f)", [&] { return mapping_cone(f).complex; }},
        {"cone(f[m])", [&] { return mapping_cone(suspension(f, m)).complex; }},
        {"cone(X^+ comparison)", [&] { return mapping_cone(dual.comparison).complex; }},
        {"cone(X -> X^++)", [&] { return mapping_cone(double_dual_map(x)).complex; }},
    };
    for (const auto& [name, build] : checks) {
      try {
        const auto bad = build().square_defects();
        if (!bad.empty()) {
          ++dd_failures[name];
          rep.counterexamples.push_back(
              {id, name + ": dd != 0 at degree " + std::to_string(bad.front()) + " (m = " + std::to_string(m) + ")"});
        }
      } catch (const std::exception& e) {
        ++other_failures[name];
        rep.counterexamples.push_back({id, name + ": " + e.what()});
      }
    }
  }
  auto tally = [](const std::map<std::string, std::size_t>& t) {
    std::string out;
    for (const auto& [k, v] : t) out += (out.empty() ? "" : ", ") + k + " x" + std::to_string(v);
    return out;
  };
  if (!dd_failures.empty()) rep.notes.push_back("dd != 0 by construction: " + tally(dd_failures));
  if (!other_failures.empty()) rep.notes.push_back("construction errors: " + tally(other_failures));
  return rep;
}

}  // namespace homlab
