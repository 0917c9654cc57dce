#include <random>
#include <sstream>

#include "homlab/suites.hpp"

namespace homlab {

namespace {
constexpr std::size_t kShownCounterexamples = 5;
}  // namespace

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::vector<Module> module_pool(const AlgebraPtr& r, Side side) {
  std::vector<Module> pool;
  for (std::size_t d = 1; d <= 2; ++d)
    for (auto& m : enumerate_modules(r, side, d)) pool.push_back(m);
  return pool;
}

SuiteReport start_report(const std::string& suite, const std::string& anchor, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = suite;
  rep.anchor = anchor;
  rep.seed = seed;
  return rep;
}

std::string SuiteReport::text() const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  os << "anchor: " << anchor << "\n";
  os << "seed: " << seed << "\n";
  for (const auto& [k, v] : provenance) os << k << ": " << v << "\n";
  os << "instances: " << instances << "\n";
  os << "counterexamples: " << counterexamples.size() << "\n";
  for (std::size_t i = 0; i < counterexamples.size() && i < kShownCounterexamples; ++i)
    os << (i == 0 ? "first counterexample: " : "counterexample: ") << counterexamples[i].where << ": "
       << counterexamples[i].detail << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  os << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

io::json SuiteReport::to_json() const {
  io::json prov = io::json::object();
  for (const auto& [k, v] : provenance) prov[k] = v;
  io::json ce = io::json::array();
  for (const auto& c : counterexamples) ce.push_back({{"where", c.where}, {"detail", c.detail}});
  return {{"suite", suite},   {"anchor", anchor},          {"seed", seed},   {"provenance", prov},
          {"instances", instances}, {"counterexamples", ce}, {"notes", notes}, {"passed", passed()}};
}

}  // namespace homlab
