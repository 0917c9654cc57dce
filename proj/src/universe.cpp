#include "homlab/universe.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace homlab {

std::string UniverseSpec::describe() const {
  return std::string(side_name(side)) + " complexes on [" + std::to_string(lo) + "," + std::to_string(hi) +
         "], dim <= " + std::to_string(dimcap) + " per degree";
}

std::vector<Module> universe_modules(const AlgebraPtr& r, Side side, std::size_t dimcap) {
  std::vector<Module> out{zero_module(r, side)};
  for (std::size_t d = 1; d <= dimcap; ++d)
    for (auto& m : enumerate_modules(r, side, d)) out.push_back(std::move(m));
  return out;
}

namespace {

// All elements of a Hom space, coordinates in lexicographic order (first coordinate slowest).
std::vector<Matrix> hom_elements(const HomSpace& h, std::uint32_t p) {
  std::vector<Matrix> out;
  const std::size_t n = h.dim();
  std::vector<std::uint32_t> digits(n, 0);
  for (;;) {
    Matrix c(p, n, 1);
    for (std::size_t i = 0; i < n; ++i) c.at(i, 0) = digits[i];
    out.push_back(h.element_of(c));
    std::size_t i = n;
    while (i > 0 && ++digits[i - 1] == p) digits[--i] = 0;
    if (i == 0) return out;
  }
}

}  // namespace

std::vector<ChainComplex> enumerate_complexes(const AlgebraPtr& r, const UniverseSpec& spec) {
  if (spec.hi < spec.lo) throw std::invalid_argument("universe window is empty");
  const auto mods = universe_modules(r, spec.side, spec.dimcap);
  const std::size_t len = static_cast<std::size_t>(spec.hi - spec.lo + 1);

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Matrix>> homs;
  auto elements = [&](std::size_t s, std::size_t t) -> const std::vector<Matrix>& {
    auto it = homs.find({s, t});
    if (it == homs.end()) it = homs.emplace(std::make_pair(s, t), hom_elements(hom_space(mods[s], mods[t]), r->p())).first;
    return it->second;
  };

  std::vector<ChainComplex> out;
  std::vector<std::size_t> choice(len, 0);
  std::vector<Module> terms(len);
  std::vector<Matrix> diffs(len - 1);
  // diffs[i] is the differential from degree lo+i+1 to lo+i.
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i + 1 == len) {
      out.push_back(ChainComplex::make(r, spec.side, spec.lo, terms, diffs, false));
      return;
    }
    for (const Matrix& d : elements(choice[i + 1], choice[i])) {
      if (i > 0 && !(diffs[i - 1] * d).is_zero()) continue;
      diffs[i] = d;
      place(i + 1);
    }
  };
  for (;;) {
    for (std::size_t i = 0; i < len; ++i) terms[i] = mods[choice[i]];
    place(0);
    std::size_t i = len;
    while (i > 0 && ++choice[i - 1] == mods.size()) choice[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace homlab
