#include "tlteach/setcover.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace tlteach {

namespace {

std::vector<std::uint32_t> to_masks(const IdList& universe, const std::vector<IdList>& family) {
  std::map<std::size_t, int> bit;
  for (std::size_t i = 0; i < universe.size(); ++i) bit[universe[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> masks;
  masks.reserve(family.size());
  for (const auto& set : family) {
    std::uint32_t m = 0;
    for (std::size_t e : set) {
      auto it = bit.find(e);
      if (it != bit.end()) m |= 1U << it->second;
    }
    masks.push_back(m);
  }
  return masks;
}

}  // namespace

CoverResult optimal_set_cover(const IdList& universe, const std::vector<IdList>& family,
                              const std::vector<double>& costs, std::size_t max_universe) {
  if (family.size() != costs.size()) throw std::invalid_argument("family and costs differ in size");
  if (universe.size() > max_universe || universe.size() > 30) {
    throw std::invalid_argument("universe too large for exact set cover");
  }
  CoverResult r;
  const std::size_t u = universe.size();
  const std::uint32_t full = u == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << u) - 1);
  if (u == 0) {
    r.coverable = true;
    return r;
  }
  const auto masks = to_masks(universe, family);
  // Cheapest member per distinct mask.
  std::map<std::uint32_t, std::size_t> best_member;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (masks[i] == 0) continue;
    auto [it, inserted] = best_member.emplace(masks[i], i);
    if (!inserted && costs[i] < costs[it->second]) it->second = i;
  }
  // by_bit[b]: candidate members covering element b.
  std::vector<std::vector<std::size_t>> by_bit(u);
  for (const auto& [m, i] : best_member) {
    for (std::size_t b = 0; b < u; ++b) {
      if ((m >> b) & 1U) by_bit[b].push_back(i);
    }
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> f(std::size_t{1} << u, kInf);
  std::vector<std::int64_t> choice(std::size_t{1} << u, -1);
  f[0] = 0;
  // f[U] = min over members covering the lowest element of U.
  for (std::uint32_t uncovered = 1; uncovered <= full; ++uncovered) {
    const int low = __builtin_ctz(uncovered);
    for (std::size_t i : by_bit[static_cast<std::size_t>(low)]) {
      const std::uint32_t rest = uncovered & ~masks[i];
      const double c = costs[i] + f[rest];
      if (c < f[uncovered]) {
        f[uncovered] = c;
        choice[uncovered] = static_cast<std::int64_t>(i);
      }
    }
  }
  if (f[full] == kInf) return r;
  r.coverable = true;
  r.cost = f[full];
  for (std::uint32_t cur = full; cur;) {
    const auto i = static_cast<std::size_t>(choice[cur]);
    r.chosen.push_back(i);
    cur &= ~masks[i];
  }
  return r;
}

CoverResult greedy_set_cover(const IdList& universe, const std::vector<IdList>& family,
                             const std::vector<double>& costs) {
  CoverResult r;
  std::vector<bool> covered(universe.size(), false);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < universe.size(); ++i) pos[universe[i]] = i;
  std::size_t left = universe.size();
  while (left > 0) {
    double best_ratio = 0;
    std::size_t best = family.size();
    for (std::size_t i = 0; i < family.size(); ++i) {
      std::size_t gain = 0;
      for (std::size_t e : family[i]) {
        auto it = pos.find(e);
        if (it != pos.end() && !covered[it->second]) ++gain;
      }
      const double ratio = static_cast<double>(gain) / costs[i];
      if (gain > 0 && ratio > best_ratio) {
        best_ratio = ratio;
        best = i;
      }
    }
    if (best == family.size()) return r;
    r.chosen.push_back(best);
    r.cost += costs[best];
    for (std::size_t e : family[best]) {
      auto it = pos.find(e);
      if (it != pos.end() && !covered[it->second]) {
        covered[it->second] = true;
        --left;
      }
    }
  }
  r.coverable = true;
  return r;
}

}  // namespace tlteach
