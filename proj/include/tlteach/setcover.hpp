#pragma once

#include <cstdint>
#include <vector>

#include "tlteach/learner.hpp"

namespace tlteach {

struct CoverResult {
  bool coverable = false;
  IdList chosen;  // indices into the family
  double cost = 0;
};

/// Exact minimum-cost cover of `universe` by members of `family`, by dynamic programming
/// over the uncovered subset. Elements outside the universe are ignored.
CoverResult optimal_set_cover(const IdList& universe, const std::vector<IdList>& family,
                              const std::vector<double>& costs, std::size_t max_universe = 24);

/// Greedy rule: repeatedly take the member with the best new-coverage / cost ratio.
CoverResult greedy_set_cover(const IdList& universe, const std::vector<IdList>& family,
                             const std::vector<double>& costs);

}  // namespace tlteach
