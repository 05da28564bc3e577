#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "srmatch/bits.hpp"
#include "srmatch/irving.hpp"
#include "srmatch/mco.hpp"
#include "srmatch/poset.hpp"
#include "srmatch/types.hpp"

namespace srmatch {

/* cheapest complete closed subset in the interval between o.neg and t.
   element_costs[e] is the rotation cost of the rotation behind element e and
   root_cost is the matching cost of the orientation's base matching. */
std::pair<Bits, long long> local_optimum(const Orientation& o, const std::vector<long long>& element_costs,
                                         long long root_cost, const Bits& t);

struct IntervalReport {
  Bits maximal;
  long long cost = 0;
};

struct OptimalResult {
  Matching matching;
  long long cost = 0;
  int k = 0;            // minimum crossing count of the reduced poset
  int maximal_count = 0;
  std::vector<IntervalReport> per_interval;
};

/* the full pipeline: rotation discovery, minimum-crossing orientation,
   maximal elements, one closure per interval, global minimum; nothing when
   the instance is unsolvable */
std::optional<OptimalResult> optimal_stable_matching(const Instance& inst, const CostFunction& c,
                                                     int k_max = 16);

}  // namespace srmatch
