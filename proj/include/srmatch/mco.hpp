#pragma once

#include <optional>

#include "srmatch/poset.hpp"
#include "srmatch/twosat.hpp"

namespace srmatch {

/* crossing-free orientation via connected components of the undirected hasse
   diagram; nothing iff some dual pair shares a component */
std::optional<Orientation> zero_crossing_orientation(const MirrorPoset& p);

/* one variable per dual pair; variable false puts the pair's even element in
   neg.  Per hasse edge (u,v): a hard clause forbidding u in pos with v in neg
   (closure) and a soft clause whose violation is exactly a crossing edge. */
TwoSatInstance to_almost_2sat(const MirrorPoset& p);

/* the replicated encoding: every clause soft, with the closure clause of each
   edge repeated budget+1 times so violating it can never fit the budget */
TwoSatInstance to_almost_2sat_replicated(const MirrorPoset& p, int budget);

Orientation orientation_from_assignment(const MirrorPoset& p, const std::vector<char>& assignment);

struct McoResult {
  Orientation orientation;
  int crossings = 0;
  int k_used = 0;
};

enum class McoEncoding { HardSoft, Replicated };

/* zero test, then budgets 1..k_max; the first success is the minimum */
McoResult min_crossing_orientation(const MirrorPoset& p, int k_max = 16,
                                   McoEncoding encoding = McoEncoding::HardSoft);

}  // namespace srmatch
