#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "srmatch/closure.hpp"
#include "srmatch/poset.hpp"
#include "srmatch/twosat.hpp"
#include "srmatch/types.hpp"

namespace srmatch {

/* exhaustive reference implementations, usable only on small inputs */

std::vector<Matching> all_stable_matchings_bruteforce(const Instance& inst);  // n <= 16

std::optional<std::pair<Matching, long long>> optimal_bruteforce(const Instance& inst,
                                                                 const CostFunction& c);

/* minimum crossing count over every complete closed subset, with the
   orientation at the smallest minimizer */
std::pair<int, Orientation> mco_bruteforce(const MirrorPoset& p, long long cap = 1000000);

/* least soft-violation count over assignments satisfying every hard clause */
std::optional<int> min_soft_violations_bruteforce(const TwoSatInstance& inst);

std::pair<std::vector<int>, long long> max_closure_bruteforce(const ClosureProblem& p);

int min_vertex_cover_bruteforce(int n, const std::vector<std::pair<int, int>>& edges);

/* every stable marriage of an instance with distinct man/woman sides,
   as sorted (man, woman) pair lists */
std::vector<std::vector<std::pair<int, int>>> all_stable_marriages_bruteforce(const SMInstance& sm);

}  // namespace srmatch
