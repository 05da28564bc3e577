#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "srmatch/bits.hpp"
#include "srmatch/errors.hpp"
#include "srmatch/gen.hpp"
#include "srmatch/poset.hpp"

namespace srmatch::testutil {

/* five-dual-pair reference poset used across the suites; its seven complete
   closed subsets form a median graph with seven edges */
inline const char* kFivePairPoset =
    "mp 5\n"
    "1 < 4\n"
    "1 < 5\n"
    "2 < 5\n"
    "2 < -4\n"
    "3 < -4\n"
    "3 < -5\n";

/* subset from signed pair names: +i picks element 2(i-1), -i its dual */
inline Bits named_subset(int n_pairs, std::initializer_list<int> names) {
  Bits s(2 * n_pairs);
  for (int v : names) s.set(v > 0 ? 2 * (v - 1) : 2 * (-v - 1) + 1);
  return s;
}

/* random valid mirror poset: shuffle candidate relations and keep each one
   that preserves validity */
inline MirrorPoset random_mirror_poset(uint64_t seed, int pairs, int attempts) {
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> kept;
  MirrorPoset p = check_mirror(pairs, kept);
  for (int i = 0; i < attempts; ++i) {
    int a = (int)rng.below((uint64_t)(2 * pairs));
    int b = (int)rng.below((uint64_t)(2 * pairs));
    if (a == b || (a ^ 1) == b) continue;
    auto cand = kept;
    cand.push_back({a, b});
    cand.push_back({b ^ 1, a ^ 1});
    try {
      p = check_mirror(pairs, cand);
      kept = cand;
    } catch (const ValidationError&) {
    }
  }
  return p;
}

}  // namespace srmatch::testutil
