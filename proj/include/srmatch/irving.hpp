#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "srmatch/bits.hpp"
#include "srmatch/poset.hpp"
#include "srmatch/types.hpp"

namespace srmatch {

/* a reduced preference structure: each agent's ordered remaining candidates.
   Borrows the instance it was built from; keep that instance alive. */
struct Table {
  const Instance* inst = nullptr;
  std::vector<std::vector<int>> lists;  // lists[a-1], subsequence of a's preference list

  int first(int a) const { return lists[a - 1].front(); }
  int second(int a) const { return lists[a - 1][1]; }
  int last(int a) const { return lists[a - 1].back(); }
  bool contains(int a, int b) const;
  bool all_singletons() const;
  Matching as_matching() const;  // valid once every list is a singleton
  Bits pair_key() const;         // remaining unordered pairs, for memoization
  bool operator==(const Table& o) const { return lists == o.lists; }
};

/* cyclic sequence (x_0,y_0)..(x_{r-1},y_{r-1}) with y_i = first(x_i) and
   y_{i+1} = second(x_i) in the exposing table; stored rotated so the
   minimum x comes first */
struct Rotation {
  std::vector<std::pair<int, int>> cycle;

  int size() const { return static_cast<int>(cycle.size()); }
  bool operator==(const Rotation& o) const { return cycle == o.cycle; }
  bool operator<(const Rotation& o) const { return cycle < o.cycle; }
};

Rotation canonicalize(std::vector<std::pair<int, int>> cycle);
/* the reversal (y_1,x_0),(y_2,x_1),...,(y_0,x_{r-1}), canonicalized */
Rotation reversal(const Rotation& r);

enum class RotationKind { Singular, NonSingular };

struct RotationInfo {
  Rotation rotation;
  RotationKind kind = RotationKind::Singular;
  int dual = -1;  // rotation id of the reversal when non-singular
};

struct RotationUniverse {
  Instance inst;
  std::vector<RotationInfo> rotations;          // index = rotation id
  std::vector<int> singulars;                   // ids, ascending
  std::vector<std::pair<int, int>> dual_pairs;  // (low id, high id), ascending
  std::vector<Bits> pred;                       // pred[id]: strict predecessors, over rotation ids
  std::vector<std::vector<int>> base_lists;     // phase-1 table
  std::vector<std::vector<int>> prime_lists;    // phase-1 table with all singular rotations eliminated
  std::vector<std::pair<int, int>> fixed_pairs; // pairs present in every stable matching
  Matching eta;                                 // the deterministic solver's matching
  long long tables_explored = 0;

  Table base_table() const { return Table{&inst, base_lists}; }
  Table prime_table() const { return Table{&inst, prime_lists}; }
  bool lt(int s, int r) const { return pred[r].test(s); }
};

/* the reduced rotation poset together with the element <-> rotation maps */
struct ReducedPoset {
  MirrorPoset poset;
  std::vector<int> rot_of_element;
  std::vector<int> element_of_rot;  // -1 for singular rotations
};

std::optional<Table> phase1(const Instance& inst);

/* all rotations exposed in t, canonicalized and sorted */
std::vector<Rotation> exposed_rotations(const Table& t);

std::optional<Table> try_eliminate(const Table& t, const Rotation& rho);
Table eliminate(const Table& t, const Rotation& rho);  // throws EmptyListFailure

std::optional<Matching> solve(const Instance& inst);

RotationUniverse discover_rotations(const Instance& inst, long long table_cap = 200000);

ReducedPoset reduced_poset(const RotationUniverse& u);

/* reconstruct the stable matching for a complete closed subset of the
   reduced poset (elements of reduced_poset(u)) */
Matching matching_from_subset(const RotationUniverse& u, const Bits& s);

long long rotation_cost(const CostFunction& c, const Rotation& rho);

}  // namespace srmatch
