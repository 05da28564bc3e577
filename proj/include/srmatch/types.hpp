#pragma once

#include <utility>
#include <vector>

namespace srmatch {

/* agents are the 1-based integers 1..n; n is even and every preference list
   is a strict total order over all other agents */
struct Instance {
  int n = 0;
  std::vector<std::vector<int>> pref;  // pref[a-1]: agents in decreasing preference
  std::vector<std::vector<int>> rank;  // rank[a-1][b-1]: 0-based position of b in a's list

  static Instance from_prefs(int n, std::vector<std::vector<int>> pref);

  bool prefers(int a, int b, int c) const { return rank[a - 1][b - 1] < rank[a - 1][c - 1]; }
  int rank_of(int a, int b) const { return rank[a - 1][b - 1]; }
};

struct Matching {
  std::vector<int> partner;  // partner[a-1] is a's partner, 1-based; 0 = unmatched

  Matching() = default;
  explicit Matching(int n) : partner(n, 0) {}
  int n() const { return static_cast<int>(partner.size()); }
  int of(int a) const { return partner[a - 1]; }
  void match(int a, int b) {
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  bool is_perfect() const;
  std::vector<std::pair<int, int>> pairs() const;  // sorted (low, high) pairs

  bool operator==(const Matching& o) const { return partner == o.partner; }
  bool operator!=(const Matching& o) const { return !(*this == o); }
  bool operator<(const Matching& o) const { return pairs() < o.pairs(); }
};

/* per ordered pair integer costs; strictly increasing along preference lists */
struct CostFunction {
  int n = 0;
  std::vector<std::vector<long long>> cost;  // cost[a-1][b-1]; diagonal unused

  long long operator()(int a, int b) const { return cost[a - 1][b - 1]; }
};

struct SMInstance {
  int n = 0;
  std::vector<std::vector<int>> men;    // men[i-1]: woman ids 1..n in preference order
  std::vector<std::vector<int>> women;  // women[j-1]: man ids 1..n in preference order
};

std::vector<std::pair<int, int>> blocking_pairs(const Instance& inst, const Matching& m);
bool is_stable(const Instance& inst, const Matching& m);

long long matching_cost(const CostFunction& c, const Matching& m);
CostFunction egalitarian_costs(const Instance& inst);
void validate_costs(const Instance& inst, const CostFunction& c);

/* men keep ids 1..n, woman j becomes agent n+j; every list starts with the
   original opposite-side list and ends with the own side in ascending order */
Instance embed_sm(const SMInstance& sm);

/* man-optimal stable marriage on the embedded agent ids (man i, woman n+j) */
Matching gale_shapley(const SMInstance& sm);

/* convert a matching over embedded ids back to (man, woman) pairs */
std::vector<std::pair<int, int>> sm_pairs(const Matching& m, int n_men);

}  // namespace srmatch
