#pragma once

#include <optional>
#include <vector>

namespace srmatch {

/* literals are nonzero integers: +v is variable v, -v its negation, 1-based */
struct Clause {
  int a = 0;
  int b = 0;
};

struct TwoSatInstance {
  int n_vars = 0;
  std::vector<Clause> hard;
  std::vector<Clause> soft;
  int budget = 0;  // maximum soft violations
};

/* assignment[v-1] is the value of variable v; all hard clauses satisfied and
   at most budget soft clauses violated, or nothing if impossible.  Found by
   conflict branching: on an unsatisfiable core, branch on deactivating each
   soft clause of the core, to depth at most budget. */
std::optional<std::vector<char>> solve_almost_2sat(const TwoSatInstance& inst);

/* plain 2-sat satisfiability */
std::optional<std::vector<char>> solve_2sat(int n_vars, const std::vector<Clause>& clauses);

bool clause_satisfied(const Clause& c, const std::vector<char>& assignment);
int count_soft_violations(const TwoSatInstance& inst, const std::vector<char>& assignment);

}  // namespace srmatch
