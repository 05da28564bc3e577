#pragma once

#include <utility>
#include <vector>

namespace srmatch {

/* closure semantics: if u is chosen then v must be chosen for every
   dependency (u, v); the dependency graph must be acyclic */
struct ClosureProblem {
  std::vector<long long> weight;
  std::vector<std::pair<int, int>> deps;
};

struct FlowNetwork {
  int n_nodes = 0;
  int source = 0;
  int sink = 0;
  struct Arc {
    int from, to;
    long long capacity;
  };
  std::vector<Arc> arcs;
};

struct FlowResult {
  long long value = 0;
  std::vector<int> source_side;  // nodes reachable from source in the residual graph, sorted
};

FlowResult max_flow(const FlowNetwork& net);

/* maximum-weight closed subset; ties resolved by the canonical min cut
   (residual reachability), so the result is deterministic */
std::pair<std::vector<int>, long long> max_closure(const ClosureProblem& p);

/* the optimal closures form a lattice; minimal is the canonical cut above and
   maximal is its counterpart from the sink side.  Every optimal closure is
   minimal plus a zero-weight closed portion of maximal minus minimal. */
struct ClosureRange {
  std::vector<int> minimal;
  std::vector<int> maximal;
  long long weight = 0;
};

ClosureRange max_closure_range(const ClosureProblem& p);

}  // namespace srmatch
