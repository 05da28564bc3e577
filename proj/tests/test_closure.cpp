#include "doctest.h"

#include <algorithm>
#include <set>

#include "srmatch/closure.hpp"
#include "srmatch/errors.hpp"
#include "srmatch/gen.hpp"
#include "srmatch/oracle.hpp"

using namespace srmatch;

namespace {

bool closed_under(const ClosureProblem& p, const std::vector<int>& chosen) {
  std::set<int> in(chosen.begin(), chosen.end());
  for (auto [u, v] : p.deps)
    if (in.count(u) && !in.count(v)) return false;
  return true;
}

long long weight_of(const ClosureProblem& p, const std::vector<int>& chosen) {
  long long w = 0;
  for (int v : chosen) w += p.weight[v];
  return w;
}

/* random acyclic dependencies: edges point from higher to lower rank in a
   shuffled node order */
ClosureProblem random_problem(uint64_t seed, int n, int extra_edges) {
  SplitMix64 rng(seed);
  ClosureProblem p;
  p.weight.resize(n);
  for (int i = 0; i < n; ++i) p.weight[i] = (long long)rng.below(21) - 10;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  for (int e = 0; e < extra_edges; ++e) {
    int u = (int)rng.below(n), v = (int)rng.below(n);
    if (rank[u] > rank[v]) p.deps.push_back({u, v});
  }
  return p;
}

}  // namespace

TEST_CASE("maximum flow matches the bottleneck cut on a small network") {
  FlowNetwork net;
  net.n_nodes = 4;
  net.source = 0;
  net.sink = 3;
  net.arcs = {{0, 1, 3}, {0, 2, 2}, {1, 2, 5}, {1, 3, 2}, {2, 3, 3}};
  FlowResult r = max_flow(net);
  CHECK(r.value == 5);
  /* the min cut isolates the source */
  CHECK(r.source_side == std::vector<int>{0});
}

TEST_CASE("zero capacity means zero flow") {
  FlowNetwork net;
  net.n_nodes = 3;
  net.source = 0;
  net.sink = 2;
  net.arcs = {{0, 1, 0}, {1, 2, 7}};
  FlowResult r = max_flow(net);
  CHECK(r.value == 0);
  CHECK(std::count(r.source_side.begin(), r.source_side.end(), 2) == 0);
}

TEST_CASE("closure of a two-node chain weighs the dependency cost") {
  /* picking the +5 node forces the -3 node; still worth it */
  ClosureProblem p;
  p.weight = {5, -3};
  p.deps = {{0, 1}};
  auto [chosen, w] = max_closure(p);
  CHECK(w == 2);
  CHECK(chosen == std::vector<int>{0, 1});

  /* not worth it when the burden outweighs the gain */
  p.weight = {5, -9};
  auto [chosen2, w2] = max_closure(p);
  CHECK(w2 == 0);
  CHECK(chosen2.empty());
}

TEST_CASE("closure weight can never be negative") {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    ClosureProblem p = random_problem(seed, 10, 14);
    auto [chosen, w] = max_closure(p);
    CHECK(w >= 0);
    CHECK(closed_under(p, chosen));
    CHECK(weight_of(p, chosen) == w);
  }
}

TEST_CASE("cyclic dependencies are rejected") {
  ClosureProblem p;
  p.weight = {1, 1, 1};
  p.deps = {{0, 1}, {1, 2}, {2, 0}};
  try {
    max_closure(p);
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "CycleDetected");
  }
}

TEST_CASE("closure optimum equals the exhaustive scan") {
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    ClosureProblem p = random_problem(seed, 12, 18);
    auto [mine, w] = max_closure(p);
    auto [best, bw] = max_closure_bruteforce(p);
    CHECK(w == bw);
    CHECK(closed_under(p, mine));
    CHECK(weight_of(p, mine) == bw);
  }
}

TEST_CASE("closure results are deterministic") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    ClosureProblem p = random_problem(seed, 12, 18);
    CHECK(max_closure(p) == max_closure(p));
  }
}

TEST_CASE("the optimal closures form an interval between the range endpoints") {
  for (uint64_t seed = 1; seed <= 120; ++seed) {
    ClosureProblem p = random_problem(seed, 10, 12);
    ClosureRange r = max_closure_range(p);
    int n = (int)p.weight.size();

    /* collect every optimal closure exhaustively */
    std::vector<std::set<int>> optima;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> chosen;
      for (int v = 0; v < n; ++v)
        if (mask & (1 << v)) chosen.push_back(v);
      if (!closed_under(p, chosen)) continue;
      if (weight_of(p, chosen) == r.weight) optima.push_back({chosen.begin(), chosen.end()});
    }
    REQUIRE(!optima.empty());

    std::set<int> inter = optima[0], uni = optima[0];
    for (const auto& o : optima) {
      std::set<int> tmp;
      std::set_intersection(inter.begin(), inter.end(), o.begin(), o.end(),
                            std::inserter(tmp, tmp.begin()));
      inter.swap(tmp);
      uni.insert(o.begin(), o.end());
    }
    /* minimal is the intersection of all optima, maximal their union */
    CHECK(std::vector<int>(inter.begin(), inter.end()) == r.minimal);
    CHECK(std::vector<int>(uni.begin(), uni.end()) == r.maximal);
  }
}

TEST_CASE("range endpoints agree with the plain closure call") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    ClosureProblem p = random_problem(seed, 12, 16);
    auto [chosen, w] = max_closure(p);
    ClosureRange r = max_closure_range(p);
    CHECK(r.weight == w);
    CHECK(r.minimal == chosen);
    std::vector<int> mini = r.minimal, maxi = r.maximal;
    CHECK(std::includes(maxi.begin(), maxi.end(), mini.begin(), mini.end()));
    CHECK(closed_under(p, r.maximal));
    CHECK(weight_of(p, r.maximal) == w);
  }
}
