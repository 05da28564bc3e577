#include "srmatch/gen.hpp"

#include <algorithm>
#include <numeric>

#include "srmatch/errors.hpp"
#include "srmatch/irving.hpp"

namespace srmatch {

uint64_t SplitMix64::below(uint64_t bound) {
  uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

Instance gen_random_sr(uint64_t seed, int n) {
  if (n < 2 || n % 2 != 0)
    throw ValidationError("OddAgentCount", "agent count must be a positive even number");
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> pref(n);
  for (int a = 1; a <= n; ++a) {
    std::vector<int>& list = pref[a - 1];
    for (int b = 1; b <= n; ++b)
      if (b != a) list.push_back(b);
    rng.shuffle(list);
  }
  return Instance::from_prefs(n, std::move(pref));
}

Instance gen_solvable_sr(uint64_t seed, int n, int max_attempts) {
  for (int t = 0; t < max_attempts; ++t) {
    Instance inst = gen_random_sr(seed + (uint64_t)t, n);
    if (solve(inst)) return inst;
  }
  throw BudgetError("GiveUp", "no solvable instance found within the attempt limit");
}

SMInstance gen_random_sm(uint64_t seed, int n) {
  if (n < 1) throw ValidationError("OddAgentCount", "need at least one couple");
  SplitMix64 rng(seed);
  SMInstance sm;
  sm.n = n;
  sm.men.resize(n);
  sm.women.resize(n);
  for (int i = 0; i < n; ++i) {
    sm.men[i].resize(n);
    std::iota(sm.men[i].begin(), sm.men[i].end(), 1);
    rng.shuffle(sm.men[i]);
  }
  for (int j = 0; j < n; ++j) {
    sm.women[j].resize(n);
    std::iota(sm.women[j].begin(), sm.women[j].end(), 1);
    rng.shuffle(sm.women[j]);
  }
  return sm;
}

CostFunction gen_random_costs(uint64_t seed, const Instance& inst) {
  SplitMix64 rng(seed);
  CostFunction c;
  c.n = inst.n;
  c.cost.assign(inst.n, std::vector<long long>(inst.n, 0));
  for (int a = 1; a <= inst.n; ++a) {
    long long v = (long long)rng.below(101) - 50;
    for (int b : inst.pref[a - 1]) {
      c.cost[a - 1][b - 1] = v;
      v += 1 + (long long)rng.below(10);
    }
  }
  return c;
}

Graph named_graph(const std::string& name) {
  Graph g;
  if (name == "k4") {
    g.n = 4;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.edges.push_back({i, j});
  } else if (name == "k33") {
    g.n = 6;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) g.edges.push_back({i, j});
  } else if (name == "cube") {
    g.n = 8;
    for (int i = 0; i < 8; ++i)
      for (int bit = 0; bit < 3; ++bit) {
        int j = i ^ (1 << bit);
        if (i < j) g.edges.push_back({i, j});
      }
  } else if (name == "petersen") {
    g.n = 10;
    for (int i = 0; i < 5; ++i) {
      g.edges.push_back({i, (i + 1) % 5});
      g.edges.push_back({i, i + 5});
      g.edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    for (auto& [a, b] : g.edges)
      if (a > b) std::swap(a, b);
  } else {
    throw ValidationError("UnknownName", "unknown graph name: " + name);
  }
  return g;
}

MirrorPoset mvc_gadget_poset(const Graph& g) {
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
      throw ValidationError("NotThreeRegular", "graph has an invalid edge");
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < g.n; ++v)
    if (deg[v] != 3)
      throw ValidationError("NotThreeRegular", "vertex " + std::to_string(v) + " has degree " +
                                                   std::to_string(deg[v]));
  std::vector<std::pair<int, int>> lt;
  for (auto [u, v] : g.edges) {
    lt.push_back({2 * u, 2 * v + 1});
    lt.push_back({2 * v, 2 * u + 1});
  }
  return check_mirror(g.n, lt);
}

}  // namespace srmatch
