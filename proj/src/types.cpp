#include "srmatch/types.hpp"

#include <algorithm>
#include <string>

#include "srmatch/errors.hpp"

namespace srmatch {

Instance Instance::from_prefs(int n, std::vector<std::vector<int>> pref) {
  if (n < 2 || n % 2 != 0)
    throw ValidationError("OddAgentCount", "agent count must be even and at least 2, got " + std::to_string(n));
  if (static_cast<int>(pref.size()) != n)
    throw ValidationError("MissingAgent", "expected " + std::to_string(n) + " preference lists, got " +
                                              std::to_string(pref.size()));
  Instance inst;
  inst.n = n;
  inst.rank.assign(n, std::vector<int>(n, -1));
  for (int a = 1; a <= n; ++a) {
    const auto& list = pref[a - 1];
    if (static_cast<int>(list.size()) != n - 1)
      throw ValidationError("MissingAgent", "agent " + std::to_string(a) + " lists " +
                                                std::to_string(list.size()) + " entries, expected " +
                                                std::to_string(n - 1));
    for (int i = 0; i < n - 1; ++i) {
      int b = list[i];
      if (b < 1 || b > n)
        throw ValidationError("MissingAgent",
                              "agent " + std::to_string(a) + " lists unknown agent " + std::to_string(b));
      if (b == a)
        throw ValidationError("SelfReference", "agent " + std::to_string(a) + " lists itself");
      if (inst.rank[a - 1][b - 1] != -1)
        throw ValidationError("DuplicateEntry", "agent " + std::to_string(a) + " lists agent " +
                                                    std::to_string(b) + " twice");
      inst.rank[a - 1][b - 1] = i;
    }
  }
  inst.pref = std::move(pref);
  return inst;
}

bool Matching::is_perfect() const {
  int n = this->n();
  for (int a = 1; a <= n; ++a) {
    int b = partner[a - 1];
    if (b < 1 || b > n || b == a || partner[b - 1] != a) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n(); ++a) {
    int b = partner[a - 1];
    if (b > a) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::pair<int, int>> blocking_pairs(const Instance& inst, const Matching& m) {
  if (m.n() != inst.n || !m.is_perfect())
    throw ValidationError("NotPerfectMatching", "matching does not pair every agent exactly once");
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= inst.n; ++a)
    for (int b = a + 1; b <= inst.n; ++b) {
      if (m.of(a) == b) continue;
      if (inst.prefers(a, b, m.of(a)) && inst.prefers(b, a, m.of(b))) out.emplace_back(a, b);
    }
  return out;
}

bool is_stable(const Instance& inst, const Matching& m) { return blocking_pairs(inst, m).empty(); }

long long matching_cost(const CostFunction& c, const Matching& m) {
  long long total = 0;
  for (auto [a, b] : m.pairs()) total += c(a, b) + c(b, a);
  return total;
}

CostFunction egalitarian_costs(const Instance& inst) {
  CostFunction c;
  c.n = inst.n;
  c.cost.assign(inst.n, std::vector<long long>(inst.n, 0));
  for (int a = 1; a <= inst.n; ++a)
    for (int b = 1; b <= inst.n; ++b)
      if (a != b) c.cost[a - 1][b - 1] = inst.rank_of(a, b);
  return c;
}

void validate_costs(const Instance& inst, const CostFunction& c) {
  if (c.n != inst.n)
    throw ValidationError("MissingAgent", "cost function covers " + std::to_string(c.n) +
                                              " agents, instance has " + std::to_string(inst.n));
  for (int a = 1; a <= inst.n; ++a) {
    const auto& list = inst.pref[a - 1];
    for (size_t i = 0; i + 1 < list.size(); ++i)
      if (!(c(a, list[i]) < c(a, list[i + 1])))
        throw ValidationError("InconsistentCost",
                              "cost(" + std::to_string(a) + "," + std::to_string(list[i]) +
                                  ") must be less than cost(" + std::to_string(a) + "," +
                                  std::to_string(list[i + 1]) + ") to match the preference order");
  }
}

Instance embed_sm(const SMInstance& sm) {
  int n = sm.n;
  std::vector<std::vector<int>> pref(2 * n);
  for (int i = 1; i <= n; ++i) {
    auto& list = pref[i - 1];
    for (int w : sm.men[i - 1]) list.push_back(n + w);
    for (int k = 1; k <= n; ++k)
      if (k != i) list.push_back(k);
  }
  for (int j = 1; j <= n; ++j) {
    auto& list = pref[n + j - 1];
    for (int m : sm.women[j - 1]) list.push_back(m);
    for (int k = 1; k <= n; ++k)
      if (k != j) list.push_back(n + k);
  }
  return Instance::from_prefs(2 * n, std::move(pref));
}

Matching gale_shapley(const SMInstance& sm) {
  int n = sm.n;
  std::vector<std::vector<int>> wrank(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) wrank[j][sm.women[j][i] - 1] = i;

  std::vector<int> next(n, 0);       // next proposal index per man
  std::vector<int> holds(n, 0);      // woman j-1 holds man id, 0 = none
  std::vector<int> queue;
  for (int i = n; i >= 1; --i) queue.push_back(i);
  while (!queue.empty()) {
    int man = queue.back();
    queue.pop_back();
    int woman = sm.men[man - 1][next[man - 1]++];
    int held = holds[woman - 1];
    if (held == 0) {
      holds[woman - 1] = man;
    } else if (wrank[woman - 1][man - 1] < wrank[woman - 1][held - 1]) {
      holds[woman - 1] = man;
      queue.push_back(held);
    } else {
      queue.push_back(man);
    }
  }
  Matching m(2 * n);
  for (int j = 1; j <= n; ++j) m.match(holds[j - 1], n + j);
  return m;
}

std::vector<std::pair<int, int>> sm_pairs(const Matching& m, int n_men) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_men; ++i) out.emplace_back(i, m.of(i) - n_men);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace srmatch
