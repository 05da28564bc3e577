#include "srmatch/oracle.hpp"

#include <algorithm>
#include <climits>

#include "srmatch/errors.hpp"

namespace srmatch {

namespace {

void enumerate_perfect(const Instance& inst, Matching& m, std::vector<Matching>& out) {
  int a = 0;
  for (int i = 1; i <= inst.n; ++i)
    if (m.of(i) == 0) {
      a = i;
      break;
    }
  if (a == 0) {
    out.push_back(m);
    return;
  }
  for (int b = a + 1; b <= inst.n; ++b) {
    if (m.of(b) != 0) continue;
    m.match(a, b);
    enumerate_perfect(inst, m, out);
    m.partner[a - 1] = 0;
    m.partner[b - 1] = 0;
  }
}

}  // namespace

std::vector<Matching> all_stable_matchings_bruteforce(const Instance& inst) {
  if (inst.n > 16)
    throw ValidationError("TooLarge", "exhaustive matching enumeration is limited to 16 agents");
  std::vector<Matching> all;
  Matching m(inst.n);
  enumerate_perfect(inst, m, all);
  std::vector<Matching> stable;
  for (const Matching& cand : all)
    if (blocking_pairs(inst, cand).empty()) stable.push_back(cand);
  std::sort(stable.begin(), stable.end());
  return stable;
}

std::optional<std::pair<Matching, long long>> optimal_bruteforce(const Instance& inst,
                                                                 const CostFunction& c) {
  validate_costs(inst, c);
  std::vector<Matching> stable = all_stable_matchings_bruteforce(inst);
  if (stable.empty()) return std::nullopt;
  const Matching* best = nullptr;
  long long best_cost = 0;
  for (const Matching& m : stable) {
    long long cost = matching_cost(c, m);
    if (!best || cost < best_cost || (cost == best_cost && m < *best)) {
      best = &m;
      best_cost = cost;
    }
  }
  return std::make_pair(*best, best_cost);
}

std::pair<int, Orientation> mco_bruteforce(const MirrorPoset& p, long long cap) {
  if (p.n_pairs > 20)
    throw ValidationError("TooLarge", "exhaustive orientation search is limited to 20 dual pairs");
  std::vector<Bits> subs = complete_closed_subsets(p, 20);
  if ((long long)subs.size() > cap)
    throw ValidationError("TooLarge", "too many complete closed subsets to scan");
  auto h = hasse(p);
  int best = INT_MAX;
  Bits best_s;
  for (const Bits& s : subs) {
    int cnt = 0;
    for (auto [u, v] : h)
      if (s.test(u) && !s.test(v)) ++cnt;
    if (cnt < best) {
      best = cnt;
      best_s = s;
    }
  }
  return {best, make_orientation(p, best_s)};
}

std::optional<int> min_soft_violations_bruteforce(const TwoSatInstance& inst) {
  if (inst.n_vars > 22)
    throw ValidationError("TooLarge", "exhaustive assignment scan is limited to 22 variables");
  int best = -1;
  std::vector<char> a(inst.n_vars, 0);
  for (unsigned long long mask = 0; mask < (1ull << inst.n_vars); ++mask) {
    for (int v = 0; v < inst.n_vars; ++v) a[v] = (mask >> v) & 1;
    bool ok = true;
    for (const Clause& cl : inst.hard)
      if (!clause_satisfied(cl, a)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    int bad = 0;
    for (const Clause& cl : inst.soft)
      if (!clause_satisfied(cl, a)) ++bad;
    if (best < 0 || bad < best) best = bad;
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::pair<std::vector<int>, long long> max_closure_bruteforce(const ClosureProblem& p) {
  int n = (int)p.weight.size();
  if (n > 22) throw ValidationError("TooLarge", "exhaustive closure scan is limited to 22 nodes");
  long long best = LLONG_MIN;
  unsigned long long best_mask = 0;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    bool closed = true;
    for (auto [u, v] : p.deps)
      if (((mask >> u) & 1) && !((mask >> v) & 1)) {
        closed = false;
        break;
      }
    if (!closed) continue;
    long long w = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) w += p.weight[i];
    if (w > best) {
      best = w;
      best_mask = mask;
    }
  }
  std::vector<int> chosen;
  for (int i = 0; i < n; ++i)
    if ((best_mask >> i) & 1) chosen.push_back(i);
  return {chosen, best};
}

int min_vertex_cover_bruteforce(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n > 22) throw ValidationError("TooLarge", "exhaustive cover scan is limited to 22 vertices");
  int best = n;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    bool covers = true;
    for (auto [u, v] : edges)
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
        covers = false;
        break;
      }
    if (covers) best = std::min(best, (int)__builtin_popcountll(mask));
  }
  return best;
}

std::vector<std::vector<std::pair<int, int>>> all_stable_marriages_bruteforce(const SMInstance& sm) {
  if (sm.n > 8)
    throw ValidationError("TooLarge", "exhaustive marriage enumeration is limited to 8 couples");
  std::vector<std::vector<int>> mrank(sm.n, std::vector<int>(sm.n));
  std::vector<std::vector<int>> wrank(sm.n, std::vector<int>(sm.n));
  for (int i = 0; i < sm.n; ++i)
    for (int pos = 0; pos < sm.n; ++pos) {
      mrank[i][sm.men[i][pos] - 1] = pos;
      wrank[i][sm.women[i][pos] - 1] = pos;
    }
  std::vector<int> wife(sm.n);
  for (int i = 0; i < sm.n; ++i) wife[i] = i + 1;
  std::vector<std::vector<std::pair<int, int>>> out;
  std::sort(wife.begin(), wife.end());
  do {
    bool stable = true;
    for (int m = 1; m <= sm.n && stable; ++m)
      for (int w = 1; w <= sm.n; ++w) {
        if (wife[m - 1] == w) continue;
        int husband = 0;
        for (int i = 1; i <= sm.n; ++i)
          if (wife[i - 1] == w) husband = i;
        if (mrank[m - 1][w - 1] < mrank[m - 1][wife[m - 1] - 1] &&
            wrank[w - 1][m - 1] < wrank[w - 1][husband - 1]) {
          stable = false;
          break;
        }
      }
    if (stable) {
      std::vector<std::pair<int, int>> pairs;
      for (int m = 1; m <= sm.n; ++m) pairs.push_back({m, wife[m - 1]});
      out.push_back(pairs);
    }
  } while (std::next_permutation(wife.begin(), wife.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace srmatch
