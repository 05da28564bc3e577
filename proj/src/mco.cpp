#include "srmatch/mco.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "srmatch/errors.hpp"

namespace srmatch {

std::optional<Orientation> zero_crossing_orientation(const MirrorPoset& p) {
  int m = p.n_elements();
  std::vector<int> comp(m, -1);
  std::vector<std::vector<int>> adj(m);
  for (auto [a, b] : hasse(p)) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int n_comps = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> bfs{s};
    comp[s] = n_comps;
    for (size_t i = 0; i < bfs.size(); ++i)
      for (int w : adj[bfs[i]])
        if (comp[w] == -1) {
          comp[w] = n_comps;
          bfs.push_back(w);
        }
    ++n_comps;
  }

  for (int e = 0; e < m; e += 2)
    if (comp[e] == comp[e + 1]) return std::nullopt;

  /* the dual map sends components to components; pick one component of every
     such pair (the one holding the smaller minimum element) as the negative
     side */
  std::vector<int> comp_min(n_comps, m);
  std::vector<int> comp_dual(n_comps, -1);
  for (int e = 0; e < m; ++e) {
    comp_min[comp[e]] = std::min(comp_min[comp[e]], e);
    int d = comp[MirrorPoset::dual(e)];
    if (comp_dual[comp[e]] == -1) comp_dual[comp[e]] = d;
    else if (comp_dual[comp[e]] != d)
      throw std::logic_error("dual elements of one component land in different components");
  }

  Bits neg(m);
  for (int c = 0; c < n_comps; ++c) {
    int d = comp_dual[c];
    bool take = comp_min[c] < comp_min[d];
    if (!take) continue;
    for (int e = 0; e < m; ++e)
      if (comp[e] == c) neg.set(e);
  }
  return make_orientation(p, neg);
}

namespace {

/* literal that is true exactly when element e sits in the negative side,
   under the rule: variable (e/2)+1 false <=> even element in neg */
int neg_literal(int e) {
  int var = e / 2 + 1;
  return (e % 2 == 0) ? -var : var;
}
int pos_literal(int e) { return -neg_literal(e); }

}  // namespace

TwoSatInstance to_almost_2sat(const MirrorPoset& p) {
  TwoSatInstance inst;
  inst.n_vars = p.n_pairs;
  for (auto [u, v] : hasse(p)) {
    inst.hard.push_back({neg_literal(u), pos_literal(v)});  // forbids u in pos with v in neg
    inst.soft.push_back({pos_literal(u), neg_literal(v)});  // violated exactly on a crossing edge
  }
  return inst;
}

TwoSatInstance to_almost_2sat_replicated(const MirrorPoset& p, int budget) {
  TwoSatInstance inst;
  inst.n_vars = p.n_pairs;
  inst.budget = budget;
  for (auto [u, v] : hasse(p)) {
    for (int c = 0; c <= budget; ++c) inst.soft.push_back({neg_literal(u), pos_literal(v)});
    inst.soft.push_back({pos_literal(u), neg_literal(v)});
  }
  return inst;
}

Orientation orientation_from_assignment(const MirrorPoset& p, const std::vector<char>& assignment) {
  Bits neg(p.n_elements());
  for (int q = 0; q < p.n_pairs; ++q) neg.set(assignment[q] ? 2 * q + 1 : 2 * q);
  return make_orientation(p, neg);
}

McoResult min_crossing_orientation(const MirrorPoset& p, int k_max, McoEncoding encoding) {
  if (auto zero = zero_crossing_orientation(p)) return {*zero, 0, 0};
  for (int k = 1; k <= k_max; ++k) {
    TwoSatInstance inst =
        encoding == McoEncoding::HardSoft ? to_almost_2sat(p) : to_almost_2sat_replicated(p, k);
    inst.budget = k;
    auto assignment = solve_almost_2sat(inst);
    if (!assignment) continue;
    McoResult res;
    res.orientation = orientation_from_assignment(p, *assignment);
    res.crossings = static_cast<int>(crossing_edges(res.orientation).size());
    res.k_used = k;
    if (res.crossings != k)
      throw std::logic_error("crossing count disagrees with the first successful budget");
    return res;
  }
  throw BudgetError("BudgetExceeded",
                    "no orientation found within " + std::to_string(k_max) + " crossing edges");
}

}  // namespace srmatch
