#include "srmatch/optimize.hpp"

#include <algorithm>
#include <stdexcept>

#include "srmatch/closure.hpp"
#include "srmatch/errors.hpp"

namespace srmatch {

namespace {

struct IntervalProblem {
  std::vector<int> nodes;    // element ids of t & pos, ascending
  std::vector<int> node_of;  // element id -> node index
  ClosureProblem cp;
};

IntervalProblem interval_problem(const Orientation& o, const std::vector<long long>& element_costs,
                                 const Bits& t) {
  const MirrorPoset& p = o.base;
  IntervalProblem ip;
  Bits tpos = t & o.pos;
  ip.nodes = tpos.elements();
  ip.node_of.assign(2 * p.n_pairs, -1);
  for (int i = 0; i < (int)ip.nodes.size(); ++i) ip.node_of[ip.nodes[i]] = i;
  ip.cp.weight.resize(ip.nodes.size());
  for (int i = 0; i < (int)ip.nodes.size(); ++i) ip.cp.weight[i] = element_costs[ip.nodes[i]];
  for (int b : ip.nodes)
    for (int a : ip.nodes)
      if (p.lt(a, b)) ip.cp.deps.push_back({ip.node_of[b], ip.node_of[a]});  // picking b forces a
  return ip;
}

/* extend a chosen positive set to a complete closed subset by filling every
   untouched pair with its negative element */
Bits complete_from_plus(const Orientation& o, const Bits& plus) {
  Bits out(2 * o.base.n_pairs);
  for (int q = 0; q < o.base.n_pairs; ++q) {
    if (plus.test(2 * q))
      out.set(2 * q);
    else if (plus.test(2 * q + 1))
      out.set(2 * q + 1);
    else
      out.set(o.neg.test(2 * q) ? 2 * q : 2 * q + 1);
  }
  if (!is_complete(o.base, out) || !is_closed(o.base, out))
    throw std::logic_error("completed positive set is not a complete closed subset");
  return out;
}

void validate_target(const Orientation& o, const std::vector<long long>& element_costs, const Bits& t) {
  const MirrorPoset& p = o.base;
  if (t.capacity() != 2 * p.n_pairs || !is_complete(p, t) || !is_closed(p, t))
    throw ValidationError("NotInBase", "target set is not a complete closed subset of the base poset");
  if ((int)element_costs.size() != 2 * p.n_pairs)
    throw ValidationError("NotInBase", "element cost vector does not match the poset size");
}

}  // namespace

std::pair<Bits, long long> local_optimum(const Orientation& o, const std::vector<long long>& element_costs,
                                         long long root_cost, const Bits& t) {
  validate_target(o, element_costs, t);
  IntervalProblem ip = interval_problem(o, element_costs, t);
  auto [chosen, weight] = max_closure(ip.cp);
  Bits plus(2 * o.base.n_pairs);
  for (int i : chosen) plus.set(ip.nodes[i]);
  return {complete_from_plus(o, plus), root_cost - weight};
}

std::optional<OptimalResult> optimal_stable_matching(const Instance& inst, const CostFunction& c, int k_max) {
  validate_costs(inst, c);
  if (!solve(inst)) return std::nullopt;
  RotationUniverse u = discover_rotations(inst);
  ReducedPoset rp = reduced_poset(u);

  McoResult mco = min_crossing_orientation(rp.poset, k_max);
  const Orientation& o = mco.orientation;

  Matching root = matching_from_subset(u, o.neg);
  long long root_cost = matching_cost(c, root);
  std::vector<long long> element_costs(2 * rp.poset.n_pairs, 0);
  for (int e = 0; e < 2 * rp.poset.n_pairs; ++e)
    element_costs[e] = rotation_cost(c, u.rotations[rp.rot_of_element[e]].rotation);

  std::vector<Bits> maxima = maximal_elements(o);

  OptimalResult res;
  res.k = mco.crossings;
  res.maximal_count = (int)maxima.size();
  bool have = false;

  auto consider = [&](const Bits& s, long long cost) {
    Matching m = matching_from_subset(u, s);
    if (matching_cost(c, m) != cost)
      throw std::logic_error("interval optimum cost disagrees with its matching");
    if (!have || cost < res.cost || (cost == res.cost && m < res.matching)) {
      res.matching = m;
      res.cost = cost;
      have = true;
    }
  };

  for (const Bits& t : maxima) {
    validate_target(o, element_costs, t);
    IntervalProblem ip = interval_problem(o, element_costs, t);
    ClosureRange range = max_closure_range(ip.cp);
    long long interval_cost = root_cost - range.weight;
    res.per_interval.push_back({t, interval_cost});

    /* equal-cost optima are the minimal closure plus any zero-weight closed
       part of the free zone between the minimal and maximal closures */
    std::vector<char> in_min(ip.nodes.size(), 0);
    for (int i : range.minimal) in_min[i] = 1;
    std::vector<char> in_max(ip.nodes.size(), 0);
    for (int i : range.maximal) in_max[i] = 1;
    std::vector<int> free_nodes;
    for (int i = 0; i < (int)ip.nodes.size(); ++i)
      if (in_max[i] && !in_min[i]) free_nodes.push_back(i);

    if (free_nodes.size() > 20)
      throw BudgetError("CapExceeded", "too many tied optimal closures to rank");

    std::vector<int> free_index(ip.nodes.size(), -1);
    for (int i = 0; i < (int)free_nodes.size(); ++i) free_index[free_nodes[i]] = i;
    std::vector<std::pair<int, int>> free_deps;  // (u, v): u chosen forces v
    for (auto [du, dv] : ip.cp.deps)
      if (free_index[du] >= 0 && free_index[dv] >= 0)
        free_deps.push_back({free_index[du], free_index[dv]});

    int f = (int)free_nodes.size();
    for (unsigned long long mask = 0; mask < (1ull << f); ++mask) {
      long long extra = 0;
      for (int i = 0; i < f; ++i)
        if ((mask >> i) & 1) extra += ip.cp.weight[free_nodes[i]];
      if (extra != 0) continue;
      bool closed = true;
      for (auto [du, dv] : free_deps)
        if (((mask >> du) & 1) && !((mask >> dv) & 1)) {
          closed = false;
          break;
        }
      if (!closed) continue;
      Bits plus(2 * rp.poset.n_pairs);
      for (int i : range.minimal) plus.set(ip.nodes[i]);
      for (int i = 0; i < f; ++i)
        if ((mask >> i) & 1) plus.set(ip.nodes[free_nodes[i]]);
      consider(complete_from_plus(o, plus), interval_cost);
    }
  }
  if (!have) throw std::logic_error("orientation produced no maximal elements");
  return res;
}

}  // namespace srmatch
