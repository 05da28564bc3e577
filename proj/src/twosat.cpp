#include "srmatch/twosat.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace srmatch {

namespace {

/* literal nodes: variable v (1-based) has node 2(v-1) for v and 2(v-1)+1
   for its negation */
int lit_node(int lit) { return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1; }

struct ImplEdge {
  int to;
  int clause;  // index into the combined clause list
};

struct ImplGraph {
  int n_nodes = 0;
  std::vector<std::vector<ImplEdge>> adj;

  void add_clause(const Clause& c, int id) {
    adj[lit_node(-c.a)].push_back({lit_node(c.b), id});
    adj[lit_node(-c.b)].push_back({lit_node(c.a), id});
  }
};

/* kosaraju; component ids increase along the topological order of the
   condensation */
std::vector<int> strong_components(const ImplGraph& g, int& n_comps) {
  int n = g.n_nodes;
  std::vector<std::vector<int>> radj(n);
  for (int v = 0; v < n; ++v)
    for (const auto& e : g.adj[v]) radj[e.to].push_back(v);

  std::vector<char> seen(n, 0);
  std::vector<int> order;
  order.reserve(n);
  std::vector<std::pair<int, size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    stack.push_back({s, 0});
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < g.adj[v].size()) {
        int to = g.adj[v][i++].to;
        if (!seen[to]) {
          seen[to] = 1;
          stack.push_back({to, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<int> comp(n, -1);
  n_comps = 0;
  for (int i = n - 1; i >= 0; --i) {
    int s = order[i];
    if (comp[s] != -1) continue;
    std::vector<int> bfs{s};
    comp[s] = n_comps;
    for (size_t j = 0; j < bfs.size(); ++j)
      for (int w : radj[bfs[j]])
        if (comp[w] == -1) {
          comp[w] = n_comps;
          bfs.push_back(w);
        }
    ++n_comps;
  }
  return comp;
}

/* shortest implication path from one literal node to another; returns the
   clause ids along it */
std::vector<int> path_clauses(const ImplGraph& g, int from, int to) {
  std::vector<int> parent(g.n_nodes, -1), via(g.n_nodes, -1);
  std::queue<int> q;
  q.push(from);
  parent[from] = from;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == to) break;
    for (const auto& e : g.adj[v])
      if (parent[e.to] == -1) {
        parent[e.to] = v;
        via[e.to] = e.clause;
        q.push(e.to);
      }
  }
  std::vector<int> out;
  for (int v = to; v != from; v = parent[v]) out.push_back(via[v]);
  return out;
}

struct CombinedClauses {
  const TwoSatInstance* in;
  int n_hard() const { return static_cast<int>(in->hard.size()); }
  const Clause& get(int id) const {
    return id < n_hard() ? in->hard[id] : in->soft[id - n_hard()];
  }
  bool is_soft(int id) const { return id >= n_hard(); }
};

struct Search {
  explicit Search(const TwoSatInstance& inst) : in(inst) {}

  const TwoSatInstance& in;
  CombinedClauses clauses{&in};
  std::set<std::vector<int>> tried;  // deactivated soft-clause id sets
  std::optional<std::vector<char>> found;

  /* returns true when an assignment was found; deactivated is sorted */
  bool attempt(const std::vector<int>& deactivated, int remaining) {
    ImplGraph g;
    g.n_nodes = 2 * in.n_vars;
    g.adj.assign(g.n_nodes, {});
    int n_hard = clauses.n_hard();
    for (int id = 0; id < n_hard; ++id) g.add_clause(in.hard[id], id);
    for (size_t s = 0; s < in.soft.size(); ++s) {
      int id = n_hard + static_cast<int>(s);
      if (!std::binary_search(deactivated.begin(), deactivated.end(), id))
        g.add_clause(in.soft[s], id);
    }

    int n_comps = 0;
    auto comp = strong_components(g, n_comps);
    int bad_var = 0;
    for (int v = 1; v <= in.n_vars; ++v)
      if (comp[2 * (v - 1)] == comp[2 * (v - 1) + 1]) {
        bad_var = v;
        break;
      }
    if (bad_var == 0) {
      std::vector<char> assignment(in.n_vars, 0);
      for (int v = 1; v <= in.n_vars; ++v)
        assignment[v - 1] = comp[2 * (v - 1)] > comp[2 * (v - 1) + 1] ? 1 : 0;
      found = std::move(assignment);
      return true;
    }
    if (remaining == 0) return false;

    /* the clauses along the two contradiction paths form an unsatisfiable
       core; any assignment within budget must violate one of its soft
       clauses, so branching on those is exhaustive */
    int t_node = 2 * (bad_var - 1), f_node = t_node + 1;
    std::vector<int> core = path_clauses(g, t_node, f_node);
    auto back = path_clauses(g, f_node, t_node);
    core.insert(core.end(), back.begin(), back.end());
    std::vector<int> soft_core;
    for (int id : core)
      if (clauses.is_soft(id)) soft_core.push_back(id);
    std::sort(soft_core.begin(), soft_core.end());
    soft_core.erase(std::unique(soft_core.begin(), soft_core.end()), soft_core.end());

    for (int id : soft_core) {
      std::vector<int> next = deactivated;
      next.insert(std::lower_bound(next.begin(), next.end(), id), id);
      if (!tried.insert(next).second) continue;
      if (attempt(next, remaining - 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool clause_satisfied(const Clause& c, const std::vector<char>& assignment) {
  auto lit = [&](int l) { return l > 0 ? assignment[l - 1] != 0 : assignment[-l - 1] == 0; };
  return lit(c.a) || lit(c.b);
}

int count_soft_violations(const TwoSatInstance& inst, const std::vector<char>& assignment) {
  int count = 0;
  for (const auto& c : inst.soft)
    if (!clause_satisfied(c, assignment)) ++count;
  return count;
}

std::optional<std::vector<char>> solve_2sat(int n_vars, const std::vector<Clause>& clauses) {
  TwoSatInstance inst;
  inst.n_vars = n_vars;
  inst.hard = clauses;
  inst.budget = 0;
  return solve_almost_2sat(inst);
}

std::optional<std::vector<char>> solve_almost_2sat(const TwoSatInstance& inst) {
  Search search(inst);
  if (search.attempt({}, inst.budget)) return search.found;
  return std::nullopt;
}

}  // namespace srmatch
