#include "srmatch/closure.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "srmatch/errors.hpp"

namespace srmatch {

namespace {

/* dinic with integer capacities; arcs are stored in insertion order and the
   reverse arc of edge id is id^1, so augmentation is deterministic */
class Dinic {
public:
  explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_arc(int from, int to, long long cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  long long run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (long long pushed = dfs(s, t, kInf)) flow += pushed;
    }
    return flow;
  }

  std::vector<int> residual_reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[v]; e != -1; e = edges_[e].next)
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = 1;
          q.push(edges_[e].to);
        }
    }
    std::vector<int> out;
    for (size_t v = 0; v < seen.size(); ++v)
      if (seen[v]) out.push_back(static_cast<int>(v));
    return out;
  }

  /* nodes with a residual path to t; the tail of edge e is edges_[e^1].to */
  std::vector<char> residual_reaches(int t) const {
    std::vector<std::vector<int>> in(head_.size());
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) in[edges_[e].to].push_back(e);
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{t};
    seen[t] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : in[v])
        if (edges_[e].cap > 0) {
          int u = edges_[e ^ 1].to;
          if (!seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
        }
    }
    return seen;
  }

private:
  static constexpr long long kInf = (1LL << 62);

  struct Edge {
    int to, next;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[v]; e != -1; e = edges_[e].next)
        if (edges_[e].cap > 0 && level_[edges_[e].to] == -1) {
          level_[edges_[e].to] = level_[v] + 1;
          q.push(edges_[e].to);
        }
    }
    return level_[t] != -1;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t || limit == 0) return limit;
    for (int& e = it_[v]; e != -1; e = edges_[e].next) {
      int to = edges_[e].to;
      if (edges_[e].cap <= 0 || level_[to] != level_[v] + 1) continue;
      long long pushed = dfs(to, t, std::min(limit, edges_[e].cap));
      if (pushed > 0) {
        edges_[e].cap -= pushed;
        edges_[e ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_, level_, it_;
  std::vector<Edge> edges_;
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  Dinic d(net.n_nodes);
  for (const auto& a : net.arcs) d.add_arc(a.from, a.to, a.capacity);
  FlowResult r;
  r.value = d.run(net.source, net.sink);
  r.source_side = d.residual_reachable(net.source);
  return r;
}

ClosureRange max_closure_range(const ClosureProblem& p) {
  int n = static_cast<int>(p.weight.size());

  /* reject cyclic dependency graphs */
  {
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : p.deps) {
      adj[u].push_back(v);
      ++indeg[v];
    }
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) q.push(v);
    int seen = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      ++seen;
      for (int w : adj[v])
        if (--indeg[w] == 0) q.push(w);
    }
    if (seen != n) throw ValidationError("CycleDetected", "closure dependencies contain a cycle");
  }

  long long inf = 1;
  for (long long w : p.weight) inf += w < 0 ? -w : w;

  int source = n, sink = n + 1;
  Dinic d(n + 2);
  long long positive_total = 0;
  for (int v = 0; v < n; ++v) {
    if (p.weight[v] > 0) {
      d.add_arc(source, v, p.weight[v]);
      positive_total += p.weight[v];
    } else if (p.weight[v] < 0) {
      d.add_arc(v, sink, -p.weight[v]);
    }
  }
  for (auto [u, v] : p.deps) d.add_arc(u, v, inf);

  long long value = d.run(source, sink);

  ClosureRange r;
  r.weight = positive_total - value;
  for (int v : d.residual_reachable(source))
    if (v < n) r.minimal.push_back(v);
  std::vector<char> to_sink = d.residual_reaches(sink);
  for (int v = 0; v < n; ++v)
    if (!to_sink[v]) r.maximal.push_back(v);

  long long check_min = 0, check_max = 0;
  for (int v : r.minimal) check_min += p.weight[v];
  for (int v : r.maximal) check_max += p.weight[v];
  if (check_min != r.weight || check_max != r.weight)
    throw std::logic_error("closure weight disagrees with the min cut value");
  return r;
}

std::pair<std::vector<int>, long long> max_closure(const ClosureProblem& p) {
  ClosureRange r = max_closure_range(p);
  return {std::move(r.minimal), r.weight};
}

}  // namespace srmatch
