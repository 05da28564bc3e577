#include "srmatch/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "srmatch/errors.hpp"

namespace srmatch {

MirrorPoset check_mirror(int n_pairs, const std::vector<std::pair<int, int>>& lt_pairs) {
  int m = 2 * n_pairs;
  MirrorPoset p;
  p.n_pairs = n_pairs;
  p.below.assign(m, Bits(m));
  p.above.assign(m, Bits(m));
  for (auto [a, b] : lt_pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw ValidationError("MissingAgent", "relation names element " + std::to_string(a < 0 || a >= m ? a : b) +
                                                " outside 0.." + std::to_string(m - 1));
    p.above[a].set(b);
  }

  /* transitive closure, one relaxation sweep per element in reverse finish
     order would need a dag; do simple iterate-to-fixpoint instead, the
     posets here are small */
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < m; ++a)
      for (int b : p.above[a].elements())
        for (int c : p.above[b].elements())
          if (!p.above[a].test(c)) {
            p.above[a].set(c);
            changed = true;
          }
  }
  for (int a = 0; a < m; ++a) {
    if (p.above[a].test(a)) throw ValidationError("CycleDetected", "element " + std::to_string(a) + " is below itself");
    for (int b : p.above[a].elements()) p.below[b].set(a);
  }
  for (int a = 0; a < m; ++a) {
    int d = MirrorPoset::dual(a);
    if (p.lt(a, d) || p.lt(d, a))
      throw ValidationError("DualComparable", "elements " + std::to_string(a) + " and " + std::to_string(d) +
                                                  " of one dual pair are comparable");
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.lt(a, b) != p.lt(MirrorPoset::dual(b), MirrorPoset::dual(a)))
        throw ValidationError("MirrorAxiomViolated", "lt(" + std::to_string(a) + "," + std::to_string(b) +
                                                         ") does not mirror to the dual elements");
  return p;
}

bool is_complete(const MirrorPoset& p, const Bits& s) {
  for (int q = 0; q < p.n_pairs; ++q)
    if (s.test(2 * q) == s.test(2 * q + 1)) return false;
  return true;
}

bool is_closed(const MirrorPoset& p, const Bits& s) {
  for (int e : s.elements())
    if (!p.below[e].subset_of(s)) return false;
  return true;
}

std::vector<std::pair<int, int>> hasse(const MirrorPoset& p) {
  std::vector<std::pair<int, int>> edges;
  int m = p.n_elements();
  for (int a = 0; a < m; ++a)
    for (int b : p.above[a].elements()) {
      bool cover = !p.above[a].intersects(p.below[b]);
      if (cover) edges.emplace_back(a, b);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Bits> complete_closed_subsets(const MirrorPoset& p, int cap_pairs) {
  if (p.n_pairs > cap_pairs)
    throw BudgetError("CapExceeded", "poset has " + std::to_string(p.n_pairs) +
                                         " dual pairs, enumeration cap is " + std::to_string(cap_pairs));
  int k = p.n_pairs;
  int m = p.n_elements();
  std::vector<Bits> out;
  for (uint64_t choice = 0; choice < (uint64_t(1) << k); ++choice) {
    Bits s(m);
    for (int q = 0; q < k; ++q) s.set(2 * q + ((choice >> q) & 1));
    if (is_closed(p, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MedianGraph median_graph(const MirrorPoset& p, int cap_pairs) {
  MedianGraph g;
  g.vertices = complete_closed_subsets(p, cap_pairs);
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j)
      if (g.vertices[i].minus(g.vertices[j]).count() == 1) g.edges.emplace_back(int(i), int(j));
  return g;
}

Orientation make_orientation(const MirrorPoset& p, const Bits& base) {
  if (!is_complete(p, base))
    throw ValidationError("NotComplete", "base must contain exactly one element of every dual pair");
  if (!is_closed(p, base))
    throw ValidationError("NotClosed", "base must contain every predecessor of its elements");
  Orientation o;
  o.base = p;
  o.neg = base;
  Bits all(p.n_elements());
  for (int e = 0; e < p.n_elements(); ++e) all.set(e);
  o.pos = all.minus(base);
  return o;
}

std::vector<std::pair<int, int>> crossing_edges(const Orientation& o) {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : hasse(o.base))
    if (o.neg.test(a) && o.pos.test(b)) out.emplace_back(a, b);
  return out;
}

bool semilattice_leq(const Orientation& o, const Bits& s, const Bits& t) {
  return (s & o.pos).subset_of(t & o.pos);
}

std::vector<Bits> maximal_elements(const Orientation& o, int cap_pairs) {
  const MirrorPoset& p = o.base;
  auto crossing = crossing_edges(o);

  /* crossing edges come in dual pairs: (a-, b+) together with (b-, a+);
     group them by the unordered pair of dual-pair indices they connect */
  std::set<std::pair<int, int>> pair_set;
  for (auto [a, b] : crossing) {
    int qa = a / 2, qb = b / 2;
    pair_set.insert({std::min(qa, qb), std::max(qa, qb)});
  }
  std::vector<std::pair<int, int>> cross_pairs(pair_set.begin(), pair_set.end());
  int k = static_cast<int>(cross_pairs.size());
  if (k > cap_pairs)
    throw BudgetError("CapExceeded", "orientation has " + std::to_string(k) +
                                         " crossing pairs, enumeration cap is " + std::to_string(cap_pairs));

  auto neg_of = [&](int q) { return o.neg.test(2 * q) ? 2 * q : 2 * q + 1; };
  auto pos_of = [&](int q) { return o.pos.test(2 * q) ? 2 * q : 2 * q + 1; };

  std::set<Bits> seen;
  std::vector<Bits> candidates;
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  for (long long it = 0; it < total; ++it) {
    long long v = it;
    Bits a_set(p.n_elements());
    for (int i = 0; i < k; ++i) {
      int d = int(v % 3);
      v /= 3;
      auto [qa, qb] = cross_pairs[i];
      /* the three patterns from the maximal-element characterization:
         {a+, b-}, {a-, b+}, {a-, b-} */
      switch (d) {
        case 0:
          a_set.set(pos_of(qa));
          a_set.set(neg_of(qb));
          break;
        case 1:
          a_set.set(neg_of(qa));
          a_set.set(pos_of(qb));
          break;
        default:
          a_set.set(neg_of(qa));
          a_set.set(neg_of(qb));
          break;
      }
    }
    Bits t = a_set;
    for (int e : a_set.elements()) t = t | p.below[e];
    /* dual pairs untouched by the patterns and their predecessors keep their
       positive element; inconsistent pattern choices fail the completeness
       check below and drop out */
    for (int q = 0; q < p.n_pairs; ++q)
      if (!t.test(2 * q) && !t.test(2 * q + 1)) t.set(pos_of(q));
    if (!is_complete(p, t) || !is_closed(p, t)) continue;
    if (seen.insert(t).second) candidates.push_back(t);
  }

  /* the characterization is one-directional: filter to the truly maximal */
  std::vector<Bits> out;
  for (const auto& s : candidates) {
    bool maximal = true;
    for (const auto& t : candidates)
      if (t != s && semilattice_leq(o, s, t)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace srmatch
