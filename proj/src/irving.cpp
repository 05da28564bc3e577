#include "srmatch/irving.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "srmatch/errors.hpp"

namespace srmatch {

bool Table::contains(int a, int b) const {
  const auto& l = lists[a - 1];
  return std::find(l.begin(), l.end(), b) != l.end();
}

bool Table::all_singletons() const {
  for (const auto& l : lists)
    if (l.size() != 1) return false;
  return true;
}

Matching Table::as_matching() const {
  Matching m(static_cast<int>(lists.size()));
  for (int a = 1; a <= m.n(); ++a) m.partner[a - 1] = lists[a - 1].front();
  return m;
}

Bits Table::pair_key() const {
  int n = static_cast<int>(lists.size());
  Bits key(n * n);
  for (int a = 1; a <= n; ++a)
    for (int b : lists[a - 1])
      if (a < b) key.set((a - 1) * n + (b - 1));
  return key;
}

namespace {

void delete_pair(Table& t, int a, int b) {
  auto& la = t.lists[a - 1];
  auto& lb = t.lists[b - 1];
  la.erase(std::remove(la.begin(), la.end(), b), la.end());
  lb.erase(std::remove(lb.begin(), lb.end(), a), lb.end());
}

bool any_empty(const Table& t) {
  for (const auto& l : t.lists)
    if (l.empty()) return true;
  return false;
}

}  // namespace

Rotation canonicalize(std::vector<std::pair<int, int>> cycle) {
  size_t best = 0;
  for (size_t i = 1; i < cycle.size(); ++i)
    if (cycle[i].first < cycle[best].first) best = i;
  std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
  return Rotation{std::move(cycle)};
}

Rotation reversal(const Rotation& r) {
  int n = r.size();
  std::vector<std::pair<int, int>> rev(n);
  for (int i = 0; i < n; ++i) rev[i] = {r.cycle[(i + 1) % n].second, r.cycle[i].first};
  return canonicalize(std::move(rev));
}

std::optional<Table> phase1(const Instance& inst) {
  Table t{&inst, inst.pref};
  std::vector<int> holds(inst.n + 1, 0);  // holds[y]: proposer y currently accepts
  std::vector<int> todo;
  for (int a = inst.n; a >= 1; --a) todo.push_back(a);
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (;;) {
      if (t.lists[x - 1].empty()) return std::nullopt;
      int y = t.first(x);
      int z = holds[y];
      if (z == 0) {
        holds[y] = x;
        break;
      }
      if (inst.prefers(y, x, z)) {
        holds[y] = x;
        delete_pair(t, z, y);
        todo.push_back(z);
        break;
      }
      delete_pair(t, x, y);
    }
  }
  /* everyone holds a proposal: truncate each list after the held proposer */
  for (int y = 1; y <= inst.n; ++y) {
    int x = holds[y];
    std::vector<int> worse;
    for (int z : t.lists[y - 1])
      if (inst.prefers(y, x, z)) worse.push_back(z);
    for (int z : worse) delete_pair(t, y, z);
  }
  if (any_empty(t)) return std::nullopt;
  return t;
}

std::vector<Rotation> exposed_rotations(const Table& t) {
  int n = static_cast<int>(t.lists.size());
  std::vector<char> visited(n + 1, 0);
  std::vector<Rotation> out;
  for (int start = 1; start <= n; ++start) {
    if (visited[start] || t.lists[start - 1].size() < 2) continue;
    std::vector<int> path;
    std::vector<int> pos(n + 1, -1);
    int x = start;
    while (!visited[x] && pos[x] == -1) {
      pos[x] = static_cast<int>(path.size());
      path.push_back(x);
      x = t.last(t.second(x));  // the next x in the rotation chase
    }
    if (pos[x] != -1) {
      std::vector<std::pair<int, int>> cycle;
      for (size_t i = pos[x]; i < path.size(); ++i) cycle.emplace_back(path[i], t.first(path[i]));
      out.push_back(canonicalize(std::move(cycle)));
    }
    for (int a : path) visited[a] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Table> try_eliminate(const Table& t, const Rotation& rho) {
  int r = rho.size();
  for (int i = 0; i < r; ++i) {
    auto [x, y] = rho.cycle[i];
    if (t.lists[x - 1].size() < 2 || t.first(x) != y || t.second(x) != rho.cycle[(i + 1) % r].second)
      throw ValidationError("NotExposed", "rotation is not exposed in the table");
  }
  Table out = t;
  std::set<std::pair<int, int>> doomed;
  for (int i = 0; i < r; ++i) {
    int y = rho.cycle[i].second;
    int x_prev = rho.cycle[(i + r - 1) % r].first;
    for (int z : t.lists[y - 1])
      if (t.inst->prefers(y, x_prev, z)) doomed.insert({std::min(y, z), std::max(y, z)});
  }
  for (auto [a, b] : doomed) delete_pair(out, a, b);
  if (any_empty(out)) return std::nullopt;
  return out;
}

Table eliminate(const Table& t, const Rotation& rho) {
  auto out = try_eliminate(t, rho);
  if (!out) throw ValidationError("EmptyListFailure", "elimination emptied a preference list");
  return *out;
}

std::optional<Matching> solve(const Instance& inst) {
  auto t = phase1(inst);
  if (!t) return std::nullopt;
  while (!t->all_singletons()) {
    auto exposed = exposed_rotations(*t);
    t = try_eliminate(*t, exposed.front());
    if (!t) return std::nullopt;
  }
  return t->as_matching();
}

RotationUniverse discover_rotations(const Instance& inst, long long table_cap) {
  auto eta = solve(inst);
  if (!eta) throw ValidationError("Unsolvable", "rotation discovery requires a solvable instance");

  RotationUniverse u;
  u.inst = inst;
  u.eta = *eta;
  auto t0 = phase1(u.inst);
  u.base_lists = t0->lists;

  struct Node {
    std::vector<std::vector<int>> lists;
    std::vector<int> z;  // sorted rotation ids eliminated to reach this table
  };
  std::vector<Node> nodes;
  std::map<Bits, int> memo;
  std::map<std::vector<std::pair<int, int>>, int> rot_ids;
  std::vector<Rotation> rots;
  std::vector<std::vector<int>> exposed_in;  // rotation id -> node indices exposing it

  Table base{&u.inst, u.base_lists};
  memo[base.pair_key()] = 0;
  nodes.push_back({u.base_lists, {}});
  for (size_t cur = 0; cur < nodes.size(); ++cur) {
    Table t{&u.inst, nodes[cur].lists};
    for (const auto& rho : exposed_rotations(t)) {
      int id;
      auto it = rot_ids.find(rho.cycle);
      if (it != rot_ids.end()) {
        id = it->second;
      } else {
        id = static_cast<int>(rots.size());
        rot_ids.emplace(rho.cycle, id);
        rots.push_back(rho);
        exposed_in.emplace_back();
      }
      exposed_in[id].push_back(static_cast<int>(cur));

      auto child = try_eliminate(t, rho);
      if (!child) throw std::logic_error("elimination emptied a list on a solvable instance");
      std::vector<int> z = nodes[cur].z;
      z.insert(std::lower_bound(z.begin(), z.end(), id), id);
      Bits key = child->pair_key();
      auto mit = memo.find(key);
      if (mit != memo.end()) {
        if (nodes[mit->second].z != z)
          throw std::logic_error("two exploration paths reached one table with different eliminated sets");
      } else {
        if (static_cast<long long>(nodes.size()) + 1 > table_cap)
          throw BudgetError("BudgetExceeded",
                            "table exploration passed the cap of " + std::to_string(table_cap) + " tables");
        memo.emplace(key, static_cast<int>(nodes.size()));
        nodes.push_back({child->lists, std::move(z)});
      }
    }
  }
  u.tables_explored = static_cast<long long>(nodes.size());

  int n_rot = static_cast<int>(rots.size());
  u.rotations.resize(n_rot);
  for (int i = 0; i < n_rot; ++i) u.rotations[i].rotation = rots[i];

  /* dual pairing by reversal lookup */
  for (int i = 0; i < n_rot; ++i) {
    auto it = rot_ids.find(reversal(rots[i]).cycle);
    if (it != rot_ids.end()) {
      u.rotations[i].kind = RotationKind::NonSingular;
      u.rotations[i].dual = it->second;
    }
  }
  for (int i = 0; i < n_rot; ++i) {
    if (u.rotations[i].kind == RotationKind::Singular)
      u.singulars.push_back(i);
    else if (i < u.rotations[i].dual)
      u.dual_pairs.emplace_back(i, u.rotations[i].dual);
  }

  /* order: sigma below rho iff sigma was eliminated before rho on every
     path, i.e. sigma is in the Z of every table exposing rho */
  u.pred.assign(n_rot, Bits(n_rot));
  for (int r = 0; r < n_rot; ++r) {
    std::vector<int> common = nodes[exposed_in[r][0]].z;
    for (size_t j = 1; j < exposed_in[r].size() && !common.empty(); ++j) {
      const auto& z = nodes[exposed_in[r][j]].z;
      std::vector<int> tmp;
      std::set_intersection(common.begin(), common.end(), z.begin(), z.end(), std::back_inserter(tmp));
      common.swap(tmp);
    }
    for (int s : common) u.pred[r].set(s);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int r = 0; r < n_rot; ++r)
      for (int s : u.pred[r].elements())
        if (!u.pred[s].subset_of(u.pred[r])) {
          u.pred[r] = u.pred[r] | u.pred[s];
          changed = true;
        }
  }

  /* agents untouched by every non-singular rotation keep one partner across
     all stable matchings */
  std::vector<char> moved(inst.n + 1, 0);
  for (int i = 0; i < n_rot; ++i) {
    if (u.rotations[i].kind != RotationKind::NonSingular) continue;
    for (auto [x, y] : rots[i].cycle) moved[x] = moved[y] = 1;
  }
  for (int a = 1; a <= inst.n; ++a) {
    int b = u.eta.of(a);
    if (!moved[a] && a < b) {
      if (moved[b]) throw std::logic_error("fixed agent paired with a moved agent");
      u.fixed_pairs.emplace_back(a, b);
    }
  }

  /* prime table: eliminate every singular rotation from the base table */
  Table prime = base;
  int eliminated_singulars = 0;
  for (;;) {
    bool progressed = false;
    for (const auto& rho : exposed_rotations(prime)) {
      int id = rot_ids.at(rho.cycle);
      if (u.rotations[id].kind == RotationKind::Singular) {
        prime = eliminate(prime, rho);
        ++eliminated_singulars;
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
  if (eliminated_singulars != static_cast<int>(u.singulars.size()))
    throw std::logic_error("could not eliminate every singular rotation from the base table");
  u.prime_lists = prime.lists;

  return u;
}

namespace {

/* deterministic element layout: dual pairs ordered by their smaller rotation
   id; the smaller id takes the even element */
void element_maps(const RotationUniverse& u, std::vector<int>& rot_of_element,
                  std::vector<int>& element_of_rot) {
  rot_of_element.assign(2 * u.dual_pairs.size(), -1);
  element_of_rot.assign(u.rotations.size(), -1);
  for (size_t p = 0; p < u.dual_pairs.size(); ++p) {
    auto [lo, hi] = u.dual_pairs[p];
    rot_of_element[2 * p] = lo;
    rot_of_element[2 * p + 1] = hi;
    element_of_rot[lo] = static_cast<int>(2 * p);
    element_of_rot[hi] = static_cast<int>(2 * p + 1);
  }
}

}  // namespace

ReducedPoset reduced_poset(const RotationUniverse& u) {
  ReducedPoset rp;
  element_maps(u, rp.rot_of_element, rp.element_of_rot);
  std::vector<std::pair<int, int>> lt;
  int m = static_cast<int>(rp.rot_of_element.size());
  for (int ea = 0; ea < m; ++ea)
    for (int eb = 0; eb < m; ++eb) {
      int ra = rp.rot_of_element[ea], rb = rp.rot_of_element[eb];
      if (u.lt(ra, rb)) lt.emplace_back(ea, eb);
    }
  rp.poset = check_mirror(static_cast<int>(u.dual_pairs.size()), lt);
  return rp;
}

Matching matching_from_subset(const RotationUniverse& u, const Bits& s) {
  std::vector<int> rot_of_element, element_of_rot;
  element_maps(u, rot_of_element, element_of_rot);
  int k = static_cast<int>(u.dual_pairs.size());
  if (s.capacity() != 2 * k)
    throw ValidationError("NotComplete", "subset is sized for a different poset");
  for (int p = 0; p < k; ++p)
    if (s.test(2 * p) == s.test(2 * p + 1))
      throw ValidationError("NotComplete", "subset must pick exactly one rotation of every dual pair");

  /* the full eliminated set behind this subset: every singular rotation
     plus the chosen non-singulars */
  std::vector<char> in_s(u.rotations.size(), 0);
  for (int id : u.singulars) in_s[id] = 1;
  for (int e : s.elements()) in_s[rot_of_element[e]] = 1;
  for (size_t r = 0; r < u.rotations.size(); ++r) {
    if (!in_s[r]) continue;
    for (int q : u.pred[r].elements())
      if (!in_s[q])
        throw ValidationError("NotClosed", "subset drops a predecessor of a chosen rotation");
  }

  const Instance& inst = u.inst;
  Matching m(inst.n);
  for (int a = 1; a <= inst.n; ++a) {
    int best_rank = -1, partner = 0;
    /* prefer the X-rule: among chosen rotations moving a on the x side,
       take the one pairing a with its least preferred y; the partner is
       that rotation's next y */
    for (size_t r = 0; r < u.rotations.size(); ++r) {
      if (!in_s[r]) continue;
      const auto& cyc = u.rotations[r].rotation.cycle;
      int len = static_cast<int>(cyc.size());
      for (int i = 0; i < len; ++i)
        if (cyc[i].first == a) {
          int rk = inst.rank_of(a, cyc[i].second);
          if (rk > best_rank) {
            best_rank = rk;
            partner = cyc[(i + 1) % len].second;
          }
        }
    }
    if (partner == 0) {
      /* Y-rule: among chosen rotations moving a on the y side, take the one
         pairing a with its most preferred x; the partner is that rotation's
         previous x */
      best_rank = inst.n;
      for (size_t r = 0; r < u.rotations.size(); ++r) {
        if (!in_s[r]) continue;
        const auto& cyc = u.rotations[r].rotation.cycle;
        int len = static_cast<int>(cyc.size());
        for (int i = 0; i < len; ++i)
          if (cyc[i].second == a) {
            int rk = inst.rank_of(a, cyc[i].first);
            if (rk < best_rank) {
              best_rank = rk;
              partner = cyc[(i + len - 1) % len].first;
            }
          }
      }
    }
    if (partner == 0) partner = u.eta.of(a);
    m.partner[a - 1] = partner;
  }
  if (!m.is_perfect()) throw std::logic_error("subset reconstruction produced an inconsistent matching");
  return m;
}

long long rotation_cost(const CostFunction& c, const Rotation& rho) {
  long long total = 0;
  int r = rho.size();
  for (int i = 0; i < r; ++i) {
    auto [x, y] = rho.cycle[i];
    int y_next = rho.cycle[(i + 1) % r].second;
    total += c(x, y) + c(y, x);
    total -= c(x, y_next) + c(y_next, x);
  }
  return total;
}

}  // namespace srmatch
