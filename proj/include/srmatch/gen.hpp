#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srmatch/poset.hpp"
#include "srmatch/types.hpp"

namespace srmatch {

/* splitmix64: the state advances by the golden-ratio increment and each draw
   mixes the new state; everything downstream is a pure function of the seed */
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t bound);  // uniform in [0, bound), rejection sampled

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  uint64_t state_;
};

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based endpoints, low first
};

/* agents 1..n in order, each list an independent uniform shuffle */
Instance gen_random_sr(uint64_t seed, int n);

/* retries gen_random_sr with seeds seed, seed+1, ... until one is solvable */
Instance gen_solvable_sr(uint64_t seed, int n, int max_attempts = 10000);

SMInstance gen_random_sm(uint64_t seed, int n);

/* integer costs, strictly increasing along each preference list; bases may
   be negative */
CostFunction gen_random_costs(uint64_t seed, const Instance& inst);

Graph named_graph(const std::string& name);  // k4, k33, cube, petersen

/* one dual pair per vertex of a cubic graph; each edge uv puts u below the
   dual of v and v below the dual of u, so complete closed subsets correspond
   to vertex covers and smaller covers give fewer crossings */
MirrorPoset mvc_gadget_poset(const Graph& g);

}  // namespace srmatch
