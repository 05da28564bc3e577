#pragma once

#include <utility>
#include <vector>

#include "srmatch/bits.hpp"

namespace srmatch {

/* elements 0..2k-1; element e and e^1 form dual pair e/2; lt is strict,
   irreflexive, transitively closed, and anti-symmetric under dualization */
struct MirrorPoset {
  int n_pairs = 0;
  std::vector<Bits> below;  // below[e]: strict predecessors of e
  std::vector<Bits> above;  // above[e]: strict successors of e

  int n_elements() const { return 2 * n_pairs; }
  static int dual(int e) { return e ^ 1; }
  bool lt(int a, int b) const { return below[b].test(a); }
  Bits empty_set() const { return Bits(n_elements()); }
};

/* a partition of the elements into a complete closed subset neg = P- and its
   complement pos = P+ */
struct Orientation {
  MirrorPoset base;
  Bits neg;
  Bits pos;
};

/* validates: acyclic after transitive closure, duals incomparable, and
   lt(a,b) iff lt(dual(b), dual(a)); relations are pairs over 0..2k-1 */
MirrorPoset check_mirror(int n_pairs, const std::vector<std::pair<int, int>>& lt_pairs);

bool is_complete(const MirrorPoset& p, const Bits& s);
bool is_closed(const MirrorPoset& p, const Bits& s);

/* transitive reduction, edges directed low -> high, sorted */
std::vector<std::pair<int, int>> hasse(const MirrorPoset& p);

/* all complete closed subsets in increasing bitmask order */
std::vector<Bits> complete_closed_subsets(const MirrorPoset& p, int cap_pairs = 20);

struct MedianGraph {
  std::vector<Bits> vertices;                 // complete closed subsets, sorted
  std::vector<std::pair<int, int>> edges;     // indices into vertices; differ by one dual swap
};

MedianGraph median_graph(const MirrorPoset& p, int cap_pairs = 20);

Orientation make_orientation(const MirrorPoset& p, const Bits& base);

/* hasse edges with tail in neg and head in pos; sorted; count is even */
std::vector<std::pair<int, int>> crossing_edges(const Orientation& o);

/* the semilattice order rooted at neg: s below t iff s's positive part is
   contained in t's */
bool semilattice_leq(const Orientation& o, const Bits& s, const Bits& t);

/* the maximal complete closed subsets of the semilattice rooted at neg,
   via the three-pattern enumeration over crossing pairs; sorted */
std::vector<Bits> maximal_elements(const Orientation& o, int cap_pairs = 16);

}  // namespace srmatch
