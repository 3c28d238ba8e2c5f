#ifndef S2TLAB_SEARCH_HPP
#define S2TLAB_SEARCH_HPP

#include <vector>

#include "s2tlab/group.hpp"

namespace s2tlab {

/// Element-set image of G under a relabeling sigma (g becomes sigma g
/// sigma^{-1}), as a sorted list of image tables.
std::vector<std::vector<int>> relabeled_elements(const PermGroup& g,
                                                 const Perm& sigma);

/// Canonical form of a transitive group under conjugacy in the symmetric
/// group: the least relabeled element list over all relabelings fixing
/// point 0 (sufficient for transitive groups, since any conjugator can be
/// corrected by a group element to fix 0).
std::vector<std::vector<int>> canonical_form(const PermGroup& g);

/// True iff some relabeling carries the elements of a onto those of b.
/// Transitive inputs only.
bool conjugate_in_symmetric_group(const PermGroup& a, const PermGroup& b);

/// All regular permutation groups of degree and order m, up to conjugacy;
/// one representative per abstract isomorphism type.  m <= 12; the larger
/// orders are slow.  Throws std::invalid_argument for m out of range,
/// CapExceededError if `node_cap` closures are exceeded.
std::vector<PermGroup> regular_groups(int m, long node_cap = 50'000'000);

struct SearchResult {
  int degree = 0;
  std::vector<PermGroup> groups;  // up to conjugacy, canonical order
  long nodes_explored = 0;
  double elapsed_ms = 0.0;
  bool complete = true;
};

/// All sharply 2-transitive subgroups of Sym(n) up to conjugacy, found by
/// planting each regular stabilizer candidate on {1..n-1} and adjoining an
/// involution that swaps 0 and 1.  Exhaustive for 3 <= n <= 9; larger
/// degrees are best-effort and flag `complete = false` when the node cap
/// is hit.
SearchResult enumerate_degree(int n, long node_cap = 50'000'000);

} // namespace s2tlab

#endif
