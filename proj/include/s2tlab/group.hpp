#ifndef S2TLAB_GROUP_HPP
#define S2TLAB_GROUP_HPP

#include <map>
#include <set>
#include <vector>

#include "s2tlab/perm.hpp"

namespace s2tlab {

/// Ordered by the canonical lexicographic order on Perm, so iteration and
/// dedup are deterministic everywhere.
using PermSet = std::set<Perm>;

/// Groups are fully materialized; anything larger fails loudly rather than
/// silently switching algorithms.
inline constexpr long kDefaultOrderCap = 20000;

/// A finite permutation group with its full element set materialized.
struct PermGroup {
  int degree = 1;
  std::vector<Perm> generators;
  PermSet elements;

  long order() const { return static_cast<long>(elements.size()); }
  bool contains(const Perm& p) const { return elements.count(p) != 0; }
  Perm identity() const { return Perm(degree); }
};

/// Smallest group containing `gens`, by breadth-first product closure with
/// dedup.  Throws CapExceededError (with the partial count) past `cap`,
/// DegreeMismatchError if a generator has the wrong degree.
PermGroup closure(int degree, const std::vector<Perm>& gens,
                  long cap = kDefaultOrderCap);

/// Closure of an element set rather than a generator list.
PermSet closed_set(int degree, const PermSet& seed, long cap = kDefaultOrderCap);

/// Conjugation orbits of G on its own elements, each class sorted, classes
/// ordered by their least element (the canonical representative).
std::vector<PermSet> conjugacy_classes(const PermGroup& g);

/// True iff S contains the identity and is closed under product and inverse.
bool is_subgroup(int degree, const PermSet& s);

/// True iff S <= G is a subgroup with g^{-1} S g = S for all g in G.
bool is_normal(const PermGroup& g, const PermSet& s);

/// {a^g : g in G} closed into a group; smallest normal subgroup containing a.
PermSet normal_closure(const PermGroup& g, const Perm& a);

/// All normal subgroups of G, as element sets in canonical order, computed
/// as joins of single-element normal closures.  Includes {1} and G.
std::vector<PermSet> normal_subgroups(const PermGroup& g,
                                      long cap = kDefaultOrderCap);

/// {compose(a, b) : a in A, b in B}, deduplicated.
PermSet set_product(const PermSet& a, const PermSet& b);

} // namespace s2tlab

#endif
