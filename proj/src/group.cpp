#include "s2tlab/group.hpp"

#include <algorithm>
#include <deque>

#include "s2tlab/errors.hpp"

namespace s2tlab {

PermGroup closure(int degree, const std::vector<Perm>& gens, long cap) {
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw DegreeMismatchError("closure: generator degree mismatch");

  PermGroup group;
  group.degree = degree;
  group.generators = gens;
  group.elements.insert(Perm(degree));

  std::deque<Perm> frontier(group.elements.begin(), group.elements.end());
  while (!frontier.empty()) {
    Perm cur = frontier.front();
    frontier.pop_front();
    for (const Perm& g : gens) {
      Perm next = compose(cur, g);
      if (group.elements.insert(next).second) {
        if (group.order() > cap)
          throw CapExceededError("closure: materialization cap exceeded",
                                 group.order());
        frontier.push_back(std::move(next));
      }
    }
  }
  // Products of generators starting from 1 reach every element; inverses
  // come for free in a finite group (g^{-1} = g^{ord-1}).
  return group;
}

PermSet closed_set(int degree, const PermSet& seed, long cap) {
  std::vector<Perm> gens(seed.begin(), seed.end());
  return closure(degree, gens, cap).elements;
}

std::vector<PermSet> conjugacy_classes(const PermGroup& g) {
  std::vector<PermSet> classes;
  PermSet assigned;
  for (const Perm& a : g.elements) {
    if (assigned.count(a))
      continue;
    PermSet cls;
    for (const Perm& x : g.elements)
      cls.insert(conjugate(a, x));
    assigned.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  // Orbits are found in element order, and the orbit of a is first reached
  // at its least member, so classes are already ordered by representative.
  return classes;
}

bool is_subgroup(int degree, const PermSet& s) {
  if (!s.count(Perm(degree)))
    return false;
  for (const Perm& a : s) {
    if (!s.count(inverse(a)))
      return false;
    for (const Perm& b : s)
      if (!s.count(compose(a, b)))
        return false;
  }
  return true;
}

bool is_normal(const PermGroup& g, const PermSet& s) {
  for (const Perm& a : s)
    if (!g.contains(a))
      return false;
  if (!is_subgroup(g.degree, s))
    return false;
  for (const Perm& x : g.elements)
    for (const Perm& a : s)
      if (!s.count(conjugate(a, x)))
        return false;
  return true;
}

PermSet normal_closure(const PermGroup& g, const Perm& a) {
  PermSet orbit;
  for (const Perm& x : g.elements)
    orbit.insert(conjugate(a, x));
  return closed_set(g.degree, orbit, g.order());
}

std::vector<PermSet> normal_subgroups(const PermGroup& g, long cap) {
  if (g.order() > cap)
    throw CapExceededError("normal_subgroups: group exceeds cap", g.order());

  // Distinct normal closures of single elements.
  std::set<PermSet> atoms;
  for (const Perm& a : g.elements)
    atoms.insert(normal_closure(g, a));

  // Every normal subgroup is the join of the normal closures of its
  // elements, so the join-closure of the atoms is the full list.
  std::set<PermSet> known(atoms.begin(), atoms.end());
  std::deque<PermSet> work(known.begin(), known.end());
  while (!work.empty()) {
    PermSet cur = work.front();
    work.pop_front();
    for (const PermSet& atom : atoms) {
      PermSet join = cur;
      join.insert(atom.begin(), atom.end());
      join = closed_set(g.degree, join, g.order());
      if (known.insert(join).second)
        work.push_back(std::move(join));
    }
  }
  return {known.begin(), known.end()};
}

PermSet set_product(const PermSet& a, const PermSet& b) {
  PermSet out;
  for (const Perm& x : a)
    for (const Perm& y : b)
      out.insert(compose(x, y));
  return out;
}

} // namespace s2tlab
