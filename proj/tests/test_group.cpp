#include <doctest.h>

#include <algorithm>

#include "s2tlab/errors.hpp"
#include "s2tlab/group.hpp"

#include "oracles.hpp"

using namespace s2tlab;

namespace {

Perm p(std::vector<int> v) { return Perm(std::move(v)); }

PermGroup s3() { return closure(3, {p({1, 0, 2}), p({1, 2, 0})}); }
PermGroup a4() {
  return closure(4, {p({1, 0, 3, 2}), p({0, 2, 3, 1})});
}

// All 2^|G| subsets of a (small) group.
std::vector<PermSet> all_subsets(const PermGroup& g) {
  std::vector<Perm> elems(g.elements.begin(), g.elements.end());
  std::vector<PermSet> out;
  for (size_t mask = 0; mask < (size_t{1} << elems.size()); ++mask) {
    PermSet s;
    for (size_t i = 0; i < elems.size(); ++i)
      if (mask & (size_t{1} << i))
        s.insert(elems[i]);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace

TEST_CASE("closure basics") {
  CHECK(closure(3, {}).order() == 1);
  CHECK(closure(3, {p({1, 2, 0})}).order() == 3);
  CHECK(s3().order() == 6);
}

TEST_CASE("closure is idempotent") {
  PermGroup g = s3();
  std::vector<Perm> as_gens(g.elements.begin(), g.elements.end());
  CHECK(closure(3, as_gens).elements == g.elements);
}

TEST_CASE("closure enforces the cap and reports partial count") {
  try {
    closure(4, {p({1, 0, 2, 3}), p({1, 2, 3, 0})}, 10);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.partial_count == 11);
  }
}

TEST_CASE("Lagrange on materialized groups") {
  for (const PermGroup& g : {s3(), a4()})
    for (const Perm& x : g.elements)
      CHECK(g.order() % element_order(x) == 0);
}

TEST_CASE("conjugacy classes") {
  auto trivial = conjugacy_classes(closure(3, {}));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].count(Perm(3)) == 1);

  auto cls = conjugacy_classes(s3());
  std::vector<size_t> sizes;
  for (const auto& c : cls)
    sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 3});

  // Abelian: all classes singletons.
  auto c3 = conjugacy_classes(closure(3, {p({1, 2, 0})}));
  CHECK(c3.size() == 3);
  for (const auto& c : c3)
    CHECK(c.size() == 1);

  // Classes refine cycle type.
  for (const auto& c : conjugacy_classes(a4())) {
    auto type = oracle::cycle_type(*c.begin());
    for (const Perm& x : c)
      CHECK(oracle::cycle_type(x) == type);
  }
}

TEST_CASE("is_normal") {
  PermGroup g = s3();
  PermSet rotations;
  for (const Perm& x : g.elements)
    if (element_order(x) != 2)
      rotations.insert(x);
  CHECK(is_normal(g, rotations));

  PermSet sub = {Perm(3), p({1, 0, 2})};
  CHECK(is_subgroup(3, sub));
  CHECK_FALSE(is_normal(g, sub));

  PermSet trivial = {Perm(3)};
  CHECK(is_normal(g, trivial));
}

TEST_CASE("normal_subgroups on small groups") {
  CHECK(normal_subgroups(closure(3, {})).size() == 1);
  CHECK(normal_subgroups(closure(3, {p({1, 2, 0})})).size() == 2);
  CHECK(normal_subgroups(s3()).size() == 3);
}

TEST_CASE("normal_subgroups agrees with the brute-force oracle") {
  for (const PermGroup& g :
       {s3(), a4(), closure(4, {p({1, 0, 2, 3}), p({1, 2, 3, 0})})}) {
    auto fast = normal_subgroups(g);
    std::vector<PermSet> slow;
    for (const PermSet& s : oracle::all_subgroups(g))
      if (oracle::normal_by_definition(g, s))
        slow.push_back(s);
    std::sort(slow.begin(), slow.end());
    CHECK(fast == slow);
    for (const PermSet& s : fast)
      CHECK(is_normal(g, s));
  }
}

TEST_CASE("set_product") {
  PermGroup g = s3();
  PermSet identity_only = {Perm(3)};
  CHECK(set_product(identity_only, g.elements) == g.elements);

  PermSet involutions;
  for (const Perm& x : g.elements)
    if (element_order(x) == 2)
      involutions.insert(x);
  PermSet rotations = set_product(involutions, involutions);
  CHECK(rotations == PermSet{Perm(3), p({1, 2, 0}), p({2, 0, 1})});

  PermSet sub = {Perm(3), p({1, 0, 2})};
  CHECK(set_product(sub, sub) == sub);
}

TEST_CASE("set_product(S,S) == S exactly for subgroups") {
  for (const PermGroup& g : {s3(), a4()}) {
    for (const PermSet& s : all_subsets(g)) {
      if (s.empty())
        continue;
      bool fixed = set_product(s, s) == s;
      bool subgroup = is_subgroup(g.degree, s);
      CHECK(fixed == subgroup);
    }
  }
}
