#include <doctest.h>

#include "s2tlab/errors.hpp"
#include "s2tlab/group.hpp"
#include "s2tlab/perm.hpp"

#include "oracles.hpp"

using namespace s2tlab;

namespace {
Perm p(std::vector<int> v) { return Perm(std::move(v)); }
}

TEST_CASE("perm construction validates image tables") {
  CHECK_THROWS_AS(p({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(p({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<int>{}), std::invalid_argument);
  CHECK(Perm(3).is_identity());
}

TEST_CASE("compose applies the right factor first") {
  const Perm id3(3);
  const Perm swap01 = p({1, 0, 2});
  const Perm cycle = p({1, 2, 0});  // (0 1 2)

  CHECK(compose(id3, swap01) == swap01);
  CHECK(compose(swap01, swap01) == id3);
  // (0 1 2) after (0 1): 0->1->2, 1->0->1, 2->2->0, i.e. (0 2).
  CHECK(compose(cycle, swap01) == p({2, 1, 0}));
  CHECK_THROWS_AS(compose(id3, Perm(4)), DegreeMismatchError);
}

TEST_CASE("inverse") {
  CHECK(inverse(Perm(3)) == Perm(3));
  CHECK(inverse(p({1, 0, 2})) == p({1, 0, 2}));
  CHECK(inverse(p({1, 2, 0})) == p({2, 0, 1}));
  // Property over all of S4.
  PermGroup s4 = closure(4, {p({1, 0, 2, 3}), p({1, 2, 3, 0})});
  for (const Perm& g : s4.elements)
    CHECK(compose(g, inverse(g)).is_identity());
}

TEST_CASE("conjugate is g^-1 a g") {
  const Perm a = p({1, 0, 2});      // (0 1)
  const Perm g = p({1, 2, 0});      // (0 1 2)
  CHECK(conjugate(a, Perm(3)) == a);
  CHECK(conjugate(a, a) == a);
  // Evaluated pointwise from the definition: first g, then a, then g^-1.
  CHECK(conjugate(a, g) == p({2, 1, 0}));
  CHECK_THROWS_AS(conjugate(a, Perm(4)), DegreeMismatchError);
}

TEST_CASE("conjugation composes and preserves cycle type") {
  PermGroup s4 = closure(4, {p({1, 0, 2, 3}), p({1, 2, 3, 0})});
  const Perm a = p({1, 0, 3, 2});
  for (const Perm& g : s4.elements) {
    CHECK(oracle::cycle_type(conjugate(a, g)) == oracle::cycle_type(a));
    for (const Perm& h : s4.elements)
      CHECK(conjugate(conjugate(a, g), h) == conjugate(a, compose(g, h)));
  }
}

TEST_CASE("element_order") {
  CHECK(element_order(Perm(3)) == 1);
  CHECK(element_order(p({1, 0, 2})) == 2);
  CHECK(element_order(p({1, 2, 0})) == 3);
  CHECK(element_order(p({1, 0, 3, 4, 2})) == 6);  // (0 1)(2 3 4)
}

TEST_CASE("power") {
  const Perm c = p({1, 2, 0});
  CHECK(power(c, 0).is_identity());
  CHECK(power(c, 3).is_identity());
  CHECK(power(c, 2) == inverse(c));
}

TEST_CASE("cycle string") {
  CHECK(to_cycle_string(Perm(4)) == "()");
  CHECK(to_cycle_string(p({1, 0, 3, 2})) == "(0 1)(2 3)");
  CHECK(to_cycle_string(p({0, 2, 1})) == "(1 2)");
}
