#include "s2tlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "s2tlab/context.hpp"
#include "s2tlab/errors.hpp"

namespace s2tlab {

std::vector<std::vector<int>> relabeled_elements(const PermGroup& g,
                                                 const Perm& sigma) {
  const Perm sigma_inv = inverse(sigma);
  std::vector<std::vector<int>> out;
  out.reserve(g.elements.size());
  for (const Perm& p : g.elements) {
    std::vector<int> r(g.degree);
    for (int x = 0; x < g.degree; ++x)
      r[x] = sigma[p[sigma_inv[x]]];
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> canonical_form(const PermGroup& g) {
  const int n = g.degree;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);

  std::vector<std::vector<int>> best;
  do {
    auto cand = relabeled_elements(g, Perm(images));
    if (best.empty() || cand < best)
      best = std::move(cand);
  } while (std::next_permutation(images.begin() + 1, images.end()));
  return best;
}

bool conjugate_in_symmetric_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree != b.degree || a.order() != b.order())
    return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

// Emits every fixed-point-free permutation of degree m whose cycles all
// have length d, with image of 0 pinned to `target`.  Cycles are built
// starting at the least point not yet covered, which produces each
// permutation exactly once.
void emit_uniform_cycle_perms(int m, int d, int target,
                              const std::function<void(const Perm&)>& emit) {
  std::vector<int> img(m, -1);
  std::vector<char> in_cycle(m, 0);

  std::function<void(int, int, int)> grow = [&](int start, int cur, int len) {
    if (len == d) {
      img[cur] = start;
      int next_start = -1;
      for (int x = 0; x < m; ++x)
        if (!in_cycle[x]) {
          next_start = x;
          break;
        }
      if (next_start < 0) {
        emit(Perm(img));
      } else {
        in_cycle[next_start] = 1;
        for (int p = 0; p < m; ++p) {
          if (in_cycle[p])
            continue;
          in_cycle[p] = 1;
          img[next_start] = p;
          grow(next_start, p, 2);
          in_cycle[p] = 0;
        }
        img[next_start] = -1;
        in_cycle[next_start] = 0;
      }
      img[cur] = -1;
      return;
    }
    for (int p = 0; p < m; ++p) {
      if (in_cycle[p])
        continue;
      in_cycle[p] = 1;
      img[cur] = p;
      grow(start, p, len + 1);
      img[cur] = -1;
      in_cycle[p] = 0;
    }
  };

  in_cycle[0] = 1;
  in_cycle[target] = 1;
  img[0] = target;
  if (d == 2) {
    // 0's cycle is complete already.
    img[target] = 0;
    grow(target, 0, d);  // falls straight into the close branch
    img[target] = -1;
  } else {
    grow(0, target, 2);
  }
}

bool all_nontrivial_fixed_point_free(const PermSet& elements) {
  for (const Perm& p : elements)
    if (!p.is_identity() && p.fixed_point_count() > 0)
      return false;
  return true;
}

} // namespace

std::vector<PermGroup> regular_groups(int m, long node_cap) {
  if (m < 1 || m > 12)
    throw std::invalid_argument("regular_groups: degree out of range [1, 12]");
  if (m == 1)
    return {closure(1, {})};

  long nodes = 0;
  std::set<PermSet> visited;
  std::vector<PermGroup> found;
  std::set<std::vector<std::vector<int>>> canon_seen;

  std::vector<int> cycle_lengths;
  for (int d = 2; d <= m; ++d)
    if (m % d == 0)
      cycle_lengths.push_back(d);

  std::function<void(const PermGroup&)> explore = [&](const PermGroup& sub) {
    if (sub.order() == m) {
      if (canon_seen.insert(canonical_form(sub)).second)
        found.push_back(sub);
      return;
    }
    // Least point outside the orbit of 0; the element carrying 0 there has
    // uniform cycle type in a regular group.
    std::vector<char> in_orbit(m, 0);
    for (const Perm& p : sub.elements)
      in_orbit[p[0]] = 1;
    int target = 0;
    while (in_orbit[target])
      ++target;

    for (int d : cycle_lengths) {
      emit_uniform_cycle_perms(m, d, target, [&](const Perm& cand) {
        if (++nodes > node_cap)
          throw CapExceededError("regular_groups: node cap exceeded", nodes);
        std::vector<Perm> gens = sub.generators;
        gens.push_back(cand);
        PermGroup next;
        try {
          next = closure(m, gens, m);
        } catch (const CapExceededError&) {
          return;
        }
        if (m % next.order() != 0)
          return;
        if (!all_nontrivial_fixed_point_free(next.elements))
          return;
        if (!visited.insert(next.elements).second)
          return;
        explore(next);
      });
    }
  };

  explore(closure(m, {}));
  std::sort(found.begin(), found.end(),
            [](const PermGroup& a, const PermGroup& b) {
              return std::vector<Perm>(a.elements.begin(), a.elements.end()) <
                     std::vector<Perm>(b.elements.begin(), b.elements.end());
            });
  return found;
}

SearchResult enumerate_degree(int n, long node_cap) {
  if (n < 3 || n > 13)
    throw std::invalid_argument("enumerate_degree: degree out of range [3, 13]");

  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.degree = n;

  std::vector<PermGroup> stabilizers;
  try {
    stabilizers = regular_groups(n - 1, node_cap);
  } catch (const CapExceededError& e) {
    result.nodes_explored = e.partial_count;
    result.complete = false;
    return result;
  }

  // Embed each stabilizer candidate on points {1..n-1}, fixing 0.
  std::vector<std::vector<Perm>> planted;
  for (const PermGroup& r : stabilizers) {
    std::vector<Perm> gens;
    for (const Perm& p : r.generators) {
      std::vector<int> img(n);
      img[0] = 0;
      for (int x = 0; x < n - 1; ++x)
        img[x + 1] = p[x] + 1;
      gens.push_back(Perm(std::move(img)));
    }
    planted.push_back(std::move(gens));
  }

  // All involutions swapping 0 and 1, acting as any involution (possibly
  // trivial) on the remaining points.
  std::vector<Perm> swaps;
  {
    std::vector<int> img(n);
    img[0] = 1;
    img[1] = 0;
    std::function<void(int)> build = [&](int /*from*/) {
      int s = 2;
      for (; s < n; ++s)
        if (img[s] < 0)
          break;
      if (s == n) {
        swaps.push_back(Perm(img));
        return;
      }
      img[s] = s;  // fixed point
      build(s + 1);
      img[s] = -1;
      for (int p = s + 1; p < n; ++p) {
        if (img[p] >= 0)
          continue;
        img[s] = p;
        img[p] = s;
        build(s + 1);
        img[s] = -1;
        img[p] = -1;
      }
    };
    for (int x = 2; x < n; ++x)
      img[x] = -1;
    build(2);
  }

  const long target_order = static_cast<long>(n) * (n - 1);
  std::set<std::vector<std::vector<int>>> canon_seen;
  bool capped = false;

  for (const auto& stab_gens : planted) {
    for (const Perm& t : swaps) {
      if (++result.nodes_explored > node_cap) {
        capped = true;
        break;
      }
      std::vector<Perm> gens = stab_gens;
      gens.push_back(t);
      PermGroup g;
      try {
        g = closure(n, gens, target_order);
      } catch (const CapExceededError&) {
        continue;  // sharpness bounds the order; anything larger is out
      }
      if (g.order() != target_order)
        continue;
      if (!verify_sharp_2transitivity(g).ok)
        continue;
      // Re-assert the planted fact: the stabilizer acts regularly, i.e.
      // every nontrivial element fixing 0 fixes nothing else.
      bool stab_regular = true;
      for (const Perm& p : g.elements)
        if (p[0] == 0 && !p.is_identity() && p.fixed_point_count() != 1) {
          stab_regular = false;
          break;
        }
      if (!stab_regular)
        throw InternalConsistencyError(
            "sharp group whose stabilizer is not regular");
      if (canon_seen.insert(canonical_form(g)).second)
        result.groups.push_back(g);
    }
    if (capped)
      break;
  }

  result.complete = !capped;
  std::sort(result.groups.begin(), result.groups.end(),
            [](const PermGroup& a, const PermGroup& b) {
              return canonical_form(a) < canonical_form(b);
            });
  result.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

} // namespace s2tlab
