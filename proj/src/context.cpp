#include "s2tlab/context.hpp"

#include <vector>

#include "s2tlab/errors.hpp"
#include "s2tlab/perm.hpp"

namespace s2tlab {

std::string to_string(const Characteristic& c) {
  if (c.is_two())
    return "2";
  return std::to_string(c.prime);
}

json SharpnessResult::witness_json(const PermGroup& g) const {
  json elems = json::array();
  for (const Perm& e : g.elements)
    elems.push_back(perm_to_json(e));
  return json{{"kind", "pair_solution_count"}, {"x", x},     {"y", y},
              {"z", z},                        {"t", t},     {"count", count},
              {"group", elems}};
}

SharpnessResult verify_sharp_2transitivity(const PermGroup& g) {
  SharpnessResult res;
  const int n = g.degree;
  if (n < 3)
    throw std::invalid_argument("sharp 2-transitivity needs degree >= 3");

  // Count, for every ((x,y),(z,t)), the elements mapping x->z, y->t.  The
  // order identity |G| = n(n-1) is implied by an all-ones census, but is
  // checked separately as a redundant self-test.
  std::vector<long> counts(static_cast<size_t>(n) * n * n * n, 0);
  for (const Perm& p : g.elements)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y)
          continue;
        size_t idx = ((static_cast<size_t>(x) * n + y) * n + p[x]) * n + p[y];
        ++counts[idx];
      }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y)
        continue;
      for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t) {
          if (z == t)
            continue;
          size_t idx = ((static_cast<size_t>(x) * n + y) * n + z) * n + t;
          if (counts[idx] != 1) {
            res.ok = false;
            res.x = x; res.y = y; res.z = z; res.t = t;
            res.count = counts[idx];
            return res;
          }
        }
    }

  if (g.order() != static_cast<long>(n) * (n - 1))
    throw InternalConsistencyError(
        "sharpness census passed but |G| != n(n-1)");
  res.ok = true;
  return res;
}

S2TContext build_context(const PermGroup& g, std::string label) {
  SharpnessResult sharp = verify_sharp_2transitivity(g);
  if (!sharp.ok)
    throw NotSharplyTransitiveError("group is not sharply 2-transitive", sharp);

  S2TContext ctx;
  ctx.group = g;
  ctx.base_point = 0;
  ctx.label = label.empty() ? ("degree-" + std::to_string(g.degree)) : label;
  for (const Perm& p : g.elements) {
    if (p[0] == 0)
      ctx.stabilizer.insert(p);
    if (element_order(p) == 2)
      ctx.involutions.insert(p);
  }
  ctx.involution_products = set_product(ctx.involutions, ctx.involutions);
  ctx.chr = characteristic(ctx);
  return ctx;
}

Characteristic characteristic(const S2TContext& ctx) {
  bool stab_has_involution = false;
  for (const Perm& h : ctx.stabilizer)
    if (element_order(h) == 2) {
      stab_has_involution = true;
      break;
    }
  if (!stab_has_involution)
    return Characteristic::two();

  long p = 0;
  for (const Perm& g : ctx.involution_products) {
    if (g.is_identity())
      continue;
    long o = element_order(g);
    if (p == 0)
      p = o;
    if (o != p)
      throw InternalConsistencyError(
          "mixed element orders in I^2 \\ {1}: " + std::to_string(p) +
          " and " + std::to_string(o));
  }
  if (p < 3 || p % 2 == 0)
    throw InternalConsistencyError("I^2 order is not an odd prime: " +
                                   std::to_string(p));
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0)
      throw InternalConsistencyError("I^2 order is not prime: " +
                                     std::to_string(p));
  return Characteristic::odd_prime(static_cast<int>(p));
}

PermSet frobenius_kernel(const S2TContext& ctx) {
  PermSet kernel;
  kernel.insert(ctx.group.identity());
  for (const Perm& g : ctx.group.elements)
    if (g.fixed_point_count() == 0)
      kernel.insert(g);
  return kernel;
}

SplitCertificate splitting_certificate(const S2TContext& ctx) {
  auto evaluate = [&](const PermSet& candidate) {
    SplitCertificate cert;
    cert.kernel = candidate;
    cert.kernel_normal = is_normal(ctx.group, candidate);
    PermSet meet;
    for (const Perm& p : candidate)
      if (ctx.stabilizer.count(p))
        meet.insert(p);
    cert.trivial_intersection =
        meet.size() == 1 && meet.count(ctx.group.identity()) == 1;
    cert.product_covers =
        set_product(candidate, ctx.stabilizer) == ctx.group.elements;
    return cert;
  };

  // The primary candidate is I^2; in characteristic 2 this coincides with
  // I ∪ {1}, which is what gets tried there.
  PermSet candidate;
  if (ctx.chr.is_two()) {
    candidate = ctx.involutions;
    candidate.insert(ctx.group.identity());
  } else {
    candidate = ctx.involution_products;
  }
  SplitCertificate cert = evaluate(candidate);
  if (cert.valid())
    return cert;

  for (const PermSet& n : normal_subgroups(ctx.group)) {
    SplitCertificate fb = evaluate(n);
    if (fb.valid()) {
      fb.used_fallback = true;
      return fb;
    }
  }
  cert.used_fallback = true;  // fallback was searched, nothing found
  return cert;
}

} // namespace s2tlab
