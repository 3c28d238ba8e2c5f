#include "s2tlab/checks.hpp"

#include <chrono>
#include <optional>

#include "s2tlab/errors.hpp"
#include "s2tlab/perm.hpp"

namespace s2tlab {

namespace {

class Timed {
public:
  Timed(CheckReport& rep, const char* name, const S2TContext& ctx) : rep_(rep) {
    rep_.check_name = name;
    rep_.instance_label = ctx.label;
    start_ = std::chrono::steady_clock::now();
  }
  ~Timed() {
    rep_.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
  }

private:
  CheckReport& rep_;
  std::chrono::steady_clock::time_point start_;
};

json permset_to_json(const PermSet& s) {
  json out = json::array();
  for (const Perm& p : s)
    out.push_back(perm_to_json(p));
  return out;
}

void fail_perms_differ(CheckReport& rep, const Perm& lhs, const Perm& rhs,
                       json extra = json()) {
  rep.outcome = Outcome::Fail;
  rep.witness = json{{"kind", "perms_differ"},
                     {"lhs", perm_to_json(lhs)},
                     {"rhs", perm_to_json(rhs)}};
  if (!extra.is_null())
    rep.witness["context"] = std::move(extra);
}

void fail_missing(CheckReport& rep, const Perm& elem, const PermSet& set,
                  json extra = json()) {
  rep.outcome = Outcome::Fail;
  rep.witness = json{{"kind", "missing_from_set"},
                     {"element", perm_to_json(elem)},
                     {"set", permset_to_json(set)}};
  if (!extra.is_null())
    rep.witness["context"] = std::move(extra);
}

// The unique involution of the stabilizer; present exactly in odd
// characteristic.
std::optional<Perm> stabilizer_involution(const S2TContext& ctx) {
  std::optional<Perm> found;
  for (const Perm& h : ctx.stabilizer)
    if (element_order(h) == 2) {
      if (found)
        return std::nullopt;  // more than one; callers treat as defect
      found = h;
    }
  return found;
}

} // namespace

CheckReport check_lemma1(const S2TContext& ctx) {
  CheckReport rep;
  Timed timed(rep, "lemma1_involutions_one_class", ctx);

  const Perm rep_inv = *ctx.involutions.begin();
  PermSet cls;
  for (const Perm& g : ctx.group.elements)
    cls.insert(conjugate(rep_inv, g));

  if (cls != ctx.involutions) {
    // Either an involution outside the class, or a class member that is
    // not an involution (impossible: conjugation preserves order).
    for (const Perm& j : ctx.involutions)
      if (!cls.count(j)) {
        rep.outcome = Outcome::Fail;
        rep.witness = json{{"kind", "non_conjugate_pair"},
                           {"a", perm_to_json(rep_inv)},
                           {"b", perm_to_json(j)},
                           {"group", permset_to_json(ctx.group.elements)}};
        return rep;
      }
    throw InternalConsistencyError("conjugate of an involution is not one");
  }

  // Positive witness: a concrete conjugator for an extreme pair.
  const Perm target = *ctx.involutions.rbegin();
  for (const Perm& g : ctx.group.elements)
    if (conjugate(rep_inv, g) == target) {
      rep.details = json{{"class_size", cls.size()},
                         {"sample_conjugation",
                          {{"i", perm_to_json(rep_inv)},
                           {"j", perm_to_json(target)},
                           {"g", perm_to_json(g)}}}};
      break;
    }
  return rep;
}

CheckReport check_lemma2(const S2TContext& ctx) {
  CheckReport rep;
  Timed timed(rep, "lemma2_normal_times_stabilizer", ctx);

  const auto normals = normal_subgroups(ctx.group);
  long checked = 0;
  for (const PermSet& n : normals) {
    if (n.size() <= 1)
      continue;
    ++checked;
    PermSet nh = set_product(n, ctx.stabilizer);
    if (nh != ctx.group.elements) {
      for (const Perm& g : ctx.group.elements)
        if (!nh.count(g)) {
          fail_missing(rep, g, nh,
                       json{{"normal_subgroup", permset_to_json(n)}});
          return rep;
        }
    }
  }
  rep.details = json{{"nontrivial_normal_subgroups", checked}};
  return rep;
}

CheckReport check_lemma3(const S2TContext& ctx) {
  CheckReport rep;
  Timed timed(rep, "lemma3_stabilizer_involutions", ctx);

  PermSet in_h;
  for (const Perm& h : ctx.stabilizer)
    if (element_order(h) == 2)
      in_h.insert(h);
  if (in_h.size() > 1) {
    auto it = in_h.begin();
    const Perm& a = *it++;
    const Perm& b = *it;
    rep.outcome = Outcome::Fail;
    rep.witness = json{{"kind", "distinct_involutions_in_stabilizer"},
                       {"a", perm_to_json(a)},
                       {"b", perm_to_json(b)},
                       {"stabilizer", permset_to_json(ctx.stabilizer)}};
    return rep;
  }
  rep.details = json{{"stabilizer_involution_count", in_h.size()}};
  return rep;
}

CheckReport check_malnormality(const S2TContext& ctx) {
  CheckReport rep;
  Timed timed(rep, "malnormality_of_stabilizer", ctx);

  const Perm id = ctx.group.identity();
  for (const Perm& z : ctx.group.elements) {
    bool z_in_h = ctx.stabilizer.count(z) != 0;
    // H ∩ H^z nontrivial?
    std::optional<Perm> meet;
    for (const Perm& h : ctx.stabilizer) {
      if (h == id)
        continue;
      if (ctx.stabilizer.count(conjugate(h, inverse(z)))) {
        meet = h;
        break;
      }
    }
    // meet is an element of H^z ∩ H written from the H side:
    // h in H with z h z^{-1} in H, i.e. h in H ∩ H^{z^{-1}}... the two
    // conditions are equivalent up to replacing z by z^{-1}, and z in H
    // iff z^{-1} in H, so the biconditional is unaffected.
    if (meet.has_value() != z_in_h) {
      rep.outcome = Outcome::Fail;
      rep.witness = json{{"kind", "malnormality_violation"},
                         {"z", perm_to_json(z)},
                         {"z_in_stabilizer", z_in_h},
                         {"stabilizer", permset_to_json(ctx.stabilizer)}};
      if (meet)
        rep.witness["h"] = perm_to_json(*meet);
      return rep;
    }
  }
  return rep;
}

CheckReport check_lemma4(const S2TContext& ctx) {
  CheckReport rep;
  Timed timed(rep, "lemma4_products_fixed_point_free", ctx);

  for (const Perm& g : ctx.involution_products) {
    if (g.is_identity())
      continue;
    for (int x = 0; x < g.degree(); ++x)
      if (g[x] == x) {
        rep.outcome = Outcome::Fail;
        rep.witness = json{{"kind", "fixes_point"},
                           {"perm", perm_to_json(g)},
                           {"point", x}};
        return rep;
      }
  }
  return rep;
}

CheckReport check_lemma5(const S2TContext& ctx) {
  CheckReport rep;
  Timed timed(rep, "lemma5_products_form_normal_subgroup", ctx);

  // Hypothesis per i, plus the proof's side facts.
  bool any_commuting = false;
  std::optional<bool> common;
  for (const Perm& i : ctx.involutions) {
    PermSet right_coset;  // Ii
    PermSet left_coset;   // iI
    for (const Perm& j : ctx.involutions) {
      right_coset.insert(compose(j, i));
      left_coset.insert(compose(i, j));
    }
    if (right_coset != left_coset) {
      for (const Perm& p : right_coset)
        if (!left_coset.count(p)) {
          fail_missing(rep, p, left_coset,
                       json{{"fact", "Ii = iI"}, {"i", perm_to_json(i)}});
          return rep;
        }
    }
    bool commuting = true;
    for (const Perm& a : right_coset) {
      for (const Perm& b : right_coset)
        if (compose(a, b) != compose(b, a)) {
          commuting = false;
          rep.details["noncommuting_sample"] = json{
              {"kind", "noncommuting_pair"},
              {"a", perm_to_json(a)},
              {"b", perm_to_json(b)}};
          break;
        }
      if (!commuting)
        break;
    }
    any_commuting = any_commuting || commuting;
    if (!common)
      common = commuting;
    if (*common != commuting) {
      // The property is conjugation-invariant, so it cannot depend on i.
      throw InternalConsistencyError(
          "Ii commuting property differs between involutions");
    }
  }
  rep.details["hypothesis_holds"] = any_commuting;

  if (!any_commuting) {
    rep.outcome = Outcome::HypothesisNotMet;
    return rep;
  }

  // Conclusion: I^2 is a normal subgroup.
  if (!is_normal(ctx.group, ctx.involution_products)) {
    const PermSet& s = ctx.involution_products;
    for (const Perm& a : s)
      for (const Perm& b : s)
        if (!s.count(compose(a, b))) {
          fail_missing(rep, compose(a, b), s,
                       json{{"fact", "I^2 closed under product"}});
          return rep;
        }
    for (const Perm& g : ctx.group.elements)
      for (const Perm& a : s)
        if (!s.count(conjugate(a, g))) {
          fail_missing(rep, conjugate(a, g), s,
                       json{{"fact", "I^2 closed under conjugation"}});
          return rep;
        }
    for (const Perm& a : s)
      if (!s.count(inverse(a))) {
        fail_missing(rep, inverse(a), s,
                     json{{"fact", "I^2 closed under inverse"}});
        return rep;
      }
    throw InternalConsistencyError("is_normal failed without a witness");
  }
  return rep;
}

CheckReport check_lemma6(const S2TContext& ctx) {
  CheckReport rep;
  Timed timed(rep, "lemma6_action_equivalence", ctx);

  if (ctx.chr.is_two()) {
    rep.outcome = Outcome::HypothesisNotMet;
    rep.details = json{{"reason", "stabilizer has no involution"}};
    return rep;
  }
  const auto i = stabilizer_involution(ctx);
  if (!i)
    throw InternalConsistencyError(
        "odd characteristic but no unique stabilizer involution");

  // phi(g . base) = i^(g^{-1}) = g i g^{-1}; must be constant on cosets.
  const int n = ctx.degree();
  std::vector<std::optional<Perm>> phi(n);
  for (const Perm& g : ctx.group.elements) {
    Perm value = compose(g, compose(*i, inverse(g)));
    int point = g[ctx.base_point];
    if (!phi[point]) {
      phi[point] = value;
    } else if (*phi[point] != value) {
      fail_perms_differ(rep, *phi[point], value,
                        json{{"fact", "well-definedness"}, {"point", point}});
      return rep;
    }
  }

  // Bijectivity onto I.
  PermSet image;
  for (int y = 0; y < n; ++y)
    image.insert(*phi[y]);
  if (image != ctx.involutions || static_cast<int>(image.size()) != n) {
    rep.outcome = Outcome::Fail;
    rep.witness = json{{"kind", "missing_from_set"},
                       {"element", perm_to_json(*ctx.involutions.begin())},
                       {"set", permset_to_json(image)},
                       {"context", json{{"fact", "bijectivity"}}}};
    for (const Perm& j : ctx.involutions)
      if (!image.count(j)) {
        rep.witness["element"] = perm_to_json(j);
        break;
      }
    return rep;
  }

  // Equivariance: phi(h . y) = h phi(y) h^{-1}.
  for (const Perm& h : ctx.group.elements)
    for (int y = 0; y < n; ++y) {
      Perm lhs = *phi[h[y]];
      Perm rhs = compose(h, compose(*phi[y], inverse(h)));
      if (lhs != rhs) {
        fail_perms_differ(rep, lhs, rhs,
                          json{{"fact", "equivariance"},
                               {"h", perm_to_json(h)},
                               {"y", y}});
        return rep;
      }
    }
  return rep;
}

CheckReport check_bn_class(const S2TContext& ctx) {
  CheckReport rep;
  Timed timed(rep, "bn_products_one_class", ctx);

  if (ctx.chr.is_two())
    rep.details = json{{"caveat", "characteristic 2 lies outside the cited hypothesis"}};

  PermSet nontrivial;
  for (const Perm& g : ctx.involution_products)
    if (!g.is_identity())
      nontrivial.insert(g);
  if (nontrivial.empty())
    throw InternalConsistencyError("I^2 has no nontrivial element");

  const Perm rep_elem = *nontrivial.begin();
  PermSet cls;
  for (const Perm& g : ctx.group.elements)
    cls.insert(conjugate(rep_elem, g));
  if (cls != nontrivial) {
    const PermSet* bigger = &nontrivial;
    for (const Perm& b : *bigger)
      if (!cls.count(b)) {
        rep.outcome = Outcome::Fail;
        rep.witness = json{{"kind", "non_conjugate_pair"},
                           {"a", perm_to_json(rep_elem)},
                           {"b", perm_to_json(b)},
                           {"group", permset_to_json(ctx.group.elements)}};
        return rep;
      }
    // cls strictly bigger than nontrivial: a conjugate escaped I^2.
    for (const Perm& c : cls)
      if (!nontrivial.count(c)) {
        fail_missing(rep, c, nontrivial,
                     json{{"fact", "conjugate of an I^2 element"}});
        return rep;
      }
  }
  rep.details["class_size"] = nontrivial.size();
  return rep;
}

CheckReport check_power_closure(const S2TContext& ctx) {
  CheckReport rep;
  Timed timed(rep, "power_closure_of_products", ctx);

  for (const Perm& g : ctx.involution_products) {
    const long ord = element_order(g);
    Perm acc(g.degree());
    for (long k = 0; k < ord; ++k) {
      if (!ctx.involution_products.count(acc)) {
        fail_missing(rep, acc, ctx.involution_products,
                     json{{"base", perm_to_json(g)}, {"exponent", k}});
        return rep;
      }
      acc = compose(acc, g);
    }
  }
  return rep;
}

CheckReport check_theorem(const S2TContext& ctx) {
  CheckReport rep;
  Timed timed(rep, "theorem_char3_split", ctx);

  if (ctx.chr.is_two() || ctx.chr.prime != 3) {
    rep.outcome = Outcome::HypothesisNotMet;
    rep.details = json{{"reason", "characteristic is not 3"},
                       {"characteristic", to_string(ctx.chr)}};
    return rep;
  }
  const auto i_opt = stabilizer_involution(ctx);
  if (!i_opt)
    throw InternalConsistencyError("characteristic 3 but no stabilizer involution");
  const Perm i = *i_opt;

  auto step_fail = [&](const char* step, const Perm& lhs, const Perm& rhs,
                       const Perm& j, const Perm& k) {
    fail_perms_differ(rep, lhs, rhs,
                      json{{"step", step},
                           {"j", perm_to_json(j)},
                           {"k", perm_to_json(k)}});
  };

  // (a) i^j = j^i for all involutions, equivalently (ij)^3 = 1.
  for (const Perm& a : ctx.involutions)
    for (const Perm& b : ctx.involutions) {
      if (conjugate(a, b) != conjugate(b, a)) {
        step_fail("a:conjugate_swap", conjugate(a, b), conjugate(b, a), a, b);
        return rep;
      }
      if (!power(compose(a, b), 3).is_identity()) {
        step_fail("a:product_cubes_to_identity", power(compose(a, b), 3),
                  ctx.group.identity(), a, b);
        return rep;
      }
    }

  // (b)-(d) with i the stabilizer involution, over all pairs j, k.
  for (const Perm& j : ctx.involutions)
    for (const Perm& k : ctx.involutions) {
      const Perm jiki = compose(compose(compose(j, i), k), i);
      const Perm kiji = compose(compose(compose(k, i), j), i);

      // (b) endpoints of the chain, both symmetric versions.
      if (conjugate(j, jiki) != conjugate(j, kiji)) {
        step_fail("b:j_endpoint", conjugate(j, jiki), conjugate(j, kiji), j, k);
        return rep;
      }
      if (conjugate(k, jiki) != conjugate(k, kiji)) {
        step_fail("b:k_endpoint", conjugate(k, jiki), conjugate(k, kiji), j, k);
        return rep;
      }

      // (c) every printed intermediate equality, term by term.
      const Perm iji = compose(compose(i, j), i);
      const Perm terms[8] = {
          conjugate(j, jiki),
          conjugate(j, conjugate(k, i)),
          conjugate(conjugate(k, i), j),
          conjugate(k, compose(i, j)),
          conjugate(k, compose(compose(compose(j, i), j), i)),
          conjugate(conjugate(k, j), iji),
          conjugate(conjugate(j, k), iji),
          conjugate(j, kiji),
      };
      static const char* step_names[7] = {
          "c:jiki_to_k_conj_i", "c:swap_k_i_with_j", "c:merge_to_ij",
          "c:ij_to_jiji",       "c:peel_j",          "c:swap_jk",
          "c:reassemble_kiji"};
      for (int s = 0; s < 7; ++s)
        if (terms[s] != terms[s + 1]) {
          step_fail(step_names[s], terms[s], terms[s + 1], j, k);
          return rep;
        }

      // (d) the sharpness conclusion, directly on elements.
      if (jiki != kiji) {
        step_fail("d:jiki_equals_kiji", jiki, kiji, j, k);
        return rep;
      }
    }

  // (e) the split itself: G = I^2 ⋊ H.
  const PermSet& i2 = ctx.involution_products;
  PermSet prod = set_product(i2, i2);
  if (prod != i2) {
    for (const Perm& p : prod)
      if (!i2.count(p)) {
        fail_missing(rep, p, i2, json{{"step", "e:set_closed"}});
        return rep;
      }
  }
  if (!is_normal(ctx.group, i2)) {
    rep.outcome = Outcome::Fail;
    rep.witness = json{{"kind", "missing_from_set"},
                       {"element", perm_to_json(*i2.begin())},
                       {"set", permset_to_json(i2)},
                       {"context", json{{"step", "e:normal"}}}};
    for (const Perm& g : ctx.group.elements)
      for (const Perm& a : i2)
        if (!i2.count(conjugate(a, g))) {
          rep.witness["element"] = perm_to_json(conjugate(a, g));
          return rep;
        }
    return rep;
  }
  for (const Perm& p : i2)
    if (!p.is_identity() && ctx.stabilizer.count(p)) {
      rep.outcome = Outcome::Fail;
      rep.witness = json{{"kind", "unexpected_in_set"},
                         {"element", perm_to_json(p)},
                         {"set", permset_to_json(ctx.stabilizer)},
                         {"context", json{{"step", "e:trivial_intersection"}}}};
      return rep;
    }
  PermSet cover = set_product(i2, ctx.stabilizer);
  if (cover != ctx.group.elements) {
    for (const Perm& g : ctx.group.elements)
      if (!cover.count(g)) {
        fail_missing(rep, g, cover, json{{"step", "e:product_covers"}});
        return rep;
      }
  }

  rep.details = json{{"kernel_size", i2.size()},
                     {"stabilizer_size", ctx.stabilizer.size()}};
  return rep;
}

std::vector<CheckReport> run_all(const S2TContext& ctx) {
  std::vector<CheckReport> reports;
  reports.push_back(check_lemma1(ctx));
  reports.push_back(check_lemma2(ctx));
  reports.push_back(check_lemma3(ctx));
  reports.push_back(check_malnormality(ctx));
  reports.push_back(check_lemma4(ctx));
  reports.push_back(check_lemma5(ctx));
  reports.push_back(check_lemma6(ctx));
  reports.push_back(check_bn_class(ctx));
  reports.push_back(check_power_closure(ctx));
  reports.push_back(check_theorem(ctx));
  return reports;
}

} // namespace s2tlab
