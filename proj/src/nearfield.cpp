#include "s2tlab/nearfield.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

#include "s2tlab/errors.hpp"
#include "s2tlab/perm.hpp"

namespace s2tlab {

namespace {

// Pinned irreducible polynomials per (p, k), low coefficient first, monic.
// The list is mirrored in docs/irreducible_polynomials.md; changing an
// entry changes the element encoding of every table built from it.
const std::map<std::pair<int, int>, std::vector<int>>& pinned_polynomials() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 1, 0, 0, 1}},
      {{5, 2}, {2, 0, 1}},
      {{5, 3}, {1, 1, 0, 1}},
      {{7, 2}, {1, 0, 1}},
      {{11, 2}, {1, 0, 1}},
  };
  return table;
}

std::vector<int> digits(int e, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = e % p;
    e /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
    v = v * p + d[i];
  return v;
}

// Polynomial product reduced mod f (monic of degree k), coefficients mod p.
std::vector<int> polmul_mod(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (int d = static_cast<int>(r.size()) - 1; d >= k; --d) {
    int c = r[d];
    if (c == 0)
      continue;
    for (int i = 0; i <= k; ++i)
      r[d - k + i] = ((r[d - k + i] - c * f[i]) % p + p) % p;
  }
  r.resize(k);
  return r;
}

} // namespace

NearField finite_field(int q) {
  if (q < 2 || q > 128)
    throw std::invalid_argument("finite_field: order out of range [2, 128]");
  int p = 0, k = 0;
  for (int cand = 2; cand <= q; ++cand) {
    if (q % cand == 0) {
      p = cand;
      int m = q;
      k = 0;
      while (m % p == 0) {
        m /= p;
        ++k;
      }
      if (m != 1)
        throw std::invalid_argument("finite_field: order is not a prime power");
      break;
    }
  }

  NearField nf;
  nf.order = q;
  nf.add.assign(q, std::vector<int>(q));
  nf.mul.assign(q, std::vector<int>(q));

  if (k == 1) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        nf.add[a][b] = (a + b) % q;
        nf.mul[a][b] = (a * b) % q;
      }
    nf.label = "GF(" + std::to_string(q) + ")";
    return nf;
  }

  auto it = pinned_polynomials().find({p, k});
  if (it == pinned_polynomials().end())
    throw std::invalid_argument("finite_field: no pinned polynomial for order " +
                                std::to_string(q));
  const std::vector<int>& f = it->second;

  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p, k);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p, k);
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i)
        sum[i] = (da[i] + db[i]) % p;
      nf.add[a][b] = undigits(sum, p);
      nf.mul[a][b] = undigits(polmul_mod(da, db, f, p), p);
    }
  }
  nf.label = "GF(" + std::to_string(q) + ")";
  return nf;
}

NearField dickson_nearfield_9() {
  const NearField f9 = finite_field(9);

  std::vector<char> is_square(9, 0);
  for (int x = 1; x < 9; ++x)
    is_square[f9.times(x, x)] = 1;

  auto frobenius = [&](int a) { return f9.times(f9.times(a, a), a); };

  NearField nf;
  nf.order = 9;
  nf.add = f9.add;
  nf.mul.assign(9, std::vector<int>(9));
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      if (b == 0)
        nf.mul[a][b] = 0;
      else if (is_square[b])
        nf.mul[a][b] = f9.times(a, b);
      else
        nf.mul[a][b] = f9.times(frobenius(a), b);
    }
  nf.label = "Dickson(9)";

  CheckReport rep = verify_nearfield_axioms(nf);
  if (!rep.passed())
    throw InternalConsistencyError("dickson_nearfield_9: axiom validation failed: " +
                                   rep.witness.dump());
  return nf;
}

namespace {

json law_witness(const NearField& nf, const std::string& law,
                 std::vector<int> triple) {
  return json{{"kind", "law_violation"},
              {"law", law},
              {"triple", triple},
              {"add", nf.add},
              {"mul", nf.mul}};
}

} // namespace

CheckReport verify_nearfield_axioms(const NearField& nf) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.check_name = "nearfield_axioms";
  rep.instance_label = nf.label;

  auto fail = [&](const std::string& law, std::vector<int> triple) {
    rep.outcome = Outcome::Fail;
    rep.witness = law_witness(nf, law, std::move(triple));
  };

  const int q = nf.order;
  auto finish = [&]() {
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
  };

  if (q < 2 || static_cast<int>(nf.add.size()) != q ||
      static_cast<int>(nf.mul.size()) != q) {
    fail("table_shape", {q});
    return finish();
  }
  for (int a = 0; a < q; ++a)
    if (static_cast<int>(nf.add[a].size()) != q ||
        static_cast<int>(nf.mul[a].size()) != q) {
      fail("table_shape", {a});
      return finish();
    }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (nf.add[a][b] < 0 || nf.add[a][b] >= q || nf.mul[a][b] < 0 ||
          nf.mul[a][b] >= q) {
        fail("table_range", {a, b});
        return finish();
      }

  // (elements, +): abelian group with identity 0.
  for (int a = 0; a < q; ++a) {
    if (nf.add[0][a] != a || nf.add[a][0] != a) { fail("add_identity", {a}); return finish(); }
    bool has_inv = false;
    for (int b = 0; b < q; ++b)
      if (nf.add[a][b] == 0) has_inv = true;
    if (!has_inv) { fail("add_inverse", {a}); return finish(); }
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (nf.add[a][b] != nf.add[b][a]) { fail("add_commutative", {a, b}); return finish(); }
      for (int c = 0; c < q; ++c)
        if (nf.add[nf.add[a][b]][c] != nf.add[a][nf.add[b][c]]) {
          fail("add_associative", {a, b, c});
          return finish();
        }
    }

  // 0 absorbs under multiplication.
  for (int a = 0; a < q; ++a)
    if (nf.mul[0][a] != 0 || nf.mul[a][0] != 0) { fail("zero_absorbs", {a}); return finish(); }

  // (nonzero, *): group with identity 1.
  for (int a = 1; a < q; ++a) {
    if (nf.mul[1][a] != a || nf.mul[a][1] != a) { fail("mul_identity", {a}); return finish(); }
    bool has_inv = false;
    for (int b = 1; b < q; ++b)
      if (nf.mul[a][b] == 1) has_inv = true;
    if (!has_inv) { fail("mul_inverse", {a}); return finish(); }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b) {
      if (nf.mul[a][b] == 0) { fail("mul_closed_nonzero", {a, b}); return finish(); }
      for (int c = 1; c < q; ++c)
        if (nf.mul[nf.mul[a][b]][c] != nf.mul[a][nf.mul[b][c]]) {
          fail("mul_associative", {a, b, c});
          return finish();
        }
    }

  // Right distributivity, the one law a near-field carries.
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        if (nf.mul[nf.add[a][b]][c] != nf.add[nf.mul[a][c]][nf.mul[b][c]]) {
          fail("right_distributive", {a, b, c});
          return finish();
        }

  // Left distributivity is informational: it distinguishes a field from a
  // proper near-field.
  bool left = true;
  std::vector<int> left_witness;
  for (int a = 0; a < q && left; ++a)
    for (int b = 0; b < q && left; ++b)
      for (int c = 0; c < q; ++c)
        if (nf.mul[c][nf.add[a][b]] != nf.add[nf.mul[c][a]][nf.mul[c][b]]) {
          left = false;
          left_witness = {a, b, c};
          break;
        }
  bool commutative = true;
  for (int a = 1; a < q && commutative; ++a)
    for (int b = 1; b < q; ++b)
      if (nf.mul[a][b] != nf.mul[b][a]) {
        commutative = false;
        break;
      }
  rep.details = json{{"is_field", left}, {"mul_commutative", commutative}};
  if (!left)
    rep.details["left_distributivity_counterexample"] = left_witness;
  return finish();
}

PermGroup affine_group(const NearField& nf) {
  CheckReport rep = verify_nearfield_axioms(nf);
  if (!rep.passed())
    throw std::invalid_argument("affine_group: near-field axioms fail: " +
                                rep.witness.dump());

  const int q = nf.order;
  PermGroup group;
  group.degree = q;
  for (int a = 1; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      std::vector<int> images(q);
      for (int x = 0; x < q; ++x)
        images[x] = nf.plus(nf.times(x, a), b);
      group.elements.insert(Perm(std::move(images)));
    }
  if (group.order() != static_cast<long>(q) * (q - 1))
    throw InternalConsistencyError("affine_group: duplicate affine maps");

  // Greedy generating set: extend with the least element not yet generated.
  PermSet generated;
  generated.insert(Perm(q));
  for (const Perm& cand : group.elements) {
    if (generated.count(cand))
      continue;
    group.generators.push_back(cand);
    generated = closure(q, group.generators).elements;
    if (static_cast<long>(generated.size()) == group.order())
      break;
  }
  return group;
}

} // namespace s2tlab
