#include "s2tlab/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "s2tlab/errors.hpp"

namespace s2tlab {

Perm::Perm(int degree) : images_(degree) {
  if (degree < 1)
    throw std::invalid_argument("permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty())
    throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("image table is not a permutation");
    seen[v] = 1;
  }
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

int Perm::fixed_point_count() const {
  int n = 0;
  for (int x = 0; x < degree(); ++x)
    if (images_[x] == x)
      ++n;
  return n;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatchError("compose: degree mismatch");
  std::vector<int> r(p.degree());
  for (int x = 0; x < p.degree(); ++x)
    r[x] = p[q[x]];
  return Perm(std::move(r));
}

Perm inverse(const Perm& p) {
  std::vector<int> r(p.degree());
  for (int x = 0; x < p.degree(); ++x)
    r[p[x]] = x;
  return Perm(std::move(r));
}

Perm conjugate(const Perm& a, const Perm& g) {
  if (a.degree() != g.degree())
    throw DegreeMismatchError("conjugate: degree mismatch");
  // g^{-1} a g without materializing the inverse: r[g^{-1}[x]] form,
  // equivalently r such that r[x] = g^{-1}[a[g[x]]].
  const Perm gi = inverse(g);
  std::vector<int> r(a.degree());
  for (int x = 0; x < a.degree(); ++x)
    r[x] = gi[a[g[x]]];
  return Perm(std::move(r));
}

long element_order(const Perm& p) {
  std::vector<char> seen(p.degree(), 0);
  long ord = 1;
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[x])
      continue;
    long len = 0;
    int y = x;
    do {
      seen[y] = 1;
      y = p[y];
      ++len;
    } while (y != x);
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm power(const Perm& p, long k) {
  Perm acc(p.degree());
  Perm base = p;
  for (; k > 0; k >>= 1) {
    if (k & 1)
      acc = compose(acc, base);
    base = compose(base, base);
  }
  return acc;
}

std::string to_cycle_string(const Perm& p) {
  std::ostringstream os;
  std::vector<char> seen(p.degree(), 0);
  bool any = false;
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[x] || p[x] == x) {
      seen[x] = 1;
      continue;
    }
    os << '(';
    int y = x;
    bool first = true;
    do {
      if (!first)
        os << ' ';
      os << y;
      first = false;
      seen[y] = 1;
      y = p[y];
    } while (y != x);
    os << ')';
    any = true;
  }
  if (!any)
    return "()";
  return os.str();
}

} // namespace s2tlab
